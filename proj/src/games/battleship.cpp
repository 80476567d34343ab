#include <array>
#include <string>
#include <vector>

#include "rule_sets.hpp"

namespace hscfr::rules {

namespace {

// Battleship on a 2 x width grid. Each player secretly places one 1x2 ship
// (value 2), player 0 first. Players then alternate shots, player 0 first, at
// most three each, never repeating a cell they already targeted. Shots and
// their hit/miss results are public. Sinking a ship ends the game.

constexpr int kShotsPerPlayer = 3;
constexpr double kShipValue = 2.0;

struct Placement {
   std::array<int, 2> cells;
   std::string label;
};

std::vector<Placement> placements(int width)
{
   std::vector<Placement> out;
   for(int row = 0; row < 2; ++row) {
      for(int col = 0; col + 1 < width; ++col) {
         out.push_back({{row * width + col, row * width + col + 1},
                        "h" + std::to_string(row) + std::to_string(col)});
      }
   }
   for(int col = 0; col < width; ++col) {
      out.push_back({{col, width + col}, "v" + std::to_string(col)});
   }
   return out;
}

struct Shot {
   int shooter;
   int cell;
   bool hit;
};

class BattleshipState final : public GameState {
  public:
   BattleshipState(int width, const std::vector<Placement>* ships) : width_(width), ships_(ships) {}

   NodeKind kind() const override { return over() ? NodeKind::terminal : NodeKind::decision; }

   Player actor() const override { return player_from_index(to_act()); }

   int num_actions() const override
   {
      if(placing()) return static_cast<int>(ships_->size());
      return 2 * width_ - shots_fired(to_act());
   }

   std::string action_label(int action) const override
   {
      if(placing()) return (*ships_)[static_cast<std::size_t>(action)].label;
      const int cell = target(action);
      return "shoot " + std::to_string(cell / width_) + std::to_string(cell % width_);
   }

   std::unique_ptr<GameState> child(int action) const override
   {
      auto next = std::make_unique<BattleshipState>(*this);
      if(placing()) {
         next->ship_[static_cast<std::size_t>(to_act())] = action;
         return next;
      }
      const int me = to_act();
      const int cell = target(action);
      const auto& ship = (*ships_)[static_cast<std::size_t>(ship_[static_cast<std::size_t>(1 - me)])];
      const bool hit = cell == ship.cells[0] || cell == ship.cells[1];
      next->shots_.push_back({me, cell, hit});
      if(hit) ++next->hits_[static_cast<std::size_t>(me)];
      return next;
   }

   std::array<double, 2> utility() const override
   {
      // value of the opponent's sunk ship minus the value of one's own
      if(hits_[0] == 2) return {kShipValue, -kShipValue};
      if(hits_[1] == 2) return {-kShipValue, kShipValue};
      return {0.0, 0.0};
   }

   std::string infoset_key() const override
   {
      if(placing()) return "place";
      std::string key = (*ships_)[static_cast<std::size_t>(ship_[static_cast<std::size_t>(to_act())])].label;
      key += '|';
      for(const auto& s : shots_) {
         key += std::to_string(s.shooter) + ':' + std::to_string(s.cell) + (s.hit ? "H," : "M,");
      }
      return key;
   }

  private:
   bool placing() const { return ship_[1] < 0; }
   int to_act() const
   {
      if(ship_[0] < 0) return 0;
      if(ship_[1] < 0) return 1;
      return static_cast<int>(shots_.size() % 2);
   }
   bool over() const
   {
      if(placing()) return false;
      return hits_[0] == 2 || hits_[1] == 2 || shots_.size() == static_cast<std::size_t>(2 * kShotsPerPlayer);
   }
   int shots_fired(int player) const
   {
      int n = 0;
      for(const auto& s : shots_) n += s.shooter == player ? 1 : 0;
      return n;
   }
   // the action-th cell, in index order, not yet targeted by the player to act
   int target(int action) const
   {
      const int me = to_act();
      for(int cell = 0; cell < 2 * width_; ++cell) {
         bool used = false;
         for(const auto& s : shots_) used = used || (s.shooter == me && s.cell == cell);
         if(not used && action-- == 0) return cell;
      }
      return -1;
   }

   int width_;
   const std::vector<Placement>* ships_;
   std::array<int, 2> ship_{-1, -1};
   std::array<int, 2> hits_{0, 0};
   std::vector<Shot> shots_;
};

class Battleship final : public GameDefinition {
  public:
   explicit Battleship(int width) : width_(width), ships_(placements(width)) {}
   std::string name() const override { return "battleship-" + std::to_string(width_); }
   std::unique_ptr<GameState> initial_state() const override
   {
      return std::make_unique<BattleshipState>(width_, &ships_);
   }

  private:
   int width_;
   std::vector<Placement> ships_;
};

}  // namespace

std::shared_ptr<const GameDefinition> battleship(int width)
{
   return std::make_shared<Battleship>(width);
}

}  // namespace hscfr::rules
