#include <array>
#include <string>
#include <vector>

#include "rule_sets.hpp"

namespace hscfr::rules {

namespace {

// One die with `faces` sides per player. Bid b encodes the claim "at least
// b / faces + 1 dice show face b % faces + 1"; bids must strictly increase in
// this order. Player 0 opens; "liar" is available once a bid stands.

class LiarsDiceState final : public GameState {
  public:
   LiarsDiceState(int faces, bool wild) : faces_(faces), wild_(wild) {}

   NodeKind kind() const override
   {
      if(dice_[1] < 0) return NodeKind::chance;
      return called_ ? NodeKind::terminal : NodeKind::decision;
   }

   Player actor() const override { return player_from_index(static_cast<int>(bids_.size() % 2)); }

   int num_actions() const override
   {
      if(dice_[1] < 0) return faces_;
      return num_bids() - first_legal_bid() + (bids_.empty() ? 0 : 1);
   }

   std::string action_label(int action) const override
   {
      if(dice_[1] < 0) return std::to_string(action + 1);
      const int bid = first_legal_bid() + action;
      if(bid == num_bids()) return "liar";
      return std::to_string(bid / faces_ + 1) + "x" + std::to_string(bid % faces_ + 1);
   }

   double chance_probability(int /*outcome*/) const override { return 1.0 / faces_; }

   std::unique_ptr<GameState> child(int action) const override
   {
      auto next = std::make_unique<LiarsDiceState>(*this);
      if(dice_[0] < 0) {
         next->dice_[0] = action + 1;
      } else if(dice_[1] < 0) {
         next->dice_[1] = action + 1;
      } else {
         const int bid = first_legal_bid() + action;
         if(bid == num_bids()) next->called_ = true;
         else next->bids_.push_back(bid);
      }
      return next;
   }

   std::array<double, 2> utility() const override
   {
      const int bid = bids_.back();
      const int quantity = bid / faces_ + 1;
      const int face = bid % faces_ + 1;
      int count = 0;
      for(int d : dice_) count += (d == face || (wild_ && d == faces_)) ? 1 : 0;
      // the last bid was made by the player who did not call
      const int bidder = static_cast<int>((bids_.size() - 1) % 2);
      const int winner = count >= quantity ? bidder : 1 - bidder;
      return winner == 0 ? std::array{1.0, -1.0} : std::array{-1.0, 1.0};
   }

   std::string infoset_key() const override
   {
      std::string key = std::to_string(dice_[bids_.size() % 2]) + "|";
      for(int b : bids_) {
         key += std::to_string(b);
         key += ',';
      }
      return key;
   }

  private:
   int num_bids() const { return 2 * faces_; }
   int first_legal_bid() const { return bids_.empty() ? 0 : bids_.back() + 1; }

   int faces_;
   bool wild_;
   std::array<int, 2> dice_{-1, -1};
   std::vector<int> bids_;
   bool called_ = false;
};

class LiarsDice final : public GameDefinition {
  public:
   LiarsDice(int faces, bool wild) : faces_(faces), wild_(wild) {}
   std::string name() const override { return "liars_dice-" + std::to_string(faces_); }
   std::unique_ptr<GameState> initial_state() const override
   {
      return std::make_unique<LiarsDiceState>(faces_, wild_);
   }

  private:
   int faces_;
   bool wild_;
};

}  // namespace

std::shared_ptr<const GameDefinition> liars_dice(int faces, bool wild)
{
   return std::make_shared<LiarsDice>(faces, wild);
}

}  // namespace hscfr::rules
