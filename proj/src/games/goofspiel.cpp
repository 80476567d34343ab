#include <array>
#include <bit>
#include <string>
#include <vector>

#include "rule_sets.hpp"

namespace hscfr::rules {

namespace {

// Goofspiel with x cards per hand and point cards revealed from x down to 1.
// The simultaneous bids of a round are played as player 0 then player 1; player
// 1 does not see the pending bid. The last round has a single legal bid for
// each player and is resolved automatically.
//
// Information set keys:
//   limited information : own bids so far + win/loss/tie sequence
//   full information    : both remaining hands + win sequence (all earlier
//                         bids are public, so states with equal hands and
//                         win sequence have identical continuation games)
//   full recall         : the complete ordered bid history

enum class GoofspielView { limited, hands, full_recall };

struct GoofspielShape {
   int cards;
   GoofspielView view;
};

class GoofspielState final : public GameState {
  public:
   explicit GoofspielState(GoofspielShape shape) : shape_(shape)
   {
      const unsigned full = (1u << shape.cards) - 1u;
      hands_ = {full, full};
      if(shape.cards == 1) finish_forced_round();
   }

   NodeKind kind() const override { return finished_ ? NodeKind::terminal : NodeKind::decision; }

   Player actor() const override { return pending_ < 0 ? Player::first : Player::second; }

   int num_actions() const override { return std::popcount(hand()); }

   std::string action_label(int action) const override
   {
      return "bid " + std::to_string(nth_card(action));
   }

   std::unique_ptr<GameState> child(int action) const override
   {
      auto next = std::make_unique<GoofspielState>(*this);
      const int card = nth_card(action);
      if(pending_ < 0) {
         next->pending_ = card;
      } else {
         next->resolve(pending_, card);
         if(shape_.cards - next->round_ == 1) next->finish_forced_round();
      }
      return next;
   }

   std::array<double, 2> utility() const override
   {
      if(points_[0] > points_[1]) return {1.0, -1.0};
      if(points_[0] < points_[1]) return {-1.0, 1.0};
      return {0.0, 0.0};
   }

   std::string infoset_key() const override
   {
      const int me = pending_ < 0 ? 0 : 1;
      std::string key;
      switch(shape_.view) {
         case GoofspielView::limited:
            for(const auto& bid : bids_) {
               key += std::to_string(bid[static_cast<std::size_t>(me)]);
               key += ',';
            }
            key += '|';
            key += wins_;
            break;
         case GoofspielView::hands:
            key = std::to_string(hands_[0]) + '|' + std::to_string(hands_[1]) + '|' + wins_;
            break;
         case GoofspielView::full_recall:
            for(const auto& bid : bids_) {
               key += std::to_string(bid[0]) + '-' + std::to_string(bid[1]) + ',';
            }
            break;
      }
      return key;
   }

  private:
   unsigned hand() const { return hands_[pending_ < 0 ? 0 : 1]; }

   int nth_card(int n) const
   {
      unsigned h = hand();
      for(int i = 0; i < n; ++i) h &= h - 1u;
      return std::countr_zero(h) + 1;
   }

   void resolve(int bid0, int bid1)
   {
      const int prize = shape_.cards - round_;
      if(bid0 > bid1) {
         points_[0] += prize;
         wins_ += 'W';
      } else if(bid1 > bid0) {
         points_[1] += prize;
         wins_ += 'L';
      } else {
         wins_ += 'T';
      }
      hands_[0] &= ~(1u << (bid0 - 1));
      hands_[1] &= ~(1u << (bid1 - 1));
      bids_.push_back({bid0, bid1});
      pending_ = -1;
      ++round_;
   }

   void finish_forced_round()
   {
      resolve(std::countr_zero(hands_[0]) + 1, std::countr_zero(hands_[1]) + 1);
      finished_ = true;
   }

   GoofspielShape shape_;
   std::array<unsigned, 2> hands_{};
   std::array<int, 2> points_{0, 0};
   std::vector<std::array<int, 2>> bids_;
   std::string wins_;  // W/L/T from player 0's perspective
   int round_ = 0;
   int pending_ = -1;
   bool finished_ = false;
};

class Goofspiel final : public GameDefinition {
  public:
   Goofspiel(std::string name, GoofspielShape shape) : name_(std::move(name)), shape_(shape) {}
   std::string name() const override { return name_; }
   std::unique_ptr<GameState> initial_state() const override
   {
      return std::make_unique<GoofspielState>(shape_);
   }

  private:
   std::string name_;
   GoofspielShape shape_;
};

}  // namespace

std::shared_ptr<const GameDefinition> goofspiel(int cards, bool limited_info, bool full_recall)
{
   const auto view = limited_info ? GoofspielView::limited
                     : full_recall ? GoofspielView::full_recall
                                   : GoofspielView::hands;
   std::string name = (limited_info ? "goofspiel_li-" : "goofspiel-") + std::to_string(cards);
   if(full_recall) name += "-fr";
   return std::make_shared<Goofspiel>(std::move(name), GoofspielShape{cards, view});
}

}  // namespace hscfr::rules
