#include <array>
#include <string>
#include <vector>

#include "rule_sets.hpp"

namespace hscfr::rules {

namespace {

// ---------------------------------------------------------------------------
// Kuhn poker: J < Q < K, one chip ante, one betting round, one-chip bets.

constexpr std::array<char, 3> kKuhnCards{'J', 'Q', 'K'};

class KuhnState final : public GameState {
  public:
   NodeKind kind() const override
   {
      if(cards_[1] < 0) return NodeKind::chance;
      if(finished()) return NodeKind::terminal;
      return NodeKind::decision;
   }

   Player actor() const override { return player_from_index(static_cast<int>(history_.size() % 2)); }

   int num_actions() const override { return cards_[0] < 0 ? 3 : 2; }

   std::string action_label(int action) const override
   {
      if(cards_[1] < 0) return std::string(1, kKuhnCards[static_cast<std::size_t>(deal(action))]);
      return action == 0 ? "p" : "b";
   }

   double chance_probability(int /*outcome*/) const override
   {
      return cards_[0] < 0 ? 1.0 / 3.0 : 0.5;
   }

   std::unique_ptr<GameState> child(int action) const override
   {
      auto next = std::make_unique<KuhnState>(*this);
      if(cards_[0] < 0) {
         next->cards_[0] = action;
      } else if(cards_[1] < 0) {
         next->cards_[1] = deal(action);
      } else {
         next->history_.push_back(action == 0 ? 'p' : 'b');
      }
      return next;
   }

   std::array<double, 2> utility() const override
   {
      const double winner = cards_[0] > cards_[1] ? 1.0 : -1.0;
      double u0 = 0.0;
      if(history_ == "pp") u0 = winner;
      else if(history_ == "bb" || history_ == "pbb") u0 = 2.0 * winner;
      else if(history_ == "bp") u0 = 1.0;
      else if(history_ == "pbp") u0 = -1.0;
      return {u0, -u0};
   }

   std::string infoset_key() const override
   {
      const int own = cards_[static_cast<std::size_t>(index_of(actor()))];
      return std::string(1, kKuhnCards[static_cast<std::size_t>(own)]) + ":" + history_;
   }

  private:
   int deal(int outcome) const
   {
      // second card: the outcome-th card not held by player 0
      if(cards_[0] < 0) return outcome;
      return outcome < cards_[0] ? outcome : outcome + 1;
   }
   bool finished() const
   {
      return history_ == "pp" || history_ == "bp" || history_ == "bb" || history_ == "pbp"
             || history_ == "pbb";
   }

   std::array<int, 2> cards_{-1, -1};
   std::string history_;
};

class Kuhn final : public GameDefinition {
  public:
   std::string name() const override { return "kuhn"; }
   std::unique_ptr<GameState> initial_state() const override { return std::make_unique<KuhnState>(); }
};

// ---------------------------------------------------------------------------
// Leduc family. Cards are numbered 0..2*ranks-1 with rank = card / 2. Players
// ante one chip; raises are 2 chips in the first round and 4 in the second.
// Folding is only offered when facing a bet.

struct LeducShape {
   int ranks;
   int max_raises;
};

constexpr std::array<int, 2> kRaiseSize{2, 4};

enum class BetAction : char { fold = 'f', call = 'c', raise = 'r' };

class LeducState final : public GameState {
  public:
   explicit LeducState(LeducShape shape) : shape_(shape) {}

   NodeKind kind() const override
   {
      if(folded_ >= 0 || showdown_) return NodeKind::terminal;
      if(cards_[0] < 0 || cards_[1] < 0 || (round_ == 1 && cards_[2] < 0)) return NodeKind::chance;
      return NodeKind::decision;
   }

   Player actor() const override { return player_from_index(to_act_); }

   int num_actions() const override
   {
      if(kind() == NodeKind::chance) return deck_size() - dealt();
      return static_cast<int>(legal_actions().size());
   }

   std::string action_label(int action) const override
   {
      if(kind() == NodeKind::chance) return std::to_string(undealt(action));
      return std::string(1, static_cast<char>(legal_actions()[static_cast<std::size_t>(action)]));
   }

   double chance_probability(int /*outcome*/) const override
   {
      return 1.0 / (deck_size() - dealt());
   }

   std::unique_ptr<GameState> child(int action) const override
   {
      auto next = std::make_unique<LeducState>(*this);
      if(kind() == NodeKind::chance) {
         next->cards_[static_cast<std::size_t>(dealt())] = undealt(action);
         return next;
      }
      next->act(legal_actions()[static_cast<std::size_t>(action)]);
      return next;
   }

   std::array<double, 2> utility() const override
   {
      if(folded_ >= 0) {
         const double lost = contributed_[static_cast<std::size_t>(folded_)];
         return folded_ == 0 ? std::array{-lost, lost} : std::array{lost, -lost};
      }
      const int r0 = cards_[0] / 2;
      const int r1 = cards_[1] / 2;
      const int pub = cards_[2] / 2;
      int winner = -1;
      if(r0 == pub) winner = 0;
      else if(r1 == pub) winner = 1;
      else if(r0 != r1) winner = r0 > r1 ? 0 : 1;
      if(winner < 0) return {0.0, 0.0};
      const double pot = contributed_[0];  // equal stakes at showdown
      return winner == 0 ? std::array{pot, -pot} : std::array{-pot, pot};
   }

   std::string infoset_key() const override
   {
      std::string key = std::to_string(cards_[static_cast<std::size_t>(to_act_)]);
      key += '|';
      key += cards_[2] < 0 ? std::string("-") : std::to_string(cards_[2]);
      key += '|';
      key += history_[0];
      key += '|';
      key += history_[1];
      return key;
   }

  private:
   int deck_size() const { return 2 * shape_.ranks; }
   int dealt() const { return cards_[0] < 0 ? 0 : cards_[1] < 0 ? 1 : cards_[2] < 0 ? 2 : 3; }
   int undealt(int outcome) const
   {
      for(int card = 0; card < deck_size(); ++card) {
         bool taken = false;
         for(int c : cards_) taken = taken || c == card;
         if(not taken && outcome-- == 0) return card;
      }
      return -1;
   }

   std::vector<BetAction> legal_actions() const
   {
      std::vector<BetAction> actions;
      if(facing_bet_) actions.push_back(BetAction::fold);
      actions.push_back(BetAction::call);
      if(raises_ < shape_.max_raises) actions.push_back(BetAction::raise);
      return actions;
   }

   void act(BetAction a)
   {
      auto& mine = contributed_[static_cast<std::size_t>(to_act_)];
      const auto theirs = contributed_[static_cast<std::size_t>(1 - to_act_)];
      history_[static_cast<std::size_t>(round_)].push_back(static_cast<char>(a));
      switch(a) {
         case BetAction::fold:
            folded_ = to_act_;
            return;
         case BetAction::call: {
            const bool closes = facing_bet_ || actions_in_round_ > 0;
            mine = theirs;
            if(closes) {
               end_round();
               return;
            }
            break;
         }
         case BetAction::raise:
            mine = theirs + kRaiseSize[static_cast<std::size_t>(round_)];
            ++raises_;
            facing_bet_ = true;
            ++actions_in_round_;
            to_act_ = 1 - to_act_;
            return;
      }
      facing_bet_ = false;
      ++actions_in_round_;
      to_act_ = 1 - to_act_;
   }

   void end_round()
   {
      if(round_ == 1) {
         showdown_ = true;
         return;
      }
      round_ = 1;
      to_act_ = 0;
      raises_ = 0;
      actions_in_round_ = 0;
      facing_bet_ = false;
   }

   LeducShape shape_;
   std::array<int, 3> cards_{-1, -1, -1};
   std::array<std::string, 2> history_;
   std::array<double, 2> contributed_{1.0, 1.0};
   int round_ = 0;
   int to_act_ = 0;
   int raises_ = 0;
   int actions_in_round_ = 0;
   int folded_ = -1;
   bool facing_bet_ = false;
   bool showdown_ = false;
};

class Leduc final : public GameDefinition {
  public:
   Leduc(std::string name, LeducShape shape) : name_(std::move(name)), shape_(shape) {}
   std::string name() const override { return name_; }
   std::unique_ptr<GameState> initial_state() const override
   {
      return std::make_unique<LeducState>(shape_);
   }

  private:
   std::string name_;
   LeducShape shape_;
};

}  // namespace

std::shared_ptr<const GameDefinition> kuhn() { return std::make_shared<Kuhn>(); }

std::shared_ptr<const GameDefinition> leduc(std::string name, int ranks, int max_raises)
{
   return std::make_shared<Leduc>(std::move(name), LeducShape{ranks, max_raises});
}

}  // namespace hscfr::rules
