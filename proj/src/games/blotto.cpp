#include <array>
#include <string>
#include <vector>

#include "rule_sets.hpp"

namespace hscfr::rules {

namespace {

// Colonel Blotto as a one-shot game: player 0 picks an allocation, then player
// 1 picks one without observing it. Payoff is battlefields won minus
// battlefields lost; a tied battlefield goes to nobody.

void compositions(int fields, int resources, std::vector<int>& prefix, std::vector<std::vector<int>>& out)
{
   if(static_cast<int>(prefix.size()) == fields - 1) {
      prefix.push_back(resources);
      out.push_back(prefix);
      prefix.pop_back();
      return;
   }
   for(int r = resources; r >= 0; --r) {
      prefix.push_back(r);
      compositions(fields, resources - r, prefix, out);
      prefix.pop_back();
   }
}

std::string allocation_label(const std::vector<int>& alloc)
{
   std::string s;
   for(std::size_t i = 0; i < alloc.size(); ++i) {
      if(i) s += '-';
      s += std::to_string(alloc[i]);
   }
   return s;
}

class BlottoState final : public GameState {
  public:
   explicit BlottoState(const std::vector<std::vector<int>>* allocations) : allocations_(allocations) {}

   NodeKind kind() const override { return choice_[1] < 0 ? NodeKind::decision : NodeKind::terminal; }
   Player actor() const override { return choice_[0] < 0 ? Player::first : Player::second; }
   int num_actions() const override { return static_cast<int>(allocations_->size()); }
   std::string action_label(int action) const override
   {
      return allocation_label((*allocations_)[static_cast<std::size_t>(action)]);
   }
   std::unique_ptr<GameState> child(int action) const override
   {
      auto next = std::make_unique<BlottoState>(*this);
      next->choice_[choice_[0] < 0 ? 0 : 1] = action;
      return next;
   }
   std::array<double, 2> utility() const override
   {
      const auto& a = (*allocations_)[static_cast<std::size_t>(choice_[0])];
      const auto& b = (*allocations_)[static_cast<std::size_t>(choice_[1])];
      double u0 = 0.0;
      for(std::size_t f = 0; f < a.size(); ++f) u0 += (a[f] > b[f]) - (a[f] < b[f]);
      return {u0, -u0};
   }
   std::string infoset_key() const override { return "allocate"; }

  private:
   const std::vector<std::vector<int>>* allocations_;
   std::array<int, 2> choice_{-1, -1};
};

class Blotto final : public GameDefinition {
  public:
   Blotto(int fields, int resources) : fields_(fields), resources_(resources)
   {
      std::vector<int> prefix;
      compositions(fields, resources, prefix, allocations_);
   }
   std::string name() const override
   {
      return "blotto-" + std::to_string(fields_) + "-" + std::to_string(resources_);
   }
   std::unique_ptr<GameState> initial_state() const override
   {
      return std::make_unique<BlottoState>(&allocations_);
   }

  private:
   int fields_;
   int resources_;
   std::vector<std::vector<int>> allocations_;
};

}  // namespace

std::shared_ptr<const GameDefinition> blotto(int fields, int resources)
{
   return std::make_shared<Blotto>(fields, resources);
}

}  // namespace hscfr::rules
