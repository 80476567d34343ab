#include "hscfr/evaluation.hpp"

#include <cmath>
#include <string>

#include "hscfr/errors.hpp"

namespace hscfr {

namespace {

constexpr int kUnset = -1;
constexpr int kInProgress = -2;

// Expectimax against a fixed opponent. Opponent-and-chance reach comes from a
// forward sweep; values are memoized per node and each information set's
// choice is made once, over all of its members.
class Responder {
  public:
   Responder(const TreeGame& game, const StrategyProfile& profile, Player player)
      : game_(game),
        profile_(profile),
        me_(player),
        reach_(game.num_nodes(), 0.0),
        value_(game.num_nodes(), 0.0),
        known_(game.num_nodes(), 0),
        choice_(static_cast<std::size_t>(game.num_infosets(player)), kUnset)
   {
      sweep_reach();
   }

   BestResponse solve()
   {
      BestResponse out;
      out.value = value(game_.root());
      // information sets below zero-reach branches still get a choice
      for(int i = 0; i < game_.num_infosets(me_); ++i) choose(i);
      out.actions = std::move(choice_);
      return out;
   }

  private:
   void sweep_reach()
   {
      const auto nodes = game_.nodes();
      reach_[0] = 1.0;
      for(std::size_t id = 0; id < nodes.size(); ++id) {
         const Node& n = nodes[id];
         const double r = reach_[id];
         const auto first = static_cast<std::size_t>(n.first_child);
         switch(n.kind) {
            case NodeKind::terminal: break;
            case NodeKind::chance: {
               const auto probs = game_.chance_probs(static_cast<NodeId>(id));
               for(std::size_t a = 0; a < n.num_children; ++a) reach_[first + a] = r * probs[a];
               break;
            }
            case NodeKind::decision:
               if(n.actor == me_) {
                  for(std::size_t a = 0; a < n.num_children; ++a) reach_[first + a] = r;
               } else {
                  const auto sigma = profile_.at(n.actor, n.payload);
                  for(std::size_t a = 0; a < n.num_children; ++a) reach_[first + a] = r * sigma[a];
               }
               break;
         }
      }
   }

   double value(NodeId id)
   {
      const auto idx = static_cast<std::size_t>(id);
      if(known_[idx]) return value_[idx];
      const Node& n = game_.node(id);
      double v = 0.0;
      switch(n.kind) {
         case NodeKind::terminal: v = game_.utility(id, me_); break;
         case NodeKind::chance: {
            const auto probs = game_.chance_probs(id);
            for(int a = 0; a < n.num_children; ++a) v += probs[static_cast<std::size_t>(a)] * value(n.first_child + a);
            break;
         }
         case NodeKind::decision:
            if(n.actor == me_) {
               v = value(n.first_child + choose(n.payload));
            } else {
               const auto sigma = profile_.at(n.actor, n.payload);
               for(int a = 0; a < n.num_children; ++a) {
                  const double p = sigma[static_cast<std::size_t>(a)];
                  if(p != 0.0) v += p * value(n.first_child + a);
               }
            }
            break;
      }
      value_[idx] = v;
      known_[idx] = 1;
      return v;
   }

   int choose(int infoset)
   {
      auto& slot = choice_[static_cast<std::size_t>(infoset)];
      if(slot >= 0) return slot;
      const InfoSet& info = game_.infoset(me_, infoset);
      if(slot == kInProgress) {
         throw StructureError("information set '" + info.key + "' is reachable from itself");
      }
      slot = kInProgress;
      int best = 0;
      double best_q = 0.0;
      for(int a = 0; a < info.num_actions(); ++a) {
         double q = 0.0;
         for(NodeId h : info.members) {
            q += reach_[static_cast<std::size_t>(h)] * value(game_.node(h).first_child + a);
         }
         if(a == 0 || q > best_q) {
            best = a;
            best_q = q;
         }
      }
      slot = best;
      return best;
   }

   const TreeGame& game_;
   const StrategyProfile& profile_;
   Player me_;
   std::vector<double> reach_;
   std::vector<double> value_;
   std::vector<char> known_;
   std::vector<int> choice_;
};

}  // namespace

StrategyProfile BestResponse::as_profile(const TreeGame& game, Player player) const
{
   StrategyProfile out;
   out.resize(player, actions.size());
   for(std::size_t i = 0; i < actions.size(); ++i) {
      auto& probs = out.at(player, static_cast<int>(i));
      probs.assign(static_cast<std::size_t>(game.infoset(player, static_cast<int>(i)).num_actions()), 0.0);
      probs[static_cast<std::size_t>(actions[i])] = 1.0;
   }
   return out;
}

BestResponse best_response(const TreeGame& game, const StrategyProfile& profile, Player player)
{
   profile.check_covers(game, opponent_of(player));
   return Responder(game, profile, player).solve();
}

ExploitabilityReport exploitability(
   const TreeGame& game, const StrategyProfile& profile, std::optional<double> game_value)
{
   ExploitabilityReport report;
   for(Player p : kPlayers) report.br_values[index_of(p)] = best_response(game, profile, p).value;
   report.exploitability = 0.5 * (report.br_values[0] + report.br_values[1]);
   if(game_value) {
      // e(sigma_0) is what player 1 gains over -v by responding to sigma_0
      report.per_player = std::array{report.br_values[1] + *game_value, report.br_values[0] - *game_value};
   }
   return report;
}

double theorem_bound(const BoundInput& in, BoundKind which, double k)
{
   if(not(in.delta > 0.0 && in.infosets > 0.0 && in.max_actions > 0.0 && in.iterations > 0.0)) {
      throw DomainError("bound inputs must be positive");
   }
   if(not(in.gamma_max >= 0.0 && std::isfinite(in.gamma_max))) {
      throw DomainError("gamma upper bound must be finite and nonnegative");
   }
   const double root_t = std::sqrt(in.iterations);
   if(which == BoundKind::hs_dcfr) {
      return (in.gamma_max + 1.0) * in.delta * in.infosets
             * (8.0 / 3.0 * std::sqrt(in.max_actions) + 2.0 / root_t) / root_t;
   }
   return (in.gamma_max + 1.0) * in.infosets * k / root_t;
}

BoundInput bound_input(const TreeGame& game, double gamma_max, long iterations)
{
   return {game.utility_range(),
           static_cast<double>(game.num_infosets(Player::first) + game.num_infosets(Player::second)),
           static_cast<double>(game.max_actions()),
           gamma_max,
           static_cast<double>(iterations)};
}

double oom(double baseline_exploitability, double candidate_exploitability)
{
   if(not(baseline_exploitability > 0.0 && candidate_exploitability > 0.0)) {
      throw DomainError("oom needs positive exploitabilities");
   }
   return std::log10(baseline_exploitability / candidate_exploitability);
}

}  // namespace hscfr
