#include "hscfr/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "hscfr/errors.hpp"
#include "hscfr/evaluation.hpp"

namespace hscfr {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
   return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int max_depth(const TreeGame& game)
{
   const auto nodes = game.nodes();
   std::vector<int> depth(nodes.size(), 0);
   int deepest = 0;
   for(std::size_t id = 0; id < nodes.size(); ++id) {
      const Node& n = nodes[id];
      deepest = std::max(deepest, depth[id]);
      for(int a = 0; a < n.num_children; ++a) depth[static_cast<std::size_t>(n.first_child + a)] = depth[id] + 1;
   }
   return deepest;
}

}  // namespace

std::string_view to_string(UpdateMode m)
{
   return m == UpdateMode::alternating ? "alternating" : "simultaneous";
}

UpdateMode parse_update_mode(std::string_view name)
{
   if(name == "alternating") return UpdateMode::alternating;
   if(name == "simultaneous") return UpdateMode::simultaneous;
   throw ConfigError("unknown update mode '" + std::string(name) + "' (expected alternating or simultaneous)");
}

std::string_view to_string(Averaging a) { return a == Averaging::discount ? "discount" : "power"; }

Averaging parse_averaging(std::string_view name)
{
   if(name == "discount") return Averaging::discount;
   if(name == "power") return Averaging::power;
   throw ConfigError("unknown averaging '" + std::string(name) + "' (expected discount or power)");
}

ScheduleSet default_schedule(Variant v) { return builtin_schedule(to_string(v)); }

void SolverConfig::validate() const
{
   if(iterations < 1) throw ConfigError("iterations must be at least 1");
   if(checkpoint_every < 1) throw ConfigError("checkpoint interval must be at least 1");
   if(variant == Variant::cfr) return;
   schedule.validate();
   if(averaging == Averaging::power
      && schedule.gamma.max_over_horizon() * std::log10(static_cast<double>(iterations)) > 250.0) {
      throw ConfigError("power averaging weights would overflow for this schedule and horizon");
   }
   if(schedule.clip_regrets && variant != Variant::cfr_plus) {
      throw ConfigError("schedule '" + schedule.name + "' is meant for the cfr_plus variant");
   }
}

Solver::Solver(const TreeGame& game, SolverConfig config) : game_(game), config_(std::move(config))
{
   config_.validate();
   for(Player p : kPlayers) {
      const auto pi = static_cast<std::size_t>(index_of(p));
      auto& off = offsets_[pi];
      off.assign(1, 0);
      for(const InfoSet& info : game.infosets(p)) {
         off.push_back(off.back() + static_cast<std::size_t>(info.num_actions()));
      }
      const std::size_t total = off.back();
      regret_[pi].assign(total, 0.0);
      strategy_[pi].assign(total, 0.0);
      current_[pi].assign(total, 0.0);
      prediction_[pi].assign(total, 0.0);
      pass_regret_[pi].assign(total, 0.0);
      pass_reach_[pi].assign(game.infosets(p).size(), 0.0);
      refresh_current(p);
   }
   scratch_.assign(static_cast<std::size_t>(max_depth(game) + 1) * static_cast<std::size_t>(std::max(game.max_actions(), 1)), 0.0);
}

std::span<const double> Solver::slice(const std::array<std::vector<double>, 2>& a, Player p, int infoset) const
{
   const auto& off = offsets_[static_cast<std::size_t>(index_of(p))];
   const auto i = static_cast<std::size_t>(infoset);
   return std::span<const double>(a[static_cast<std::size_t>(index_of(p))]).subspan(off[i], off[i + 1] - off[i]);
}

std::span<double> Solver::slice(std::array<std::vector<double>, 2>& a, Player p, int infoset)
{
   const auto& off = offsets_[static_cast<std::size_t>(index_of(p))];
   const auto i = static_cast<std::size_t>(infoset);
   return std::span<double>(a[static_cast<std::size_t>(index_of(p))]).subspan(off[i], off[i + 1] - off[i]);
}

void Solver::refresh_current(Player p)
{
   for(int i = 0; i < game_.num_infosets(p); ++i) {
      if(config_.variant == Variant::pcfr_plus) {
         predictive_strategy(slice(regret_, p, i), slice(prediction_, p, i), slice(current_, p, i));
      } else {
         match_strategy(slice(regret_, p, i), slice(current_, p, i));
      }
   }
}

void Solver::begin_pass(Player p)
{
   const auto pi = static_cast<std::size_t>(index_of(p));
   std::fill(pass_regret_[pi].begin(), pass_regret_[pi].end(), 0.0);
   std::fill(pass_reach_[pi].begin(), pass_reach_[pi].end(), 0.0);
}

double Solver::traverse(Player updating, NodeId id, double own_reach, double opp_reach)
{
   const Node& n = game_.node(id);
   if(n.kind == NodeKind::terminal) return game_.utility(id, updating);
   // nothing below contributes to regrets or to the cumulative strategy
   if(own_reach == 0.0 && opp_reach == 0.0) return 0.0;

   double v = 0.0;
   if(n.kind == NodeKind::chance) {
      const auto probs = game_.chance_probs(id);
      for(int a = 0; a < n.num_children; ++a) {
         const double p = probs[static_cast<std::size_t>(a)];
         v += p * traverse(updating, n.first_child + a, own_reach, opp_reach * p);
      }
      return v;
   }

   const auto sigma = slice(current_, n.actor, n.payload);
   if(n.actor != updating) {
      for(int a = 0; a < n.num_children; ++a) {
         const double p = sigma[static_cast<std::size_t>(a)];
         v += p * traverse(updating, n.first_child + a, own_reach, opp_reach * p);
      }
      return v;
   }

   const std::size_t k = n.num_children;
   const std::size_t base = scratch_top_;
   scratch_top_ += k;
   double* child_values = scratch_.data() + base;
   for(std::size_t a = 0; a < k; ++a) {
      child_values[a] = traverse(updating, n.first_child + static_cast<NodeId>(a), own_reach * sigma[a], opp_reach);
      v += sigma[a] * child_values[a];
   }
   auto regrets = slice(pass_regret_, updating, n.payload);
   for(std::size_t a = 0; a < k; ++a) regrets[a] += opp_reach * (child_values[a] - v);
   pass_reach_[static_cast<std::size_t>(index_of(updating))][static_cast<std::size_t>(n.payload)] += own_reach;
   scratch_top_ = base;
   return v;
}

void Solver::finish_pass(Player p, long t, double root_value)
{
   const long n = config_.iterations;
   DiscountTriple triple;
   double strat_mult = 1.0;
   double weight = 1.0;
   if(config_.variant != Variant::cfr) {
      if(t >= 1) {
         const auto hp = eval_schedule(config_.schedule, t, n);
         triple = discount_triple(t, hp.alpha, hp.beta, hp.gamma);
         strat_mult = triple.strat;
      }
      weight = config_.schedule.average_weight(t, n);
      if(config_.averaging == Averaging::power) {
         strat_mult = 1.0;
         weight *= std::pow(static_cast<double>(t + 1), config_.schedule.gamma(t, n));
      }
   }
   const auto pi = static_cast<std::size_t>(index_of(p));
   for(int i = 0; i < game_.num_infosets(p); ++i) {
      const InfoSetView view{slice(regret_, p, i), slice(strategy_, p, i), slice(current_, p, i), slice(prediction_, p, i)};
      // own reach of the information set; members share it under perfect recall
      const double members = static_cast<double>(game_.infoset(p, i).members.size());
      const double reach = weight * pass_reach_[pi][static_cast<std::size_t>(i)] / members;
      accumulate_strategy(view.cum_strategy, reach, view.current, strat_mult);
      apply_regret_update(view, slice(pass_regret_, p, i), triple, config_.variant);
   }
   weighted_values_[pi] = weighted_values_[pi] * strat_mult + weight * root_value;
   weight_sums_[pi] = weight_sums_[pi] * strat_mult + weight;
}

void Solver::iterate()
{
   const long t = completed_;
   if(config_.mode == UpdateMode::alternating) {
      for(Player p : kPlayers) {
         begin_pass(p);
         const double root_value = traverse(p, game_.root(), 1.0, 1.0);
         finish_pass(p, t, root_value);
         refresh_current(p);
      }
   } else {
      std::array<double, 2> root_values{};
      for(Player p : kPlayers) {
         begin_pass(p);
         root_values[static_cast<std::size_t>(index_of(p))] = traverse(p, game_.root(), 1.0, 1.0);
      }
      for(Player p : kPlayers) {
         finish_pass(p, t, root_values[static_cast<std::size_t>(index_of(p))]);
         refresh_current(p);
      }
   }
   ++completed_;
}

StrategyProfile Solver::average_strategy() const
{
   StrategyProfile out;
   for(Player p : kPlayers) {
      out.resize(p, static_cast<std::size_t>(game_.num_infosets(p)));
      for(int i = 0; i < game_.num_infosets(p); ++i) {
         auto& probs = out.at(p, i);
         probs.resize(static_cast<std::size_t>(game_.infoset(p, i).num_actions()));
         normalize_average(cum_strategy(p, i), probs);
      }
   }
   return out;
}

StrategyProfile Solver::current_strategy() const
{
   StrategyProfile out;
   for(Player p : kPlayers) {
      out.resize(p, static_cast<std::size_t>(game_.num_infosets(p)));
      for(int i = 0; i < game_.num_infosets(p); ++i) {
         const auto sigma = current(p, i);
         out.at(p, i).assign(sigma.begin(), sigma.end());
      }
   }
   return out;
}

RunResult run(const TreeGame& game, const SolverConfig& config, const CheckpointCallback& on_checkpoint)
{
   Solver solver(game, config);
   RunResult result;
   for(long k = 1; k <= config.iterations; ++k) {
      const auto start = Clock::now();
      solver.iterate();
      result.solve_ms += ms_since(start);
      if(k % config.checkpoint_every != 0 && k != config.iterations) continue;
      const auto eval_start = Clock::now();
      const double e = exploitability(game, solver.average_strategy()).exploitability;
      result.eval_ms += ms_since(eval_start);
      result.checkpoints.push_back({k, e, result.solve_ms});
      if(on_checkpoint) on_checkpoint(result.checkpoints.back());
   }
   result.average = solver.average_strategy();
   return result;
}

}  // namespace hscfr
