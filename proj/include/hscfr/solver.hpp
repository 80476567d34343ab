#pragma once

// Full-tree CFR iteration engine for the discounted CFR family.

#include <array>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "hscfr/game.hpp"
#include "hscfr/regret.hpp"
#include "hscfr/schedule.hpp"

namespace hscfr {

enum class UpdateMode { alternating, simultaneous };

std::string_view to_string(UpdateMode m);
/// Throws ConfigError on unknown names.
UpdateMode parse_update_mode(std::string_view name);

/// How per-iteration strategies are weighted in the average.
///   discount : C <- C * (t/(t+1))^gamma(t) + reach * sigma (the default)
///   power    : C <- C + k^gamma(t) * reach * sigma for 1-based iteration k.
/// The two agree whenever gamma is constant; with a schedule they do not.
enum class Averaging { discount, power };

std::string_view to_string(Averaging a);
/// Throws ConfigError on unknown names.
Averaging parse_averaging(std::string_view name);

/// The schedule a variant runs with when none is given.
ScheduleSet default_schedule(Variant v);

struct SolverConfig {
   Variant variant = Variant::dcfr;
   ScheduleSet schedule = builtin_schedule("dcfr");
   long iterations = 1000;
   UpdateMode mode = UpdateMode::alternating;
   long checkpoint_every = 10;
   Averaging averaging = Averaging::discount;

   /// Throws ConfigError on an unusable combination. pcfr_plus ignores the
   /// alpha/beta schedules and cfr ignores the schedule entirely.
   void validate() const;
};

struct ConvergenceRecord {
   long iteration = 0;
   double exploitability = 0.0;
   /// Solver wall time up to this checkpoint; evaluation is excluded.
   double elapsed_ms = 0.0;
};

struct RunResult {
   StrategyProfile average;
   std::vector<ConvergenceRecord> checkpoints;
   double solve_ms = 0.0;
   double eval_ms = 0.0;

   double final_exploitability() const
   {
      return checkpoints.empty() ? 0.0 : checkpoints.back().exploitability;
   }
};

class Solver {
  public:
   Solver(const TreeGame& game, SolverConfig config);

   /// Runs one full iteration (both players).
   void iterate();
   long completed_iterations() const { return completed_; }

   StrategyProfile average_strategy() const;
   StrategyProfile current_strategy() const;

   /// Counterfactual traversal for `updating`; returns the node's expected
   /// utility for that player under the current strategies and adds
   /// opp_reach-weighted instantaneous regrets into the pass buffers.
   double traverse(Player updating, NodeId node, double own_reach, double opp_reach);

   std::span<const double> cum_regret(Player p, int infoset) const { return slice(regret_, p, infoset); }
   std::span<const double> cum_strategy(Player p, int infoset) const { return slice(strategy_, p, infoset); }
   std::span<const double> current(Player p, int infoset) const { return slice(current_, p, infoset); }
   std::span<const double> prediction(Player p, int infoset) const { return slice(prediction_, p, infoset); }
   /// Instantaneous regrets gathered by the most recent pass for `p`.
   std::span<const double> instant_regret(Player p, int infoset) const { return slice(pass_regret_, p, infoset); }

   /// Discount-weighted sums of u_i(sigma^t) and of the iteration weights,
   /// using the same weights as the average strategy. Their ratio is the
   /// baseline of the weighted average regret.
   const std::array<double, 2>& weighted_values() const { return weighted_values_; }
   const std::array<double, 2>& weight_sums() const { return weight_sums_; }

   const SolverConfig& config() const { return config_; }

  private:
   std::span<const double> slice(const std::array<std::vector<double>, 2>& a, Player p, int infoset) const;
   std::span<double> slice(std::array<std::vector<double>, 2>& a, Player p, int infoset);

   void refresh_current(Player p);
   void begin_pass(Player p);
   void finish_pass(Player p, long t, double root_value);

   const TreeGame& game_;
   SolverConfig config_;
   long completed_ = 0;

   std::array<std::vector<std::size_t>, 2> offsets_;  // per infoset, size num_infosets + 1
   std::array<std::vector<double>, 2> regret_;
   std::array<std::vector<double>, 2> strategy_;
   std::array<std::vector<double>, 2> current_;
   std::array<std::vector<double>, 2> prediction_;
   std::array<std::vector<double>, 2> pass_regret_;
   std::array<std::vector<double>, 2> pass_reach_;  // per infoset

   std::vector<double> scratch_;
   std::size_t scratch_top_ = 0;

   std::array<double, 2> weighted_values_{0.0, 0.0};
   std::array<double, 2> weight_sums_{0.0, 0.0};
};

using CheckpointCallback = std::function<void(const ConvergenceRecord&)>;

/// Runs config.iterations iterations, evaluating exploitability of the average
/// strategy every checkpoint_every iterations and after the last one.
RunResult run(const TreeGame& game, const SolverConfig& config, const CheckpointCallback& on_checkpoint = {});

}  // namespace hscfr
