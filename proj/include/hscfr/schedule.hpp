#pragma once

// Hyperparameter schedules: per-iteration (alpha, beta, gamma) for the
// discounted CFR family.
//
// Time convention: t counts completed iterations, so the first iteration sees
// t = 0 and a run of n iterations evaluates t in [0, n - 1]. Schedules are
// defined on the closed range [0, n].

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace hscfr {

/// Either a constant or start + slope * t / n. The slope is expressed per
/// horizon, so changing n rescales the per-iteration rate.
class ScalarSchedule {
  public:
   static ScalarSchedule constant(double value) { return {value, 0.0}; }
   static ScalarSchedule linear(double start, double slope_per_horizon)
   {
      return {start, slope_per_horizon};
   }

   double operator()(long t, long n) const
   {
      return slope_ == 0.0 ? start_ : start_ + slope_ * (static_cast<double>(t) / static_cast<double>(n));
   }

   double start() const { return start_; }
   double slope() const { return slope_; }
   bool is_constant() const { return slope_ == 0.0; }
   /// Extremes over t in [0, n]; a linear schedule attains them at the endpoints.
   double min_over_horizon() const { return slope_ < 0.0 ? start_ + slope_ : start_; }
   double max_over_horizon() const { return slope_ > 0.0 ? start_ + slope_ : start_; }

  private:
   ScalarSchedule(double start, double slope) : start_(start), slope_(slope) {}
   double start_;
   double slope_;
};

struct HyperParams {
   double alpha;
   double beta;
   double gamma;
};

struct ScheduleSet {
   std::string name;
   ScalarSchedule alpha = ScalarSchedule::constant(1.5);
   ScalarSchedule beta = ScalarSchedule::constant(0.0);
   ScalarSchedule gamma = ScalarSchedule::constant(2.0);
   /// Iterations with t < fraction * n contribute nothing to the average strategy.
   double zero_weight_prefix_fraction = 0.0;
   /// Regret-matching+ semantics: cumulative regrets are clipped at zero instead
   /// of discounted with alpha/beta.
   bool clip_regrets = false;
   /// Set for baselines that are not covered by the convergence-rate bounds.
   bool bound_exempt = false;

   /// alpha in [1, 5], beta in [-5, 0] and gamma >= 0 for every t in [0, n].
   bool within_theorem_ranges() const;
   /// U: the largest gamma over the horizon.
   double gamma_upper_bound() const { return gamma.max_over_horizon(); }
   /// Multiplier (0 or 1) on the average-strategy contribution of iteration t.
   double average_weight(long t, long n) const
   {
      return static_cast<double>(t) < zero_weight_prefix_fraction * static_cast<double>(n) ? 0.0 : 1.0;
   }
   /// Throws ConfigError if the set leaves the theorem ranges without being
   /// flagged bound-exempt, or if the prefix fraction is outside [0, 1).
   void validate() const;
};

/// Throws std::out_of_range unless n >= 1 and 0 <= t <= n.
HyperParams eval_schedule(const ScheduleSet& set, long t, long n);

std::span<const std::string_view> schedule_names();

/// Built-in sets: hs30, hs15, hs40, hs5, hs30_fixed, hs30_alpha_fixed,
/// hs30_beta_fixed, dcfr, dcfr_nc, pcfr_plus, cfr_plus, cfr.
/// Throws ConfigError for unknown names.
ScheduleSet builtin_schedule(std::string_view name);

/// A built-in name, or a custom description such as
/// "alpha=1:3,beta=-1:-2,gamma=30:-5,prefix=0.25,exempt" where "start:slope"
/// is linear and a bare number is constant. Unspecified components follow hs30.
/// Custom sets are validated before they are returned.
ScheduleSet parse_schedule(std::string_view text);

/// Smallest t in [1, n] with (t / (t + 1))^gamma(t) >= w, gamma evaluated with
/// horizon n; nullopt when the threshold is not reached. Throws DomainError
/// unless 0 < w < 1.
std::optional<long> weight_threshold(const ScalarSchedule& gamma, long n, double w);

/// (t / (t + 1))^gamma: the factor applied to the cumulative strategy.
double strategy_discount(long t, double gamma);

}  // namespace hscfr
