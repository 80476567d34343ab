#pragma once

// Per-information-set regret minimizer arithmetic. Everything here works on
// caller-owned spans so the solver can keep its state in flat arrays.

#include <span>
#include <string_view>

namespace hscfr {

enum class Variant { cfr, cfr_plus, dcfr, pcfr_plus };

std::string_view to_string(Variant v);
/// Throws ConfigError on unknown names.
Variant parse_variant(std::string_view name);

/// Denominators below this route to the uniform branch.
inline constexpr double kTinyMass = 1e-300;

/// Regret matching: sigma proportional to the positive part of `cum_regret`,
/// uniform when nothing is positive.
void match_strategy(std::span<const double> cum_regret, std::span<double> sigma);

/// Predictive regret matching+: sigma proportional to max(R + m, 0).
void predictive_strategy(
   std::span<const double> cum_regret, std::span<const double> prediction, std::span<double> sigma);

struct DiscountTriple {
   double pos = 1.0;    // t^a / (t^a + 1)
   double neg = 1.0;    // t^b / (t^b + 1)
   double strat = 1.0;  // (t / (t + 1))^g
};

/// Multipliers for completed-iteration count t >= 1.
DiscountTriple discount_triple(long t, double alpha, double beta, double gamma);

/// Mutable view of one information set's solver state.
struct InfoSetView {
   std::span<double> cum_regret;
   std::span<double> cum_strategy;
   std::span<double> current;
   std::span<double> prediction;  // used by pcfr_plus only
};

/// Folds one iteration's instantaneous regrets into the cumulative regrets.
///   dcfr      : R <- R * (R > 0 ? pos : neg) + r
///   cfr_plus,
///   pcfr_plus : R <- max(R + r, 0); pcfr_plus also stores m <- r
///   cfr       : R <- R + r
/// `triple` is only read by dcfr.
void apply_regret_update(
   const InfoSetView& state, std::span<const double> instant_regret, const DiscountTriple& triple, Variant variant);

/// C <- C * strat_mult + own_reach * sigma.
void accumulate_strategy(
   std::span<double> cum_strategy, double own_reach, std::span<const double> sigma, double strat_mult);

/// Normalized cumulative strategy, uniform when the mass is zero.
void normalize_average(std::span<const double> cum_strategy, std::span<double> out);

}  // namespace hscfr
