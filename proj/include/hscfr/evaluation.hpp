#pragma once

// Exact best responses, exploitability, the convergence-rate bounds and the
// order-of-magnitude comparison metric.

#include <array>
#include <optional>
#include <vector>

#include "hscfr/game.hpp"

namespace hscfr {

struct BestResponse {
   /// u_i(BR(sigma_-i), sigma_-i)
   double value = 0.0;
   /// Chosen action per information set of the responding player. Ties go to
   /// the lowest action index.
   std::vector<int> actions;

   /// The pure response as a behavioral strategy for `player` (the other
   /// player's entries are left empty).
   StrategyProfile as_profile(const TreeGame& game, Player player) const;
};

/// Throws CoverageError if `profile` misses an information set of the opponent.
BestResponse best_response(const TreeGame& game, const StrategyProfile& profile, Player player);

struct ExploitabilityReport {
   /// u_i(BR(sigma_-i), sigma_-i) for i = 0, 1.
   std::array<double, 2> br_values{0.0, 0.0};
   /// e(sigma) = (br_values[0] + br_values[1]) / 2
   double exploitability = 0.0;
   /// e(sigma_i), only when the game value for player 0 was supplied.
   std::optional<std::array<double, 2>> per_player;
};

ExploitabilityReport exploitability(
   const TreeGame& game, const StrategyProfile& profile, std::optional<double> game_value = std::nullopt);

struct BoundInput {
   double delta = 0.0;       // utility range
   double infosets = 0.0;    // |I|, both players
   double max_actions = 0.0; // |A|
   double gamma_max = 0.0;   // U
   double iterations = 0.0;  // T
};

enum class BoundKind { hs_dcfr, hs_pcfr_plus };

/// hs_dcfr:      (U+1) D |I| (8/3 sqrt|A| + 2/sqrt T) / sqrt T
/// hs_pcfr_plus: (U+1) |I| K / sqrt T
/// Throws DomainError unless D, |I|, |A|, T > 0 and U >= 0 is finite.
double theorem_bound(const BoundInput& in, BoundKind which, double k = 1.0);

BoundInput bound_input(const TreeGame& game, double gamma_max, long iterations);

/// log10(baseline / candidate); DomainError if either is not positive.
double oom(double baseline_exploitability, double candidate_exploitability);

}  // namespace hscfr
