#pragma once

// Benchmark game rules: Kuhn, Leduc, Big Leduc, Goofspiel (full and limited
// information), Liar's dice, Battleship and Colonel Blotto.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "hscfr/game.hpp"

namespace hscfr {

/// Per-game parameters. Only the fields a game understands may be set.
///
///   goofspiel, goofspiel_li : x = number of cards, 2..6 (default 4)
///   goofspiel               : full_recall = key information sets on the full
///                             bid history instead of hands + win sequence
///   liars_dice              : x = die faces, 2..6 (default 4); wild = highest
///                             face counts as any face (default true)
///   battleship              : x = grid width, 2..4 (default 3)
///   blotto                  : fields 2..5 (default 3), resources 1..10 (default 5)
struct GameParams {
   std::optional<int> x;
   std::optional<int> fields;
   std::optional<int> resources;
   std::optional<bool> wild;
   std::optional<bool> full_recall;
};

struct GameRules {
   std::string name;
   GameParams params;
   std::shared_ptr<const GameDefinition> definition;

   /// Stable identifier such as "goofspiel_li-4"; also the built tree's name.
   std::string id() const;
};

std::span<const std::string_view> game_names();

/// Throws ConfigError on unknown names, unknown parameters or out-of-range values.
GameRules make_game(std::string_view name, const GameParams& params = {});

TreeGame build_tree(const GameRules& rules);

/// Reference size of a benchmark game, when one exists. `exact` rows must match
/// exactly; the others are given to two significant figures.
struct ReferenceSize {
   GameStats stats;
   bool exact = false;
};
std::optional<ReferenceSize> reference_size(const GameRules& rules);

/// Two-significant-figure rendering used for size comparisons, e.g. 9457 -> "9.5e3".
std::string two_sig_figs(std::int64_t count);
bool matches_reference(const GameStats& measured, const ReferenceSize& reference);

}  // namespace hscfr
