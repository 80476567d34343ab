#pragma once

// Strategy profiles as JSON:
//   {"game": "kuhn", "players": [{"<infoset key>": [p0, p1, ...], ...}, {...}]}
// One object per player since the two players may use the same key text.

#include <filesystem>
#include <string>

#include "hscfr/game.hpp"

namespace hscfr {

std::string profile_to_json(const TreeGame& game, const StrategyProfile& profile);

/// Throws ConfigError on malformed documents or unknown keys, CoverageError
/// when an information set is missing.
StrategyProfile profile_from_json(const TreeGame& game, const std::string& text);

/// File variants; I/O failures throw std::runtime_error naming the path.
void write_profile(const std::filesystem::path& path, const TreeGame& game, const StrategyProfile& profile);
StrategyProfile read_profile(const std::filesystem::path& path, const TreeGame& game);

}  // namespace hscfr
