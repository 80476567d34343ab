#pragma once

#include <memory>
#include <string>

#include "hscfr/game.hpp"

namespace hscfr::rules {

std::shared_ptr<const GameDefinition> kuhn();
/// Leduc-style hold'em: `ranks` ranks in two suits, raise sizes 2 then 4,
/// at most `max_raises` raises per betting round.
std::shared_ptr<const GameDefinition> leduc(std::string name, int ranks, int max_raises);
std::shared_ptr<const GameDefinition> goofspiel(int cards, bool limited_info, bool full_recall);
std::shared_ptr<const GameDefinition> liars_dice(int faces, bool wild);
std::shared_ptr<const GameDefinition> battleship(int width);
std::shared_ptr<const GameDefinition> blotto(int fields, int resources);

}  // namespace hscfr::rules
