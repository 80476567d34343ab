#include <array>
#include <cmath>
#include <charconv>
#include <map>
#include <utility>

#include "hscfr/errors.hpp"
#include "hscfr/games.hpp"
#include "rule_sets.hpp"

namespace hscfr {

namespace {

constexpr std::array<std::string_view, 8> kNames{
   "kuhn", "leduc", "big_leduc", "goofspiel", "goofspiel_li", "liars_dice", "battleship", "blotto"};

int checked(std::string_view game, std::string_view param, int value, int lo, int hi)
{
   if(value < lo || value > hi) {
      throw ConfigError(std::string(game) + ": " + std::string(param) + "=" + std::to_string(value)
                        + " outside supported range [" + std::to_string(lo) + ", "
                        + std::to_string(hi) + "]");
   }
   return value;
}

void reject_unused(std::string_view game, const GameParams& p, bool x, bool blotto, bool wild, bool recall)
{
   auto bad = [&](std::string_view param) {
      throw ConfigError(std::string(game) + " does not take parameter '" + std::string(param) + "'");
   };
   if(p.x && not x) bad("x");
   if(p.fields && not blotto) bad("fields");
   if(p.resources && not blotto) bad("resources");
   if(p.wild && not wild) bad("wild");
   if(p.full_recall && not recall) bad("full_recall");
}

}  // namespace

std::span<const std::string_view> game_names() { return kNames; }

std::string GameRules::id() const { return definition->name(); }

GameRules make_game(std::string_view name, const GameParams& params)
{
   GameRules rules{std::string(name), params, nullptr};
   if(name == "kuhn") {
      reject_unused(name, params, false, false, false, false);
      rules.definition = rules::kuhn();
   } else if(name == "leduc") {
      reject_unused(name, params, false, false, false, false);
      rules.definition = rules::leduc("leduc", 3, 2);
   } else if(name == "big_leduc") {
      reject_unused(name, params, false, false, false, false);
      rules.definition = rules::leduc("big_leduc", 12, 6);
   } else if(name == "goofspiel" || name == "goofspiel_li") {
      const bool limited = name == "goofspiel_li";
      reject_unused(name, params, true, false, false, not limited);
      const int x = checked(name, "x", params.x.value_or(4), 2, 6);
      rules.definition = rules::goofspiel(x, limited, params.full_recall.value_or(false));
   } else if(name == "liars_dice") {
      reject_unused(name, params, true, false, true, false);
      const int x = checked(name, "x", params.x.value_or(4), 2, 6);
      rules.definition = rules::liars_dice(x, params.wild.value_or(true));
   } else if(name == "battleship") {
      reject_unused(name, params, true, false, false, false);
      rules.definition = rules::battleship(checked(name, "x", params.x.value_or(3), 2, 4));
   } else if(name == "blotto") {
      reject_unused(name, params, false, true, false, false);
      rules.definition = rules::blotto(
         checked(name, "fields", params.fields.value_or(3), 2, 5),
         checked(name, "resources", params.resources.value_or(5), 1, 10));
   } else {
      throw ConfigError("unknown game '" + std::string(name) + "'");
   }
   return rules;
}

TreeGame build_tree(const GameRules& rules) { return build_tree(*rules.definition); }

std::optional<ReferenceSize> reference_size(const GameRules& rules)
{
   static const std::map<std::string, ReferenceSize> table{
      {"kuhn", {{58, 12, 30}, true}},
      {"battleship-2", {{10'000, 3'300, 5'600}, false}},
      {"battleship-3", {{730'000, 81'000, 550'000}, false}},
      {"goofspiel_li-3", {{67, 16, 36}, true}},
      {"goofspiel-4", {{1'100, 270, 580}, false}},
      {"goofspiel_li-4", {{1'100, 160, 580}, false}},
      {"goofspiel-5", {{27'000, 3'300, 14'000}, false}},
      {"goofspiel_li-5", {{27'000, 2'100, 14'000}, false}},
      {"leduc", {{9'500, 940, 5'500}, false}},
      {"big_leduc", {{6'200'000, 100'000, 4'000'000}, false}},
      {"liars_dice-4", {{8'200, 1'000, 4'100}, false}},
      {"liars_dice-6", {{290'000, 25'000, 150'000}, false}},
   };
   // the full-recall Goofspiel keying changes the information-set count
   if(rules.params.full_recall.value_or(false)) return std::nullopt;
   const auto it = table.find(rules.id());
   if(it == table.end()) return std::nullopt;
   return it->second;
}

std::string two_sig_figs(std::int64_t count)
{
   if(count == 0) return "0";
   char buf[32];
   const auto res =
      std::to_chars(buf, buf + sizeof buf, static_cast<double>(count), std::chars_format::scientific, 1);
   // "9.5e+03" -> "9.5e3"
   std::string s(buf, res.ptr);
   const auto e = s.find('e');
   const int exponent = std::stoi(s.substr(e + 1));
   return s.substr(0, e + 1) + std::to_string(exponent);
}

bool matches_reference(const GameStats& measured, const ReferenceSize& reference)
{
   if(reference.exact) return measured == reference.stats;
   return two_sig_figs(measured.histories) == two_sig_figs(reference.stats.histories)
          && two_sig_figs(measured.infosets) == two_sig_figs(reference.stats.infosets)
          && two_sig_figs(measured.leaves) == two_sig_figs(reference.stats.leaves);
}

}  // namespace hscfr
