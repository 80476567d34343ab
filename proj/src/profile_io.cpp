#include "hscfr/profile_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hscfr/errors.hpp"

namespace hscfr {

using nlohmann::json;

std::string profile_to_json(const TreeGame& game, const StrategyProfile& profile)
{
   profile.validate(game);
   json players = json::array();
   for(Player p : kPlayers) {
      json table = json::object();
      for(int i = 0; i < game.num_infosets(p); ++i) {
         const auto probs = profile.at(p, i);
         table[game.infoset(p, i).key] = std::vector<double>(probs.begin(), probs.end());
      }
      players.push_back(std::move(table));
   }
   // numbers are written in shortest round-trip form
   return json{{"game", game.name()}, {"players", std::move(players)}}.dump(1, ' ', false) + "\n";
}

StrategyProfile profile_from_json(const TreeGame& game, const std::string& text)
{
   json doc;
   try {
      doc = json::parse(text);
   } catch(const json::parse_error& e) {
      throw ConfigError(std::string("profile is not valid JSON: ") + e.what());
   }
   if(not doc.is_object() || not doc.contains("players") || not doc["players"].is_array()
      || doc["players"].size() != 2) {
      throw ConfigError("profile must be an object with a two-element 'players' array");
   }
   StrategyProfile profile;
   for(Player p : kPlayers) {
      const json& table = doc["players"][static_cast<std::size_t>(index_of(p))];
      if(not table.is_object()) throw ConfigError("profile entry for each player must be an object");
      profile.resize(p, static_cast<std::size_t>(game.num_infosets(p)));
      for(const auto& [key, value] : table.items()) {
         const int id = game.find_infoset(p, key);
         if(id < 0) {
            throw ConfigError("profile names unknown information set '" + key + "' for player "
                              + std::to_string(index_of(p)));
         }
         if(not value.is_array()) throw ConfigError("probabilities for '" + key + "' must be an array");
         auto& probs = profile.at(p, id);
         probs.clear();
         for(const auto& x : value) {
            if(not x.is_number()) throw ConfigError("non-numeric probability for '" + key + "'");
            probs.push_back(x.get<double>());
         }
      }
   }
   profile.validate(game);
   return profile;
}

void write_profile(const std::filesystem::path& path, const TreeGame& game, const StrategyProfile& profile)
{
   const std::string text = profile_to_json(game, profile);
   std::ofstream out(path, std::ios::binary);
   if(not out || not(out << text) || not out.flush()) throw IoError("cannot write profile to " + path.string());
}

StrategyProfile read_profile(const std::filesystem::path& path, const TreeGame& game)
{
   std::ifstream in(path, std::ios::binary);
   if(not in) throw IoError("cannot read profile " + path.string());
   std::ostringstream buf;
   buf << in.rdbuf();
   return profile_from_json(game, buf.str());
}

}  // namespace hscfr
