#pragma once

// Independent oracles shared by the unit tests and the acceptance binary.
// Nothing here calls the library's evaluation code; it only reads the tree.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hscfr/game.hpp"
#include "hscfr/schedule.hpp"

namespace hscfr::testing {

/// u(σ) for player 0 by recursive path enumeration.
inline double enumerate_value(const TreeGame& game, const StrategyProfile& profile, NodeId id = 0)
{
   const Node& n = game.node(id);
   if(n.kind == NodeKind::terminal) return game.utility(id, Player::first);
   double v = 0.0;
   for(int a = 0; a < n.num_children; ++a) {
      const double p = n.kind == NodeKind::chance ? game.chance_probs(id)[static_cast<std::size_t>(a)]
                                                  : profile.at(n.actor, n.payload)[static_cast<std::size_t>(a)];
      if(p != 0.0) v += p * enumerate_value(game, profile, n.first_child + a);
   }
   return v;
}

/// Best pure-strategy value for `player` against `profile`, found by trying
/// every pure strategy. Only for games with few information sets.
inline double brute_force_br(const TreeGame& game, const StrategyProfile& profile, Player player)
{
   StrategyProfile trial = profile;
   const int m = game.num_infosets(player);
   std::vector<int> choice(static_cast<std::size_t>(m), 0);
   const double sign = player == Player::first ? 1.0 : -1.0;
   double best = -1e300;
   for(;;) {
      for(int i = 0; i < m; ++i) {
         auto& probs = trial.at(player, i);
         std::fill(probs.begin(), probs.end(), 0.0);
         probs[static_cast<std::size_t>(choice[static_cast<std::size_t>(i)])] = 1.0;
      }
      best = std::max(best, sign * enumerate_value(game, trial));
      int i = 0;
      for(; i < m; ++i) {
         auto& c = choice[static_cast<std::size_t>(i)];
         if(++c < game.infoset(player, i).num_actions()) break;
         c = 0;
      }
      if(i == m) break;
   }
   return best;
}

inline StrategyProfile random_profile(const TreeGame& game, std::mt19937_64& rng, double zero_chance = 0.0)
{
   std::uniform_real_distribution<double> unit(0.0, 1.0);
   StrategyProfile out = StrategyProfile::uniform(game);
   for(Player p : kPlayers) {
      for(int i = 0; i < game.num_infosets(p); ++i) {
         auto& probs = out.at(p, i);
         double total = 0.0;
         for(auto& x : probs) {
            x = unit(rng) < zero_chance ? 0.0 : unit(rng) + 1e-3;
            total += x;
         }
         if(total == 0.0) {
            probs[0] = 1.0;
            total = 1.0;
         }
         for(auto& x : probs) x /= total;
      }
   }
   return out;
}

/// Sets the distribution of the information set with `key`.
inline void set_probs(const TreeGame& game, StrategyProfile& profile, Player p, const std::string& key, std::vector<double> probs)
{
   const int id = game.find_infoset(p, key);
   if(id < 0) throw std::logic_error("no infoset " + key);
   profile.at(p, id) = std::move(probs);
}

/// Kuhn equilibrium family with bluff parameter a in [0, 1/3]; action 0 is
/// pass/fold and action 1 is bet/call. Player 0's value is -1/18 for every a.
inline StrategyProfile kuhn_equilibrium(const TreeGame& game, double a)
{
   StrategyProfile s = StrategyProfile::uniform(game);
   const auto P0 = Player::first;
   const auto P1 = Player::second;
   set_probs(game, s, P0, "J:", {1 - a, a});
   set_probs(game, s, P0, "Q:", {1, 0});
   set_probs(game, s, P0, "K:", {1 - 3 * a, 3 * a});
   set_probs(game, s, P0, "J:pb", {1, 0});
   set_probs(game, s, P0, "Q:pb", {1 - (a + 1.0 / 3), a + 1.0 / 3});
   set_probs(game, s, P0, "K:pb", {0, 1});
   set_probs(game, s, P1, "J:p", {2.0 / 3, 1.0 / 3});
   set_probs(game, s, P1, "J:b", {1, 0});
   set_probs(game, s, P1, "Q:p", {1, 0});
   set_probs(game, s, P1, "Q:b", {2.0 / 3, 1.0 / 3});
   set_probs(game, s, P1, "K:p", {0, 1});
   set_probs(game, s, P1, "K:b", {0, 1});
   return s;
}

/// Chance picks one of two coins (0.3 / 0.7); player 0 does not see it and
/// chooses at "A"; after action 0 player 1 chooses at "B" without seeing the
/// coin, after action 1 the game ends. Two information sets, two members each.
struct ToyPayoffs {
   double probs[2] = {0.3, 0.7};
   double after_b[2][2] = {{1.0, -2.0}, {-1.5, 3.0}};  // [coin][b], player 0 utility after action 0
   double stop[2] = {0.5, -0.25};                        // [coin], player 0 utility after action 1
};

inline ExplicitGame toy_game(const ToyPayoffs& u = {})
{
   ExplicitGame g("toy");
   std::vector<int> coins;
   for(int c = 0; c < 2; ++c) {
      const int t0 = g.add_terminal(u.after_b[c][0], -u.after_b[c][0]);
      const int t1 = g.add_terminal(u.after_b[c][1], -u.after_b[c][1]);
      const int b = g.add_decision(Player::second, "B", {t0, t1});
      const int stop = g.add_terminal(u.stop[c], -u.stop[c]);
      coins.push_back(g.add_decision(Player::first, "A", {b, stop}));
   }
   g.set_root(g.add_chance(coins, {u.probs[0], u.probs[1]}));
   return g;
}

// Literal transcription of regret matching, the DCFR regret discount and the
// discounted average for the toy game, written against the payoff table
// rather than the tree.
struct ToyOracle {
   ToyPayoffs u;
   double R0[2] = {0, 0}, C0[2] = {0, 0};
   double R1[2] = {0, 0}, C1[2] = {0, 0};

   static void rm(const double R[2], double out[2])
   {
      const double p0 = std::max(R[0], 0.0), p1 = std::max(R[1], 0.0);
      if(p0 + p1 > 0) {
         out[0] = p0 / (p0 + p1);
         out[1] = p1 / (p0 + p1);
      } else {
         out[0] = out[1] = 0.5;
      }
   }

   static void update(double R[2], double C[2], const double r[2], const double sigma[2], long t, HyperParams h)
   {
      for(int a = 0; a < 2; ++a) {
         if(t >= 1) {
            const double ta = std::pow(double(t), h.alpha), tb = std::pow(double(t), h.beta);
            R[a] *= R[a] > 0 ? ta / (ta + 1) : tb / (tb + 1);
            C[a] *= std::pow(double(t) / double(t + 1), h.gamma);
         }
         R[a] += r[a];
         C[a] += 1.0 * sigma[a];  // each infoset is reached with own probability 1
      }
   }

   void iterate(long t, HyperParams h)
   {
      double s0[2], s1[2];
      rm(R0, s0);
      rm(R1, s1);
      // player 0 at A: counterfactual values weight each coin by its chance probability
      double v0[2] = {0, 0};
      for(int c = 0; c < 2; ++c) {
         v0[0] += u.probs[c] * (s1[0] * u.after_b[c][0] + s1[1] * u.after_b[c][1]);
         v0[1] += u.probs[c] * u.stop[c];
      }
      const double vA = s0[0] * v0[0] + s0[1] * v0[1];
      const double r0[2] = {v0[0] - vA, v0[1] - vA};
      update(R0, C0, r0, s0, t, h);

      // player 1 at B sees player 0's refreshed strategy
      rm(R0, s0);
      double v1[2] = {0, 0};
      for(int c = 0; c < 2; ++c) {
         for(int b = 0; b < 2; ++b) v1[b] += u.probs[c] * s0[0] * -u.after_b[c][b];
      }
      const double vB = s1[0] * v1[0] + s1[1] * v1[1];
      const double r1[2] = {v1[0] - vB, v1[1] - vB};
      update(R1, C1, r1, s1, t, h);
   }
};

/// Matching pennies as a tree: player 1 does not see player 0's coin.
inline ExplicitGame matching_pennies()
{
   ExplicitGame g("pennies");
   std::vector<int> p1;
   for(int a = 0; a < 2; ++a) {
      std::vector<int> leaves;
      for(int b = 0; b < 2; ++b) {
         const double u = a == b ? 1.0 : -1.0;
         leaves.push_back(g.add_terminal(u, -u));
      }
      p1.push_back(g.add_decision(Player::second, "guess", leaves));
   }
   g.set_root(g.add_decision(Player::first, "coin", p1));
   return g;
}

}  // namespace hscfr::testing
