#pragma once

// Materialized two-player zero-sum extensive-form games.
//
// A TreeGame is an immutable arena of nodes. Every node's children occupy a
// contiguous index range that lies after the node itself, so a forward sweep
// over the arena visits parents before children and a backward sweep visits
// children before parents.

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace hscfr {

enum class Player : std::int8_t { first = 0, second = 1, chance = -1 };

inline constexpr std::array<Player, 2> kPlayers{Player::first, Player::second};

constexpr int index_of(Player p) { return static_cast<int>(p); }
constexpr Player opponent_of(Player p) {
   return p == Player::first ? Player::second : Player::first;
}
constexpr Player player_from_index(int i) { return i == 0 ? Player::first : Player::second; }

enum class NodeKind : std::uint8_t { decision, chance, terminal };

using NodeId = std::int32_t;

struct Node {
   NodeKind kind = NodeKind::terminal;
   Player actor = Player::chance;
   std::uint16_t num_children = 0;
   NodeId first_child = -1;
   /// infoset id (decision), offset into the chance table (chance) or into the
   /// utility table (terminal)
   std::int32_t payload = -1;
};

struct InfoSet {
   std::string key;
   std::vector<std::string> action_labels;
   std::vector<NodeId> members;

   int num_actions() const { return static_cast<int>(action_labels.size()); }
};

struct GameStats {
   std::int64_t histories = 0;
   std::int64_t infosets = 0;
   std::int64_t leaves = 0;

   friend bool operator==(const GameStats&, const GameStats&) = default;
};

// ---------------------------------------------------------------------------
// Rule descriptions consumed by build_tree.

class GameState {
  public:
   virtual ~GameState() = default;

   virtual NodeKind kind() const = 0;
   /// Acting player; only queried at decision nodes.
   virtual Player actor() const { return Player::chance; }
   /// Number of outgoing edges at decision and chance nodes.
   virtual int num_actions() const { return 0; }
   virtual std::string action_label(int action) const { return "a" + std::to_string(action); }
   virtual double chance_probability(int /*outcome*/) const { return 0.0; }
   virtual std::unique_ptr<GameState> child(int action) const = 0;
   virtual std::array<double, 2> utility() const { return {0.0, 0.0}; }
   /// Observation-derived key; decision nodes with equal keys for the same
   /// actor share an information set.
   virtual std::string infoset_key() const { return {}; }
};

class GameDefinition {
  public:
   virtual ~GameDefinition() = default;
   virtual std::string name() const = 0;
   virtual std::unique_ptr<GameState> initial_state() const = 0;
   /// Structural checks that cannot be made by walking states, e.g. cycles in
   /// an explicitly wired graph.
   virtual void check() const {}
};

/// Hand-wired game graph, mostly for tests and toy examples. Nodes may be
/// referenced before they are declared; check() rejects graphs that are not
/// trees rooted at root().
class ExplicitGame final : public GameDefinition {
  public:
   explicit ExplicitGame(std::string name = "explicit") : name_(std::move(name)) {}

   int add_terminal(double u0, double u1);
   int add_chance(std::vector<int> children, std::vector<double> probs);
   int add_decision(
      Player actor,
      std::string infoset_key,
      std::vector<int> children,
      std::vector<std::string> labels = {});
   void set_children(int node, std::vector<int> children);
   void set_root(int node) { root_ = node; }
   int root() const { return root_; }
   int size() const { return static_cast<int>(nodes_.size()); }

   std::string name() const override { return name_; }
   std::unique_ptr<GameState> initial_state() const override;
   void check() const override;

  private:
   friend class ExplicitState;
   struct Entry {
      NodeKind kind = NodeKind::terminal;
      Player actor = Player::chance;
      std::string key;
      std::vector<int> children;
      std::vector<double> probs;
      std::vector<std::string> labels;
      std::array<double, 2> utility{0.0, 0.0};
   };
   std::string name_;
   std::vector<Entry> nodes_;
   int root_ = 0;
};

// ---------------------------------------------------------------------------

class TreeGame {
  public:
   const std::string& name() const { return name_; }

   NodeId root() const { return 0; }
   std::span<const Node> nodes() const { return nodes_; }
   const Node& node(NodeId id) const { return nodes_[static_cast<std::size_t>(id)]; }
   std::size_t num_nodes() const { return nodes_.size(); }

   /// Outcome probabilities of a chance node, aligned with its children.
   std::span<const double> chance_probs(NodeId id) const;
   const std::array<double, 2>& utility(NodeId id) const;
   double utility(NodeId id, Player p) const { return utility(id)[index_of(p)]; }

   int num_infosets(Player p) const { return static_cast<int>(infosets_[index_of(p)].size()); }
   const std::vector<InfoSet>& infosets(Player p) const { return infosets_[index_of(p)]; }
   const InfoSet& infoset(Player p, int id) const {
      return infosets_[index_of(p)][static_cast<std::size_t>(id)];
   }
   /// Id of the information set with the given key, or -1.
   int find_infoset(Player p, const std::string& key) const;

   /// Δ_i: max minus min terminal utility for player i.
   double utility_range(Player p) const { return utility_range_[index_of(p)]; }
   /// Δ = max_i Δ_i.
   double utility_range() const { return std::max(utility_range_[0], utility_range_[1]); }
   /// |A|: the largest action count over all information sets.
   int max_actions() const { return max_actions_; }

  private:
   friend class TreeAssembler;
   std::string name_;
   std::vector<Node> nodes_;
   std::vector<double> chance_table_;
   std::vector<std::array<double, 2>> utility_table_;
   std::array<std::vector<InfoSet>, 2> infosets_;
   std::array<std::unordered_map<std::string, int>, 2> infoset_ids_;
   std::array<double, 2> utility_range_{0.0, 0.0};
   int max_actions_ = 0;
};

/// Materializes a game by exhaustive expansion. Throws StructureError naming
/// the offending node (by its action path) on non-normalized chance,
/// non-zero-sum terminals, inconsistent information sets, or unbounded depth.
TreeGame build_tree(const GameDefinition& definition);

GameStats tree_stats(const TreeGame& game);

// ---------------------------------------------------------------------------

/// Behavioral strategy for both players, one distribution per information set.
class StrategyProfile {
  public:
   StrategyProfile() = default;

   static StrategyProfile uniform(const TreeGame& game);

   std::span<const double> at(Player p, int infoset) const {
      return probs_[index_of(p)][static_cast<std::size_t>(infoset)];
   }
   std::vector<double>& at(Player p, int infoset) {
      return probs_[index_of(p)][static_cast<std::size_t>(infoset)];
   }
   std::size_t num_infosets(Player p) const { return probs_[index_of(p)].size(); }
   void resize(Player p, std::size_t n) { probs_[index_of(p)].resize(n); }

   /// Throws CoverageError unless every information set of `p` has a
   /// distribution of the right length.
   void check_covers(const TreeGame& game, Player p) const;
   /// check_covers for both players plus the 1e-9 normalization invariant.
   void validate(const TreeGame& game) const;

  private:
   std::array<std::vector<std::vector<double>>, 2> probs_;
};

/// u(σ) for both players, by one reach-weighted sweep.
std::array<double, 2> expected_value(const TreeGame& game, const StrategyProfile& profile);

}  // namespace hscfr
