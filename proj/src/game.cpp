#include "hscfr/game.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "hscfr/errors.hpp"

namespace hscfr {

namespace {

constexpr int kMaxDepth = 4096;
constexpr double kChanceTolerance = 1e-12;
constexpr double kZeroSumTolerance = 1e-12;

}  // namespace

// ---------------------------------------------------------------------------
// ExplicitGame

class ExplicitState final : public GameState {
  public:
   ExplicitState(const ExplicitGame& game, int id) : game_(&game), id_(id) {}

   NodeKind kind() const override { return entry().kind; }
   Player actor() const override { return entry().actor; }
   int num_actions() const override { return static_cast<int>(entry().children.size()); }
   std::string action_label(int action) const override {
      const auto& labels = entry().labels;
      if(static_cast<std::size_t>(action) < labels.size()) {
         return labels[static_cast<std::size_t>(action)];
      }
      return GameState::action_label(action);
   }
   double chance_probability(int outcome) const override {
      return entry().probs.at(static_cast<std::size_t>(outcome));
   }
   std::unique_ptr<GameState> child(int action) const override {
      return std::make_unique<ExplicitState>(
         *game_, entry().children.at(static_cast<std::size_t>(action)));
   }
   std::array<double, 2> utility() const override { return entry().utility; }
   std::string infoset_key() const override { return entry().key; }

  private:
   const ExplicitGame::Entry& entry() const {
      return game_->nodes_[static_cast<std::size_t>(id_)];
   }
   const ExplicitGame* game_;
   int id_;
};

int ExplicitGame::add_terminal(double u0, double u1)
{
   Entry e;
   e.kind = NodeKind::terminal;
   e.utility = {u0, u1};
   nodes_.push_back(std::move(e));
   return size() - 1;
}

int ExplicitGame::add_chance(std::vector<int> children, std::vector<double> probs)
{
   Entry e;
   e.kind = NodeKind::chance;
   e.children = std::move(children);
   e.probs = std::move(probs);
   nodes_.push_back(std::move(e));
   return size() - 1;
}

int ExplicitGame::add_decision(
   Player actor,
   std::string infoset_key,
   std::vector<int> children,
   std::vector<std::string> labels)
{
   Entry e;
   e.kind = NodeKind::decision;
   e.actor = actor;
   e.key = std::move(infoset_key);
   e.children = std::move(children);
   e.labels = std::move(labels);
   nodes_.push_back(std::move(e));
   return size() - 1;
}

void ExplicitGame::set_children(int node, std::vector<int> children)
{
   nodes_.at(static_cast<std::size_t>(node)).children = std::move(children);
}

std::unique_ptr<GameState> ExplicitGame::initial_state() const
{
   return std::make_unique<ExplicitState>(*this, root_);
}

void ExplicitGame::check() const
{
   if(root_ < 0 || root_ >= size()) {
      throw StructureError("explicit game '" + name_ + "': root " + std::to_string(root_)
                           + " is not a declared node");
   }
   enum class Mark : std::uint8_t { unseen, open, done };
   std::vector<Mark> mark(nodes_.size(), Mark::unseen);
   // iterative DFS; (node, next child to visit)
   std::vector<std::pair<int, std::size_t>> stack{{root_, 0}};
   mark[static_cast<std::size_t>(root_)] = Mark::open;
   while(not stack.empty()) {
      auto& [id, next] = stack.back();
      const auto& e = nodes_[static_cast<std::size_t>(id)];
      if(e.kind == NodeKind::chance && e.probs.size() != e.children.size()) {
         throw StructureError("node " + std::to_string(id) + ": "
                              + std::to_string(e.probs.size()) + " probabilities for "
                              + std::to_string(e.children.size()) + " children");
      }
      if(next == e.children.size()) {
         mark[static_cast<std::size_t>(id)] = Mark::done;
         stack.pop_back();
         continue;
      }
      const int c = e.children[next++];
      if(c < 0 || c >= size()) {
         throw StructureError("node " + std::to_string(id) + ": child " + std::to_string(c)
                              + " is not a declared node");
      }
      switch(mark[static_cast<std::size_t>(c)]) {
         case Mark::open:
            throw StructureError("cyclic structure: node " + std::to_string(c)
                                 + " is its own descendant (via node " + std::to_string(id)
                                 + ")");
         case Mark::done:
            throw StructureError("node " + std::to_string(c)
                                 + " has more than one parent (second via node "
                                 + std::to_string(id) + ")");
         case Mark::unseen:
            mark[static_cast<std::size_t>(c)] = Mark::open;
            stack.emplace_back(c, 0);
            break;
      }
   }
}

// ---------------------------------------------------------------------------
// Tree assembly

class TreeAssembler {
  public:
   explicit TreeAssembler(std::string name) { game_.name_ = std::move(name); }

   TreeGame assemble(const GameState& root)
   {
      game_.nodes_.resize(1);
      expand(root, 0);
      finish();
      return std::move(game_);
   }

  private:
   [[noreturn]] void fail(const std::string& what) const
   {
      std::ostringstream os;
      os << "game '" << game_.name_ << "': node at path [";
      for(std::size_t i = 0; i < path_.size(); ++i) {
         os << (i ? ", " : "") << path_[i].first->action_label(path_[i].second);
      }
      os << "]: " << what;
      throw StructureError(os.str());
   }

   void expand(const GameState& state, NodeId id)
   {
      if(path_.size() > static_cast<std::size_t>(kMaxDepth)) {
         fail("depth exceeds " + std::to_string(kMaxDepth) + " (cyclic or unbounded rules)");
      }
      Node n;
      n.kind = state.kind();
      int k = 0;
      switch(n.kind) {
         case NodeKind::terminal: {
            const auto u = state.utility();
            if(not std::isfinite(u[0]) || not std::isfinite(u[1])) {
               fail("non-finite terminal utility");
            }
            if(std::abs(u[0] + u[1]) > kZeroSumTolerance * std::max(1.0, std::abs(u[0]))) {
               fail("terminal utilities (" + std::to_string(u[0]) + ", " + std::to_string(u[1])
                    + ") are not zero-sum");
            }
            n.payload = static_cast<std::int32_t>(game_.utility_table_.size());
            game_.utility_table_.push_back(u);
            break;
         }
         case NodeKind::chance: {
            k = state.num_actions();
            if(k <= 0) fail("chance node without outcomes");
            n.payload = static_cast<std::int32_t>(game_.chance_table_.size());
            double total = 0.0;
            for(int a = 0; a < k; ++a) {
               const double p = state.chance_probability(a);
               if(not(p >= 0.0 && p <= 1.0)) {
                  fail("chance probability " + std::to_string(p) + " outside [0, 1]");
               }
               total += p;
               game_.chance_table_.push_back(p);
            }
            if(std::abs(total - 1.0) > kChanceTolerance) {
               std::ostringstream os;
               os.precision(17);
               os << "chance probabilities sum to " << total << ", not 1";
               fail(os.str());
            }
            break;
         }
         case NodeKind::decision: {
            n.actor = state.actor();
            if(n.actor != Player::first && n.actor != Player::second) {
               fail("decision node without an acting player");
            }
            k = state.num_actions();
            if(k <= 0) fail("decision node without actions");
            n.payload = register_member(state, id, k);
            break;
         }
      }
      if(k > std::numeric_limits<std::uint16_t>::max()) fail("too many children");
      n.num_children = static_cast<std::uint16_t>(k);
      if(k > 0) {
         n.first_child = static_cast<NodeId>(game_.nodes_.size());
         if(game_.nodes_.size() + static_cast<std::size_t>(k)
            > static_cast<std::size_t>(std::numeric_limits<NodeId>::max())) {
            fail("tree exceeds the node index range");
         }
         game_.nodes_.resize(game_.nodes_.size() + static_cast<std::size_t>(k));
      }
      game_.nodes_[static_cast<std::size_t>(id)] = n;
      for(int a = 0; a < k; ++a) {
         const auto child = state.child(a);
         path_.emplace_back(&state, a);
         expand(*child, n.first_child + a);
         path_.pop_back();
      }
   }

   std::int32_t register_member(const GameState& state, NodeId id, int num_actions)
   {
      const int p = index_of(state.actor());
      auto& table = game_.infosets_[static_cast<std::size_t>(p)];
      auto& ids = game_.infoset_ids_[static_cast<std::size_t>(p)];
      auto key = state.infoset_key();
      auto [it, inserted] = ids.try_emplace(key, static_cast<int>(table.size()));
      if(inserted) {
         InfoSet info;
         info.key = std::move(key);
         info.action_labels.reserve(static_cast<std::size_t>(num_actions));
         for(int a = 0; a < num_actions; ++a) info.action_labels.push_back(state.action_label(a));
         table.push_back(std::move(info));
         game_.max_actions_ = std::max(game_.max_actions_, num_actions);
      } else {
         const auto& info = table[static_cast<std::size_t>(it->second)];
         if(info.num_actions() != num_actions) {
            fail("information set '" + info.key + "' has members with "
                 + std::to_string(info.num_actions()) + " and " + std::to_string(num_actions)
                 + " actions");
         }
         for(int a = 0; a < num_actions; ++a) {
            if(state.action_label(a) != info.action_labels[static_cast<std::size_t>(a)]) {
               fail("information set '" + info.key + "' has members with different action labels");
            }
         }
      }
      table[static_cast<std::size_t>(it->second)].members.push_back(id);
      return it->second;
   }

   void finish()
   {
      for(int p = 0; p < 2; ++p) {
         double lo = std::numeric_limits<double>::infinity();
         double hi = -lo;
         for(const auto& u : game_.utility_table_) {
            lo = std::min(lo, u[static_cast<std::size_t>(p)]);
            hi = std::max(hi, u[static_cast<std::size_t>(p)]);
         }
         game_.utility_range_[static_cast<std::size_t>(p)] = hi - lo;
      }
   }

   TreeGame game_;
   std::vector<std::pair<const GameState*, int>> path_;
};

TreeGame build_tree(const GameDefinition& definition)
{
   definition.check();
   const auto root = definition.initial_state();
   return TreeAssembler(definition.name()).assemble(*root);
}

std::span<const double> TreeGame::chance_probs(NodeId id) const
{
   const auto& n = node(id);
   return std::span<const double>(chance_table_).subspan(
      static_cast<std::size_t>(n.payload), n.num_children);
}

const std::array<double, 2>& TreeGame::utility(NodeId id) const
{
   return utility_table_[static_cast<std::size_t>(node(id).payload)];
}

int TreeGame::find_infoset(Player p, const std::string& key) const
{
   const auto& ids = infoset_ids_[static_cast<std::size_t>(index_of(p))];
   const auto it = ids.find(key);
   return it == ids.end() ? -1 : it->second;
}

GameStats tree_stats(const TreeGame& game)
{
   GameStats stats;
   stats.histories = static_cast<std::int64_t>(game.num_nodes());
   for(const auto& n : game.nodes()) {
      if(n.kind == NodeKind::terminal) ++stats.leaves;
   }
   stats.infosets = game.num_infosets(Player::first) + game.num_infosets(Player::second);
   return stats;
}

// ---------------------------------------------------------------------------
// StrategyProfile

StrategyProfile StrategyProfile::uniform(const TreeGame& game)
{
   StrategyProfile profile;
   for(auto p : kPlayers) {
      profile.resize(p, static_cast<std::size_t>(game.num_infosets(p)));
      for(int i = 0; i < game.num_infosets(p); ++i) {
         const int k = game.infoset(p, i).num_actions();
         profile.at(p, i).assign(static_cast<std::size_t>(k), 1.0 / k);
      }
   }
   return profile;
}

void StrategyProfile::check_covers(const TreeGame& game, Player p) const
{
   const auto n = static_cast<std::size_t>(game.num_infosets(p));
   if(num_infosets(p) < n) {
      throw CoverageError("profile covers " + std::to_string(num_infosets(p)) + " of "
                          + std::to_string(n) + " information sets of player "
                          + std::to_string(index_of(p)) + "; missing '"
                          + game.infoset(p, static_cast<int>(num_infosets(p))).key + "'");
   }
   for(int i = 0; i < static_cast<int>(n); ++i) {
      const auto& info = game.infoset(p, i);
      if(at(p, i).size() != static_cast<std::size_t>(info.num_actions())) {
         throw CoverageError("profile has " + std::to_string(at(p, i).size())
                             + " probabilities for information set '" + info.key + "' of player "
                             + std::to_string(index_of(p)) + " with "
                             + std::to_string(info.num_actions()) + " actions");
      }
   }
}

void StrategyProfile::validate(const TreeGame& game) const
{
   for(auto p : kPlayers) {
      check_covers(game, p);
      for(int i = 0; i < game.num_infosets(p); ++i) {
         double total = 0.0;
         for(double x : at(p, i)) {
            if(not(x >= 0.0)) {
               throw CoverageError("negative probability in information set '"
                                   + game.infoset(p, i).key + "'");
            }
            total += x;
         }
         if(std::abs(total - 1.0) > 1e-9) {
            throw CoverageError("distribution for information set '" + game.infoset(p, i).key
                                + "' sums to " + std::to_string(total));
         }
      }
   }
}

std::array<double, 2> expected_value(const TreeGame& game, const StrategyProfile& profile)
{
   for(auto p : kPlayers) profile.check_covers(game, p);
   std::vector<double> reach(game.num_nodes(), 0.0);
   reach[0] = 1.0;
   std::array<double, 2> value{0.0, 0.0};
   const auto nodes = game.nodes();
   for(std::size_t id = 0; id < nodes.size(); ++id) {
      const Node& n = nodes[id];
      const double r = reach[id];
      switch(n.kind) {
         case NodeKind::terminal: {
            const auto& u = game.utility(static_cast<NodeId>(id));
            value[0] += r * u[0];
            value[1] += r * u[1];
            break;
         }
         case NodeKind::chance: {
            const auto probs = game.chance_probs(static_cast<NodeId>(id));
            for(int a = 0; a < n.num_children; ++a) {
               reach[static_cast<std::size_t>(n.first_child + a)] = r * probs[static_cast<std::size_t>(a)];
            }
            break;
         }
         case NodeKind::decision: {
            const auto sigma = profile.at(n.actor, n.payload);
            for(int a = 0; a < n.num_children; ++a) {
               reach[static_cast<std::size_t>(n.first_child + a)] = r * sigma[static_cast<std::size_t>(a)];
            }
            break;
         }
      }
   }
   return value;
}

}  // namespace hscfr
