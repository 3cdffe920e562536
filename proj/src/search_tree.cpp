#include "voi/search_tree.hpp"

#include <cstdio>
#include <sstream>

namespace voi {

NodeId ActionNode::find_child(Observation o) const {
  for (const auto& e : children)
    if (e.observation == o) return e.child;
  return kNoNode;
}

void SearchTree::expand(NodeId id, std::span<const AugmentedAction> actions) {
  auto& n = node(id);
  n.actions.clear();
  n.actions.reserve(actions.size());
  for (const auto& a : actions) n.actions.push_back(ActionNode{a, 0, 0.0, {}});
  n.expanded = true;
}

NodeId SearchTree::child(NodeId id, int slot, Observation o) {
  auto& edges = node(id).actions[static_cast<std::size_t>(slot)].children;
  for (auto& e : edges)
    if (e.observation == o) {
      ++e.count;
      return e.child;
    }
  const NodeId created = add_node(node(id).depth + 1);
  // add_node may reallocate; re-fetch the edge list.
  node(id).actions[static_cast<std::size_t>(slot)].children.push_back({o, created, 1});
  return created;
}

NodeId SearchTree::add_node(int depth) {
  nodes_.emplace_back();
  nodes_.back().depth = depth;
  return static_cast<NodeId>(nodes_.size() - 1);
}

TreeStats tree_stats(const SearchTree& tree) {
  TreeStats stats;
  std::int64_t visited = 0, branches = 0;
  for (const auto& n : tree.nodes()) {
    if (n.depth > stats.max_depth) stats.max_depth = n.depth;
    std::int64_t here = 0;
    for (const auto& a : n.actions)
      for (const auto& e : a.children)
        if (e.count >= 1) ++here;
    // Leaves reached once by expansion have nothing to branch over.
    if (here == 0) continue;
    ++visited;
    branches += here;
  }
  if (visited > 0) stats.effective_branching = static_cast<double>(branches) / visited;
  return stats;
}

namespace {

void dump(const SearchTree& tree, NodeId id, std::ostringstream& out) {
  const auto& n = tree.node(id);
  out << "h d=" << n.depth << " n=" << n.visits << (n.expanded ? " x" : "") << '\n';
  for (const auto& a : n.actions) {
    char value[64];
    std::snprintf(value, sizeof value, "%a", a.value);
    out << " a " << a.action.base << to_string(a.action.mode) << " n=" << a.visits << " q=" << value
        << '\n';
    for (const auto& e : a.children) {
      out << "  o " << e.observation << " c=" << e.count << '\n';
      dump(tree, e.child, out);
    }
  }
}

}  // namespace

std::string serialize(const SearchTree& tree) {
  std::ostringstream out;
  dump(tree, tree.root(), out);
  return out.str();
}

}  // namespace voi
