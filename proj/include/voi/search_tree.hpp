#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "voi/voi_transform.hpp"

namespace voi {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

/// Edge from an action node to the history node reached by one observation.
struct ObservationEdge {
  Observation observation;
  NodeId child;
  std::int64_t count = 0;
};

struct ActionNode {
  AugmentedAction action;
  std::int64_t visits = 0;
  double value = 0;  // running mean of returns through this action
  std::vector<ObservationEdge> children;

  /// Child for `o`, or kNoNode.
  NodeId find_child(Observation o) const;
};

struct HistoryNode {
  int depth = 0;
  /// Simulate entries that reached this node while it was in the tree,
  /// including the expanding one. Equals 1 + sum of child action visits.
  std::int64_t visits = 0;
  bool expanded = false;
  std::vector<ActionNode> actions;
};

struct TreeStats {
  int max_depth = 0;
  double effective_branching = 0;

  friend bool operator==(const TreeStats&, const TreeStats&) = default;
};

/// History tree: node 0 is the root, children are addressed by index so the
/// arena can grow during a simulation.
class SearchTree {
 public:
  SearchTree() { nodes_.emplace_back(); }

  NodeId root() const { return 0; }
  const HistoryNode& node(NodeId id) const { return nodes_[static_cast<std::size_t>(id)]; }
  HistoryNode& node(NodeId id) { return nodes_[static_cast<std::size_t>(id)]; }
  std::span<const HistoryNode> nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }

  /// Gives the node one action slot per admissible action, all (0, 0).
  void expand(NodeId id, std::span<const AugmentedAction> actions);

  /// Child of (node, action slot) for observation `o`, created on first use.
  /// Increments the edge count.
  NodeId child(NodeId id, int slot, Observation o);

  /// Appends a bare node at the given depth; used to build trees by hand.
  NodeId add_node(int depth);

 private:
  std::vector<HistoryNode> nodes_;
};

/// max_depth: deepest history node. effective_branching: mean, over history
/// nodes the search has passed through, of the number of (action,
/// observation) edges taken at least once. 0 for a root-only tree.
TreeStats tree_stats(const SearchTree& tree);

/// Depth-first dump of structure and statistics (values as hex floats) for
/// exact tree comparisons.
std::string serialize(const SearchTree& tree);

}  // namespace voi
