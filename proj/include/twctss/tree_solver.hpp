#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "twctss/instance.hpp"
#include "twctss/window_assignment.hpp"

namespace twctss {

/// Cost tables of the tree program, rooted at `root`.
///
/// full(v, x): fewest seeds inside the subtree of v that make v influenced in
/// exactly round x with no help from the parent.
/// helped(v, x, q), q < x: the same when the parent is influenced in round q
/// and therefore active in rounds q+1 .. q+lambda.
///
/// Storage is bounded by the subtree height H(v): v cannot be reached in a
/// round above H(v) without the parent, and with the parent only from round
/// x-1; past H(v) + lambda + 1 those last entries no longer change.
struct TreeTables {
  NodeId root = 0;
  std::vector<NodeId> order;  // BFS order from the root
  std::vector<NodeId> parent;  // -1 for the root
  std::vector<std::vector<NodeId>> children;
  std::vector<int> height;
  int diam = 0;
  /// Window used by the tables: lambda capped at the diameter, since no round
  /// exceeds the diameter and larger windows behave the same.
  std::int64_t lambda = 1;
  std::vector<std::vector<Cost>> f;     // f[v][x], x = 0..H(v)
  std::vector<std::vector<Cost>> g;     // g[v][x(x-1)/2 + q], 1 <= x <= H(v)
  std::vector<std::vector<Cost>> tail;  // tail[v][k] = helped(v, H+1+k, H+k)

  Cost full(NodeId v, int x) const;
  Cost helped(NodeId v, int x, int q) const;
  /// Cost of v in round y when its parent is influenced in round q.
  Cost given_parent(NodeId v, int y, int q) const;
  /// Largest round with a stored entry for v (H(v) + lambda + 1).
  int horizon(NodeId v) const;
};

/// Cheapest way for child w to be influenced no earlier than its parent,
/// which is influenced in round r: min over y >= r of given_parent(w, y, r).
/// Returns the cost and the smallest optimal y.
std::pair<Cost, int> best_free_child_cost(const TreeTables& tables, NodeId w, int r);

/// Assignment problem for v influenced in round x (x >= 1).
AssignmentProblem child_assignment(const TreeTables& tables, const Instance& instance,
                                   NodeId v, int x);

/// Throws ShapeMismatch unless the instance is a tree, and std::length_error
/// when the tables would exceed `max_cells` entries.
TreeTables tree_sigma_tables(const Instance& instance, NodeId root = 0,
                             std::size_t max_cells = std::size_t{1} << 27);

SolveResult solve_tree(const Instance& instance, TreeTables* tables = nullptr);

}  // namespace twctss
