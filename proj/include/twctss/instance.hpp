#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twctss/types.hpp"

namespace twctss {

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected graph with a threshold per node and a window size.
///
/// Node ids are dense 0..n-1. The object is immutable once built. It may hold
/// an invalid instance (threshold above degree, duplicate edge, lambda 0):
/// validate() reports those, and the solvers assume a valid instance.
class Instance {
 public:
  Instance() = default;

  /// Throws std::invalid_argument when thresholds.size() != n or an edge
  /// endpoint lies outside 0..n-1.
  Instance(NodeId n, std::vector<int> thresholds, std::int64_t lambda,
           std::span<const Edge> edges);

  NodeId size() const { return static_cast<NodeId>(thresholds_.size()); }
  std::int64_t lambda() const { return lambda_; }
  int threshold(NodeId v) const { return thresholds_[v]; }
  const std::vector<int>& thresholds() const { return thresholds_; }
  int degree(NodeId v) const {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }
  std::span<const NodeId> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  /// Number of undirected edges (duplicates counted).
  std::size_t edge_count() const { return adjacency_.size() / 2; }
  /// Edges with u < v (self-loops as u == v), sorted.
  std::vector<Edge> edges() const;

  /// Same graph and thresholds, different window.
  Instance with_lambda(std::int64_t lambda) const;
  /// Subgraph induced by `nodes` (ids remapped to positions in `nodes`).
  Instance induced(std::span<const NodeId> nodes) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<int> thresholds_;
  std::int64_t lambda_ = 1;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;  // per-node sorted neighbor lists
};

struct Violation {
  std::string message;
};

/// Empty when every invariant holds: simple undirected graph, 1 <= t(v) <=
/// deg(v) and lambda >= 1. Connectivity is not required.
std::vector<Violation> validate(const Instance& instance);

enum class ShapeKind { Complete, Path, Ring, Tree, General };

std::string to_string(ShapeKind kind);

struct Shape {
  ShapeKind kind = ShapeKind::General;
  /// Path: endpoint-to-endpoint order starting at the smaller-id endpoint.
  /// Ring: cyclic order starting at node 0 toward its smaller-id neighbor.
  /// Empty for the other kinds.
  std::vector<NodeId> order;
};

/// Endpoint-to-endpoint order when the graph is a path on n >= 2 nodes,
/// starting at the smaller-id endpoint.
std::optional<std::vector<NodeId>> path_order(const Instance& instance);
/// Cyclic order when the graph is a single cycle, starting at node 0 and
/// continuing toward its smaller-id neighbor.
std::optional<std::vector<NodeId>> ring_order(const Instance& instance);
/// Connected with n - 1 edges.
bool is_tree(const Instance& instance);
bool is_complete(const Instance& instance);

/// Most specific shape, checked in the order Complete, Path, Ring, Tree.
Shape classify_shape(const Instance& instance);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<NodeId>> connected_components(const Instance& instance);

}  // namespace twctss
