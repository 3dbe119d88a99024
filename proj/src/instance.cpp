#include "twctss/instance.hpp"

#include <algorithm>
#include <stdexcept>

namespace twctss {

Instance::Instance(NodeId n, std::vector<int> thresholds, std::int64_t lambda,
                   std::span<const Edge> edges)
    : thresholds_(std::move(thresholds)), lambda_(lambda) {
  if (n < 0) throw std::invalid_argument("negative node count");
  if (thresholds_.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("expected " + std::to_string(n) +
                                " thresholds, got " +
                                std::to_string(thresholds_.size()));
  }
  std::vector<std::size_t> degree(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : edges) {
    for (NodeId x : {e.u, e.v}) {
      if (x < 0 || x >= n) {
        throw std::invalid_argument("node id " + std::to_string(x) +
                                    " out of range");
      }
    }
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (NodeId v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges) {
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
  }
  for (NodeId v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
  }
}

std::vector<Edge> Instance::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId v = 0; v < size(); ++v) {
    bool self_seen = false;
    for (NodeId u : neighbors(v)) {
      if (v < u) {
        out.push_back({v, u});
      } else if (u == v) {
        // A self-loop appears twice in v's list.
        if (self_seen) out.push_back({v, v});
        self_seen = !self_seen;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Instance Instance::with_lambda(std::int64_t lambda) const {
  Instance copy = *this;
  copy.lambda_ = lambda;
  return copy;
}

Instance Instance::induced(std::span<const NodeId> nodes) const {
  std::vector<NodeId> remap(static_cast<std::size_t>(size()), -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    remap[nodes[i]] = static_cast<NodeId>(i);
  }
  std::vector<int> thresholds;
  thresholds.reserve(nodes.size());
  std::vector<Edge> edges;
  for (NodeId v : nodes) {
    thresholds.push_back(threshold(v));
    for (NodeId u : neighbors(v)) {
      if (remap[u] >= 0 && v < u) edges.push_back({remap[v], remap[u]});
    }
  }
  return Instance(static_cast<NodeId>(nodes.size()), std::move(thresholds),
                  lambda_, edges);
}

std::vector<Violation> validate(const Instance& instance) {
  std::vector<Violation> out;
  if (instance.lambda() < 1) out.push_back({"λ must be ≥ 1"});
  const NodeId n = instance.size();
  for (NodeId v = 0; v < n; ++v) {
    auto nb = instance.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] == v) {
        if (i == 0 || nb[i - 1] != v) {
          out.push_back({"self-loop at node " + std::to_string(v)});
        }
        continue;
      }
      if (i > 0 && nb[i] == nb[i - 1] && v < nb[i]) {
        out.push_back({"duplicate edge " + std::to_string(v) + "-" +
                       std::to_string(nb[i])});
      }
      auto back = instance.neighbors(nb[i]);
      if (!std::binary_search(back.begin(), back.end(), v)) {
        out.push_back({"asymmetric adjacency " + std::to_string(v) + "->" +
                       std::to_string(nb[i])});
      }
    }
    const int t = instance.threshold(v);
    const int deg = instance.degree(v);
    if (t < 1) {
      out.push_back({"t(" + std::to_string(v) + ")=" + std::to_string(t) + " < 1"});
    } else if (t > deg) {
      out.push_back({"t(" + std::to_string(v) + ")=" + std::to_string(t) +
                     " > deg(" + std::to_string(v) + ")=" + std::to_string(deg)});
    }
  }
  return out;
}

std::string to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Complete: return "complete";
    case ShapeKind::Path: return "path";
    case ShapeKind::Ring: return "ring";
    case ShapeKind::Tree: return "tree";
    case ShapeKind::General: return "general";
  }
  return "general";
}

namespace {

bool is_connected(const Instance& instance) {
  const NodeId n = instance.size();
  if (n == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  NodeId reached = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (NodeId u : instance.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

// Walks a graph of maximum degree 2 from `start` toward `next`.
std::vector<NodeId> walk(const Instance& instance, NodeId start, NodeId next) {
  std::vector<NodeId> order{start};
  NodeId prev = start;
  NodeId cur = next;
  while (cur != start && cur >= 0) {
    order.push_back(cur);
    NodeId step = -1;
    for (NodeId u : instance.neighbors(cur)) {
      if (u != prev) {
        step = u;
        break;
      }
    }
    prev = cur;
    cur = step;
  }
  return order;
}

}  // namespace

std::optional<std::vector<NodeId>> path_order(const Instance& instance) {
  const NodeId n = instance.size();
  if (n < 2 || instance.edge_count() != static_cast<std::size_t>(n) - 1) {
    return std::nullopt;
  }
  NodeId start = -1;
  for (NodeId v = 0; v < n; ++v) {
    const int d = instance.degree(v);
    if (d < 1 || d > 2) return std::nullopt;
    if (d == 1 && start < 0) start = v;
  }
  if (start < 0) return std::nullopt;
  auto order = walk(instance, start, instance.neighbors(start)[0]);
  if (order.size() != static_cast<std::size_t>(n)) return std::nullopt;
  return order;
}

std::optional<std::vector<NodeId>> ring_order(const Instance& instance) {
  const NodeId n = instance.size();
  if (n < 3) return std::nullopt;
  for (NodeId v = 0; v < n; ++v) {
    if (instance.degree(v) != 2) return std::nullopt;
  }
  auto nb = instance.neighbors(0);
  if (nb[0] == nb[1]) return std::nullopt;
  auto order = walk(instance, 0, std::min(nb[0], nb[1]));
  if (order.size() != static_cast<std::size_t>(n)) return std::nullopt;
  return order;
}

bool is_tree(const Instance& instance) {
  const NodeId n = instance.size();
  return n >= 1 && instance.edge_count() == static_cast<std::size_t>(n) - 1 &&
         is_connected(instance);
}

bool is_complete(const Instance& instance) {
  const NodeId n = instance.size();
  if (n == 0) return false;
  for (NodeId v = 0; v < n; ++v) {
    if (instance.degree(v) != n - 1) return false;
  }
  return true;
}

Shape classify_shape(const Instance& instance) {
  if (is_complete(instance)) return {ShapeKind::Complete, {}};
  if (auto order = path_order(instance)) return {ShapeKind::Path, std::move(*order)};
  if (auto order = ring_order(instance)) return {ShapeKind::Ring, std::move(*order)};
  if (is_tree(instance)) return {ShapeKind::Tree, {}};
  return {};
}

std::vector<std::vector<NodeId>> connected_components(const Instance& instance) {
  const NodeId n = instance.size();
  std::vector<NodeId> label(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<NodeId>> out;
  for (NodeId s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    const NodeId id = static_cast<NodeId>(out.size());
    std::vector<NodeId> members{s};
    label[s] = id;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (NodeId u : instance.neighbors(members[i])) {
        if (label[u] < 0) {
          label[u] = id;
          members.push_back(u);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace twctss
