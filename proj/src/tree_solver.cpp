#include "twctss/tree_solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "twctss/diffusion.hpp"

namespace twctss {

Cost TreeTables::full(NodeId v, int x) const {
  if (x < 0 || x > height[v]) return kInfinity;
  return f[v][x];
}

Cost TreeTables::helped(NodeId v, int x, int q) const {
  if (q < 0 || q >= x) throw std::out_of_range("helped() needs 0 <= q < x");
  const int h = height[v];
  if (x <= h) return g[v][static_cast<std::size_t>(x) * (x - 1) / 2 + q];
  if (q != x - 1) return kInfinity;
  const std::size_t k = std::min<std::size_t>(x - h - 1, tail[v].size() - 1);
  return tail[v][k];
}

Cost TreeTables::given_parent(NodeId v, int y, int q) const {
  return q >= y ? full(v, y) : helped(v, y, q);
}

int TreeTables::horizon(NodeId v) const {
  return height[v] + static_cast<int>(lambda) + 1;
}

std::pair<Cost, int> best_free_child_cost(const TreeTables& tables, NodeId w, int r) {
  Cost best = kInfinity;
  int at = -1;
  const int last = std::max(tables.height[w], r + 1);
  for (int y = std::max(r, 0); y <= last; ++y) {
    const Cost c = tables.given_parent(w, y, r);
    if (c < best) {
      best = c;
      at = y;
    }
  }
  return {best, at};
}

namespace {

int tree_diameter(const Instance& instance) {
  const NodeId n = instance.size();
  auto far = [&](NodeId s) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<NodeId> queue{s};
    dist[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (NodeId u : instance.neighbors(queue[i])) {
        if (dist[u] < 0) {
          dist[u] = dist[queue[i]] + 1;
          queue.push_back(u);
        }
      }
    }
    return std::pair{queue.back(), dist[queue.back()]};
  };
  return far(far(0).first).second;
}

}  // namespace

AssignmentProblem child_assignment(const TreeTables& tables, const Instance& instance,
                                   NodeId v, int x) {
  AssignmentProblem p;
  p.t = instance.threshold(v);
  p.round = x;
  p.lambda = tables.lambda;
  for (NodeId c : tables.children[v]) {
    std::vector<Cost> early(static_cast<std::size_t>(x));
    for (int y = 0; y < x; ++y) early[y] = tables.full(c, y);
    p.early.push_back(std::move(early));
    p.late.push_back(best_free_child_cost(tables, c, x).first);
  }
  return p;
}

TreeTables tree_sigma_tables(const Instance& instance, NodeId root, std::size_t max_cells) {
  if (!is_tree(instance)) throw ShapeMismatch("instance is not a tree");
  const NodeId n = instance.size();
  if (root < 0 || root >= n) throw std::out_of_range("root out of range");
  TreeTables tt;
  tt.root = root;
  tt.parent.assign(static_cast<std::size_t>(n), -1);
  tt.children.assign(static_cast<std::size_t>(n), {});
  tt.height.assign(static_cast<std::size_t>(n), 0);
  tt.order = {root};
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[root] = 1;
  for (std::size_t i = 0; i < tt.order.size(); ++i) {
    const NodeId v = tt.order[i];
    for (NodeId u : instance.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        tt.parent[u] = v;
        tt.children[v].push_back(u);
        tt.order.push_back(u);
      }
    }
  }
  for (auto it = tt.order.rbegin(); it != tt.order.rend(); ++it) {
    for (NodeId c : tt.children[*it]) {
      tt.height[*it] = std::max(tt.height[*it], tt.height[c] + 1);
    }
  }
  tt.diam = n > 1 ? tree_diameter(instance) : 0;
  tt.lambda = std::min<std::int64_t>(instance.lambda(), std::max(tt.diam, 1));

  std::size_t cells = 0;
  for (NodeId v = 0; v < n; ++v) {
    const std::size_t h = static_cast<std::size_t>(tt.height[v]);
    cells += h + 1 + h * (h + 1) / 2 + static_cast<std::size_t>(tt.lambda) + 1;
  }
  if (cells > max_cells) {
    throw std::length_error("tree tables need " + std::to_string(cells) +
                            " cells, limit is " + std::to_string(max_cells));
  }

  tt.f.assign(static_cast<std::size_t>(n), {});
  tt.g.assign(static_cast<std::size_t>(n), {});
  tt.tail.assign(static_cast<std::size_t>(n), {});
  for (auto it = tt.order.rbegin(); it != tt.order.rend(); ++it) {
    const NodeId v = *it;
    const int h = tt.height[v];
    const int t = instance.threshold(v);
    auto& f = tt.f[v];
    auto& g = tt.g[v];
    auto& tail = tt.tail[v];
    f.assign(static_cast<std::size_t>(h) + 1, kInfinity);
    g.assign(static_cast<std::size_t>(h) * (h + 1) / 2, kInfinity);
    tail.assign(static_cast<std::size_t>(tt.lambda) + 1, kInfinity);

    Cost seed = 1;
    for (NodeId c : tt.children[v]) seed = add_costs(seed, best_free_child_cost(tt, c, 0).first);
    f[0] = seed;

    for (int x = 1; x <= tt.horizon(v); ++x) {
      AssignmentProblem p = child_assignment(tt, instance, v, x);
      Cost free_cost = kInfinity;
      std::vector<Cost> helped(static_cast<std::size_t>(x), kInfinity);
      if (t == 1) {
        free_cost = window_assignment_single(p).cost;
        p.parent_active = parent_mask(x, x - 1, tt.lambda);
        helped[x - 1] = window_assignment_single(p).cost;
      } else {
        ParentSweep sweep = window_assignment_sweep(p);
        free_cost = sweep.free;
        helped = std::move(sweep.helped);
      }
      if (x <= h) {
        f[x] = free_cost;
        std::copy(helped.begin(), helped.end(),
                  g.begin() + static_cast<std::ptrdiff_t>(x) * (x - 1) / 2);
      } else {
        tail[x - h - 1] = helped[x - 1];
      }
    }
  }
  return tt;
}

SolveResult solve_tree(const Instance& instance, TreeTables* out_tables) {
  TreeTables tt = tree_sigma_tables(instance);
  const NodeId n = instance.size();
  const NodeId root = tt.root;

  Cost best = kInfinity;
  int best_round = -1;
  for (int x = 0; x <= tt.height[root]; ++x) {
    if (tt.full(root, x) < best) {
      best = tt.full(root, x);
      best_round = x;
    }
  }
  if (best >= kInfinity) throw InternalError("tree tables found no target set");

  // Labels: round of each node and the parent round it relies on (-1: none).
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<int> helper(static_cast<std::size_t>(n), -1);
  label[root] = best_round;
  for (NodeId v : tt.order) {
    const int x = label[v];
    const int q = helper[v];
    const auto& kids = tt.children[v];
    auto assign_late = [&](NodeId c, int r) {
      const int y = best_free_child_cost(tt, c, r).second;
      label[c] = y;
      helper[c] = y > r ? r : -1;
    };
    if (x == 0) {
      for (NodeId c : kids) assign_late(c, 0);
      continue;
    }
    AssignmentProblem p = child_assignment(tt, instance, v, x);
    if (q >= 0) p.parent_active = parent_mask(x, q, tt.lambda);
    const AssignmentResult a =
        instance.threshold(v) == 1 ? window_assignment_single(p) : window_assignment_min(p);
    const Cost expected = q >= 0 ? tt.helped(v, x, q) : tt.full(v, x);
    if (a.cost != expected) {
      throw InternalError("backtracking at node " + std::to_string(v) + " found cost " +
                          std::to_string(a.cost) + ", table has " + std::to_string(expected));
    }
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (a.choice[i] >= 0) {
        label[kids[i]] = a.choice[i];
        helper[kids[i]] = -1;
      } else {
        assign_late(kids[i], x);
      }
    }
  }

  SolveResult result;
  result.method = "tree";
  for (NodeId v = 0; v < n; ++v) {
    if (label[v] == 0) result.witness.push_back(v);
  }
  result.size = static_cast<std::int64_t>(result.witness.size());
  if (result.size != best) {
    throw InternalError("tree witness has " + std::to_string(result.size) +
                        " nodes, tables say " + std::to_string(best));
  }
  const DiffusionTrace trace = simulate(instance, result.witness);
  for (NodeId v = 0; v < n; ++v) {
    if (trace.influenced_round[v] != label[v]) {
      throw InternalError("node " + std::to_string(v) + " influenced in round " +
                          std::to_string(trace.influenced_round[v]) + ", tables planned " +
                          std::to_string(label[v]));
    }
  }
  result.completion_round = *trace.completion_round();
  if (out_tables) *out_tables = std::move(tt);
  return result;
}

}  // namespace twctss
