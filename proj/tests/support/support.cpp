#include "support.hpp"

#include <algorithm>
#include <functional>

#include "twctss/diffusion.hpp"

namespace support {

using twctss::Edge;
using twctss::kInfinity;

std::string fixture_path(const std::string& name) {
  return std::string(TWCTSS_FIXTURE_DIR) + "/" + name;
}

Instance branch_tree(std::int64_t lambda) {
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 10}};
  for (NodeId i = 4; i < 9; ++i) edges.push_back({i, i + 1});
  for (NodeId i = 10; i < 14; ++i) edges.push_back({i, i + 1});
  std::vector<int> t(15, 1);
  for (NodeId v : {0, 2, 7, 10, 13}) t[v] = 2;
  return Instance(15, t, lambda, edges);
}

std::vector<int> sample_path_thresholds() {
  return {1, 2, 2, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 2, 1, 1};
}

Instance path_instance(const std::vector<int>& thresholds, std::int64_t lambda) {
  const NodeId n = static_cast<NodeId>(thresholds.size());
  std::vector<Edge> edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Instance(n, thresholds, lambda, edges);
}

Instance ring_instance(const std::vector<int>& thresholds, std::int64_t lambda) {
  const NodeId n = static_cast<NodeId>(thresholds.size());
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) edges.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
  return Instance(n, thresholds, lambda, edges);
}

Instance complete_instance(const std::vector<int>& thresholds, std::int64_t lambda) {
  const NodeId n = static_cast<NodeId>(thresholds.size());
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Instance(n, thresholds, lambda, edges);
}

std::vector<int> scan_D(std::span<const int> t) {
  const int n = static_cast<int>(t.size());
  std::vector<int> D(static_cast<std::size_t>(n), n - 1);
  for (int i = 0; i < n - 1; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (t[j] == 2) {
        D[i] = j;
        break;
      }
    }
  }
  return D;
}

std::vector<std::int64_t> direct_sigma(std::span<const int> t, std::int64_t lambda) {
  const int n = static_cast<int>(t.size());
  const auto D = scan_D(t);
  std::vector<std::int64_t> sigma(static_cast<std::size_t>(n), 0);
  sigma[n - 1] = 1;
  for (int i = n - 2; i >= 0; --i) {
    std::int64_t best = sigma[D[i]];
    for (int j = D[i] + 1; j <= D[D[i]]; ++j) {
      const std::int64_t lo = 2LL * D[i] - i - lambda + 1;
      const std::int64_t hi = 2LL * D[i] - i + lambda - 1;
      if (j >= lo && j <= hi) best = std::min(best, sigma[j]);
    }
    sigma[i] = 1 + best;
  }
  return sigma;
}

std::int64_t exhaustive_suffix(std::span<const int> thresholds, std::int64_t lambda, int i) {
  const int n = static_cast<int>(thresholds.size());
  std::vector<int> sub(thresholds.begin() + i, thresholds.end());
  const int m = n - i;
  if (m == 1) return 1;
  // Inside a sub-path the endpoint thresholds stay as given (a threshold-2
  // endpoint can only be a seed).
  std::vector<Edge> edges;
  for (NodeId k = 0; k + 1 < m; ++k) edges.push_back({k, k + 1});
  const Instance inst(m, sub, lambda, edges);
  std::int64_t best = m;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (!(mask & 1u) || !(mask & (1u << (m - 1)))) continue;
    NodeSet seed;
    for (int k = 0; k < m; ++k) {
      if (mask & (1u << k)) seed.push_back(k);
    }
    if (static_cast<std::int64_t>(seed.size()) >= best) continue;
    if (twctss::is_target_set(inst, seed).is_target_set) {
      best = static_cast<std::int64_t>(seed.size());
    }
  }
  return best;
}

VariantTables random_variant_tables(std::mt19937_64& rng, int children, int diam) {
  VariantTables v;
  v.diam = diam;
  v.r = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(diam));
  v.lambda = 1 + static_cast<std::int64_t>(rng() % 3);
  v.t = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(children + 1));
  auto cell = [&]() -> Cost { return rng() % 4 == 0 ? kInfinity : static_cast<Cost>(rng() % 6); };
  for (int c = 0; c < children; ++c) {
    std::vector<Cost> full(static_cast<std::size_t>(diam) + 1);
    for (auto& x : full) x = cell();
    std::vector<Cost> red(static_cast<std::size_t>(v.lambda));
    for (auto& x : red) x = cell();
    v.cfull.push_back(std::move(full));
    v.cred.push_back(std::move(red));
  }
  return v;
}

Cost enumerate_assignments(const VariantTables& v, const std::vector<char>& parent) {
  const int d = static_cast<int>(v.cfull.size());
  std::vector<int> full_round(static_cast<std::size_t>(d), -1);
  Cost best = kInfinity;
  auto P = [&](int l) -> int { return parent.empty() ? 0 : parent[l]; };
  auto count_window = [&](int l) {
    int c = 0;
    for (int j : full_round) {
      if (j >= 0 && j >= std::max<std::int64_t>(0, l - v.lambda) && j <= l - 1) ++c;
    }
    return c;
  };
  std::function<void(int, Cost)> rec = [&](int c, Cost acc) {
    if (acc >= best) return;
    if (c == d) {
      if (count_window(v.r) + P(v.r) < v.t) return;
      for (int l = 1; l < v.r; ++l) {
        if (count_window(l) + P(l) > v.t - 1) return;
      }
      best = acc;
      return;
    }
    for (int j = 0; j <= v.diam; ++j) {
      if (v.cfull[c][j] >= kInfinity) continue;
      full_round[c] = j;
      rec(c + 1, acc + v.cfull[c][j]);
    }
    full_round[c] = -1;
    for (std::size_t k = 0; k < v.cred[c].size(); ++k) {
      if (v.cred[c][k] >= kInfinity) continue;
      rec(c + 1, acc + v.cred[c][k]);
    }
  };
  rec(0, 0);
  return best;
}

Cost enumerate_problem(const twctss::AssignmentProblem& p) {
  const int d = static_cast<int>(p.late.size());
  const int x = p.round;
  std::vector<int> pick(static_cast<std::size_t>(d), -1);
  Cost best = kInfinity;
  std::function<void(int, Cost)> rec = [&](int c, Cost acc) {
    if (acc >= best) return;
    if (c == d) {
      for (int r = 1; r <= x; ++r) {
        int w = p.parent_active.empty() ? 0 : p.parent_active[r];
        for (int y : pick) {
          if (y >= 0 && y + 1 <= r && r <= y + p.lambda) ++w;
        }
        if (r < x && w > p.t - 1) return;
        if (r == x && w < p.t) return;
      }
      best = acc;
      return;
    }
    if (p.late[c] < kInfinity) {
      pick[c] = -1;
      rec(c + 1, acc + p.late[c]);
    }
    for (int y = 0; y < x; ++y) {
      if (p.early[c][y] >= kInfinity) continue;
      pick[c] = y;
      rec(c + 1, acc + p.early[c][y]);
    }
    pick[c] = -1;
  };
  rec(0, 0);
  return best;
}

Instance random_instance(twctss::Family family, NodeId n, std::int64_t lambda,
                         std::mt19937_64& rng) {
  using twctss::ThresholdPolicy;
  twctss::GenerateOptions o;
  o.family = family;
  o.n = n;
  o.lambda = lambda;
  o.seed = rng();
  const bool low_degree = family == twctss::Family::Path || family == twctss::Family::Ring;
  switch (rng() % (low_degree ? 4 : 3)) {
    case 0: o.policy = ThresholdPolicy::Uniform; break;
    case 1: o.policy = ThresholdPolicy::AllOne; break;
    case 2: o.policy = ThresholdPolicy::AllMax; break;
    default:
      o.policy = ThresholdPolicy::TwoMix;
      o.two_mix_p = static_cast<double>(rng() % 101) / 100.0;
      break;
  }
  // all_max is rare in practice for paths; keep uniform dominant there.
  if (low_degree && o.policy == ThresholdPolicy::AllMax && rng() % 2) {
    o.policy = ThresholdPolicy::Uniform;
  }
  return twctss::generate(o);
}

Instance random_general(NodeId n, std::int64_t lambda, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  const std::uint64_t density = 2 + rng() % 5;  // edge probability density/10
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (rng() % 10 < density) edges.push_back({u, v});
    }
  }
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  for (NodeId v = 0; v < n; ++v) {
    if (degree[v] == 0) {
      const NodeId u = v == 0 ? 1 : static_cast<NodeId>(rng() % static_cast<std::uint64_t>(v));
      edges.push_back({std::min(u, v), std::max(u, v)});
      ++degree[u];
      ++degree[v];
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::fill(degree.begin(), degree.end(), 0);
  for (const Edge& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  std::vector<int> t(static_cast<std::size_t>(n));
  for (NodeId v = 0; v < n; ++v) t[v] = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(degree[v]));
  return Instance(n, t, lambda, edges);
}

NodeSet random_seed(NodeId n, std::mt19937_64& rng) {
  NodeSet seed;
  const std::uint64_t keep = rng() % 5;
  for (NodeId v = 0; v < n; ++v) {
    if (rng() % 8 < keep) seed.push_back(v);
  }
  return seed;
}

}  // namespace support
