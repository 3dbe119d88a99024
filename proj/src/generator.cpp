#include "twctss/generator.hpp"

#include <algorithm>
#include <stdexcept>

namespace twctss {

Family parse_family(const std::string& name) {
  if (name == "path") return Family::Path;
  if (name == "ring") return Family::Ring;
  if (name == "tree") return Family::Tree;
  if (name == "complete") return Family::Complete;
  if (name == "gnp") return Family::Gnp;
  throw std::invalid_argument("unknown family '" + name + "'");
}

ThresholdPolicy parse_policy(const std::string& name) {
  if (name == "uniform") return ThresholdPolicy::Uniform;
  if (name == "all_one") return ThresholdPolicy::AllOne;
  if (name == "all_max") return ThresholdPolicy::AllMax;
  if (name == "two_mix") return ThresholdPolicy::TwoMix;
  throw std::invalid_argument("unknown threshold policy '" + name + "'");
}

std::string to_string(Family family) {
  switch (family) {
    case Family::Path: return "path";
    case Family::Ring: return "ring";
    case Family::Tree: return "tree";
    case Family::Complete: return "complete";
    case Family::Gnp: return "gnp";
  }
  return "path";
}

std::string to_string(ThresholdPolicy policy) {
  switch (policy) {
    case ThresholdPolicy::Uniform: return "uniform";
    case ThresholdPolicy::AllOne: return "all_one";
    case ThresholdPolicy::AllMax: return "all_max";
    case ThresholdPolicy::TwoMix: return "two_mix";
  }
  return "uniform";
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  // Accept r < 2^64 - (2^64 mod bound).
  const std::uint64_t excess = (0 - bound) % bound;
  std::uint64_t r;
  do {
    r = next();
  } while (excess != 0 && r >= 0 - excess);
  return r % bound;
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

namespace {

std::vector<Edge> gnp_edges(NodeId n, double p, Rng& rng) {
  while (true) {
    std::vector<Edge> edges;
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (rng.unit() < p) {
          edges.push_back({u, v});
          ++degree[u];
          ++degree[v];
        }
      }
    }
    if (std::find(degree.begin(), degree.end(), 0) == degree.end()) return edges;
  }
}

}  // namespace

Instance generate(const GenerateOptions& o) {
  const NodeId n = o.n;
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (o.family == Family::Ring && n < 3) throw std::invalid_argument("a ring needs n >= 3");
  if (o.lambda < 1) throw std::invalid_argument("lambda must be at least 1");
  if (!(o.two_mix_p >= 0.0 && o.two_mix_p <= 1.0)) {
    throw std::invalid_argument("two_mix probability must lie in [0, 1]");
  }
  if (o.family == Family::Gnp && !(o.edge_prob > 0.0 && o.edge_prob <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in (0, 1]");
  }
  Rng rng(o.seed);
  std::vector<Edge> edges;
  switch (o.family) {
    case Family::Path:
      for (NodeId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      break;
    case Family::Ring:
      for (NodeId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      edges.push_back({0, n - 1});
      break;
    case Family::Tree:
      for (NodeId i = 1; i < n; ++i) {
        edges.push_back({static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(i))), i});
      }
      break;
    case Family::Complete:
      for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
      }
      break;
    case Family::Gnp:
      edges = gnp_edges(n, o.edge_prob, rng);
      break;
  }
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  std::vector<int> thresholds(static_cast<std::size_t>(n));
  for (NodeId v = 0; v < n; ++v) {
    const int d = degree[v];
    switch (o.policy) {
      case ThresholdPolicy::Uniform:
        thresholds[v] = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(d)));
        break;
      case ThresholdPolicy::AllOne:
        thresholds[v] = 1;
        break;
      case ThresholdPolicy::AllMax:
        thresholds[v] = d;
        break;
      case ThresholdPolicy::TwoMix:
        thresholds[v] = (d >= 2 && rng.unit() < o.two_mix_p) ? 2 : 1;
        break;
    }
  }
  return Instance(n, std::move(thresholds), o.lambda, edges);
}

}  // namespace twctss
