#include "twctss/complete_solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "twctss/diffusion.hpp"

namespace twctss {

ThresholdCounts threshold_counts(std::span<const int> thresholds) {
  ThresholdCounts out;
  out.n = static_cast<std::int64_t>(thresholds.size());
  out.a.assign(thresholds.size() + 1, 0);
  for (int t : thresholds) {
    if (t < 0) throw std::invalid_argument("negative threshold");
    if (static_cast<std::size_t>(t) < out.a.size()) ++out.a[t];
  }
  std::partial_sum(out.a.begin(), out.a.end(), out.a.begin());
  return out;
}

ThresholdCounts threshold_counts(const Instance& instance) {
  if (!is_complete(instance)) throw ShapeMismatch("instance is not a complete graph");
  return threshold_counts(instance.thresholds());
}

std::int64_t max_influenced_ring_buffer(std::int64_t n, const ThresholdCounts& counts,
                                        std::int64_t lambda, std::int64_t k) {
  if (k < 0 || k > n) throw std::out_of_range("k must lie in 0..n");
  if (lambda < 1) throw std::invalid_argument("lambda must be at least 1");
  const auto& A = counts;
  std::int64_t l = k;
  if (A.at(l) == 0) return std::min(n, k);
  const std::int64_t max_steps = 2 * n + 2;
  // The buffer is never read past max_steps entries, so a longer window
  // behaves exactly like one of that length.
  const std::int64_t len = std::min(lambda, max_steps + 1);
  std::vector<std::int64_t> X(static_cast<std::size_t>(len), -k);
  X[len - 1] = 0;
  std::int64_t j = 0;
  for (std::int64_t step = 0;; ++step) {
    if (step == max_steps) {
      throw InternalError("MAX did not stop within " + std::to_string(max_steps) + " steps");
    }
    const std::int64_t y = A.at(l);
    l = A.at(l) - X[j];
    X[j] = y;
    j = (j + 1) % len;
    if (A.at(l) - X[j] <= l || A.at(l) + k >= n) break;
  }
  return std::min(n, k + A.at(l));
}

std::int64_t max_influenced(std::int64_t n, const ThresholdCounts& counts,
                            std::int64_t lambda, std::int64_t k) {
  if (k < 0 || k > n) throw std::out_of_range("k must lie in 0..n");
  if (lambda < 1) throw std::invalid_argument("lambda must be at least 1");
  // inf[r % (lambda + 1)] = |Influenced[r]|. An outside node joins as soon
  // as the active count reaches its threshold; the k seeds hold the largest
  // thresholds, so min(A[a], n - k) outside nodes have threshold <= a.
  const std::int64_t len = std::min(lambda, n + 1) + 1;
  std::vector<std::int64_t> inf(static_cast<std::size_t>(len), 0);
  inf[0] = k;
  std::int64_t outside = 0;
  for (std::int64_t r = 1; k + outside < n; ++r) {
    const std::int64_t gone = r - 1 - lambda >= 0 ? inf[(r - 1 - lambda) % len] : 0;
    const std::int64_t active = inf[(r - 1) % len] - gone;
    const std::int64_t reached = std::min(counts.at(active), n - k);
    if (reached <= outside) break;
    outside = reached;
    inf[r % len] = k + outside;
  }
  return k + outside;
}

NodeSet top_thresholds(std::span<const int> thresholds, std::int64_t k) {
  NodeSet ids(thresholds.size());
  std::iota(ids.begin(), ids.end(), 0);
  const auto mid = ids.begin() + k;
  std::partial_sort(ids.begin(), mid, ids.end(), [&](NodeId a, NodeId b) {
    return thresholds[a] != thresholds[b] ? thresholds[a] > thresholds[b] : a < b;
  });
  ids.resize(static_cast<std::size_t>(k));
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<std::int64_t> complete_graph_rounds(std::span<const int> thresholds,
                                                std::int64_t lambda,
                                                std::span<const NodeId> seed) {
  const std::size_t n = thresholds.size();
  std::vector<char> seeded(n, 0);
  for (NodeId s : seed) {
    if (s < 0 || static_cast<std::size_t>(s) >= n) throw std::out_of_range("seed id out of range");
    seeded[s] = 1;
  }
  std::vector<int> outside;
  for (std::size_t v = 0; v < n; ++v) {
    if (!seeded[v]) outside.push_back(thresholds[v]);
  }
  std::sort(outside.begin(), outside.end());
  std::vector<std::int64_t> rounds{static_cast<std::int64_t>(n - outside.size())};
  std::size_t joined = 0;
  std::int64_t active = 0;
  for (std::int64_t r = 1;; ++r) {
    active += rounds[r - 1];
    if (r - 1 - lambda >= 0) active -= rounds[r - 1 - lambda];
    std::size_t next = joined;
    while (next < outside.size() && outside[next] <= active) ++next;
    if (next == joined) break;
    rounds.push_back(static_cast<std::int64_t>(next - joined));
    joined = next;
  }
  return rounds;
}

CompleteSolution solve_complete_thresholds(std::span<const int> thresholds,
                                           std::int64_t lambda) {
  const std::int64_t n = static_cast<std::int64_t>(thresholds.size());
  CompleteSolution out;
  if (n == 0) return out;
  const ThresholdCounts counts = threshold_counts(thresholds);
  auto feasible = [&](std::int64_t k) { return max_influenced(n, counts, lambda, k) == n; };

  std::int64_t lo = 1;
  std::int64_t hi = n;
  std::int64_t lowest_yes = n + 1;
  std::int64_t highest_no = 0;
  bool hi_checked = false;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (feasible(mid)) {
      hi = mid;
      lowest_yes = std::min(lowest_yes, mid);
    } else {
      lo = mid + 1;
      highest_no = std::max(highest_no, mid);
    }
  }
  std::int64_t k = lo;
  if (k == n) hi_checked = true;
  if (highest_no > lowest_yes || (k > 1 && feasible(k - 1)) ||
      (!hi_checked && !feasible(k))) {
    out.monotone = false;
    for (k = 1; k < n && !feasible(k); ++k) {
    }
  }
  out.size = k;
  out.witness = top_thresholds(thresholds, k);
  const auto rounds = complete_graph_rounds(thresholds, lambda, out.witness);
  out.completion_round = static_cast<Round>(rounds.size() - 1);
  return out;
}

SolveResult solve_complete(const Instance& instance) {
  if (!is_complete(instance)) throw ShapeMismatch("instance is not a complete graph");
  CompleteSolution s = solve_complete_thresholds(instance.thresholds(), instance.lambda());
  const DiffusionTrace trace = simulate(instance, s.witness);
  if (!trace.complete()) throw InternalError("complete-graph witness does not influence every node");
  return {s.size, std::move(s.witness), *trace.completion_round(), "complete"};
}

}  // namespace twctss
