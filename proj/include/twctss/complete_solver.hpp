#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "twctss/instance.hpp"

namespace twctss {

/// A[l] = number of nodes with threshold <= l, for l = 0..n. Reads past n-1
/// return n (every threshold of a valid K_n is at most n - 1).
struct ThresholdCounts {
  std::int64_t n = 0;
  std::vector<std::int64_t> a;

  std::int64_t at(std::int64_t l) const {
    if (l < 0) return 0;
    if (l >= n - 1) return n;
    return a[static_cast<std::size_t>(l)];
  }
};

ThresholdCounts threshold_counts(std::span<const int> thresholds);
/// Throws ShapeMismatch unless the instance is complete.
ThresholdCounts threshold_counts(const Instance& instance);

/// Nodes influenced in K_n when the k nodes of largest threshold are seeded.
/// Follows the active and influenced counts round by round; O(n) time.
std::int64_t max_influenced(std::int64_t n, const ThresholdCounts& counts,
                            std::int64_t lambda, std::int64_t k);

/// Ring-buffer loop over the same counts: X of length lambda with
/// X[0..lambda-2] = -k and X[lambda-1] = 0, then repeat y = A[l],
/// l = A[l] - X[j], X[j] = y, j = (j+1) mod lambda until A[l] - X[j] <= l or
/// A[l] + k >= n, and return min(n, k + A[l]). It undercounts when the active
/// count drops after the first round (t = (2,3,3,3), lambda = 1, k = 2 gives
/// 2, the process reaches 3). Kept for comparison only. Throws InternalError
/// if the loop fails to stop within 2n + 2 steps.
std::int64_t max_influenced_ring_buffer(std::int64_t n, const ThresholdCounts& counts,
                                        std::int64_t lambda, std::int64_t k);

struct CompleteSolution {
  std::int64_t size = 0;
  NodeSet witness;
  Round completion_round = 0;
  /// False when the probes of the binary search were not monotone in k and a
  /// linear scan decided instead.
  bool monotone = true;
};

/// Works on thresholds alone, so n can be far beyond what an edge list holds.
CompleteSolution solve_complete_thresholds(std::span<const int> thresholds,
                                           std::int64_t lambda);

/// Seeds the k largest thresholds (smallest id first among equals).
NodeSet top_thresholds(std::span<const int> thresholds, std::int64_t k);

/// Round-by-round counts of newly influenced nodes in K_n for the given seed.
/// In K_n an outside node joins once the active count reaches its threshold,
/// so the process needs no adjacency.
std::vector<std::int64_t> complete_graph_rounds(std::span<const int> thresholds,
                                                std::int64_t lambda,
                                                std::span<const NodeId> seed);

SolveResult solve_complete(const Instance& instance);

}  // namespace twctss
