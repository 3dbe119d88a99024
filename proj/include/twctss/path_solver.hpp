#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "twctss/instance.hpp"

namespace twctss {

/// Sub-path between the first and last threshold-2 nodes of a path.
struct PrunedPath {
  std::vector<int> thresholds;
  std::size_t offset = 0;
};

/// Drops the threshold-1 tails on both sides. Thresholds are listed in path
/// order. Throws std::invalid_argument with fewer than two threshold-2 nodes
/// (then any single node, or the lone threshold-2 node, is optimal).
PrunedPath prune_path(std::span<const int> thresholds);

/// D[i] = smallest j > i with t(j) = 2, and D[n-1] = n-1. Requires the last
/// threshold to be 2.
std::vector<int> build_D(std::span<const int> thresholds);

/// Indices that may follow i as the second-smallest member of an optimal set
/// for the suffix starting at i: D[i] itself, plus the j > D[i] for which D[i]
/// sees its two neighbors active in a common round.
std::vector<int> second_element_candidates(int i, std::span<const int> D,
                                           std::int64_t lambda);

/// Tables of the linear-time suffix recurrence on a pruned path.
///
/// sigma[i] is the minimum target set of the suffix i..n-1 that contains both
/// i and n-1. prec is the last state of the back-pointer array of the sweep
/// (per block, the largest index holding the block minimum). choice[i] is the
/// second member of the chosen optimal suffix set (smallest index on ties);
/// choice[n-1] = n-1.
struct PathTables {
  std::vector<int> thresholds;
  std::vector<int> D;
  std::vector<std::int64_t> sigma;
  std::vector<int> prec;
  std::vector<int> choice;
  std::size_t offset = 0;
  std::size_t sigma_writes = 0;
};

/// Requires t(0) = t(n-1) = 2. Runs in O(n) and writes each sigma cell once.
/// Throws InternalError if the two-value block structure the sweep relies on
/// is ever violated.
PathTables line_tables(std::span<const int> pruned_thresholds, std::int64_t lambda);

struct PathSolution {
  std::int64_t size = 0;
  std::vector<int> positions;  // indices into the input, ascending
  std::optional<PathTables> tables;  // absent in the degenerate cases
};

/// Minimum target set of a path given its thresholds in path order.
PathSolution solve_path_thresholds(std::span<const int> thresholds,
                                   std::int64_t lambda);

/// Throws ShapeMismatch unless the instance is a path.
SolveResult solve_path(const Instance& instance, PathTables* tables = nullptr);

/// The optimum without a window (lambda >= n): every other threshold-2 node
/// starting with the first, plus the last one. Returns path positions.
std::vector<int> classical_path_solution(std::span<const int> thresholds);

}  // namespace twctss
