#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "twctss/instance.hpp"

namespace twctss {

struct RingSolution {
  std::int64_t size = 0;
  std::vector<int> positions;  // indices into the cyclic order, ascending
};

/// Minimum target set of a ring given thresholds in cyclic order. Cuts the
/// ring at every node of the shortest stretch between consecutive
/// threshold-2 nodes, so the cost is O(n) per node of that stretch.
RingSolution solve_ring_thresholds(std::span<const int> thresholds, std::int64_t lambda);

/// Seed positions for a ring whose thresholds are all 2: every other node,
/// and for odd n the second-to-last node in place of the last.
std::vector<int> all_two_ring_positions(int n);

/// Throws ShapeMismatch unless the instance is a single cycle.
SolveResult solve_ring(const Instance& instance);

}  // namespace twctss
