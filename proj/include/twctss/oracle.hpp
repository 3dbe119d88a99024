#pragma once

#include "twctss/instance.hpp"

namespace twctss {

inline constexpr NodeId kDefaultOracleCap = 16;

/// Exhaustive minimum target set. Seed sets are tried by increasing size and,
/// within a size, in lexicographic order, so the witness is the
/// lexicographically least optimum. Throws std::invalid_argument when the
/// instance has more than `node_cap` nodes.
SolveResult brute_force_min_target_set(const Instance& instance,
                                       NodeId node_cap = kDefaultOracleCap);

}  // namespace twctss
