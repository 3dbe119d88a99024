#pragma once

#include <cstdint>
#include <vector>

#include "twctss/types.hpp"

namespace twctss {

/// Child assignment for a node v that becomes influenced in round `round`.
///
/// Child c either joins early, in some round y < round, at cost early[c][y]
/// (then it is active in rounds y+1 .. y+lambda), or joins late (round >= the
/// round of v) at cost late[c] and never helps v. With W(r) the number of
/// early children active in round r and P(r) the optional parent mask:
///   W(r) + P(r) <= t - 1   for 1 <= r < round,
///   W(round) + P(round) >= t.
struct AssignmentProblem {
  int t = 1;
  int round = 1;
  std::int64_t lambda = 1;
  std::vector<std::vector<Cost>> early;  // early[c] has `round` entries
  std::vector<Cost> late;
  /// Empty, or round + 1 flags where parent_active[r] = P(r) (index 0 unused).
  std::vector<char> parent_active;
};

struct AssignmentResult {
  Cost cost = kInfinity;
  std::vector<int> choice;  // early round per child, -1 for late; empty if infeasible
};

/// Exact minimum over all assignments, kInfinity when none is feasible.
/// Runs a dynamic program over per-round coverage profiles; the constraint
/// matrix is not totally unimodular, so no relaxation is involved.
AssignmentResult window_assignment_min(const AssignmentProblem& problem);

/// Closed form for t = 1: only children joining in round - 1 may join early.
AssignmentResult window_assignment_single(const AssignmentProblem& problem);

/// Optimum without parent help and with the parent influenced in each round
/// q < round (P(r) = 1 for q+1 <= r <= q+lambda). parent_active is ignored.
struct ParentSweep {
  Cost free = kInfinity;
  std::vector<Cost> helped;  // helped[q], q = 0 .. round-1
};
ParentSweep window_assignment_sweep(const AssignmentProblem& problem);

/// Builds the problem from full-variant costs cfull[c][j] (j = 0..diam) and
/// reduced-variant costs cred[c][j - round - 1] (j = round+1 .. round+lambda).
/// A full-variant child in round j >= round and every reduced-variant child
/// are late.
AssignmentProblem assignment_from_variant_tables(
    const std::vector<std::vector<Cost>>& cfull,
    const std::vector<std::vector<Cost>>& cred, int t, int round,
    std::int64_t lambda);

/// Parent mask for a parent influenced in round q.
std::vector<char> parent_mask(int round, int q, std::int64_t lambda);

}  // namespace twctss
