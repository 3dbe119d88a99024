#pragma once

#include <optional>
#include <span>
#include <vector>

#include "twctss/instance.hpp"

namespace twctss {

/// Round-by-round record of one diffusion run.
///
/// rounds[0] is the seed and rounds[r] the nodes first influenced in round r.
/// Recording stops at the first round that adds nothing (that empty round is
/// not stored), so every stored round after 0 is non-empty.
struct DiffusionTrace {
  NodeSet seed;
  std::vector<NodeSet> rounds;
  std::vector<Round> influenced_round;  // kNever when not reached
  std::int64_t lambda = 1;

  bool complete() const;
  std::size_t influenced_count() const;
  /// Last stored round when every node is influenced.
  std::optional<Round> completion_round() const;
  /// Influenced[r]; r < 0 gives the empty set, r past the end the final set.
  NodeSet influenced(Round r) const;
  /// Active[r]: nodes influenced in rounds max(0, r - lambda) .. r - 1.
  NodeSet active(Round r) const;

  friend bool operator==(const DiffusionTrace&, const DiffusionTrace&) = default;
};

/// Event-driven simulation of the window dynamics. O(n + m) overall.
/// Throws std::out_of_range for seed ids outside 0..n-1.
DiffusionTrace simulate(const Instance& instance, std::span<const NodeId> seed);

/// Same process written with the influenced sets only: a node joins in round r
/// when enough neighbors lie in Influenced[r-1] minus Influenced[r-1-lambda].
/// Keeps every Influenced set, so it costs O(rounds * (n + m)).
DiffusionTrace simulate_bounded_memory(const Instance& instance,
                                       std::span<const NodeId> seed);

struct TargetSetCheck {
  bool is_target_set = false;
  std::size_t influenced = 0;
};

TargetSetCheck is_target_set(const Instance& instance, std::span<const NodeId> seed);

/// Reusable buffers for many runs on one instance (the brute-force oracle).
class Simulator {
 public:
  explicit Simulator(const Instance& instance);

  /// Number of nodes influenced in the end.
  std::size_t run(std::span<const NodeId> seed);
  /// Round of each node after the last run().
  const std::vector<Round>& rounds() const { return round_; }
  Round last_round() const { return last_round_; }

 private:
  const Instance& instance_;
  std::vector<Round> round_;
  std::vector<int> active_count_;
  std::vector<NodeId> order_;  // nodes in influence order
  std::vector<std::size_t> round_start_;
  std::vector<NodeId> touched_;
  std::vector<char> mark_;
  Round last_round_ = 0;
};

}  // namespace twctss
