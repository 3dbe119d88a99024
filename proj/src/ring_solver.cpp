#include "twctss/ring_solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "twctss/diffusion.hpp"
#include "twctss/path_solver.hpp"

namespace twctss {

std::vector<int> all_two_ring_positions(int n) {
  std::vector<int> out;
  for (int i = 0; i + 1 < n; i += 2) out.push_back(i);
  if (n % 2 == 1) out.push_back(n - 2 > out.back() ? n - 2 : n - 1);
  return out;
}

RingSolution solve_ring_thresholds(std::span<const int> thresholds, std::int64_t lambda) {
  const int n = static_cast<int>(thresholds.size());
  if (n < 3) throw std::invalid_argument("a ring needs at least 3 nodes");
  std::vector<int> twos;
  for (int i = 0; i < n; ++i) {
    if (thresholds[i] == 2) twos.push_back(i);
  }
  if (static_cast<int>(twos.size()) == n) {
    auto positions = all_two_ring_positions(n);
    return {static_cast<std::int64_t>(positions.size()), std::move(positions)};
  }
  if (twos.size() <= 1) return {1, {twos.empty() ? 0 : twos[0]}};

  // Every target set has a seed in each stretch d_k..d_{k+1} between
  // cyclically consecutive threshold-2 nodes. Take the shortest stretch and
  // cut the ring at each of its nodes, keeping the cut node as a seed on both
  // copies.
  std::size_t best_k = 0;
  int best_len = n + 1;
  for (std::size_t k = 0; k < twos.size(); ++k) {
    const int a = twos[k];
    const int b = twos[(k + 1) % twos.size()];
    const int len = (b - a + n) % n + 1;
    if (len < best_len) {
      best_len = len;
      best_k = k;
    }
  }

  RingSolution out;
  out.size = n + 1;
  std::vector<int> cut(static_cast<std::size_t>(n) + 1);
  for (int step = 0; step < best_len; ++step) {
    const int x = (twos[best_k] + step) % n;
    for (int k = 0; k < n; ++k) cut[k] = thresholds[(x + k) % n];
    cut.front() = cut.back() = 2;
    const PathSolution s = solve_path_thresholds(cut, lambda);
    if (s.size - 1 < out.size) {
      out.size = s.size - 1;
      out.positions.clear();
      for (int pos : s.positions) {
        if (pos != n) out.positions.push_back((x + pos) % n);
      }
    }
  }
  std::sort(out.positions.begin(), out.positions.end());
  if (static_cast<std::int64_t>(out.positions.size()) != out.size) {
    throw InternalError("ring witness size differs from the solved size");
  }
  return out;
}

SolveResult solve_ring(const Instance& instance) {
  const auto order = ring_order(instance);
  if (!order) throw ShapeMismatch("instance is not a ring");
  std::vector<int> thresholds;
  thresholds.reserve(order->size());
  for (NodeId v : *order) thresholds.push_back(instance.threshold(v));
  const RingSolution solution = solve_ring_thresholds(thresholds, instance.lambda());

  SolveResult result;
  result.size = solution.size;
  result.method = "ring";
  for (int pos : solution.positions) result.witness.push_back((*order)[pos]);
  std::sort(result.witness.begin(), result.witness.end());
  const DiffusionTrace trace = simulate(instance, result.witness);
  if (!trace.complete()) throw InternalError("ring witness does not influence every node");
  result.completion_round = *trace.completion_round();
  return result;
}

}  // namespace twctss
