#include "twctss/path_solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "twctss/diffusion.hpp"

namespace twctss {

PrunedPath prune_path(std::span<const int> thresholds) {
  const auto first = std::find(thresholds.begin(), thresholds.end(), 2);
  const auto last = std::find(thresholds.rbegin(), thresholds.rend(), 2);
  if (first == thresholds.end() || first == last.base() - 1) {
    throw std::invalid_argument("path has fewer than two threshold-2 nodes");
  }
  return {std::vector<int>(first, last.base()),
          static_cast<std::size_t>(first - thresholds.begin())};
}

std::vector<int> build_D(std::span<const int> thresholds) {
  const int n = static_cast<int>(thresholds.size());
  if (n == 0 || thresholds.back() != 2) {
    throw std::invalid_argument("last node of a pruned path must have threshold 2");
  }
  std::vector<int> D(static_cast<std::size_t>(n));
  int next = n - 1;
  D[n - 1] = n - 1;
  for (int i = n - 2; i >= 0; --i) {
    D[i] = next;
    if (thresholds[i] == 2) next = i;
  }
  return D;
}

namespace {

struct Window {
  std::int64_t lo;
  std::int64_t hi;
};

// Range of second elements beyond D[i] that let D[i] see both neighbors in a
// common round.
Window candidate_window(int i, std::span<const int> D, std::int64_t lambda) {
  const std::int64_t d = D[i];
  const std::int64_t dd = D[D[i]];
  return {std::max<std::int64_t>(d + 1, 2 * d - i - lambda + 1),
          std::min<std::int64_t>(2 * d - i + lambda - 1, dd)};
}

}  // namespace

std::vector<int> second_element_candidates(int i, std::span<const int> D,
                                           std::int64_t lambda) {
  if (i < 0 || i + 1 >= static_cast<int>(D.size())) {
    throw std::out_of_range("candidate index must satisfy 0 <= i < n-1");
  }
  std::vector<int> out{D[i]};
  const Window w = candidate_window(i, D, lambda);
  for (std::int64_t x = w.lo; x <= w.hi; ++x) out.push_back(static_cast<int>(x));
  return out;
}

PathTables line_tables(std::span<const int> pruned_thresholds, std::int64_t lambda) {
  const int n = static_cast<int>(pruned_thresholds.size());
  if (n < 2 || pruned_thresholds.front() != 2 || pruned_thresholds.back() != 2) {
    throw std::invalid_argument("pruned path must start and end with threshold 2");
  }
  PathTables tables;
  tables.thresholds.assign(pruned_thresholds.begin(), pruned_thresholds.end());
  tables.D = build_D(pruned_thresholds);
  const auto& D = tables.D;
  auto& sigma = tables.sigma;
  auto& prec = tables.prec;
  auto& choice = tables.choice;
  sigma.assign(n, 0);
  prec.assign(n, 0);
  choice.assign(n, n - 1);
  // first_low[x]: smallest j >= x in the current block holding value block-1,
  // or n when there is none.
  std::vector<int> first_low(static_cast<std::size_t>(n), n);

  sigma[n - 1] = 1;
  tables.sigma_writes = 1;
  prec[n - 1] = n - 1;
  std::int64_t block_value = 1;  // max of sigma over the current block
  int block_start = n - 1;       // threshold-2 node opening the current block

  while (block_start > 0) {
    const int right = block_start;  // D[i] for every i of the new block
    int i = right - 1;
    for (;; --i) {
      if (sigma[right] == block_value - 1) {
        sigma[i] = block_value;
        choice[i] = right;
      } else {
        const Window w = candidate_window(i, D, lambda);
        if (w.lo <= w.hi && prec[w.hi] >= w.lo) {
          sigma[i] = block_value;
          choice[i] = first_low[w.lo];
        } else {
          sigma[i] = block_value + 1;
          choice[i] = right;
        }
      }
      ++tables.sigma_writes;
      if (pruned_thresholds[i] == 2) break;
    }
    const int left = i;

    std::int64_t hi = sigma[left];
    std::int64_t lo = sigma[left];
    for (int x = left; x <= right; ++x) {
      hi = std::max(hi, sigma[x]);
      lo = std::min(lo, sigma[x]);
    }
    if (hi - lo > 1) {
      throw InternalError("suffix values of block " + std::to_string(left) + ".." +
                          std::to_string(right) + " span more than two values");
    }
    block_value = hi;
    prec[left] = left;
    for (int x = left + 1; x <= right; ++x) {
      prec[x] = sigma[x] == block_value - 1 ? x : prec[x - 1];
    }
    first_low[right] = sigma[right] == block_value - 1 ? right : n;
    for (int x = right - 1; x >= left; --x) {
      first_low[x] = sigma[x] == block_value - 1 ? x : first_low[x + 1];
    }
    block_start = left;
  }
  return tables;
}

PathSolution solve_path_thresholds(std::span<const int> thresholds,
                                   std::int64_t lambda) {
  PathSolution out;
  if (thresholds.empty()) return out;
  const auto twos = std::count(thresholds.begin(), thresholds.end(), 2);
  if (twos == 0) {
    out.size = 1;
    out.positions = {0};
    return out;
  }
  if (twos == 1) {
    out.size = 1;
    out.positions = {static_cast<int>(
        std::find(thresholds.begin(), thresholds.end(), 2) - thresholds.begin())};
    return out;
  }
  PrunedPath pruned = prune_path(thresholds);
  PathTables tables = line_tables(pruned.thresholds, lambda);
  tables.offset = pruned.offset;
  const int last = static_cast<int>(pruned.thresholds.size()) - 1;
  out.size = tables.sigma[0];
  for (int pos = 0;; pos = tables.choice[pos]) {
    out.positions.push_back(pos + static_cast<int>(pruned.offset));
    if (pos == last) break;
  }
  out.tables = std::move(tables);
  return out;
}

SolveResult solve_path(const Instance& instance, PathTables* tables) {
  const auto order = path_order(instance);
  if (!order) throw ShapeMismatch("instance is not a path");
  std::vector<int> thresholds;
  thresholds.reserve(order->size());
  for (NodeId v : *order) thresholds.push_back(instance.threshold(v));
  PathSolution solution = solve_path_thresholds(thresholds, instance.lambda());
  if (tables && solution.tables) *tables = *solution.tables;

  SolveResult result;
  result.size = solution.size;
  result.method = "path";
  for (int pos : solution.positions) result.witness.push_back((*order)[pos]);
  std::sort(result.witness.begin(), result.witness.end());
  const DiffusionTrace trace = simulate(instance, result.witness);
  if (!trace.complete()) throw InternalError("path witness does not influence every node");
  result.completion_round = *trace.completion_round();
  return result;
}

std::vector<int> classical_path_solution(std::span<const int> thresholds) {
  std::vector<int> twos;
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (thresholds[i] == 2) twos.push_back(static_cast<int>(i));
  }
  if (twos.size() < 2) {
    throw std::invalid_argument("closed form needs at least two threshold-2 nodes");
  }
  std::vector<int> out;
  for (std::size_t k = 0; k < twos.size(); k += 2) out.push_back(twos[k]);
  if (out.back() != twos.back()) out.push_back(twos.back());
  return out;
}

}  // namespace twctss
