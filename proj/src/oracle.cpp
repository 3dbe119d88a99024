#include "twctss/oracle.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "twctss/diffusion.hpp"

namespace twctss {

SolveResult brute_force_min_target_set(const Instance& instance, NodeId node_cap) {
  const NodeId n = instance.size();
  if (n > node_cap) {
    throw std::invalid_argument("instance has " + std::to_string(n) +
                                " nodes, brute force is capped at " +
                                std::to_string(node_cap));
  }
  Simulator sim(instance);
  NodeSet combo;
  for (NodeId k = 0; k <= n; ++k) {
    combo.resize(static_cast<std::size_t>(k));
    std::iota(combo.begin(), combo.end(), 0);
    while (true) {
      if (sim.run(combo) == static_cast<std::size_t>(n)) {
        return {k, combo, sim.last_round(), "brute"};
      }
      // Next k-combination of 0..n-1 in lexicographic order.
      NodeId i = k - 1;
      while (i >= 0 && combo[i] == n - k + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (NodeId j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  throw InternalError("no target set found, even V itself");
}

}  // namespace twctss
