#include "twctss/diffusion.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace twctss {
namespace {

NodeSet normalized_seed(const Instance& instance, std::span<const NodeId> seed) {
  NodeSet out(seed.begin(), seed.end());
  for (NodeId v : out) {
    if (v < 0 || v >= instance.size()) {
      throw std::out_of_range("seed node " + std::to_string(v) + " out of range");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

bool DiffusionTrace::complete() const {
  return influenced_count() == influenced_round.size();
}

std::size_t DiffusionTrace::influenced_count() const {
  std::size_t total = 0;
  for (const auto& r : rounds) total += r.size();
  return total;
}

std::optional<Round> DiffusionTrace::completion_round() const {
  if (!complete()) return std::nullopt;
  return static_cast<Round>(rounds.size()) - 1;
}

NodeSet DiffusionTrace::influenced(Round r) const {
  NodeSet out;
  for (Round i = 0; i <= r && i < static_cast<Round>(rounds.size()); ++i) {
    out.insert(out.end(), rounds[i].begin(), rounds[i].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

NodeSet DiffusionTrace::active(Round r) const {
  NodeSet out;
  const std::int64_t lo = std::max<std::int64_t>(0, r - lambda);
  for (std::int64_t i = lo; i <= r - 1 && i < static_cast<std::int64_t>(rounds.size()); ++i) {
    out.insert(out.end(), rounds[i].begin(), rounds[i].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Simulator::Simulator(const Instance& instance)
    : instance_(instance),
      round_(static_cast<std::size_t>(instance.size()), kNever),
      active_count_(static_cast<std::size_t>(instance.size()), 0),
      mark_(static_cast<std::size_t>(instance.size()), 0) {
  order_.reserve(static_cast<std::size_t>(instance.size()));
}

std::size_t Simulator::run(std::span<const NodeId> seed) {
  const NodeId n = instance_.size();
  std::fill(round_.begin(), round_.end(), kNever);
  std::fill(active_count_.begin(), active_count_.end(), 0);
  order_.clear();
  round_start_.clear();
  round_start_.push_back(0);
  for (NodeId v : seed) {
    if (round_[v] == kNever) {
      round_[v] = 0;
      order_.push_back(v);
    }
  }
  round_start_.push_back(order_.size());
  last_round_ = 0;
  const std::int64_t lambda = instance_.lambda();
  // Round r: nodes of round r-1 become active, nodes of round r-1-lambda stop.
  for (Round r = 1; order_.size() < static_cast<std::size_t>(n) && r <= n; ++r) {
    const std::int64_t leaving = static_cast<std::int64_t>(r) - 1 - lambda;
    if (leaving >= 0) {
      for (std::size_t i = round_start_[leaving]; i < round_start_[leaving + 1]; ++i) {
        for (NodeId w : instance_.neighbors(order_[i])) --active_count_[w];
      }
    }
    touched_.clear();
    for (std::size_t i = round_start_[r - 1]; i < round_start_[r]; ++i) {
      for (NodeId w : instance_.neighbors(order_[i])) {
        ++active_count_[w];
        if (round_[w] == kNever && !mark_[w]) {
          mark_[w] = 1;
          touched_.push_back(w);
        }
      }
    }
    for (NodeId w : touched_) {
      mark_[w] = 0;
      if (active_count_[w] >= instance_.threshold(w)) {
        round_[w] = r;
        order_.push_back(w);
      }
    }
    if (order_.size() == round_start_[r]) break;
    std::sort(order_.begin() + static_cast<std::ptrdiff_t>(round_start_[r]), order_.end());
    round_start_.push_back(order_.size());
    last_round_ = r;
  }
  return order_.size();
}

DiffusionTrace simulate(const Instance& instance, std::span<const NodeId> seed) {
  DiffusionTrace trace;
  trace.seed = normalized_seed(instance, seed);
  trace.lambda = instance.lambda();
  Simulator sim(instance);
  sim.run(trace.seed);
  trace.influenced_round = sim.rounds();
  trace.rounds.assign(static_cast<std::size_t>(sim.last_round()) + 1, {});
  for (NodeId v = 0; v < instance.size(); ++v) {
    if (const Round r = trace.influenced_round[v]; r != kNever) {
      trace.rounds[r].push_back(v);
    }
  }
  return trace;
}

DiffusionTrace simulate_bounded_memory(const Instance& instance,
                                       std::span<const NodeId> seed) {
  DiffusionTrace trace;
  trace.seed = normalized_seed(instance, seed);
  trace.lambda = instance.lambda();
  const NodeId n = instance.size();
  const std::int64_t lambda = instance.lambda();

  // history[r] is the membership vector of Influenced'[r].
  std::vector<std::vector<char>> history;
  history.emplace_back(static_cast<std::size_t>(n), 0);
  for (NodeId v : trace.seed) history[0][v] = 1;
  trace.rounds.push_back(trace.seed);

  std::size_t total = trace.seed.size();
  for (Round r = 1; total < static_cast<std::size_t>(n) && r <= n; ++r) {
    const auto& prev = history[r - 1];
    const std::vector<char>* old = nullptr;
    if (r > lambda) old = &history[static_cast<std::size_t>(r - 1 - lambda)];
    std::vector<char> next = prev;
    NodeSet added;
    for (NodeId v = 0; v < n; ++v) {
      if (prev[v]) continue;
      int count = 0;
      for (NodeId u : instance.neighbors(v)) {
        if (prev[u] && !(old && (*old)[u])) ++count;
      }
      if (count >= instance.threshold(v)) {
        next[v] = 1;
        added.push_back(v);
      }
    }
    if (added.empty()) break;
    total += added.size();
    trace.rounds.push_back(std::move(added));
    history.push_back(std::move(next));
  }

  trace.influenced_round.assign(static_cast<std::size_t>(n), kNever);
  for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
    for (NodeId v : trace.rounds[r]) trace.influenced_round[v] = static_cast<Round>(r);
  }
  return trace;
}

TargetSetCheck is_target_set(const Instance& instance, std::span<const NodeId> seed) {
  const NodeSet normalized = normalized_seed(instance, seed);
  Simulator sim(instance);
  const std::size_t reached = sim.run(normalized);
  return {reached == static_cast<std::size_t>(instance.size()), reached};
}

}  // namespace twctss
