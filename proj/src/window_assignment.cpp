#include "twctss/window_assignment.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace twctss {

namespace {

struct Option {
  int y;
  Cost cost;
};

// Options worth keeping for one child. An early child that is inactive in
// `round` only adds pressure, so it needs to beat the late cost; an early
// child that is active in `round` is dominated by a later one that is no
// more expensive.
std::vector<Option> useful_options(const std::vector<Cost>& early, Cost late,
                                   int round, std::int64_t lambda) {
  std::vector<Option> out;
  Cost best_later = kInfinity;
  for (int y = round - 1; y >= 0; --y) {
    const Cost c = early[y];
    if (c >= kInfinity) continue;
    if (y + lambda >= round) {
      if (c < best_later) out.push_back({y, c});
      best_later = std::min(best_later, c);
    } else if (c < late) {
      out.push_back({y, c});
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// Profile of coverage counts for rounds 1..round (byte r-1 for round r).
// Rounds before `round` stay below t, round `round` saturates at t.
struct State {
  std::u16string profile;
  Cost cost;
  int prev;
  int choice;
};

class ProfileDP {
 public:
  explicit ProfileDP(const AssignmentProblem& p) : p_(p) {
    if (p.t < 1 || p.round < 1) {
      throw std::invalid_argument("assignment needs t >= 1 and round >= 1");
    }
    if (p.early.size() != p.late.size()) {
      throw std::invalid_argument("early and late tables differ in child count");
    }
    for (const auto& e : p.early) {
      if (static_cast<int>(e.size()) != p.round) {
        throw std::invalid_argument("early table must have one entry per round before v");
      }
    }
  }

  // Returns every final state; layers_ keeps the back-pointers.
  const std::vector<State>& run() {
    const int x = p_.round;
    const int cap_before = p_.t - 1;
    layers_.clear();
    layers_.push_back({State{std::u16string(static_cast<std::size_t>(x), u'\0'), 0, -1, -1}});
    for (std::size_t c = 0; c < p_.late.size(); ++c) {
      const auto options = useful_options(p_.early[c], p_.late[c], x, p_.lambda);
      const auto& cur = layers_.back();
      std::vector<State> next;
      std::unordered_map<std::u16string, int> index;
      auto offer = [&](std::u16string profile, Cost cost, int prev, int choice) {
        auto [it, fresh] = index.try_emplace(profile, static_cast<int>(next.size()));
        if (fresh) {
          next.push_back({std::move(profile), cost, prev, choice});
        } else if (cost < next[it->second].cost) {
          next[it->second].cost = cost;
          next[it->second].prev = prev;
          next[it->second].choice = choice;
        }
      };
      for (int s = 0; s < static_cast<int>(cur.size()); ++s) {
        const State& st = cur[s];
        if (p_.late[c] < kInfinity) offer(st.profile, add_costs(st.cost, p_.late[c]), s, -1);
        for (const Option& o : options) {
          std::u16string prof = st.profile;
          bool ok = true;
          const std::int64_t last = std::min<std::int64_t>(o.y + p_.lambda, x);
          for (std::int64_t r = o.y + 1; r <= last; ++r) {
            char16_t& w = prof[r - 1];
            if (r < x) {
              if (w >= cap_before) {
                ok = false;
                break;
              }
              ++w;
            } else if (w < p_.t) {
              ++w;
            }
          }
          if (ok) offer(std::move(prof), add_costs(st.cost, o.cost), s, o.y);
        }
      }
      layers_.push_back(std::move(next));
      if (layers_.back().empty()) break;
    }
    if (layers_.size() != p_.late.size() + 1) layers_.back().clear();
    return layers_.back();
  }

  std::vector<int> choices(int final_state) const {
    std::vector<int> out(p_.late.size(), -1);
    int s = final_state;
    for (std::size_t layer = layers_.size() - 1; layer > 0; --layer) {
      const State& st = layers_[layer][s];
      out[layer - 1] = st.choice;
      s = st.prev;
    }
    return out;
  }

 private:
  const AssignmentProblem& p_;
  std::vector<std::vector<State>> layers_;
};

}  // namespace

std::vector<char> parent_mask(int round, int q, std::int64_t lambda) {
  std::vector<char> mask(static_cast<std::size_t>(round) + 1, 0);
  for (std::int64_t r = q + 1; r <= round && r <= q + lambda; ++r) mask[r] = 1;
  return mask;
}

AssignmentResult window_assignment_min(const AssignmentProblem& problem) {
  const int x = problem.round;
  std::vector<char> mask = problem.parent_active;
  if (mask.empty()) mask.assign(static_cast<std::size_t>(x) + 1, 0);
  if (static_cast<int>(mask.size()) != x + 1) {
    throw std::invalid_argument("parent mask must have round + 1 entries");
  }
  ProfileDP dp(problem);
  const auto& finals = dp.run();
  AssignmentResult best;
  int best_state = -1;
  for (int s = 0; s < static_cast<int>(finals.size()); ++s) {
    const State& st = finals[s];
    if (st.cost >= best.cost) continue;
    if (st.profile[x - 1] + mask[x] < problem.t) continue;
    bool ok = true;
    for (int r = 1; r < x && ok; ++r) ok = st.profile[r - 1] + mask[r] < problem.t;
    if (!ok) continue;
    best.cost = st.cost;
    best_state = s;
  }
  if (best_state >= 0) best.choice = dp.choices(best_state);
  return best;
}

ParentSweep window_assignment_sweep(const AssignmentProblem& problem) {
  const int x = problem.round;
  const int t = problem.t;
  ParentSweep out;
  out.helped.assign(static_cast<std::size_t>(x), kInfinity);
  ProfileDP dp(problem);
  const auto& finals = dp.run();
  std::vector<int> tight(static_cast<std::size_t>(x), 0);  // tight rounds among 1..r
  for (const State& st : finals) {
    const int wx = st.profile[x - 1];
    if (wx + 1 < t) continue;
    if (wx >= t) out.free = std::min(out.free, st.cost);
    for (int r = 1; r < x; ++r) tight[r] = tight[r - 1] + (st.profile[r - 1] == t - 1);
    for (int q = 0; q < x; ++q) {
      if (st.cost >= out.helped[q]) continue;
      const std::int64_t reach = q + problem.lambda;
      if (wx + (reach >= x ? 1 : 0) < t) continue;
      const int hi = static_cast<int>(std::min<std::int64_t>(reach, x - 1));
      if (hi > q && tight[hi] - tight[q] > 0) continue;
      out.helped[q] = st.cost;
    }
  }
  return out;
}

AssignmentResult window_assignment_single(const AssignmentProblem& problem) {
  const int x = problem.round;
  if (problem.t != 1) throw std::invalid_argument("closed form needs t = 1");
  std::vector<char> mask = problem.parent_active;
  if (mask.empty()) mask.assign(static_cast<std::size_t>(x) + 1, 0);
  for (int r = 1; r < x; ++r) {
    if (mask[r]) return {};
  }
  const std::size_t d = problem.late.size();
  AssignmentResult out;
  out.cost = 0;
  out.choice.assign(d, -1);
  bool any_early = false;
  std::size_t swap = d;
  Cost swap_delta = kInfinity;
  for (std::size_t c = 0; c < d; ++c) {
    const Cost on_time = problem.early[c][x - 1];
    const Cost late = problem.late[c];
    if (on_time < late) {
      out.choice[c] = x - 1;
      any_early = true;
    }
    out.cost = add_costs(out.cost, std::min(on_time, late));
    if (on_time < kInfinity && late < kInfinity && on_time - late < swap_delta) {
      swap_delta = on_time - late;
      swap = c;
    }
  }
  if (out.cost >= kInfinity) return {};
  if (!any_early && !mask[x]) {
    if (swap == d) return {};
    out.cost = add_costs(out.cost, swap_delta);
    out.choice[swap] = x - 1;
  }
  return out;
}

AssignmentProblem assignment_from_variant_tables(
    const std::vector<std::vector<Cost>>& cfull,
    const std::vector<std::vector<Cost>>& cred, int t, int round,
    std::int64_t lambda) {
  if (cfull.size() != cred.size()) {
    throw std::invalid_argument("variant tables differ in child count");
  }
  AssignmentProblem p;
  p.t = t;
  p.round = round;
  p.lambda = lambda;
  for (std::size_t c = 0; c < cfull.size(); ++c) {
    std::vector<Cost> early(static_cast<std::size_t>(round), kInfinity);
    Cost late = kInfinity;
    for (std::size_t j = 0; j < cfull[c].size(); ++j) {
      if (static_cast<int>(j) < round) {
        early[j] = cfull[c][j];
      } else {
        late = std::min(late, cfull[c][j]);
      }
    }
    for (Cost v : cred[c]) late = std::min(late, v);
    p.early.push_back(std::move(early));
    p.late.push_back(late);
  }
  return p;
}

}  // namespace twctss
