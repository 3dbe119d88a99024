#include <doctest.h>

#include <random>

#include "support.hpp"
#include "twctss/window_assignment.hpp"

using namespace twctss;

namespace {

// Recomputes the cost of a returned assignment and checks its constraints.
Cost replay(const AssignmentProblem& p, const AssignmentResult& res) {
  REQUIRE(res.choice.size() == p.late.size());
  Cost total = 0;
  for (std::size_t c = 0; c < res.choice.size(); ++c) {
    const int y = res.choice[c];
    total = add_costs(total, y < 0 ? p.late[c] : p.early[c][y]);
  }
  for (int r = 1; r <= p.round; ++r) {
    int w = p.parent_active.empty() ? 0 : p.parent_active[r];
    for (int y : res.choice) {
      if (y >= 0 && y + 1 <= r && r <= y + p.lambda) ++w;
    }
    if (r < p.round) CHECK(w <= p.t - 1);
    if (r == p.round) CHECK(w >= p.t);
  }
  return total;
}

AssignmentProblem random_problem(std::mt19937_64& rng, int t_max) {
  AssignmentProblem p;
  const int children = 1 + static_cast<int>(rng() % 5);
  p.round = 1 + static_cast<int>(rng() % 5);
  p.lambda = 1 + static_cast<std::int64_t>(rng() % 4);
  p.t = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(t_max, children + 1)));
  auto cell = [&]() -> Cost { return rng() % 4 == 0 ? kInfinity : static_cast<Cost>(rng() % 7); };
  for (int c = 0; c < children; ++c) {
    std::vector<Cost> e(static_cast<std::size_t>(p.round));
    for (auto& x : e) x = cell();
    p.early.push_back(std::move(e));
    p.late.push_back(cell());
  }
  if (rng() % 2) p.parent_active = parent_mask(p.round, static_cast<int>(rng() % p.round), p.lambda);
  return p;
}

}  // namespace

TEST_CASE("one child, t = 1, round 1") {
  AssignmentProblem p;
  p.t = 1;
  p.round = 1;
  p.lambda = 1;
  p.early = {{1}};
  p.late = {kInfinity};
  for (const auto& res : {window_assignment_min(p), window_assignment_single(p)}) {
    CHECK(res.cost == 1);
    CHECK(res.choice == std::vector<int>{0});
  }
}

TEST_CASE("more required than children") {
  AssignmentProblem p;
  p.t = 3;
  p.round = 2;
  p.lambda = 2;
  p.early = {{0, 0}, {0, 0}};
  p.late = {0, 0};
  const AssignmentResult res = window_assignment_min(p);
  CHECK(res.cost == kInfinity);
  CHECK(res.choice.empty());
}

TEST_CASE("parent help lowers the requirement") {
  AssignmentProblem p;
  p.t = 2;
  p.round = 2;
  p.lambda = 1;
  p.early = {{5, 1}};
  p.late = {0};
  CHECK(window_assignment_min(p).cost == kInfinity);
  p.parent_active = parent_mask(2, 1, 1);
  CHECK(p.parent_active == std::vector<char>{0, 0, 1});
  const AssignmentResult res = window_assignment_min(p);
  CHECK(res.cost == 1);
  CHECK(res.choice == std::vector<int>{1});
}

TEST_CASE("window upper bounds forbid early pressure") {
  // Two children in round 0 would make v join in round 1, not 2.
  AssignmentProblem p;
  p.t = 2;
  p.round = 2;
  p.lambda = 2;
  p.early = {{0, 9}, {0, 9}};
  p.late = {kInfinity, kInfinity};
  const AssignmentResult res = window_assignment_min(p);
  CHECK(res.cost == 9);
  CHECK(replay(p, res) == 9);
}

TEST_CASE("3 children, round 2, lambda 1, t 2 against enumeration") {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 300; ++iter) {
    support::VariantTables v = support::random_variant_tables(rng, 3, 3);
    v.r = 2;
    v.lambda = 1;
    v.t = 2;
    for (auto& red : v.cred) red.resize(1, 0);
    const AssignmentProblem p = assignment_from_variant_tables(v.cfull, v.cred, v.t, v.r, v.lambda);
    const AssignmentResult res = window_assignment_min(p);
    CHECK(res.cost == support::enumerate_assignments(v));
    if (res.cost < kInfinity) CHECK(replay(p, res) == res.cost);
  }
}

TEST_CASE("property: exact optimum on random problems") {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 1500; ++iter) {
    const AssignmentProblem p = random_problem(rng, 6);
    const AssignmentResult res = window_assignment_min(p);
    CHECK(res.cost == support::enumerate_problem(p));
    if (res.cost < kInfinity) CHECK(replay(p, res) == res.cost);
  }
}

TEST_CASE("property: variant tables against enumeration") {
  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 500; ++iter) {
    const int children = 1 + static_cast<int>(rng() % 4);
    const support::VariantTables v = support::random_variant_tables(rng, children, 1 + static_cast<int>(rng() % 4));
    std::vector<char> mask;
    if (rng() % 2) mask = parent_mask(v.r, static_cast<int>(rng() % v.r), v.lambda);
    AssignmentProblem p = assignment_from_variant_tables(v.cfull, v.cred, v.t, v.r, v.lambda);
    p.parent_active = mask;
    CHECK(window_assignment_min(p).cost == support::enumerate_assignments(v, mask));
  }
}

TEST_CASE("property: t = 1 closed form agrees with the general solver") {
  std::mt19937_64 rng(44);
  for (int iter = 0; iter < 1000; ++iter) {
    AssignmentProblem p = random_problem(rng, 1);
    p.parent_active.clear();
    const AssignmentResult fast = window_assignment_single(p);
    CHECK(fast.cost == window_assignment_min(p).cost);
    if (fast.cost < kInfinity) CHECK(replay(p, fast) == fast.cost);
  }
}

TEST_CASE("property: sweep agrees with one solve per parent round") {
  std::mt19937_64 rng(45);
  for (int iter = 0; iter < 600; ++iter) {
    AssignmentProblem p = random_problem(rng, 6);
    p.parent_active.clear();
    const ParentSweep sweep = window_assignment_sweep(p);
    CHECK(sweep.free == window_assignment_min(p).cost);
    REQUIRE(sweep.helped.size() == static_cast<std::size_t>(p.round));
    for (int q = 0; q < p.round; ++q) {
      AssignmentProblem h = p;
      h.parent_active = parent_mask(p.round, q, p.lambda);
      CHECK(sweep.helped[q] == window_assignment_min(h).cost);
    }
  }
}
