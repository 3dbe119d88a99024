#include <doctest.h>

#include <random>

#include "support.hpp"
#include "twctss/generator.hpp"
#include "twctss/instance_io.hpp"

using namespace twctss;

TEST_CASE("all_one path") {
  GenerateOptions o;
  o.family = Family::Path;
  o.n = 10;
  o.policy = ThresholdPolicy::AllOne;
  o.seed = 42;
  CHECK(generate(o) == support::path_instance(std::vector<int>(10, 1), 1));
}

TEST_CASE("all_max complete") {
  GenerateOptions o;
  o.family = Family::Complete;
  o.n = 6;
  o.policy = ThresholdPolicy::AllMax;
  o.lambda = 2;
  for (std::uint64_t seed : {0ULL, 9ULL, ~0ULL}) {
    o.seed = seed;
    CHECK(generate(o) == support::complete_instance(std::vector<int>(6, 5), 2));
  }
}

TEST_CASE("determinism") {
  GenerateOptions o;
  o.family = Family::Tree;
  o.n = 12;
  o.lambda = 3;
  o.seed = 7;
  CHECK(serialize_instance(generate(o)) == serialize_instance(generate(o)));
  GenerateOptions other = o;
  other.seed = 8;
  CHECK(serialize_instance(generate(o)) != serialize_instance(generate(other)));
}

TEST_CASE("generator stream") {
  Rng a(123);
  std::mt19937_64 ref(123);
  for (int i = 0; i < 5; ++i) CHECK(a.next() == ref());
  Rng b(5);
  for (int i = 0; i < 1000; ++i) {
    CHECK(b.below(7) < 7);
    const double u = b.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(Rng(1).below(1) == 0);
  CHECK_THROWS_AS(Rng(1).below(0), std::invalid_argument);
}

TEST_CASE("names") {
  for (Family f : {Family::Path, Family::Ring, Family::Tree, Family::Complete, Family::Gnp}) {
    CHECK(parse_family(to_string(f)) == f);
  }
  for (ThresholdPolicy p : {ThresholdPolicy::Uniform, ThresholdPolicy::AllOne,
                            ThresholdPolicy::AllMax, ThresholdPolicy::TwoMix}) {
    CHECK(parse_policy(to_string(p)) == p);
  }
  CHECK_THROWS_AS(parse_family("grid"), std::invalid_argument);
  CHECK_THROWS_AS(parse_policy("half"), std::invalid_argument);
}

TEST_CASE("invalid options") {
  GenerateOptions o;
  o.n = 1;
  CHECK_THROWS_AS(generate(o), std::invalid_argument);
  o.n = 2;
  o.family = Family::Ring;
  CHECK_THROWS_AS(generate(o), std::invalid_argument);
  o.family = Family::Path;
  o.lambda = 0;
  CHECK_THROWS_AS(generate(o), std::invalid_argument);
  o.lambda = 1;
  o.two_mix_p = 1.5;
  CHECK_THROWS_AS(generate(o), std::invalid_argument);
  o.two_mix_p = 0.5;
  o.family = Family::Gnp;
  o.edge_prob = 0.0;
  CHECK_THROWS_AS(generate(o), std::invalid_argument);
}

TEST_CASE("two_mix keeps endpoints at threshold 1") {
  GenerateOptions o;
  o.family = Family::Path;
  o.n = 30;
  o.policy = ThresholdPolicy::TwoMix;
  o.two_mix_p = 1.0;
  const Instance inst = generate(o);
  CHECK(inst.threshold(0) == 1);
  CHECK(inst.threshold(29) == 1);
  for (NodeId v = 1; v < 29; ++v) CHECK(inst.threshold(v) == 2);
}

TEST_CASE("property: valid instances of the requested family") {
  std::mt19937_64 rng(71);
  const ShapeKind kind[] = {ShapeKind::Path, ShapeKind::Ring, ShapeKind::Tree, ShapeKind::Complete};
  for (int iter = 0; iter < 500; ++iter) {
    GenerateOptions o;
    o.family = static_cast<Family>(rng() % 5);
    o.n = 3 + static_cast<NodeId>(rng() % 40);
    o.policy = static_cast<ThresholdPolicy>(rng() % 4);
    o.two_mix_p = static_cast<double>(rng() % 11) / 10.0;
    o.edge_prob = static_cast<double>(1 + rng() % 10) / 10.0;
    o.lambda = 1 + static_cast<std::int64_t>(rng() % 5);
    o.seed = rng();
    const Instance inst = generate(o);
    CHECK(validate(inst).empty());
    CHECK(inst.size() == o.n);
    CHECK(inst.lambda() == o.lambda);
    const ShapeKind got = classify_shape(inst).kind;
    if (o.family == Family::Gnp) {
      for (NodeId v = 0; v < inst.size(); ++v) CHECK(inst.degree(v) >= 1);
    } else if (o.family == Family::Tree) {
      // Random trees may come out as paths.
      CHECK((got == ShapeKind::Tree || got == ShapeKind::Path || got == ShapeKind::Complete));
      CHECK(is_tree(inst));
    } else if (o.family == Family::Ring && o.n == 3) {
      CHECK(got == ShapeKind::Complete);
    } else {
      CHECK(got == kind[static_cast<int>(o.family)]);
    }
  }
}
