#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "twctss/instance.hpp"

namespace twctss {

enum class Family { Path, Ring, Tree, Complete, Gnp };
enum class ThresholdPolicy { Uniform, AllOne, AllMax, TwoMix };

Family parse_family(const std::string& name);
ThresholdPolicy parse_policy(const std::string& name);
std::string to_string(Family family);
std::string to_string(ThresholdPolicy policy);

struct GenerateOptions {
  Family family = Family::Path;
  NodeId n = 2;
  ThresholdPolicy policy = ThresholdPolicy::Uniform;
  double two_mix_p = 0.5;
  std::int64_t lambda = 1;
  std::uint64_t seed = 0;
  double edge_prob = 0.5;  // gnp only
};

/// The generator's random source: std::mt19937_64 seeded with the 64-bit
/// seed, with draws reduced as documented in the README.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in 0..bound-1 by rejection of the biased top range.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [0, 1) from the top 53 bits.
  double unit();

 private:
  std::mt19937_64 engine_;
};

/// Deterministic in all options. Throws std::invalid_argument for n < 2,
/// rings with n < 3, lambda < 1, probabilities outside [0, 1] or an edge
/// probability of 0.
Instance generate(const GenerateOptions& options);

}  // namespace twctss
