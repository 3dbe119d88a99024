#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twctss/generator.hpp"
#include "twctss/instance.hpp"

namespace twctss {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformed = 1;
inline constexpr int kExitUnsupported = 2;
inline constexpr int kExitInternal = 3;

/// Solves each connected component with the solver for its shape and merges
/// the results. Throws ShapeMismatch when a component has no exact solver.
SolveResult solve_auto(const Instance& instance);

/// method is one of auto, path, ring, tree, complete, brute.
SolveResult solve_with_method(const Instance& instance, const std::string& method);

struct BenchOptions {
  Family family = Family::Path;
  std::vector<NodeId> sizes;
  int repeats = 1;
  ThresholdPolicy policy = ThresholdPolicy::Uniform;
  std::int64_t lambda = 2;
  std::uint64_t seed = 1;
};

struct BenchRow {
  std::string family;
  NodeId n = 0;
  std::int64_t lambda = 0;
  std::uint64_t seed = 0;
  std::int64_t size = 0;
  std::int64_t wall_time_ns = 0;
};

/// One row per (size, repeat); repeat i uses seed + i. Rows sorted by n, seed.
std::vector<BenchRow> run_bench(const BenchOptions& options);
std::string bench_csv(const std::vector<BenchRow>& rows);

struct CliOutput {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Runs the twctss command line (args exclude the program name).
CliOutput run_cli(const std::vector<std::string>& args);

}  // namespace twctss
