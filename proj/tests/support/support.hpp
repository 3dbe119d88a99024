#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "twctss/generator.hpp"
#include "twctss/instance.hpp"
#include "twctss/window_assignment.hpp"

namespace support {

using twctss::Cost;
using twctss::Instance;
using twctss::NodeId;
using twctss::NodeSet;

std::string fixture_path(const std::string& name);

/// branch tree. Ids: v0 = 0, v1,1..v1,3 = 1..3, v2,1..v2,6 = 4..9,
/// v3,1..v3,5 = 10..14.
Instance branch_tree(std::int64_t lambda);
std::vector<int> sample_path_thresholds();
Instance path_instance(const std::vector<int>& thresholds, std::int64_t lambda);
Instance ring_instance(const std::vector<int>& thresholds, std::int64_t lambda);
Instance complete_instance(const std::vector<int>& thresholds, std::int64_t lambda);

/// D by a forward scan for every index.
std::vector<int> scan_D(std::span<const int> thresholds);

/// Suffix recurrence evaluated directly: for each i every candidate second
/// element is enumerated from its definition.
std::vector<std::int64_t> direct_sigma(std::span<const int> thresholds, std::int64_t lambda);

/// Smallest target set of the sub-path i..n-1 that contains i and n-1, by
/// exhaustive search. Small n only.
std::int64_t exhaustive_suffix(std::span<const int> thresholds, std::int64_t lambda, int i);

/// Raw child tables in the full/reduced variant layout: full costs for rounds 0..diam
/// and reduced costs for rounds r+1..r+lambda.
struct VariantTables {
  std::vector<std::vector<Cost>> cfull;
  std::vector<std::vector<Cost>> cred;
  int t = 1;
  int r = 1;
  std::int64_t lambda = 1;
  int diam = 1;
};

VariantTables random_variant_tables(std::mt19937_64& rng, int children, int diam);

/// Exhaustive search over one (variant, round) per child under the window
/// constraints, with an optional parent mask as in AssignmentProblem.
Cost enumerate_assignments(const VariantTables& v, const std::vector<char>& parent = {});

/// Exhaustive search directly on an AssignmentProblem.
Cost enumerate_problem(const twctss::AssignmentProblem& p);

/// Random instance of a family for the oracle corpora. The policy is drawn
/// from those that fit the family.
Instance random_instance(twctss::Family family, NodeId n, std::int64_t lambda,
                         std::mt19937_64& rng);

/// Random connected or disconnected general graph with valid thresholds.
Instance random_general(NodeId n, std::int64_t lambda, std::mt19937_64& rng);

NodeSet random_seed(NodeId n, std::mt19937_64& rng);

}  // namespace support
