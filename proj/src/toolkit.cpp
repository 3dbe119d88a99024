#include "twctss/toolkit.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "twctss/complete_solver.hpp"
#include "twctss/diffusion.hpp"
#include "twctss/instance_io.hpp"
#include "twctss/oracle.hpp"
#include "twctss/path_solver.hpp"
#include "twctss/ring_solver.hpp"
#include "twctss/tree_solver.hpp"

namespace twctss {

using Json = nlohmann::ordered_json;

namespace {

SolveResult solve_shape(const Instance& instance, ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Complete: return solve_complete(instance);
    case ShapeKind::Path: return solve_path(instance);
    case ShapeKind::Ring: return solve_ring(instance);
    case ShapeKind::Tree: return solve_tree(instance);
    case ShapeKind::General: break;
  }
  throw ShapeMismatch("no exact solver for general graphs; use --method brute");
}

}  // namespace

SolveResult solve_auto(const Instance& instance) {
  const auto components = connected_components(instance);
  if (components.size() == 1) {
    return solve_shape(instance, classify_shape(instance).kind);
  }
  SolveResult total;
  std::vector<std::string> methods;
  for (const auto& members : components) {
    const Instance part = instance.induced(members);
    const SolveResult r = solve_shape(part, classify_shape(part).kind);
    total.size += r.size;
    for (NodeId v : r.witness) total.witness.push_back(members[v]);
    total.completion_round = std::max(total.completion_round, r.completion_round);
    if (std::find(methods.begin(), methods.end(), r.method) == methods.end()) {
      methods.push_back(r.method);
    }
  }
  std::sort(total.witness.begin(), total.witness.end());
  for (const auto& m : methods) total.method += (total.method.empty() ? "" : "+") + m;
  return total;
}

SolveResult solve_with_method(const Instance& instance, const std::string& method) {
  if (method == "auto") return solve_auto(instance);
  if (method == "path") return solve_path(instance);
  if (method == "ring") return solve_ring(instance);
  if (method == "tree") return solve_tree(instance);
  if (method == "complete") return solve_complete(instance);
  if (method == "brute") {
    if (instance.size() > kDefaultOracleCap) {
      throw ShapeMismatch("brute force is limited to " + std::to_string(kDefaultOracleCap) +
                          " nodes");
    }
    return brute_force_min_target_set(instance);
  }
  throw ShapeMismatch("unknown method '" + method + "'");
}

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  std::vector<BenchRow> rows;
  for (NodeId n : options.sizes) {
    for (int i = 0; i < options.repeats; ++i) {
      GenerateOptions g;
      g.family = options.family;
      g.n = n;
      g.policy = options.policy;
      g.lambda = options.lambda;
      g.seed = options.seed + static_cast<std::uint64_t>(i);
      const Instance instance = generate(g);
      const auto start = std::chrono::steady_clock::now();
      const SolveResult r = solve_auto(instance);
      const auto stop = std::chrono::steady_clock::now();
      rows.push_back({to_string(options.family), n, options.lambda, g.seed, r.size,
                      std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.n, a.seed) < std::tie(b.n, b.seed);
  });
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "family,n,lambda,seed,size,wall_time_ns\n";
  for (const auto& r : rows) {
    out << r.family << ',' << r.n << ',' << r.lambda << ',' << r.seed << ',' << r.size << ','
        << r.wall_time_ns << '\n';
  }
  return out.str();
}

namespace {

Json cost_json(Cost c) { return c >= kInfinity ? Json(nullptr) : Json(c); }

Json path_tables_json(const PathTables& t) {
  Json j;
  j["offset"] = t.offset;
  j["D"] = t.D;
  j["sigma"] = t.sigma;
  j["prec"] = t.prec;
  j["choice"] = t.choice;
  return j;
}

Json tree_tables_json(const TreeTables& t) {
  Json j;
  j["root"] = t.root;
  j["diameter"] = t.diam;
  j["lambda"] = t.lambda;
  Json full = Json::array();
  Json helped = Json::array();
  for (NodeId v = 0; v < static_cast<NodeId>(t.f.size()); ++v) {
    Json fv = Json::array();
    Json gv = Json::array();
    for (int x = 0; x <= t.horizon(v); ++x) {
      fv.push_back(cost_json(t.full(v, x)));
      Json row = Json::array();
      for (int q = 0; q < x; ++q) row.push_back(cost_json(t.helped(v, x, q)));
      gv.push_back(std::move(row));
    }
    full.push_back(std::move(fv));
    helped.push_back(std::move(gv));
  }
  j["full"] = std::move(full);
  j["helped"] = std::move(helped);
  return j;
}

// Tables for one connected instance, solved with `method` (never auto).
Json dump_tables(const Instance& instance, const std::string& method) {
  Json j;
  j["method"] = method;
  if (method == "path") {
    PathTables t;
    solve_path(instance, &t);
    if (t.sigma.empty()) {
      j["tables"] = nullptr;
    } else {
      j["tables"] = path_tables_json(t);
    }
  } else if (method == "tree") {
    TreeTables t;
    solve_tree(instance, &t);
    j["tables"] = tree_tables_json(t);
  } else if (method == "complete") {
    const ThresholdCounts c = threshold_counts(instance);
    j["tables"] = {{"A", c.a}};
  } else {
    j["tables"] = nullptr;
  }
  return j;
}

Json tables_for(const Instance& instance, const std::string& method) {
  Json out = Json::array();
  if (method != "auto") {
    out.push_back(dump_tables(instance, method));
    return out;
  }
  for (const auto& members : connected_components(instance)) {
    const Instance part = instance.induced(members);
    const ShapeKind kind = classify_shape(part).kind;
    Json entry = dump_tables(part, to_string(kind));
    entry["component"] = members;
    out.push_back(std::move(entry));
  }
  return out;
}

Json trace_json(const DiffusionTrace& trace) {
  Json j;
  j["seed"] = trace.seed;
  j["rounds"] = trace.rounds;
  j["complete"] = trace.complete();
  if (auto r = trace.completion_round()) {
    j["completion_round"] = *r;
  } else {
    j["completion_round"] = nullptr;
  }
  return j;
}

NodeSet parse_seed_set(const std::string& text, NodeId n) {
  NodeSet seed;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = item.find_last_not_of(" \t");
    const std::string token = item.substr(first, last - first + 1);
    std::size_t used = 0;
    long long id = 0;
    try {
      id = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw ParseError(0, "seed set: '" + token + "' is not a node id");
    }
    if (used != token.size()) throw ParseError(0, "seed set: '" + token + "' is not a node id");
    if (id < 0 || id >= n) {
      throw ParseError(0, "seed set: node id " + std::to_string(id) + " out of range");
    }
    seed.push_back(static_cast<NodeId>(id));
  }
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  return seed;
}

std::vector<NodeId> parse_sizes(const std::string& text) {
  std::vector<NodeId> sizes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long long n = std::stoll(item, &used);
      if (used != item.size() || n < 2) throw std::invalid_argument("");
      sizes.push_back(static_cast<NodeId>(n));
    } catch (const std::exception&) {
      throw ParseError(0, "sizes: '" + item + "' is not a node count >= 2");
    }
  }
  if (sizes.empty()) throw ParseError(0, "sizes: empty list");
  return sizes;
}

std::string join_violations(const std::vector<Violation>& violations) {
  std::string out;
  for (const auto& v : violations) out += "invalid instance: " + v.message + "\n";
  return out;
}

}  // namespace

CliOutput run_cli(const std::vector<std::string>& args) {
  CliOutput result;
  std::ostringstream out;
  std::ostringstream err;

  CLI::App app{"Exact minimum target sets under time-window constrained diffusion", "twctss"};
  app.require_subcommand(1);

  std::string input;
  std::string method = "auto";
  bool dump = false;
  bool check = false;
  auto* solve = app.add_subcommand("solve", "Minimum target set of an instance");
  solve->add_option("--input", input, "Instance file (text or JSON)")->required();
  solve->add_option("--method", method, "auto, path, ring, tree, complete or brute")
      ->check(CLI::IsMember({"auto", "path", "ring", "tree", "complete", "brute"}));
  solve->add_flag("--dump-tables", dump, "Include the dynamic-programming tables");
  solve->add_flag("--check", check, "Compare against brute force when n is small");

  std::string seed_text;
  auto* sim = app.add_subcommand("simulate", "Round-by-round diffusion trace");
  sim->add_option("--input", input, "Instance file")->required();
  sim->add_option("--seed-set", seed_text, "Comma-separated node ids")->required();

  auto* verify = app.add_subcommand("verify", "Check whether a seed set influences every node");
  verify->add_option("--input", input, "Instance file")->required();
  verify->add_option("--seed-set", seed_text, "Comma-separated node ids")->required();

  std::string family = "path";
  std::string policy = "uniform";
  NodeId gen_n = 10;
  std::int64_t lambda = 1;
  std::uint64_t rng_seed = 0;
  double two_mix_p = 0.5;
  double edge_prob = 0.5;
  std::string output;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--family", family, "path, ring, tree, complete or gnp")->required();
  gen->add_option("--n", gen_n, "Node count")->required();
  gen->add_option("--policy", policy, "uniform, all_one, all_max or two_mix");
  gen->add_option("--lambda", lambda, "Window size");
  gen->add_option("--seed", rng_seed, "64-bit generator seed");
  gen->add_option("--p", two_mix_p, "two_mix probability of threshold 2");
  gen->add_option("--edge-prob", edge_prob, "gnp edge probability");
  gen->add_option("--output", output, "Write to this file instead of stdout");

  std::string sizes_text;
  int repeats = 1;
  auto* bench = app.add_subcommand("bench", "Time the solvers on generated instances");
  bench->add_option("--family", family, "path, ring, tree or complete")->required();
  bench->add_option("--sizes", sizes_text, "Comma-separated node counts")->required();
  bench->add_option("--repeats", repeats, "Instances per size")->check(CLI::PositiveNumber);
  bench->add_option("--policy", policy, "Threshold policy");
  bench->add_option("--lambda", lambda, "Window size");
  bench->add_option("--seed", rng_seed, "Seed of the first repeat");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    result.exit_code = code == 0 ? kExitOk : kExitMalformed;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  try {
    if (solve->parsed()) {
      const Instance instance = read_instance_file(input);
      if (auto violations = validate(instance); !violations.empty()) {
        result.exit_code = kExitMalformed;
        result.err = join_violations(violations);
        return result;
      }
      const SolveResult r = solve_with_method(instance, method);
      const TargetSetCheck ok = is_target_set(instance, r.witness);
      if (!ok.is_target_set || static_cast<std::int64_t>(r.witness.size()) != r.size) {
        throw InternalError("solver witness is not a target set of the reported size");
      }
      if (check && instance.size() <= kDefaultOracleCap) {
        const SolveResult b = brute_force_min_target_set(instance);
        if (b.size != r.size) {
          throw InternalError("check failed: " + r.method + " found " + std::to_string(r.size) +
                              ", brute force found " + std::to_string(b.size));
        }
      }
      Json j;
      j["size"] = r.size;
      j["target_set"] = r.witness;
      j["completion_round"] = r.completion_round;
      j["method"] = r.method;
      if (dump) j["tables"] = tables_for(instance, method);
      out << j.dump() << '\n';
    } else if (sim->parsed()) {
      const Instance instance = read_instance_file(input);
      const NodeSet seed = parse_seed_set(seed_text, instance.size());
      out << trace_json(simulate(instance, seed)).dump() << '\n';
    } else if (verify->parsed()) {
      const Instance instance = read_instance_file(input);
      const NodeSet seed = parse_seed_set(seed_text, instance.size());
      const TargetSetCheck c = is_target_set(instance, seed);
      Json j;
      j["is_target_set"] = c.is_target_set;
      j["influenced"] = c.influenced;
      out << j.dump() << '\n';
    } else if (gen->parsed()) {
      GenerateOptions g;
      try {
        g.family = parse_family(family);
        g.policy = parse_policy(policy);
      } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
      }
      g.n = gen_n;
      g.lambda = lambda;
      g.seed = rng_seed;
      g.two_mix_p = two_mix_p;
      g.edge_prob = edge_prob;
      Instance instance;
      try {
        instance = generate(g);
      } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
      }
      const std::string text = serialize_instance(instance);
      if (output.empty()) {
        out << text;
      } else {
        std::ofstream file(output, std::ios::binary);
        file << text;
        if (!file) throw ParseError(0, "cannot write " + output);
      }
    } else if (bench->parsed()) {
      BenchOptions b;
      try {
        b.family = parse_family(family);
        b.policy = parse_policy(policy);
      } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
      }
      b.sizes = parse_sizes(sizes_text);
      b.repeats = repeats;
      b.lambda = lambda;
      b.seed = rng_seed;
      if (b.lambda < 1) throw ParseError(0, "lambda must be at least 1");
      out << bench_csv(run_bench(b));
    }
  } catch (const ParseError& e) {
    result.exit_code = kExitMalformed;
    err << "error: " << e.what() << '\n';
  } catch (const ShapeMismatch& e) {
    result.exit_code = kExitUnsupported;
    err << "unsupported: " << e.what() << '\n';
  } catch (const std::length_error& e) {
    result.exit_code = kExitUnsupported;
    err << "unsupported: " << e.what() << '\n';
  } catch (const InternalError& e) {
    result.exit_code = kExitInternal;
    err << "internal error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    result.exit_code = kExitMalformed;
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    result.exit_code = kExitInternal;
    err << "internal error: " << e.what() << '\n';
  }
  if (result.exit_code != kExitOk) {
    result.err += err.str();
    return result;
  }
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace twctss
