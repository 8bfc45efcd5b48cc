// obcast — construct broadcast-graph families with universal call lists,
// simulate source-oblivious broadcast, verify round/edge budgets over
// ranges, and search small instances exhaustively.
//
// Exit codes: 0 success / all checks pass, 1 verification failure or
// incomplete broadcast, 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "obcast/binomial_tree.hpp"
#include "obcast/graph.hpp"
#include "obcast/instance_io.hpp"
#include "obcast/oracle.hpp"
#include "obcast/schemes.hpp"
#include "obcast/simulate.hpp"
#include "obcast/verify.hpp"

namespace {

using namespace obcast;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

Model parse_model(const std::string& name) {
  if (name == "na" || name == "non-adaptive") return Model::NonAdaptive;
  if (name == "a" || name == "adaptive") return Model::Adaptive;
  if (name == "fa" || name == "fully-adaptive") return Model::FullyAdaptive;
  throw CLI::ValidationError("--model", "expected one of na, a, fa");
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto sep = text.find("..");
  if (sep == std::string::npos)
    throw CLI::ValidationError("--range", "expected A..B");
  try {
    const int lo = std::stoi(text.substr(0, sep));
    const int hi = std::stoi(text.substr(sep + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--range", "expected A..B with integer endpoints");
  }
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
  out << text;
}

struct ConstructArgs {
  std::string family;
  int n = -1, k = -1, d = -1;
  std::string out;
};

int run_construct(const ConstructArgs& args) {
  InstanceFile inst;
  nlohmann::json params = nlohmann::json::object();
  if (args.family == "hypercube") {
    if (args.d < 0) throw std::invalid_argument("hypercube requires --d");
    auto [g, lists] = hypercube_lists(args.d);
    params["d"] = args.d;
    inst = make_instance(g, std::move(lists), args.family, params);
  } else if (args.family == "clique") {
    if (args.n < 1) throw std::invalid_argument("clique requires --n");
    auto [g, lists] = clique_lists(args.n);
    params["n"] = args.n;
    inst = make_instance(g, std::move(lists), args.family, params);
  } else if (args.family == "theorem1" || args.family == "theorem2") {
    if (args.n < 0) throw std::invalid_argument(args.family + " requires --n");
    if (is_power_of_two(args.n))
      throw std::invalid_argument(args.family + ": n=" + std::to_string(args.n) +
                                  " is a power of two; use --family hypercube --d " +
                                  std::to_string(ceil_log2(args.n)));
    auto [g, lists] = args.family == "theorem1" ? theorem1_construction(args.n)
                                                : theorem2_construction(args.n);
    params["n"] = args.n;
    inst = make_instance(g, std::move(lists), args.family, params);
  } else if (args.family == "two-cycles") {
    if (args.k < 1) throw std::invalid_argument("two-cycles requires --k");
    params["k"] = args.k;
    inst = make_instance(make_two_cycles(args.k), {}, args.family, params);
  } else if (args.family == "binomial-tree") {
    if (args.d < 0) throw std::invalid_argument("binomial-tree requires --d");
    params["d"] = args.d;
    inst = make_instance(std::get<0>(make_binomial_tree(args.d)), {}, args.family, params);
  } else {
    throw std::invalid_argument("unknown family '" + args.family +
                                "' (hypercube, clique, theorem1, theorem2, two-cycles, "
                                "binomial-tree)");
  }
  write_output(serialize_instance(inst), args.out);
  return kExitOk;
}

struct SimulateArgs {
  std::string instance;
  int source = 0;
  std::string model = "fa";
  bool trace = false;
};

int run_simulate(const SimulateArgs& args) {
  const InstanceFile inst = load_instance(args.instance);
  if (!inst.lists)
    throw std::invalid_argument("instance has no lists; simulate needs a list assignment");
  const Graph g = instance_graph(inst);
  if (args.source < 0 || args.source >= g.n)
    throw std::invalid_argument("source " + std::to_string(args.source) + " out of range");
  const SimulationTrace trace = simulate(g, *inst.lists, args.source, parse_model(args.model));
  if (args.trace) {
    for (std::size_t t = 0; t < trace.calls.size(); ++t) {
      std::cout << "round " << t + 1 << ":";
      for (const auto& [caller, callee] : trace.calls[t])
        std::cout << " " << caller << "->" << callee;
      std::cout << "\n";
    }
    std::cout << "informed:";
    for (int v = 0; v < g.n; ++v) {
      std::cout << " " << v << "@";
      if (trace.informed_at[v] == kNever)
        std::cout << "never";
      else
        std::cout << trace.informed_at[v];
    }
    std::cout << "\n";
  }
  if (trace.complete()) {
    std::cout << "completion: " << trace.completion << "\n";
    return kExitOk;
  }
  std::cout << "completion: inf\n";
  return kExitFail;
}

struct VerifyArgs {
  std::string family;
  std::string range;
  std::string model = "fa";
  std::string out;
  int threads = 0;
};

nlohmann::json record_to_json(const VerificationRecord& rec) {
  nlohmann::json j;
  j["family"] = rec.family;
  j["n"] = rec.n;
  j["m"] = rec.m;
  j["skipped"] = rec.skipped;
  if (!rec.skipped) {
    j["nodes"] = rec.node_count;
    j["edges"] = rec.edge_count;
    j["edge_budget"] = rec.edge_budget;
    if (rec.sparsity_budget >= 0) j["sparsity_budget"] = rec.sparsity_budget;
    j["rounds"] = rec.worst_rounds;
    j["expected_rounds"] = rec.expected_rounds;
    j["wall_ms"] = rec.wall_ms;
  }
  j["pass"] = rec.pass;
  return j;
}

int run_verify(const VerifyArgs& args) {
  Family family;
  if (args.family == "hypercube") family = Family::Hypercube;
  else if (args.family == "clique") family = Family::Clique;
  else if (args.family == "theorem1") family = Family::Theorem1;
  else if (args.family == "theorem2") family = Family::Theorem2;
  else throw std::invalid_argument("unknown family '" + args.family + "'");
  const auto [lo, hi] = parse_range(args.range);
  const int threads = args.threads > 0
                          ? args.threads
                          : std::max(1u, std::thread::hardware_concurrency());

  std::ofstream ndjson;
  if (!args.out.empty()) {
    ndjson.open(args.out, std::ios::binary);
    if (!ndjson) throw std::runtime_error("cannot open " + args.out + " for writing");
  }
  std::printf("%-10s %6s %4s %8s %8s %8s %7s %9s  %s\n", "family", "n", "m", "nodes", "edges",
              "budget", "rounds", "expected", "status");
  int passed = 0, failed = 0, skipped = 0;
  const auto sink = [&](const VerificationRecord& rec) {
    if (ndjson.is_open()) ndjson << record_to_json(rec).dump() << "\n";
    if (rec.skipped) {
      ++skipped;
      std::printf("%-10s %6d %4d %8s %8s %8s %7s %9s  %s\n", rec.family.c_str(), rec.n, rec.m,
                  "-", "-", "-", "-", "-", "skip (power of two)");
      return;
    }
    rec.pass ? ++passed : ++failed;
    std::printf("%-10s %6d %4d %8d %8lld %8lld %7d %9d  %s\n", rec.family.c_str(), rec.n, rec.m,
                rec.node_count, rec.edge_count, rec.edge_budget, rec.worst_rounds,
                rec.expected_rounds, rec.pass ? "pass" : "FAIL");
  };
  verify_family(family, lo, hi, parse_model(args.model), threads, sink);
  std::printf("summary: %d checked, %d pass, %d fail, %d skipped\n", passed + failed, passed,
              failed, skipped);
  return failed == 0 ? kExitOk : kExitFail;
}

struct SearchArgs {
  std::string instance;
  std::string model = "fa";
  std::string space = "perm";
  int node_budget = 14;
  std::uint64_t assignment_budget = 50'000'000;
};

int run_search(const SearchArgs& args) {
  const InstanceFile inst = load_instance(args.instance);
  const Graph g = instance_graph(inst);
  SearchConfig cfg;
  cfg.model = parse_model(args.model);
  if (args.space == "perm") cfg.list_space = ListSpace::FullPermutations;
  else if (args.space == "subset") cfg.list_space = ListSpace::OrderedSubsets;
  else throw std::invalid_argument("unknown list space '" + args.space + "' (perm, subset)");
  cfg.node_budget = args.node_budget;
  cfg.assignment_budget = args.assignment_budget;
  const ListSearchResult result = optimal_list_assignment(g, cfg);
  std::cout << "space: " << (cfg.list_space == ListSpace::FullPermutations ? "full-permutations"
                                                                           : "ordered-subsets")
            << "\n";
  std::cout << "assignments: " << result.enumerated << "\n";
  std::cout << "exact: " << (result.exact ? "yes" : "no (assignment budget hit)") << "\n";
  if (result.value == kNever) {
    std::cout << "best: inf\n";
    return kExitFail;
  }
  std::cout << "best: " << result.value << "\n";
  for (int v = 0; v < g.n; ++v) {
    std::cout << "list " << v << ":";
    for (int u : result.witness.lists[v]) std::cout << " " << u;
    std::cout << "\n";
  }
  return kExitOk;
}

int run_bounds(int n) {
  if (n < 2) throw std::invalid_argument("--n must be >= 2");
  std::cout << "n: " << n << "\n";
  std::cout << "m (ceil log2 n): " << ceil_log2(n) << "\n";
  std::cout << "L(n): " << leading_ones(n) << "\n";
  if (is_power_of_two(n)) {
    std::cout << "theorem2: not applicable (n is a power of two; use the hypercube)\n";
    return kExitOk;
  }
  const Theorem2Decomposition dec = theorem2_decompose(n);
  std::cout << "theorem2: m=" << dec.m << " k=" << dec.k << " r=" << dec.r << "\n";
  std::cout << "theorem2 edge budget: " << edge_budget_theorem2(n) << "\n";
  return kExitOk;
}

int run_export_dot(const std::string& instance, const std::string& out) {
  const InstanceFile inst = load_instance(instance);
  write_output(instance_to_dot(inst), out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"broadcast graphs with universal call lists: construct, simulate, verify, search"};
  app.require_subcommand(1);

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "build a family instance with its lists");
  construct->add_option("--family", construct_args.family,
                        "hypercube | clique | theorem1 | theorem2 | two-cycles | binomial-tree")
      ->required();
  construct->add_option("--n", construct_args.n, "node count (clique, theorem1, theorem2)");
  construct->add_option("--k", construct_args.k, "cycle parameter (two-cycles)");
  construct->add_option("--d", construct_args.d, "dimension (hypercube, binomial-tree)");
  construct->add_option("--out", construct_args.out, "output path (default stdout)");

  SimulateArgs simulate_args;
  auto* simulate = app.add_subcommand("simulate", "run one broadcast from a source");
  simulate->add_option("instance", simulate_args.instance, "instance file")->required();
  simulate->add_option("--source", simulate_args.source, "source node id")->required();
  simulate->add_option("--model", simulate_args.model, "na | a | fa (default fa)");
  simulate->add_flag("--trace", simulate_args.trace, "print per-round calls and informed times");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "sweep a family and check rounds and edge budgets");
  verify->add_option("--family", verify_args.family, "hypercube | clique | theorem1 | theorem2")
      ->required();
  verify->add_option("--range", verify_args.range, "A..B inclusive (dimensions for hypercube)")
      ->required();
  verify->add_option("--model", verify_args.model, "na | a | fa (default fa)");
  verify->add_option("--out", verify_args.out, "write records as line-delimited JSON");
  verify->add_option("--threads", verify_args.threads, "worker threads (default: hardware)");

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "exhaustive minimum over list assignments");
  search->add_option("instance", search_args.instance, "instance file")->required();
  search->add_option("--model", search_args.model, "na | a | fa (default fa)");
  search->add_option("--list-space", search_args.space, "perm | subset (default perm)");
  search->add_option("--node-budget", search_args.node_budget, "largest accepted n (default 14)");
  search->add_option("--assignment-budget", search_args.assignment_budget,
                     "abort after this many assignments");

  int bounds_n = 0;
  auto* bounds = app.add_subcommand("bounds", "print m, L(n) and the theorem2 decomposition");
  bounds->add_option("--n", bounds_n, "node count")->required();

  std::string dot_instance, dot_out;
  auto* export_dot = app.add_subcommand("export-dot", "write a DOT rendering of an instance");
  export_dot->add_option("instance", dot_instance, "instance file")->required();
  export_dot->add_option("--out", dot_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) return run_construct(construct_args);
    if (simulate->parsed()) return run_simulate(simulate_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (search->parsed()) return run_search(search_args);
    if (bounds->parsed()) return run_bounds(bounds_n);
    if (export_dot->parsed()) return run_export_dot(dot_instance, dot_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
