// rstem: command-line front end for the spanning-tree toolkit.
//
// Exit codes: 0 success, 1 invalid input, 2 budget exceeded,
// 3 counterexample candidate found.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rstem/claims.hpp"
#include "rstem/generators.hpp"
#include "rstem/graph.hpp"
#include "rstem/optimizer.hpp"
#include "rstem/oracle.hpp"
#include "rstem/stats.hpp"
#include "rstem/theorem.hpp"

namespace {

using namespace rstem;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitBudget = 2;
constexpr int kExitCandidate = 3;

// Thrown to leave a subcommand with a specific exit code after diagnostics.
struct ExitWith {
  int code;
};

struct InputSource {
  std::string path = "-";

  std::string label() const { return path == "-" ? "<stdin>" : path; }
};

EdgeListDocument read_graph(const InputSource& src) {
  try {
    if (src.path == "-") return parse_edge_list_document(std::cin);
    std::ifstream in(src.path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + src.path);
    return parse_edge_list_document(in);
  } catch (const Error& e) {
    std::cerr << src.label() << ": " << e.what() << '\n';
    throw ExitWith{kExitInvalid};
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << '\n';
    throw ExitWith{kExitInvalid};
  }
  return out;
}

std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + std::to_string(vs[i]);
  return s;
}

struct Budgets {
  std::uint64_t sigma_nodes = kDefaultNodeBudget;
  std::uint64_t max_trees = EnumerationBudget{}.max_trees;
  double max_seconds = EnumerationBudget{}.max_seconds;
  int max_steps = kDefaultMaxSteps;
  int oracle_max_n = LabBudget{}.oracle_max_n;

  LabBudget lab() const { return LabBudget{sigma_nodes, EnumerationBudget{max_trees, max_seconds}, max_steps, oracle_max_n}; }
};

void add_budget_options(CLI::App* cmd, Budgets& b, bool sigma, bool trees, bool steps) {
  if (sigma)
    cmd->add_option("--sigma-budget", b.sigma_nodes, "Search-node cap for degree-sum searches")
        ->check(CLI::PositiveNumber);
  if (trees) {
    cmd->add_option("--max-trees", b.max_trees, "Cap on enumerated spanning trees")->check(CLI::PositiveNumber);
    cmd->add_option("--max-seconds", b.max_seconds, "Wall-clock cap for enumeration")->check(CLI::PositiveNumber);
  }
  if (steps) cmd->add_option("--max-steps", b.max_steps, "Cap on accepted local-search moves")->check(CLI::NonNegativeNumber);
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string family;
  int m = 1;
  int l = 1;
  int n = 10;
  double p = 0.3;
  std::uint64_t seed = 0;
};

int run_gen(const GenArgs& a) {
  Graph g;
  std::vector<std::string> meta;
  if (a.family == "H") {
    g = example_H({a.m});
    meta.push_back(" family=H m=" + std::to_string(a.m));
  } else if (a.family == "G") {
    g = example_G({a.l, a.m});
    meta.push_back(" family=G l=" + std::to_string(a.l) + " m=" + std::to_string(a.m) +
                   " k=" + std::to_string(2 * a.l + 1));
  } else if (a.family == "random") {
    g = random_connected(a.n, a.p, a.seed);
    meta.push_back(" family=random n=" + std::to_string(a.n) + " p=" + std::to_string(a.p));
  } else if (a.family == "line") {
    g = line_graph(random_connected(a.n, a.p, a.seed));
    meta.push_back(" family=line base_n=" + std::to_string(a.n) + " p=" + std::to_string(a.p));
  } else if (a.family == "line-tree") {
    g = line_graph(random_tree(a.n + 1, a.seed));
    meta.push_back(" family=line-tree n=" + std::to_string(a.n));
  } else if (a.family == "k14free") {
    g = random_k14_free(a.n, a.p, a.seed);
    meta.push_back(" family=k14free n=" + std::to_string(a.n) + " p=" + std::to_string(a.p));
  } else {
    std::cerr << "unknown family " << a.family << '\n';
    return kExitInvalid;
  }
  if (a.family != "H" && a.family != "G") meta.push_back(" seed=" + std::to_string(a.seed));
  write_graph(std::cout, g, meta);
  return kExitOk;
}

struct StatsArgs {
  InputSource in;
  int p = 7;
  int m = 2;
  Budgets budget;
};

int run_stats(const StatsArgs& a) {
  const Graph g = read_graph(a.in).graph;
  const auto alpha = alpha_m(g, a.m, a.budget.sigma_nodes);
  const auto sigma = sigma_p_m(g, a.p, a.m, a.budget.sigma_nodes);
  auto star = find_induced_star(g, 4);
  std::cout << "n=" << g.n() << '\n'
            << "edges=" << g.edge_count() << '\n'
            << "connected=" << (is_connected(g) ? 1 : 0) << '\n'
            << "k14free=" << (star ? 0 : 1) << '\n';
  if (star) std::cout << "star=" << star->center << ' ' << join(star->leaves) << '\n';
  std::cout << "m_dist=" << a.m << '\n'
            << "alpha=" << alpha.alpha << '\n'
            << "alpha_set=" << join(alpha.witness) << '\n'
            << "p=" << a.p << '\n'
            << "sigma=" << sigma.sigma << '\n'
            << "sigma_set=" << join(sigma.witness) << '\n'
            << "exact=" << (alpha.exact && sigma.exact ? 1 : 0) << '\n';
  if (!alpha.exact || !sigma.exact) {
    std::cerr << "search budget exhausted; values are bounds\n";
    return kExitBudget;
  }
  return kExitOk;
}

struct OptimizeArgs {
  InputSource in;
  std::string strategy = "bfs";
  int root = 0;
  bool restarts = false;
  std::string claims_out;
  Budgets budget;
};

int run_optimize(const OptimizeArgs& a) {
  const Graph g = read_graph(a.in).graph;
  if (!is_connected(g)) {
    std::cerr << a.in.label() << ": " << Error(ErrorKind::Disconnected, "host graph is not connected").what() << '\n';
    return kExitInvalid;
  }
  OptimizeResult r = [&] {
    if (a.restarts) {
      auto rr = optimize_with_restarts(g, a.budget.max_steps);
      std::cerr << "best of " << rr.runs << " runs: " << to_string(rr.strategy) << " root " << rr.root << '\n';
      return std::move(rr.best);
    }
    g.check_vertex(a.root);
    const auto s = a.strategy == "dfs" ? InitialStrategy::DFS : InitialStrategy::BFS;
    return optimize(g, initial_tree(g, s, a.root), a.budget.max_steps);
  }();
  const std::vector<std::string> meta{" objective=" + r.value.str(), " c0=" + std::to_string(r.value.c0),
                                      " steps=" + std::to_string(r.steps),
                                      std::string(" fixed_point=") + (r.fixed_point ? "1" : "0")};
  write_tree(std::cout, r.tree, meta);
  if (!a.claims_out.empty()) {
    auto out = open_output(a.claims_out);
    write_claims_csv(out, r.claims);
  }
  if (!r.fixed_point) {
    std::cerr << "step cap reached before a local optimum\n";
    return kExitBudget;
  }
  return kExitOk;
}

struct OracleArgs {
  InputSource in;
  std::string tree_out;
  bool count = false;
  Budgets budget;
};

int run_oracle(const OracleArgs& a) {
  const Graph g = read_graph(a.in).graph;
  if (!is_connected(g)) {
    std::cerr << a.in.label() << ": " << Error(ErrorKind::Disconnected, "host graph is not connected").what() << '\n';
    return kExitInvalid;
  }
  const EnumerationBudget eb{a.budget.max_trees, a.budget.max_seconds};
  const auto r = min_rstem_leaves(g, eb);
  bool exceeded = !r.exact;
  std::cout << "min_c0=" << r.min_c0 << '\n'
            << "exact=" << (r.exact ? 1 : 0) << '\n'
            << "trees_visited=" << r.trees_visited << '\n';
  if (a.count) {
    const auto c = count_spanning_trees(g, eb);
    exceeded = exceeded || c.budget_exceeded;
    std::cout << "trees=" << c.count << '\n' << "count_exact=" << (c.budget_exceeded ? 0 : 1) << '\n';
  }
  std::cout << "matrix_tree=" << matrix_tree_count(g) << '\n';
  if (!a.tree_out.empty() && r.witness) {
    auto out = open_output(a.tree_out);
    write_tree(out, *r.witness, std::vector<std::string>{" c0=" + std::to_string(r.min_c0)});
  }
  if (exceeded) {
    std::cerr << "enumeration budget exhausted; min_c0 is an upper bound\n";
    return kExitBudget;
  }
  return kExitOk;
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::CounterexampleCandidate: return kExitCandidate;
    case Verdict::UpperBoundOnly: return kExitBudget;
    default: return kExitOk;
  }
}

TheoremSpec theorem_spec(int theorem, int k) {
  if (theorem == 1) return TheoremSpec::first();
  return TheoremSpec::second(k);
}

struct VerifyArgs {
  InputSource in;
  int theorem = 1;
  int k = 3;
  Budgets budget;
};

int run_verify(const VerifyArgs& a) {
  const Graph g = read_graph(a.in).graph;
  const auto r = check_theorem(g, theorem_spec(a.theorem, a.k), a.budget.lab());
  write_report_csv_header(std::cout);
  write_report_csv_row(std::cout, r);
  return exit_for(r.verdict);
}

struct ScanArgs {
  std::string generator = "mixed";
  int trials = 100;
  std::uint64_t seed = 0;
  int theorem = 1;
  int k = 3;
  int jobs = 1;
  std::string dump_dir;
  Budgets budget;
};

int run_scan(const ScanArgs& a) {
  const GeneratorSpec spec = parse_generator_spec(a.generator);
  const auto summary = scan(spec, a.trials, a.seed, theorem_spec(a.theorem, a.k), a.budget.lab(), a.jobs);
  write_scan_csv_header(std::cout);
  for (const auto& row : summary.rows) write_scan_csv_row(std::cout, row.report);
  for (Verdict v : {Verdict::HypothesisFails, Verdict::Verified, Verdict::UpperBoundOnly,
                    Verdict::CounterexampleCandidate})
    std::cerr << to_string(v) << ' ' << summary.count(v) << '\n';
  if (!a.dump_dir.empty())
    for (const auto& p : dump_candidates(summary, a.dump_dir, a.seed)) std::cerr << "wrote " << p.string() << '\n';
  if (summary.count(Verdict::CounterexampleCandidate) > 0) return kExitCandidate;
  if (summary.count(Verdict::UpperBoundOnly) > 0) return kExitBudget;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanning trees with few reducible-stem leaves in K_{1,4}-free graphs"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph as an edge list");
  gen_cmd->add_option("family", gen.family, "H, G, random, line, line-tree or k14free")
      ->required()
      ->check(CLI::IsMember({"H", "G", "random", "line", "line-tree", "k14free"}));
  gen_cmd->add_option("--m", gen.m, "Clique order for H and G")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--l", gen.l, "Parameter l for G (k = 2l+1)")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--n", gen.n, "Vertex count for random families")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--p", gen.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", gen.seed, "Seed for the random families");

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Connectivity, K_{1,4}-freeness and distance-restricted degree sums");
  stats_cmd->add_option("input", stats.in.path, "Edge-list file, - for stdin");
  stats_cmd->add_option("--p", stats.p, "Size of the far-apart set")->check(CLI::Range(2, 1 << 20));
  stats_cmd->add_option("--m-dist", stats.m, "Minimum pairwise distance")->check(CLI::Range(2, 1 << 20));
  add_budget_options(stats_cmd, stats.budget, true, false, false);

  OptimizeArgs opt;
  auto* opt_cmd = app.add_subcommand("optimize", "Local search for a spanning tree with few reducible-stem leaves");
  opt_cmd->add_option("input", opt.in.path, "Edge-list file, - for stdin");
  opt_cmd->add_option("--strategy", opt.strategy, "Initial tree: bfs or dfs")->check(CLI::IsMember({"bfs", "dfs"}));
  opt_cmd->add_option("--root", opt.root, "Root of the initial tree")->check(CLI::NonNegativeNumber);
  opt_cmd->add_flag("--restarts", opt.restarts, "Try BFS and DFS from every root, keep the best");
  opt_cmd->add_option("--claims-out", opt.claims_out, "Write the claim report CSV here");
  add_budget_options(opt_cmd, opt.budget, false, false, true);

  OracleArgs orc;
  auto* orc_cmd = app.add_subcommand("oracle", "Exact minimum reducible-stem leaf count by enumeration");
  orc_cmd->add_option("input", orc.in.path, "Edge-list file, - for stdin");
  orc_cmd->add_option("--tree-out", orc.tree_out, "Write an optimal tree here");
  orc_cmd->add_flag("--count", orc.count, "Also count every spanning tree by enumeration");
  add_budget_options(orc_cmd, orc.budget, false, true, false);

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Check the leaf bound on one graph");
  ver_cmd->add_option("input", ver.in.path, "Edge-list file, - for stdin");
  ver_cmd->add_option("--theorem", ver.theorem, "1 (path stem) or 2 (at most k stem leaves)")
      ->check(CLI::IsMember({1, 2}));
  ver_cmd->add_option("--k", ver.k, "Leaf bound for --theorem 2")->check(CLI::Range(3, 1 << 20));
  ver_cmd->add_option("--oracle-max-n", ver.budget.oracle_max_n, "Largest n handed to the exact oracle")
      ->check(CLI::NonNegativeNumber);
  add_budget_options(ver_cmd, ver.budget, true, true, true);

  ScanArgs sc;
  auto* scan_cmd = app.add_subcommand("scan", "Check the leaf bound over many generated instances");
  scan_cmd->add_option("--generator", sc.generator, "family[:p=..,nmin=..,nmax=..]");
  scan_cmd->add_option("--trials", sc.trials, "Number of instances")->check(CLI::NonNegativeNumber);
  scan_cmd->add_option("--seed", sc.seed, "Base seed");
  scan_cmd->add_option("--theorem", sc.theorem, "1 or 2")->check(CLI::IsMember({1, 2}));
  scan_cmd->add_option("--k", sc.k, "Leaf bound for --theorem 2")->check(CLI::Range(3, 1 << 20));
  scan_cmd->add_option("--jobs", sc.jobs, "Worker threads")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--dump-dir", sc.dump_dir, "Write counterexample candidates here");
  scan_cmd->add_option("--oracle-max-n", sc.budget.oracle_max_n, "Largest n handed to the exact oracle")
      ->check(CLI::NonNegativeNumber);
  add_budget_options(scan_cmd, sc.budget, true, true, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*stats_cmd) return run_stats(stats);
    if (*opt_cmd) return run_optimize(opt);
    if (*orc_cmd) return run_oracle(orc);
    if (*ver_cmd) return run_verify(ver);
    if (*scan_cmd) return run_scan(sc);
  } catch (const ExitWith& e) {
    return e.code;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
