#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "rstem/generators.hpp"
#include "rstem/optimizer.hpp"
#include "rstem/oracle.hpp"
#include "rstem/stats.hpp"

namespace rstem {

enum class Verdict { HypothesisFails, Verified, UpperBoundOnly, CounterexampleCandidate };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::HypothesisFails: return "HYPOTHESIS_FAILS";
    case Verdict::Verified: return "VERIFIED";
    case Verdict::UpperBoundOnly: return "UPPER_BOUND_ONLY";
    case Verdict::CounterexampleCandidate: return "COUNTEREXAMPLE_CANDIDATE";
  }
  return "?";
}

enum class ConclusionMethod { None, Optimizer, Oracle };

inline const char* to_string(ConclusionMethod m) {
  switch (m) {
    case ConclusionMethod::None: return "none";
    case ConclusionMethod::Optimizer: return "optimizer";
    case ConclusionMethod::Oracle: return "oracle";
  }
  return "?";
}

struct LabBudget {
  std::uint64_t sigma_nodes = kDefaultNodeBudget;
  EnumerationBudget trees{};
  int max_steps = kDefaultMaxSteps;
  int oracle_max_n = 12;
};

// The two statements checked here, for a connected K_{1,4}-free graph G:
//   theorem 1: sigma_7(G) >= |G|        implies a spanning tree with c0 <= 2;
//   theorem 2: sigma_{2k+3}(G) >= |G|-k+1 (k >= 3) implies one with c0 <= k.
struct TheoremSpec {
  int theorem = 1;
  int k = 2;

  static TheoremSpec first() { return {1, 2}; }
  static TheoremSpec second(int k) {
    if (k < 3) throw Error(ErrorKind::InvalidArgument, "the k-leaf statement needs k >= 3");
    return {2, k};
  }

  int sigma_p() const { return 2 * k + 3; }
  long long threshold(int n) const { return theorem == 1 ? n : n - k + 1; }
  int leaf_bound() const { return k; }
};

struct TheoremReport {
  TheoremSpec spec;
  int n = 0;
  int m = 0;
  bool connected = false;
  bool k14_free = false;
  DegreeSum sigma = DegreeSum::infinity();
  bool sigma_exact = true;
  long long threshold = 0;
  ConclusionMethod method = ConclusionMethod::None;
  int c0 = -1;            // achieved (method optimizer) or exact minimum (method oracle); -1 if not computed
  bool c0_exact = false;  // c0 is the true minimum over all spanning trees
  std::optional<SpanningTree> witness;
  int steps = 0;
  Verdict verdict = Verdict::HypothesisFails;

  // nullopt when the sigma search ran out of budget without settling it.
  std::optional<bool> hypothesis() const {
    if (!connected || !k14_free) return false;
    if (sigma.at_least(threshold)) return sigma_exact ? std::optional<bool>(true) : std::nullopt;
    return false;  // an upper bound below the threshold settles it
  }
};

inline TheoremReport check_theorem(const Graph& g, TheoremSpec spec, const LabBudget& budget = {}) {
  TheoremReport r;
  r.spec = spec;
  r.n = g.n();
  r.m = g.edge_count();
  r.threshold = spec.threshold(g.n());
  r.connected = is_connected(g);
  r.k14_free = is_k1t_free(g, 4);
  const SigmaResult s = sigma_p_m(g, spec.sigma_p(), 2, budget.sigma_nodes);
  r.sigma = s.sigma;
  r.sigma_exact = s.exact;
  if (!r.connected) {
    r.verdict = Verdict::HypothesisFails;
    return r;
  }

  const auto hyp = r.hypothesis();
  const bool hyp_holds = hyp.value_or(false);
  RestartResult opt = optimize_with_restarts(g, budget.max_steps, spec.leaf_bound());
  r.method = ConclusionMethod::Optimizer;
  r.c0 = opt.best.value.c0;
  r.steps = opt.best.steps;
  r.witness.emplace(opt.best.tree);
  r.c0_exact = r.c0 == 0;

  if (hyp.has_value() && !*hyp) {
    r.verdict = Verdict::HypothesisFails;
    return r;
  }
  if (r.c0 <= spec.leaf_bound()) {
    r.verdict = hyp_holds ? Verdict::Verified : Verdict::UpperBoundOnly;
    return r;
  }
  if (hyp_holds && g.n() <= budget.oracle_max_n) {
    MinLeavesResult o = min_rstem_leaves(g, budget.trees);
    if (o.min_c0 <= r.c0) {
      r.method = ConclusionMethod::Oracle;
      r.c0 = o.min_c0;
      r.witness = o.witness;
      r.c0_exact = o.exact;
    }
    if (r.c0 <= spec.leaf_bound())
      r.verdict = Verdict::Verified;
    else
      r.verdict = o.exact ? Verdict::CounterexampleCandidate : Verdict::UpperBoundOnly;
    return r;
  }
  r.verdict = Verdict::UpperBoundOnly;
  return r;
}

inline TheoremReport check_thm1(const Graph& g, const LabBudget& budget = {}) {
  return check_theorem(g, TheoremSpec::first(), budget);
}

inline TheoremReport check_thm2(const Graph& g, int k, const LabBudget& budget = {}) {
  return check_theorem(g, TheoremSpec::second(k), budget);
}

inline void write_report_csv_header(std::ostream& os) {
  os << "theorem,k,n,m,connected,k14free,sigma,sigma_exact,threshold,method,c0,c0_exact,steps,verdict\n";
}

inline void write_report_csv_row(std::ostream& os, const TheoremReport& r) {
  os << r.spec.theorem << ',' << r.spec.k << ',' << r.n << ',' << r.m << ',' << (r.connected ? 1 : 0) << ','
     << (r.k14_free ? 1 : 0) << ',' << r.sigma << ',' << (r.sigma_exact ? 1 : 0) << ',' << r.threshold << ','
     << to_string(r.method) << ',' << r.c0 << ',' << (r.c0_exact ? 1 : 0) << ',' << r.steps << ','
     << to_string(r.verdict) << '\n';
}

// ---------------------------------------------------------------------------
// Instance families for randomized scans.

enum class Family { LineTree, LineRandom, Random, K14Free, Mixed };

struct GeneratorSpec {
  Family family = Family::Mixed;
  int n_min = 4;
  int n_max = 10;
  double p = 0.4;
};

inline GeneratorSpec parse_generator_spec(const std::string& text) {
  GeneratorSpec spec;
  std::string name = text, rest;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    name = text.substr(0, colon);
    rest = text.substr(colon + 1);
  }
  static const std::map<std::string, Family> names = {{"line-tree", Family::LineTree},
                                                      {"line-random", Family::LineRandom},
                                                      {"random", Family::Random},
                                                      {"k14free", Family::K14Free},
                                                      {"mixed", Family::Mixed}};
  auto it = names.find(name);
  if (it == names.end()) throw Error(ErrorKind::InvalidArgument, "unknown generator family \"" + name + "\"");
  spec.family = it->second;
  std::size_t pos = 0;
  while (pos < rest.size()) {
    auto comma = rest.find(',', pos);
    std::string kv = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? rest.size() : comma + 1;
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::InvalidArgument, "expected key=value in \"" + kv + "\"");
    std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
    try {
      if (key == "p")
        spec.p = std::stod(val);
      else if (key == "nmin")
        spec.n_min = std::stoi(val);
      else if (key == "nmax")
        spec.n_max = std::stoi(val);
      else
        throw Error(ErrorKind::InvalidArgument, "unknown generator key \"" + key + "\"");
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidArgument, "bad value \"" + val + "\" for " + key);
    }
  }
  if (spec.n_min < 1 || spec.n_max < spec.n_min) throw Error(ErrorKind::InvalidArgument, "need 1 <= nmin <= nmax");
  if (!(spec.p > 0 && spec.p <= 1)) throw Error(ErrorKind::InvalidArgument, "edge probability outside (0, 1]");
  return spec;
}

// The index-th instance of a family for a base seed; independent of how
// instances are distributed over workers.
inline Graph generate_instance(const GeneratorSpec& spec, std::uint64_t seed, std::uint64_t index) {
  Rng rng(Rng::derive(seed, index));
  Family family = spec.family;
  if (family == Family::Mixed) {
    static constexpr Family cycle[] = {Family::LineTree, Family::K14Free, Family::LineRandom};
    family = cycle[index % 3];
  }
  const int lo = std::max(spec.n_min, 1), hi = spec.n_max;
  switch (family) {
    case Family::LineTree: {
      // A tree on t vertices has t-1 edges, so its line graph has t-1 vertices.
      const int t = static_cast<int>(rng.uniform_int(std::max(lo, 2) + 1, std::max(hi, 2) + 1));
      return line_graph(random_tree(t, rng));
    }
    case Family::LineRandom: {
      for (int attempt = 0; attempt < kDefaultRejectionLimit; ++attempt) {
        const int v = static_cast<int>(rng.uniform_int(3, std::max(hi, 3)));
        const double p = 0.2 + 0.6 * rng.uniform();
        Graph base = random_connected(v, p, rng.next());
        if (base.edge_count() >= lo && base.edge_count() <= hi) return line_graph(base);
      }
      throw Error(ErrorKind::RejectionLimit, "no base graph with a fitting edge count");
    }
    case Family::Random: {
      const int n = static_cast<int>(rng.uniform_int(lo, hi));
      return random_connected(n, spec.p, rng.next());
    }
    case Family::K14Free: {
      const int n = static_cast<int>(rng.uniform_int(lo, hi));
      return random_k14_free(n, spec.p, rng.next());
    }
    case Family::Mixed: break;
  }
  throw Error(ErrorKind::InvalidArgument, "unreachable generator family");
}

struct ScanRow {
  std::uint64_t index = 0;
  TheoremReport report;
  Graph graph;
};

struct ScanSummary {
  std::vector<ScanRow> rows;  // ascending index
  std::map<Verdict, int> counts;

  int count(Verdict v) const {
    auto it = counts.find(v);
    return it == counts.end() ? 0 : it->second;
  }
};

inline ScanSummary scan(const GeneratorSpec& spec, int trials, std::uint64_t seed, TheoremSpec theorem,
                        const LabBudget& budget = {}, int jobs = 1) {
  ScanSummary summary;
  summary.rows.resize(static_cast<std::size_t>(std::max(trials, 0)));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < trials; i = next++) {
      Graph g = generate_instance(spec, seed, static_cast<std::uint64_t>(i));
      TheoremReport rep = check_theorem(g, theorem, budget);
      // The stored witness points at the local graph; it is not needed past this point.
      rep.witness.reset();
      summary.rows[static_cast<std::size_t>(i)] = ScanRow{static_cast<std::uint64_t>(i), std::move(rep), std::move(g)};
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& row : summary.rows) ++summary.counts[row.report.verdict];
  return summary;
}

inline void write_scan_csv_header(std::ostream& os) { os << "n,m,k14free,sigma,threshold,verdict,c0,steps\n"; }

inline void write_scan_csv_row(std::ostream& os, const TheoremReport& r) {
  os << r.n << ',' << r.m << ',' << (r.k14_free ? 1 : 0) << ',' << r.sigma << ',' << r.threshold << ','
     << to_string(r.verdict) << ',' << r.c0 << ',' << r.steps << '\n';
}

// Writes every counterexample candidate as an edge-list file; returns the paths.
inline std::vector<std::filesystem::path> dump_candidates(const ScanSummary& summary, const std::filesystem::path& dir,
                                                          std::uint64_t seed) {
  std::vector<std::filesystem::path> out;
  for (const auto& row : summary.rows) {
    if (row.report.verdict != Verdict::CounterexampleCandidate) continue;
    std::filesystem::create_directories(dir);
    auto path = dir / ("candidate_" + std::to_string(seed) + "_" + std::to_string(row.index) + ".txt");
    std::ofstream f(path);
    const std::string comments[] = {
        " counterexample candidate: seed " + std::to_string(seed) + " instance " + std::to_string(row.index),
        " theorem " + std::to_string(row.report.spec.theorem) + " k " + std::to_string(row.report.spec.k) +
            " min c0 " + std::to_string(row.report.c0)};
    write_graph(f, row.graph, comments);
    out.push_back(path);
  }
  return out;
}

}  // namespace rstem
