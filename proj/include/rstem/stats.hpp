#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "rstem/graph.hpp"

namespace rstem {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

// Degree sum that may be +infinity (no qualifying vertex set exists).
class DegreeSum {
 public:
  static DegreeSum infinity() { return DegreeSum(); }
  static DegreeSum finite(long long v) { return DegreeSum(v); }

  bool is_infinite() const { return infinite_; }
  long long value() const { return value_; }

  // Integer comparison with +infinity above every integer.
  bool at_least(long long threshold) const { return infinite_ || value_ >= threshold; }

  std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

  bool operator==(const DegreeSum&) const = default;

 private:
  DegreeSum() = default;
  explicit DegreeSum(long long v) : infinite_(false), value_(v) {}

  bool infinite_ = true;
  long long value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const DegreeSum& s) { return os << s.str(); }

struct AlphaResult {
  int alpha = 0;
  std::vector<Vertex> witness;
  bool exact = true;  // false: node budget ran out, alpha is a lower bound
  std::uint64_t nodes = 0;
};

struct SigmaResult {
  DegreeSum sigma = DegreeSum::infinity();
  std::vector<Vertex> witness;  // empty when sigma is infinite
  bool exact = true;            // false: node budget ran out, sigma is an upper bound
  std::uint64_t nodes = 0;
};

struct StatsResult {
  int alpha_m = 0;
  std::vector<Vertex> witness_set;
  DegreeSum sigma_p_m = DegreeSum::infinity();
  std::vector<Vertex> witness_p_set;
  bool exact = true;
};

namespace detail {

// conflict[u][v] != 0 iff u != v and d_G(u,v) < m. Unreachable pairs never conflict.
inline std::vector<std::vector<char>> distance_conflicts(const Graph& g, int m) {
  const auto dist = all_pairs_distances(g);
  std::vector<std::vector<char>> conflict(static_cast<std::size_t>(g.n()),
                                          std::vector<char>(static_cast<std::size_t>(g.n()), 0));
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = 0; v < g.n(); ++v)
      if (u != v && dist[u][v] < m) conflict[u][v] = 1;
  return conflict;
}

inline void check_distance_parameter(int m) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "distance parameter m must be >= 2");
}

}  // namespace detail

// Maximum set with pairwise distance >= m, by branch and bound on the
// distance conflict graph.
inline AlphaResult alpha_m(const Graph& g, int m, std::uint64_t node_budget = kDefaultNodeBudget) {
  detail::check_distance_parameter(m);
  const auto conflict = detail::distance_conflicts(g, m);
  AlphaResult result;
  std::vector<Vertex> current;

  auto search = [&](auto&& self, const std::vector<Vertex>& cand) -> void {
    if (!result.exact) return;
    if (++result.nodes > node_budget) {
      result.exact = false;
      return;
    }
    if (cand.empty()) {
      if (static_cast<int>(current.size()) > result.alpha) {
        result.alpha = static_cast<int>(current.size());
        result.witness = current;
      }
      return;
    }
    if (static_cast<int>(current.size() + cand.size()) <= result.alpha) return;
    const Vertex v = cand.front();
    std::vector<Vertex> with;
    with.reserve(cand.size());
    for (std::size_t i = 1; i < cand.size(); ++i)
      if (!conflict[v][cand[i]]) with.push_back(cand[i]);
    current.push_back(v);
    self(self, with);
    current.pop_back();
    std::vector<Vertex> without(cand.begin() + 1, cand.end());
    self(self, without);
  };

  std::vector<Vertex> all(static_cast<std::size_t>(g.n()));
  std::iota(all.begin(), all.end(), 0);
  search(search, all);
  std::sort(result.witness.begin(), result.witness.end());
  return result;
}

// Minimum degree sum over p-sets with pairwise distance >= m. Vertices are
// tried in ascending degree; a partial set is cut when its sum plus the p-|S|
// smallest remaining degrees cannot beat the incumbent.
inline SigmaResult sigma_p_m(const Graph& g, int p, int m, std::uint64_t node_budget = kDefaultNodeBudget) {
  detail::check_distance_parameter(m);
  if (p < 2) throw Error(ErrorKind::InvalidArgument, "set size p must be >= 2");
  const auto conflict = detail::distance_conflicts(g, m);
  std::vector<Vertex> order(static_cast<std::size_t>(g.n()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });

  SigmaResult result;
  long long best = -1;
  std::vector<Vertex> current;

  auto search = [&](auto&& self, const std::vector<Vertex>& cand, long long sum) -> void {
    if (!result.exact) return;
    if (++result.nodes > node_budget) {
      result.exact = false;
      return;
    }
    const std::size_t need = static_cast<std::size_t>(p) - current.size();
    if (need == 0) {
      if (best < 0 || sum < best) {
        best = sum;
        result.witness = current;
      }
      return;
    }
    if (cand.size() < need) return;
    if (best >= 0) {
      long long bound = sum;
      for (std::size_t i = 0; i < need; ++i) bound += g.degree(cand[i]);
      if (bound >= best) return;
    }
    for (std::size_t i = 0; i + need <= cand.size(); ++i) {
      const Vertex v = cand[i];
      std::vector<Vertex> next;
      next.reserve(cand.size() - i);
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (!conflict[v][cand[j]]) next.push_back(cand[j]);
      current.push_back(v);
      self(self, next, sum + g.degree(v));
      current.pop_back();
      if (!result.exact) return;
      // Later branches start at higher degrees; the same bound applies.
      if (best >= 0) {
        long long bound = sum;
        if (i + 1 + need > cand.size()) break;
        for (std::size_t k = 0; k < need; ++k) bound += g.degree(cand[i + 1 + k]);
        if (bound >= best) break;
      }
    }
  };

  search(search, order, 0);
  if (best >= 0) {
    result.sigma = DegreeSum::finite(best);
    std::sort(result.witness.begin(), result.witness.end());
  }
  return result;
}

inline StatsResult graph_stats(const Graph& g, int p, int m, std::uint64_t node_budget = kDefaultNodeBudget) {
  const AlphaResult a = alpha_m(g, m, node_budget);
  const SigmaResult s = sigma_p_m(g, p, m, node_budget);
  StatsResult out;
  out.alpha_m = a.alpha;
  out.witness_set = a.witness;
  out.sigma_p_m = s.sigma;
  out.witness_p_set = s.witness;
  out.exact = a.exact && s.exact;
  return out;
}

}  // namespace rstem
