#pragma once

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rstem/stem.hpp"

namespace rstem {

enum class ClaimStatus { Holds, Violated, NotApplicable };

inline const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Holds: return "holds";
    case ClaimStatus::Violated: return "violated";
    case ClaimStatus::NotApplicable: return "n/a";
  }
  return "?";
}

// Structural properties of a locally optimal tree with at least three
// reducible-stem leaves, x_1..x_l, witness leaves y_i,z_i, and w.
namespace claim {
inline constexpr std::string_view kRstemLeavesIndependent = "rstem_leaves_independent";
inline constexpr std::string_view kWitnessLeavesExist = "witness_leaves_exist";
inline constexpr std::string_view kWitnessLeavesIndependent = "witness_leaves_independent";
inline constexpr std::string_view kNoCrossPathNeighbors = "witness_no_cross_path_neighbors";
inline constexpr std::string_view kOtherPathNeighborBound = "other_leaf_path_neighbor_bound";
inline constexpr std::string_view kWitnessPathNeighborBound = "witness_leaf_path_neighbor_bound";
inline constexpr std::string_view kRstemLeafNoFarNeighbor = "rstem_leaf_no_far_branch_neighbor";
inline constexpr std::string_view kNoSeparatingBranchNeighbor = "no_branch_neighbor_separating_three_leaves";
inline constexpr std::string_view kMaxBranchNoReattach = "max_branch_no_reattach_edge";
inline constexpr std::string_view kBranchLeafNeighborsAtMostThree = "branch_rstem_leaf_neighbors_at_most_three";

inline constexpr std::string_view kAll[] = {
    kRstemLeavesIndependent,   kWitnessLeavesExist,      kWitnessLeavesIndependent,
    kNoCrossPathNeighbors,     kOtherPathNeighborBound,  kWitnessPathNeighborBound,
    kRstemLeafNoFarNeighbor,   kNoSeparatingBranchNeighbor, kMaxBranchNoReattach,
    kBranchLeafNeighborsAtMostThree,
};

// The properties whose justification is a single edge exchange; these hold at
// every fixed point of the full 1-exchange neighborhood.
inline constexpr std::string_view kExchangeBacked[] = {
    kRstemLeavesIndependent, kWitnessLeavesIndependent, kNoCrossPathNeighbors,
    kOtherPathNeighborBound, kRstemLeafNoFarNeighbor,   kMaxBranchNoReattach,
};
}  // namespace claim

struct ClaimResult {
  std::string id;
  ClaimStatus status = ClaimStatus::NotApplicable;
  std::vector<Vertex> witness;  // vertices exhibiting a violation
  std::string detail;
};

struct ClaimReport {
  std::vector<ClaimResult> claims;

  const ClaimResult& get(std::string_view id) const {
    for (const auto& c : claims)
      if (c.id == id) return c;
    throw Error(ErrorKind::InvalidArgument, "unknown claim " + std::string(id));
  }

  ClaimStatus status(std::string_view id) const { return get(id).status; }

  bool any_violated(std::span<const std::string_view> ids) const {
    return std::any_of(ids.begin(), ids.end(), [&](std::string_view id) { return status(id) == ClaimStatus::Violated; });
  }
};

inline void write_claims_csv(std::ostream& os, const ClaimReport& report) {
  os << "claim,status,witness,detail\n";
  for (const auto& c : report.claims) {
    os << c.id << ',' << to_string(c.status) << ',';
    for (std::size_t i = 0; i < c.witness.size(); ++i) os << (i ? " " : "") << c.witness[i];
    os << ',' << c.detail << '\n';
  }
}

namespace detail {

inline int count_neighbors_on(const Graph& g, Vertex u, const std::vector<Vertex>& path) {
  int c = 0;
  for (Vertex x : path)
    if (g.has_edge(u, x)) ++c;
  return c;
}

// Vertex set of the component of R_Stem - {center} containing `start`.
inline std::vector<char> rstem_side(const SpanningTree& t, const StemDecomposition& d, Vertex center, Vertex start) {
  std::vector<char> seen(static_cast<std::size_t>(t.n()), 0);
  seen[center] = 1;
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : t.neighbors(x))
      if (!seen[y] && d.in_reducible_stem(y)) {
        seen[y] = 1;
        stack.push_back(y);
      }
  }
  seen[center] = 0;
  return seen;
}

}  // namespace detail

inline ClaimReport verify_claims(const Graph& g, const SpanningTree& t) {
  const StemDecomposition d = decompose(t);
  const WitnessSelection sel = compute_witnesses(g, d);
  const auto& xs = d.rstem_leaves;
  const bool have_leaves = xs.size() >= 2;
  const bool have_w = sel.w.has_value();

  ClaimReport report;
  auto add = [&](std::string_view id, bool applicable) -> ClaimResult& {
    ClaimResult r;
    r.id = std::string(id);
    r.status = applicable ? ClaimStatus::Holds : ClaimStatus::NotApplicable;
    report.claims.push_back(std::move(r));
    return report.claims.back();
  };
  auto violate = [](ClaimResult& r, std::vector<Vertex> witness, std::string detail) {
    if (r.status == ClaimStatus::Violated) return;
    r.status = ClaimStatus::Violated;
    r.witness = std::move(witness);
    r.detail = std::move(detail);
  };

  // L(R_Stem) is independent in G.
  {
    auto& r = add(claim::kRstemLeavesIndependent, have_leaves);
    for (std::size_t i = 0; i < xs.size() && have_leaves; ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j)
        if (g.has_edge(xs[i], xs[j])) violate(r, {xs[i], xs[j]}, "adjacent reducible-stem leaves");
  }

  // Every x_i carries two leaf-branch paths whose leaves see nothing else of R_Stem.
  {
    auto& r = add(claim::kWitnessLeavesExist, have_leaves);
    for (const auto& pl : sel.per_leaf)
      if (have_leaves && pl.deficient())
        violate(r, {pl.x}, std::to_string(pl.qualifying.size()) + " qualifying leaves");
  }

  // U_1 is independent in G.
  {
    auto& r = add(claim::kWitnessLeavesIndependent, have_leaves);
    for (std::size_t i = 0; i < sel.u1.size(); ++i)
      for (std::size_t j = i + 1; j < sel.u1.size(); ++j)
        if (g.has_edge(sel.u1[i], sel.u1[j])) violate(r, {sel.u1[i], sel.u1[j]}, "adjacent witness leaves");
  }

  // No witness leaf of x_i has a G-neighbor on a witness path of x_j, i != j.
  {
    auto& r = add(claim::kNoCrossPathNeighbors, have_leaves);
    for (const auto& pi : sel.per_leaf) {
      if (pi.deficient()) continue;
      for (const auto& pj : sel.per_leaf) {
        if (pj.deficient() || pj.x == pi.x) continue;
        for (Vertex u : {*pi.y, *pi.z})
          for (Vertex target : {*pj.y, *pj.z})
            for (Vertex v : d.leaf_path(target)->vertices)
              if (g.has_edge(u, v)) violate(r, {u, v}, "witness leaf adjacent to path of leaf " + std::to_string(target));
      }
    }
  }

  // For p in L(T) - U_1: sum_{u in U} |N(u) ∩ V(B_p)| <= |B_p|.
  {
    auto& r = add(claim::kOtherPathNeighborBound, have_w && xs.size() >= 3);
    if (r.status == ClaimStatus::Holds) {
      for (const auto& p : d.leaf_paths) {
        if (std::binary_search(sel.u1.begin(), sel.u1.end(), p.leaf)) continue;
        int total = 0;
        for (Vertex u : sel.u) total += detail::count_neighbors_on(g, u, p.vertices);
        if (total > p.length())
          violate(r, {p.leaf}, "sum " + std::to_string(total) + " > |B_p| " + std::to_string(p.length()));
      }
    }
  }

  // For each witness leaf y: sum_{u in U} |N(u) ∩ V(B_y)| <= |B_y| - 1.
  {
    auto& r = add(claim::kWitnessPathNeighborBound, have_w && xs.size() >= 3);
    if (r.status == ClaimStatus::Holds) {
      for (Vertex y : sel.u1) {
        const LeafPath* p = d.leaf_path(y);
        int total = 0;
        for (Vertex u : sel.u) total += detail::count_neighbors_on(g, u, p->vertices);
        if (total > p->length() - 1)
          violate(r, {y}, "sum " + std::to_string(total) + " > |B_y|-1 " + std::to_string(p->length() - 1));
      }
    }
  }

  // x_i x not in E(G) for x in N_R(u) off the path P_R[x_i, u], u in B(R_Stem).
  {
    auto& r = add(claim::kRstemLeafNoFarNeighbor, have_w && have_leaves);
    if (r.status == ClaimStatus::Holds) {
      for (Vertex u : d.rstem_branch_vertices)
        for (Vertex x : xs) {
          if (x == u) continue;
          const TreePath path(t, x, u);
          for (Vertex nb : t.neighbors(u)) {
            if (!d.in_reducible_stem(nb) || path.contains(nb)) continue;
            if (g.has_edge(x, nb)) violate(r, {u, x, nb}, "reducible-stem leaf adjacent to far neighbor of branch");
          }
        }
    }
  }

  // For w in B(R_Stem) with |N_G(w) ∩ L(R_Stem)| = 3 = {a,b,c}: no R-neighbor x of
  // w has w on all three paths P_R[x,a], P_R[x,b], P_R[x,c].
  {
    auto& r = add(claim::kNoSeparatingBranchNeighbor, have_w && have_leaves);
    if (r.status == ClaimStatus::Holds) {
      for (Vertex w : d.rstem_branch_vertices) {
        std::vector<Vertex> abc;
        for (Vertex x : xs)
          if (g.has_edge(w, x)) abc.push_back(x);
        if (abc.size() != 3) continue;
        for (Vertex x : t.neighbors(w)) {
          if (!d.in_reducible_stem(x)) continue;
          const auto side = detail::rstem_side(t, d, w, x);
          bool separated = std::none_of(abc.begin(), abc.end(), [&](Vertex a) { return side[a] != 0; });
          if (separated) violate(r, {w, x}, "branch neighbor separated from its three leaf neighbors");
        }
      }
    }
  }

  // With w* the max-degree vertex of B(R_Stem): w* a not in E(G) for a in N_R(u)
  // off P_R[u, w*], u in B(R_Stem) - {w*}.
  {
    auto& r = add(claim::kMaxBranchNoReattach, d.rstem_branch_vertices.size() >= 2);
    if (r.status == ClaimStatus::Holds) {
      Vertex wmax = d.rstem_branch_vertices.front();
      for (Vertex b : d.rstem_branch_vertices)
        if (d.rstem_degree[b] > d.rstem_degree[wmax]) wmax = b;
      for (Vertex u : d.rstem_branch_vertices) {
        if (u == wmax) continue;
        const TreePath path(t, u, wmax);
        for (Vertex a : t.neighbors(u)) {
          if (!d.in_reducible_stem(a) || path.contains(a)) continue;
          if (g.has_edge(wmax, a)) violate(r, {u, a, wmax}, "max-degree branch adjacent to a far neighbor of branch");
        }
      }
    }
  }

  // |N_G(w) ∩ L(R_Stem)| <= 3 for every w in B(R_Stem).
  {
    auto& r = add(claim::kBranchLeafNeighborsAtMostThree, have_w && have_leaves);
    if (r.status == ClaimStatus::Holds) {
      for (Vertex w : d.rstem_branch_vertices) {
        int c = 0;
        for (Vertex x : xs)
          if (g.has_edge(w, x)) ++c;
        if (c > 3) violate(r, {w}, std::to_string(c) + " reducible-stem leaf neighbors");
      }
    }
  }
  return report;
}

}  // namespace rstem
