// Final solver for the restricted class: triangle- and 4-cycle-free graphs
// of maximum degree three whose budgets are normalized (no spent deletion
// budget at degree two or more, no degree-three vertex next to a spent
// addition budget, no two adjacent degree-three vertices).
//
// On this class the problem collapses to one matching question per
// component: the instance is solvable if and only if the component has a
// matching that covers every vertex of the forced set Y and avoids every
// vertex whose deletion budget is spent. Y collects the degree-three
// vertices (they must lose an edge), the degree-two vertices next to a
// degree-three vertex (otherwise a 4-path survives), and the remaining
// degree-two vertices next to a spent addition budget (their two neighbors
// could never be joined).
//
// A certificate follows from any witness matching: extend it greedily to a
// maximal matching of deletable edges, delete it, and close the surviving
// 3-paths with their end chords.

#pragma once

#include <cep11/core.hpp>
#include <cep11/matching.hpp>

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace cep11 {

// The two constraint sets of the matching question, in instance vertex ids.
struct SpecialSets {
  std::vector<VertexId> cover;  // Y: must be matched
  std::vector<VertexId> avoid;  // spent deletion budgets: must stay unmatched
};

namespace detail {

// `verts` must be sorted, alive, and closed under adjacency (a union of
// components). Throws UsageError when the vertices are not in the
// restricted class.
inline void require_special(const Instance& g, const std::vector<VertexId>& verts) {
  if (auto breach = find_violation_in(g, verts))
    throw UsageError(std::string("special solver: graph is not in the "
                                 "restricted class (") +
                     to_string(breach->kind) + ")");
}

}  // namespace detail

// Computes Y and the avoid set over `verts` (sorted, alive). Assumes the
// class conditions hold; callers wanting validation use the solvers below.
inline SpecialSets partition_sets(const Instance& g,
                                  const std::vector<VertexId>& verts) {
  SpecialSets sets;
  for (VertexId v : verts) {
    const int deg = g.degree(v);
    if (deg > 3) throw UsageError("special solver: degree above three");
    if (deg == 3) {
      sets.cover.push_back(v);
    } else if (deg == 2) {
      bool next_to_deg3 = false, next_to_spent_add = false;
      for (VertexId u : g.neighbors(v)) {
        if (g.degree(u) == 3) next_to_deg3 = true;
        if (g.a_budget(u) == 0) next_to_spent_add = true;
      }
      if (next_to_deg3 || next_to_spent_add) sets.cover.push_back(v);
    }
    if (g.d_budget(v) == 0) sets.avoid.push_back(v);
  }
  return sets;
}

namespace detail {

// Witness matching for one component, as instance edges: covers Y, avoids
// the spent deletion budgets. nullopt when none exists.
inline std::optional<std::vector<Edge>> special_witness(
    const Instance& g, const std::vector<VertexId>& comp) {
  SpecialSets sets = partition_sets(g, comp);
  if (sets.cover.empty()) return std::vector<Edge>{};

  auto local = [&](VertexId v) {
    return static_cast<int>(std::lower_bound(comp.begin(), comp.end(), v) -
                            comp.begin());
  };
  SimpleGraph sg;
  sg.n = static_cast<int>(comp.size());
  for (VertexId v : comp)
    for (VertexId u : g.neighbors(v))
      if (v < u) sg.edges.emplace_back(local(v), local(u));
  MatchingQuery query;
  for (VertexId v : sets.cover) query.must_cover.push_back(local(v));
  for (VertexId v : sets.avoid) query.must_avoid.push_back(local(v));

  auto matched = constrained_matching(sg, query);
  if (!matched) return std::nullopt;
  std::vector<Edge> witness;
  for (auto [a, b] : *matched)
    witness.push_back(make_edge(comp[static_cast<std::size_t>(a)],
                                comp[static_cast<std::size_t>(b)]));
  std::sort(witness.begin(), witness.end());
  return witness;
}

}  // namespace detail

// Decides one component (sorted vertex list) of a restricted-class instance.
inline bool decide_special_component(const Instance& g,
                                     const std::vector<VertexId>& comp) {
  detail::require_special(g, comp);
  return detail::special_witness(g, comp).has_value();
}

// Solves one component: nullopt when unsolvable, otherwise deletions and
// additions limited to the component.
inline std::optional<EditSolution> solve_special_component(
    const Instance& g, const std::vector<VertexId>& comp) {
  detail::require_special(g, comp);
  auto witness = detail::special_witness(g, comp);
  if (!witness) return std::nullopt;

  std::vector<char> covered(static_cast<std::size_t>(g.id_bound()), 0);
  EditSolution sol;
  sol.deletions = std::move(*witness);
  for (const Edge& e : sol.deletions) {
    covered[static_cast<std::size_t>(e.u)] = 1;
    covered[static_cast<std::size_t>(e.v)] = 1;
  }
  // Maximal extension in ascending edge order keeps every survivor path
  // short: any remaining edge between two uncovered degree-two vertices
  // would leave a 4-path behind.
  for (VertexId v : comp) {
    if (covered[static_cast<std::size_t>(v)] || g.d_budget(v) == 0) continue;
    for (VertexId u : g.neighbors(v)) {
      if (u < v || covered[static_cast<std::size_t>(u)] || g.d_budget(u) == 0)
        continue;
      sol.deletions.push_back(make_edge(v, u));
      covered[static_cast<std::size_t>(v)] = 1;
      covered[static_cast<std::size_t>(u)] = 1;
      break;
    }
  }
  std::sort(sol.deletions.begin(), sol.deletions.end());

  // Walk the survivors: every component must be a path on at most three
  // vertices; 3-paths are closed with their end chord.
  auto deleted = [&](VertexId a, VertexId b) {
    return std::binary_search(sol.deletions.begin(), sol.deletions.end(),
                              make_edge(a, b));
  };
  std::vector<char> seen(static_cast<std::size_t>(g.id_bound()), 0);
  for (VertexId root : comp) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    std::vector<VertexId> part;
    std::vector<VertexId> stack{root};
    seen[static_cast<std::size_t>(root)] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      part.push_back(v);
      for (VertexId u : g.neighbors(v)) {
        if (seen[static_cast<std::size_t>(u)] || deleted(v, u)) continue;
        seen[static_cast<std::size_t>(u)] = 1;
        stack.push_back(u);
      }
    }
    if (part.size() > 3)
      throw InternalError("special solver: oversized survivor component");
    if (part.size() == 3) {
      std::vector<VertexId> ends;
      for (VertexId v : part) {
        int deg = 0;
        for (VertexId u : g.neighbors(v))
          if (!deleted(v, u)) ++deg;
        if (deg == 1) ends.push_back(v);
        if (deg > 2) throw InternalError("special solver: survivor is not a path");
      }
      if (ends.size() != 2)
        throw InternalError("special solver: survivor is not a path");
      if (!is_addable_pair(g, ends[0], ends[1]))
        throw InternalError("special solver: 3-path end chord is not addable");
      sol.additions.push_back(make_edge(ends[0], ends[1]));
    }
  }
  std::sort(sol.additions.begin(), sol.additions.end());
  return sol;
}

// Whole-instance conveniences: every component must be solvable.
inline bool decide_special(const Instance& g) {
  for (const auto& comp : components(g))
    if (!decide_special_component(g, comp)) return false;
  return true;
}

inline std::optional<EditSolution> solve_special(const Instance& g) {
  EditSolution all;
  for (const auto& comp : components(g)) {
    auto part = solve_special_component(g, comp);
    if (!part) return std::nullopt;
    all.deletions.insert(all.deletions.end(), part->deletions.begin(),
                         part->deletions.end());
    all.additions.insert(all.additions.end(), part->additions.begin(),
                         part->additions.end());
  }
  std::sort(all.deletions.begin(), all.deletions.end());
  std::sort(all.additions.begin(), all.additions.end());
  return all;
}

}  // namespace cep11
