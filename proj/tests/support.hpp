// support.hpp
//
// Test-only helpers: tiny instance builders, an independent brute-force
// decision procedure (enumerating candidate deletion/addition matchings
// directly, with no shared code or ideas with the partition-search oracle),
// brute-force matching references, and a from-scratch solution checker.

#pragma once

#include <initializer_list>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cep11/core.hpp"
#include "cep11/io.hpp"
#include "cep11/matching.hpp"

namespace cep11::test {

inline Instance make(int n, std::initializer_list<std::pair<int, int>> edges) {
  Instance g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline bool same_instance(const Instance& a, const Instance& b) {
  if (a.vertices() != b.vertices()) return false;
  if (a.edges() != b.edges()) return false;
  for (VertexId v : a.vertices())
    if (a.a_budget(v) != b.a_budget(v) || a.d_budget(v) != b.d_budget(v))
      return false;
  return true;
}

inline std::string dump(const Instance& g) {
  std::ostringstream out;
  serialize_instance(g, out);
  return out.str();
}

// ---------------------------------------------------------------------------
// Independent reference decision. A solution is a matching D of edges with
// both deletion budgets 1 plus a matching A of non-edges with both addition
// budgets 1 such that G - D + A is a cluster graph. Enumerate D and A
// directly.
// ---------------------------------------------------------------------------

namespace detail {

inline bool cluster_after(const Instance& g, const std::vector<Edge>& dels,
                          const std::vector<Edge>& adds) {
  Instance h = g;
  for (const Edge& e : dels) h.remove_edge(e.u, e.v);
  for (const Edge& e : adds) h.add_edge(e.u, e.v);
  return is_cluster_graph(h);
}

inline bool brute_adds(const Instance& g, const std::vector<Edge>& cand,
                       std::size_t i, std::vector<char>& used,
                       std::vector<Edge>& dels, std::vector<Edge>& adds) {
  if (i == cand.size()) return cluster_after(g, dels, adds);
  if (brute_adds(g, cand, i + 1, used, dels, adds)) return true;  // skip
  const Edge& e = cand[i];
  if (used[e.u] || used[e.v]) return false;
  used[e.u] = used[e.v] = 1;
  adds.push_back(e);
  bool ok = brute_adds(g, cand, i + 1, used, dels, adds);
  adds.pop_back();
  used[e.u] = used[e.v] = 0;
  return ok;
}

inline bool brute_dels(const Instance& g, const std::vector<Edge>& del_cand,
                       const std::vector<Edge>& add_cand, std::size_t i,
                       std::vector<char>& used_d, std::vector<Edge>& dels) {
  if (i == del_cand.size()) {
    std::vector<char> used_a(g.id_bound(), 0);
    std::vector<Edge> adds;
    return brute_adds(g, add_cand, 0, used_a, dels, adds);
  }
  if (brute_dels(g, del_cand, add_cand, i + 1, used_d, dels)) return true;
  const Edge& e = del_cand[i];
  if (used_d[e.u] || used_d[e.v]) return false;
  used_d[e.u] = used_d[e.v] = 1;
  dels.push_back(e);
  bool ok = brute_dels(g, del_cand, add_cand, i + 1, used_d, dels);
  dels.pop_back();
  used_d[e.u] = used_d[e.v] = 0;
  return ok;
}

}  // namespace detail

inline bool brute_decide(const Instance& g) {
  std::vector<Edge> del_cand;
  for (const Edge& e : g.edges())
    if (g.d_budget(e.u) == 1 && g.d_budget(e.v) == 1) del_cand.push_back(e);
  std::vector<Edge> add_cand;
  auto verts = g.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (!g.has_edge(verts[i], verts[j]) && g.a_budget(verts[i]) == 1 &&
          g.a_budget(verts[j]) == 1)
        add_cand.push_back(Edge{verts[i], verts[j]});
  std::vector<char> used_d(g.id_bound(), 0);
  std::vector<Edge> dels;
  return detail::brute_dels(g, del_cand, add_cand, 0, used_d, dels);
}

// From-scratch certificate check; returns "" when valid, else the first
// failure.
inline std::string check_solution(const Instance& g, const EditSolution& sol) {
  std::set<VertexId> dtouch, atouch;
  for (const Edge& e : sol.deletions) {
    if (!g.has_edge(e.u, e.v)) return "deletion is not an edge";
    if (g.d_budget(e.u) != 1 || g.d_budget(e.v) != 1)
      return "deletion endpoint lacks budget";
    if (dtouch.count(e.u) || dtouch.count(e.v))
      return "deletions are not a matching";
    dtouch.insert(e.u);
    dtouch.insert(e.v);
  }
  for (const Edge& e : sol.additions) {
    if (!g.alive(e.u) || !g.alive(e.v) || e.u == e.v || g.has_edge(e.u, e.v))
      return "addition is not a live non-edge";
    if (g.a_budget(e.u) != 1 || g.a_budget(e.v) != 1)
      return "addition endpoint lacks budget";
    if (atouch.count(e.u) || atouch.count(e.v))
      return "additions are not a matching";
    atouch.insert(e.u);
    atouch.insert(e.v);
  }
  if (!detail::cluster_after(g, sol.deletions, sol.additions))
    return "edited graph is not a cluster graph";
  return "";
}

// ---------------------------------------------------------------------------
// Brute-force matching references.
// ---------------------------------------------------------------------------

namespace detail {

inline void brute_match(const std::vector<std::pair<int, int>>& edges,
                        std::size_t i, std::vector<char>& used, int size,
                        int& best) {
  best = std::max(best, size);
  for (std::size_t j = i; j < edges.size(); ++j) {
    auto [u, v] = edges[j];
    if (used[u] || used[v]) continue;
    used[u] = used[v] = 1;
    brute_match(edges, j + 1, used, size + 1, best);
    used[u] = used[v] = 0;
  }
}

inline bool brute_cover(const std::vector<std::pair<int, int>>& edges,
                        std::size_t i, std::vector<char>& used,
                        const std::vector<char>& need, int uncovered) {
  if (uncovered == 0) return true;
  if (i == edges.size()) return false;
  if (brute_cover(edges, i + 1, used, need, uncovered)) return true;
  auto [u, v] = edges[i];
  if (used[u] || used[v]) return false;
  used[u] = used[v] = 1;
  int now = uncovered - (need[u] ? 1 : 0) - (need[v] ? 1 : 0);
  bool ok = brute_cover(edges, i + 1, used, need, now);
  used[u] = used[v] = 0;
  return ok;
}

}  // namespace detail

inline int brute_max_matching_size(const SimpleGraph& g) {
  std::vector<char> used(g.n, 0);
  int best = 0;
  detail::brute_match(g.edges, 0, used, 0, best);
  return best;
}

// Does a matching exist that covers all of `cover` and avoids all of
// `avoid`?
inline bool brute_constrained_exists(const SimpleGraph& g,
                                     const std::vector<int>& cover,
                                     const std::vector<int>& avoid) {
  std::vector<char> in_z(g.n, 0), need(g.n, 0);
  for (int v : avoid) in_z[v] = 1;
  int uncovered = 0;
  for (int v : cover) {
    if (in_z[v]) return false;
    if (!need[v]) ++uncovered;
    need[v] = 1;
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges)
    if (!in_z[u] && !in_z[v]) edges.emplace_back(u, v);
  std::vector<char> used(g.n, 0);
  return detail::brute_cover(edges, 0, used, need, uncovered);
}

}  // namespace cep11::test
