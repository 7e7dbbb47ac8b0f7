// core.hpp
//
// Core data model for budget-constrained cluster editing with 0/1 per-vertex
// budgets: every vertex v carries an addition budget a(v) and a deletion
// budget d(v), each 0 or 1. An instance is a yes-instance when the graph can
// be turned into a cluster graph (disjoint union of cliques) while deleting
// at most d(v) and adding at most a(v) edges at every vertex v. Because the
// budgets are 0/1, a solution is a pair (D, A): D a matching of deletable
// edges, A a matching of addable vertex pairs, with G - D + A a cluster
// graph.
//
// This header provides:
//   * Instance       — mutable graph with stable vertex ids and budgets
//   * Edge           — normalized vertex pair (u < v)
//   * EditSolution   — deletion/addition edit sets
//   * Violation      — witness that an instance is not yet in the restricted
//                      target class handled by the final matching solver
//   * components / is_cluster_graph / find_violation and small classifiers
//
// Vertex ids are stable: removing a vertex never renames others, and new
// vertices get fresh ids. All scans iterate in ascending id order, so every
// query here is deterministic.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cep11 {

using VertexId = int;

// ---------------------------------------------------------------------------
// Errors. InputError: malformed user input (files, CLI values). UsageError:
// an API precondition was violated by the caller. InternalError: an internal
// invariant failed; indicates a bug, never a property of the input.
// ---------------------------------------------------------------------------

struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

struct UsageError : std::logic_error {
  explicit UsageError(const std::string& what) : std::logic_error(what) {}
};

struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// ---------------------------------------------------------------------------
// Edge: an unordered vertex pair stored with u < v.
// ---------------------------------------------------------------------------

struct Edge {
  VertexId u = -1;
  VertexId v = -1;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId a, VertexId b) {
  if (a == b) throw UsageError("make_edge: self loop " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

struct EditSolution {
  std::vector<Edge> deletions;  // pairwise disjoint edges of the instance
  std::vector<Edge> additions;  // pairwise disjoint non-edges

  friend bool operator==(const EditSolution&, const EditSolution&) = default;
};

// ---------------------------------------------------------------------------
// Instance
// ---------------------------------------------------------------------------

class Instance {
 public:
  Instance() = default;

  explicit Instance(int n) { reserve_vertices(n); }

  // Appends a vertex with the given budgets and returns its id.
  VertexId add_vertex(int a_budget = 1, int d_budget = 1) {
    check_budget(a_budget);
    check_budget(d_budget);
    adj_.emplace_back();
    alive_.push_back(1);
    a_.push_back(static_cast<std::uint8_t>(a_budget));
    d_.push_back(static_cast<std::uint8_t>(d_budget));
    ++alive_count_;
    return static_cast<VertexId>(adj_.size()) - 1;
  }

  // Removes v together with all incident edges. The id is never reused.
  void remove_vertex(VertexId v) {
    require_alive(v, "remove_vertex");
    for (VertexId w : adj_[v]) {
      auto& nb = adj_[w];
      nb.erase(std::lower_bound(nb.begin(), nb.end(), v));
      --edge_count_;
    }
    adj_[v].clear();
    alive_[v] = 0;
    --alive_count_;
  }

  void add_edge(VertexId u, VertexId v) {
    require_alive(u, "add_edge");
    require_alive(v, "add_edge");
    if (u == v) throw UsageError("add_edge: self loop");
    if (has_edge(u, v)) throw UsageError("add_edge: duplicate edge");
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
    ++edge_count_;
  }

  void remove_edge(VertexId u, VertexId v) {
    require_alive(u, "remove_edge");
    require_alive(v, "remove_edge");
    if (!has_edge(u, v)) throw UsageError("remove_edge: no such edge");
    erase_sorted(adj_[u], v);
    erase_sorted(adj_[v], u);
    --edge_count_;
  }

  bool has_edge(VertexId u, VertexId v) const {
    if (!valid(u) || !valid(v) || !alive_[u] || !alive_[v] || u == v)
      return false;
    const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    VertexId key = (&nb == &adj_[u]) ? v : u;
    return std::binary_search(nb.begin(), nb.end(), key);
  }

  bool alive(VertexId v) const { return valid(v) && alive_[v]; }

  int degree(VertexId v) const {
    require_alive(v, "degree");
    return static_cast<int>(adj_[v].size());
  }

  // Sorted neighbor list of a live vertex.
  const std::vector<VertexId>& neighbors(VertexId v) const {
    require_alive(v, "neighbors");
    return adj_[v];
  }

  int a_budget(VertexId v) const {
    require_alive(v, "a_budget");
    return a_[v];
  }

  int d_budget(VertexId v) const {
    require_alive(v, "d_budget");
    return d_[v];
  }

  void set_a_budget(VertexId v, int b) {
    require_alive(v, "set_a_budget");
    check_budget(b);
    a_[v] = static_cast<std::uint8_t>(b);
  }

  void set_d_budget(VertexId v, int b) {
    require_alive(v, "set_d_budget");
    check_budget(b);
    d_[v] = static_cast<std::uint8_t>(b);
  }

  int num_vertices() const { return alive_count_; }
  int num_edges() const { return edge_count_; }

  // Largest id ever assigned plus one; dead ids below this stay reserved.
  int id_bound() const { return static_cast<int>(adj_.size()); }

  // Ascending list of live vertex ids.
  std::vector<VertexId> vertices() const {
    std::vector<VertexId> out;
    out.reserve(alive_count_);
    for (VertexId v = 0; v < id_bound(); ++v)
      if (alive_[v]) out.push_back(v);
    return out;
  }

  // Ascending list of edges (u < v).
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < id_bound(); ++u) {
      if (!alive_[u]) continue;
      for (VertexId v : adj_[u])
        if (u < v) out.push_back(Edge{u, v});
    }
    return out;
  }

  // Copy of this instance restricted to `keep` (ids preserved; everything
  // else removed). `keep` must consist of distinct live vertices.
  Instance induced(const std::vector<VertexId>& keep) const {
    Instance out;
    out.adj_.assign(adj_.size(), {});
    out.alive_.assign(alive_.size(), 0);
    out.a_ = a_;
    out.d_ = d_;
    for (VertexId v : keep) {
      require_alive(v, "induced");
      if (out.alive_[v]) throw UsageError("induced: duplicate vertex");
      out.alive_[v] = 1;
    }
    out.alive_count_ = static_cast<int>(keep.size());
    for (VertexId v : keep) {
      for (VertexId w : adj_[v]) {
        if (out.alive_[w]) {
          out.adj_[v].push_back(w);
          if (v < w) ++out.edge_count_;
        }
      }
    }
    return out;
  }

 private:
  static void check_budget(int b) {
    if (b != 0 && b != 1)
      throw UsageError("budget must be 0 or 1, got " + std::to_string(b));
  }

  bool valid(VertexId v) const {
    return v >= 0 && v < static_cast<VertexId>(adj_.size());
  }

  void require_alive(VertexId v, const char* who) const {
    if (!valid(v) || !alive_[v])
      throw UsageError(std::string(who) + ": vertex " + std::to_string(v) +
                       " is not a live vertex");
  }

  static void insert_sorted(std::vector<VertexId>& vec, VertexId x) {
    vec.insert(std::upper_bound(vec.begin(), vec.end(), x), x);
  }

  static void erase_sorted(std::vector<VertexId>& vec, VertexId x) {
    vec.erase(std::lower_bound(vec.begin(), vec.end(), x));
  }

  void reserve_vertices(int n) {
    for (int i = 0; i < n; ++i) add_vertex();
  }

  std::vector<std::vector<VertexId>> adj_;  // sorted neighbor lists
  std::vector<std::uint8_t> alive_;
  std::vector<std::uint8_t> a_;
  std::vector<std::uint8_t> d_;
  int alive_count_ = 0;
  int edge_count_ = 0;
};

// ---------------------------------------------------------------------------
// Pair classification under the 0/1 budgets.
// ---------------------------------------------------------------------------

// An edge whose two endpoints both still have deletion budget.
inline bool is_deletable_edge(const Instance& g, VertexId u, VertexId v) {
  return g.has_edge(u, v) && g.d_budget(u) == 1 && g.d_budget(v) == 1;
}

// A non-adjacent live pair whose endpoints both still have addition budget.
inline bool is_addable_pair(const Instance& g, VertexId u, VertexId v) {
  return g.alive(u) && g.alive(v) && u != v && !g.has_edge(u, v) &&
         g.a_budget(u) == 1 && g.a_budget(v) == 1;
}

// ---------------------------------------------------------------------------
// Components and cluster-graph test.
// ---------------------------------------------------------------------------

// Connected components as sorted vertex lists, ordered by smallest member.
inline std::vector<std::vector<VertexId>> components(const Instance& g) {
  std::vector<std::vector<VertexId>> out;
  std::vector<char> seen(g.id_bound(), 0);
  for (VertexId s = 0; s < g.id_bound(); ++s) {
    if (!g.alive(s) || seen[s]) continue;
    std::vector<VertexId> comp;
    std::vector<VertexId> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// Components of the subgraph induced by `subset` (ids must be live and
// distinct). Ordered by smallest member; members sorted.
inline std::vector<std::vector<VertexId>> components_within(
    const Instance& g, const std::vector<VertexId>& subset) {
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  auto inside = [&](VertexId v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
  };
  std::vector<char> seen;
  seen.assign(g.id_bound(), 0);
  for (VertexId s : sorted) {
    if (seen[s]) continue;
    std::vector<VertexId> comp;
    std::vector<VertexId> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (inside(w) && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// True when every component is a clique.
inline bool is_cluster_graph(const Instance& g) {
  for (const auto& comp : components(g)) {
    const int want = static_cast<int>(comp.size()) - 1;
    for (VertexId v : comp)
      if (g.degree(v) != want) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Violations: the reasons an instance is not yet in the restricted class the
// matching-based solver accepts (triangle-free, C4-free, max degree 3, no
// exhausted deletion budget at degree >= 2, no exhausted addition budget next
// to a degree-3 vertex, no adjacent degree-3 vertices).
// ---------------------------------------------------------------------------

enum class ViolationKind {
  Triangle,      // witness: (u, v, w), u < v < w smallest triangle
  HighDegree,    // witness: (v), smallest vertex of degree >= 4 (C3-free)
  K23,           // witness: (u, v, t1, t2, t3), centers u < v
  C4FourDeg3,    // witness: cycle (a, b, c, d), all four of degree 3
  C4ThreeDeg3,   // witness: cycle (a, b, c, d), exactly three of degree 3
  C4General,     // witness: cycle (a, b, c, d), at most two of degree 3
  SpecialBreach  // witness + rule, see below
};

// SpecialBreach rules (checked in this order):
//   1: d(v) = 0 at a vertex of degree >= 2      witness (v)
//   2: degree-3 u adjacent to w with a(w) = 0   witness (u, w)
//   3: adjacent degree-3 vertices u, w          witness (u, w)
struct Violation {
  ViolationKind kind;
  std::vector<VertexId> witness;
  int special_rule = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::Triangle: return "triangle";
    case ViolationKind::HighDegree: return "high-degree";
    case ViolationKind::K23: return "k23";
    case ViolationKind::C4FourDeg3: return "c4-four-deg3";
    case ViolationKind::C4ThreeDeg3: return "c4-three-deg3";
    case ViolationKind::C4General: return "c4-general";
    case ViolationKind::SpecialBreach: return "special-breach";
  }
  return "?";
}

namespace detail {

// Smallest triangle (u, v, w) with u < v < w within `verts`, if any.
// `verts` must be sorted ascending.
inline std::optional<std::array<VertexId, 3>> smallest_triangle(
    const Instance& g, const std::vector<VertexId>& verts) {
  for (VertexId u : verts) {
    const auto& nb = g.neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] < u) continue;
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.has_edge(nb[i], nb[j]))
          return std::array<VertexId, 3>{u, nb[i], nb[j]};
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Scans the subgraph induced by `verts` (sorted, live; typically one
// component) for the highest-priority violation. Priorities, high to low:
// Triangle, HighDegree, K23, C4FourDeg3, C4ThreeDeg3, C4General,
// SpecialBreach; ties broken by smallest witness tuple. Returns nullopt iff
// the subgraph is in the restricted class.
//
// Note: the C4 searches assume max degree <= 3 and the K23 search assumes
// centers of degree exactly 3; both hold because Triangle/HighDegree are
// reported first.
inline std::optional<Violation> find_violation_in(
    const Instance& g, const std::vector<VertexId>& verts) {
  // Triangles dominate everything.
  if (auto tri = detail::smallest_triangle(g, verts))
    return Violation{ViolationKind::Triangle, {(*tri)[0], (*tri)[1], (*tri)[2]}};

  // Degree >= 4 in a triangle-free graph.
  for (VertexId v : verts)
    if (g.degree(v) >= 4) return Violation{ViolationKind::HighDegree, {v}};

  // K_{2,3}: centers u < v of degree 3 sharing three neighbors.
  for (VertexId u : verts) {
    if (g.degree(u) != 3) continue;
    // Candidate partners: degree-3 vertices two steps away, > u.
    for (VertexId t : g.neighbors(u)) {
      for (VertexId v : g.neighbors(t)) {
        if (v <= u || g.degree(v) != 3) continue;
        const auto& a = g.neighbors(u);
        const auto& b = g.neighbors(v);
        std::vector<VertexId> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(common));
        if (common.size() >= 3)
          return Violation{ViolationKind::K23,
                           {u, v, common[0], common[1], common[2]}};
      }
    }
  }

  // C4s: canonical cycle (a, b, c, d) with a the smallest vertex and b < d
  // its two cycle neighbors; c the vertex opposite a. Enumerate all and keep
  // the best by (degree-3 count category, then lexicographic cycle tuple).
  std::optional<Violation> best;
  auto category = [&](const std::array<VertexId, 4>& cyc) {
    int deg3 = 0;
    for (VertexId x : cyc) deg3 += g.degree(x) == 3;
    if (deg3 == 4) return ViolationKind::C4FourDeg3;
    if (deg3 == 3) return ViolationKind::C4ThreeDeg3;
    return ViolationKind::C4General;
  };
  auto better = [](ViolationKind k1, const std::vector<VertexId>& w1,
                   ViolationKind k2, const std::vector<VertexId>& w2) {
    if (k1 != k2) return static_cast<int>(k1) < static_cast<int>(k2);
    return w1 < w2;
  };
  for (VertexId a : verts) {
    const auto& nb = g.neighbors(a);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] < a) continue;
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        VertexId b = nb[i], d = nb[j];
        // Common neighbors of b and d other than a close a 4-cycle; only
        // count cycles whose minimum is a.
        for (VertexId c : g.neighbors(b)) {
          if (c <= a || c == d) continue;
          if (!g.has_edge(c, d)) continue;
          std::array<VertexId, 4> cyc{a, b, c, d};
          ViolationKind k = category(cyc);
          std::vector<VertexId> w(cyc.begin(), cyc.end());
          if (!best || better(k, w, best->kind, best->witness))
            best = Violation{k, std::move(w)};
        }
      }
    }
  }
  if (best) return best;

  // Budget/degree breaches of the restricted class.
  for (VertexId v : verts)
    if (g.degree(v) >= 2 && g.d_budget(v) == 0)
      return Violation{ViolationKind::SpecialBreach, {v}, 1};
  for (VertexId u : verts) {
    if (g.degree(u) != 3) continue;
    for (VertexId w : g.neighbors(u))
      if (g.a_budget(w) == 0)
        return Violation{ViolationKind::SpecialBreach, {u, w}, 2};
  }
  for (VertexId u : verts) {
    if (g.degree(u) != 3) continue;
    for (VertexId w : g.neighbors(u))
      if (u < w && g.degree(w) == 3)
        return Violation{ViolationKind::SpecialBreach, {u, w}, 3};
  }

  return std::nullopt;
}

// Whole-instance scan.
inline std::optional<Violation> find_violation(const Instance& g) {
  return find_violation_in(g, g.vertices());
}

}  // namespace cep11
