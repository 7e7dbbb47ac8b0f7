// matching.hpp
//
// General-graph maximum matching (blossom algorithm, O(V^3)) and, on top of
// it, the constrained query the final solver needs: a matching that covers
// every vertex of a set Y while touching no vertex of a disjoint set Z.
//
// The constrained query reduces to perfect matching: delete Z, let
// U = V - Z - Y, pad U with one extra vertex if |V - Z| is odd, and complete
// U into a clique. The padded graph has a perfect matching iff the requested
// matching exists: U-vertices can always pair off among themselves through
// clique edges, so a perfect matching is exactly a way to cover Y using real
// edges (no added edge touches Y). From a perfect matching, the edges with
// an endpoint in Y form the requested matching.
//
// Everything here is deterministic: vertices are processed in ascending
// order and adjacency lists are kept sorted.

#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "cep11/core.hpp"

namespace cep11 {

// A plain undirected graph on vertices 0..n-1.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

struct MatchingQuery {
  std::vector<int> must_cover;  // Y: every vertex must be matched
  std::vector<int> must_avoid;  // Z: no matching edge may touch these
};

namespace detail {

// Classic blossom implementation over adjacency lists. match[v] == -1 means
// exposed. Augments from exposed vertices in ascending order.
class Blossom {
 public:
  explicit Blossom(const SimpleGraph& g) : n_(g.n), adj_(g.n) {
    for (auto [u, v] : g.edges) {
      if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
        throw UsageError("maximum_matching: bad edge");
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nb : adj_) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    match_.assign(n_, -1);
  }

  std::vector<int> run() {
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int u = find_augmenting_path(v);
      if (u != -1) augment(u);
    }
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> on_path(n_, 0);
    for (int v = a;;) {
      v = base_[v];
      on_path[v] = 1;
      if (match_[v] == -1) break;
      v = parent_[match_[v]];
    }
    for (int v = b;;) {
      v = base_[v];
      if (on_path[v]) return v;
      v = parent_[match_[v]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_augmenting_path(int root) {
    used_.assign(n_, 0);
    parent_.assign(n_, -1);
    base_.resize(n_);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          // Odd cycle: contract the blossom.
          int cur_base = lca(v, to);
          in_blossom_.assign(n_, 0);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur_base;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;  // augmenting path found
          used_[match_[to]] = 1;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  void augment(int finish) {
    for (int v = finish; v != -1;) {
      int pv = parent_[v];
      int next = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = next;
    }
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_, parent_, base_;
  std::vector<char> used_, in_blossom_;
};

}  // namespace detail

// Maximum matching as a sorted list of (u, v) pairs with u < v.
inline std::vector<std::pair<int, int>> maximum_matching(const SimpleGraph& g) {
  detail::Blossom b(g);
  auto match = b.run();
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < g.n; ++v)
    if (match[v] > v) out.emplace_back(v, match[v]);
  return out;
}

// A matching covering all of query.must_cover and avoiding all of
// query.must_avoid, or nullopt if none exists. The two sets must be
// disjoint subsets of the vertex range.
inline std::optional<std::vector<std::pair<int, int>>> constrained_matching(
    const SimpleGraph& g, const MatchingQuery& query) {
  std::vector<char> in_y(g.n, 0), in_z(g.n, 0);
  auto check = [&](const std::vector<int>& set, std::vector<char>& flag,
                   const char* name) {
    for (int v : set) {
      if (v < 0 || v >= g.n)
        throw UsageError(std::string("constrained_matching: ") + name +
                         " vertex out of range");
      flag[v] = 1;
    }
  };
  check(query.must_cover, in_y, "must_cover");
  check(query.must_avoid, in_z, "must_avoid");
  for (int v = 0; v < g.n; ++v)
    if (in_y[v] && in_z[v])
      throw UsageError("constrained_matching: cover and avoid sets intersect");

  // Nothing to cover: the empty matching qualifies.
  if (query.must_cover.empty()) return std::vector<std::pair<int, int>>{};

  // Compact the vertices outside Z.
  std::vector<int> compact(g.n, -1), original;
  for (int v = 0; v < g.n; ++v) {
    if (in_z[v]) continue;
    compact[v] = static_cast<int>(original.size());
    original.push_back(v);
  }

  SimpleGraph padded;
  const int kept = static_cast<int>(original.size());
  const bool pad = (kept % 2) != 0;
  padded.n = kept + (pad ? 1 : 0);
  for (auto [u, v] : g.edges)
    if (compact[u] != -1 && compact[v] != -1)
      padded.edges.emplace_back(compact[u], compact[v]);

  // U = non-Y survivors plus the padding vertex; complete U into a clique.
  std::vector<int> u_set;
  for (int v = 0; v < g.n; ++v)
    if (compact[v] != -1 && !in_y[v]) u_set.push_back(compact[v]);
  if (pad) u_set.push_back(kept);
  for (std::size_t i = 0; i < u_set.size(); ++i)
    for (std::size_t j = i + 1; j < u_set.size(); ++j)
      padded.edges.emplace_back(u_set[i], u_set[j]);

  detail::Blossom b(padded);
  auto match = b.run();
  for (int v = 0; v < padded.n; ++v)
    if (match[v] == -1) return std::nullopt;  // no perfect matching

  // Keep exactly the matching edges that serve a cover vertex; those are
  // real edges of g (added edges run between non-Y vertices only).
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < kept; ++v) {
    int w = match[v];
    if (w <= v) continue;
    int ov = original[v];
    int ow = w < kept ? original[w] : -1;
    if (ow == -1) continue;  // padding partner
    if (in_y[ov] || in_y[ow]) {
      out.emplace_back(std::min(ov, ow), std::max(ov, ow));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cep11
