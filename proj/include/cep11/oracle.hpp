// oracle.hpp
//
// Exact brute-force decision procedure for small instances, used three ways:
//   * as the reference the polynomial solver is cross-checked against,
//   * inside apply_r_deletable (reductions.hpp) on sets of <= 12 vertices,
//   * behind the CLI `oracle` command.
//
// A partition P of the vertices describes the target cluster graph whose
// cliques are P's blocks. Editing G into that cluster graph deletes, at each
// vertex v, exactly its cross-block incident edges and adds exactly its
// missing same-block pairs. So (G, a, d) is a yes-instance iff some
// partition keeps, for every v, the cross-edge count <= d(v) and the missing
// same-block pair count <= a(v). With 0/1 budgets this is exactly the
// matching formulation (deleted edges touch each vertex <= d(v) <= 1 times,
// added pairs <= a(v) <= 1 times).
//
// Partitions are enumerated as restricted growth strings over the live
// vertices in ascending id order, depth-first, abandoning a prefix as soon
// as some vertex exceeds a budget. The first complete assignment found is
// the lexicographically smallest feasible restricted growth string, so the
// returned witness is deterministic.
//
// Hard cap: 14 live vertices (Bell(14) ~ 1.9e8 upper bounds the search).

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cep11/core.hpp"

namespace cep11 {

inline constexpr int kOracleMaxVertices = 14;

namespace detail {

struct OracleSearch {
  const Instance& g;
  std::vector<VertexId> verts;          // ascending live ids
  std::vector<int> block;               // block[i] for verts[i]
  std::vector<int> cross_used;          // deleted-edge count per position
  std::vector<int> miss_used;           // added-pair count per position
  std::vector<std::uint32_t> adj_mask;  // adjacency between positions

  explicit OracleSearch(const Instance& inst) : g(inst), verts(inst.vertices()) {
    const int k = static_cast<int>(verts.size());
    block.assign(k, -1);
    cross_used.assign(k, 0);
    miss_used.assign(k, 0);
    adj_mask.assign(k, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < i; ++j)
        if (g.has_edge(verts[i], verts[j])) {
          adj_mask[i] |= 1u << j;
          adj_mask[j] |= 1u << i;
        }
  }

  int a_of(int i) const { return g.a_budget(verts[i]); }
  int d_of(int i) const { return g.d_budget(verts[i]); }

  // Tries to place position i in block b; returns false (leaving all state
  // untouched) when any budget would be exceeded.
  bool place(int i, int b) {
    int cross_i = 0, miss_i = 0;
    for (int j = 0; j < i; ++j) {
      const bool adj = (adj_mask[i] >> j) & 1u;
      if (adj && block[j] != b) {
        if (cross_used[j] + 1 > d_of(j)) return false;
        ++cross_i;
      } else if (!adj && block[j] == b) {
        if (miss_used[j] + 1 > a_of(j)) return false;
        ++miss_i;
      }
    }
    if (cross_i > d_of(i) || miss_i > a_of(i)) return false;
    for (int j = 0; j < i; ++j) {
      const bool adj = (adj_mask[i] >> j) & 1u;
      if (adj && block[j] != b)
        ++cross_used[j];
      else if (!adj && block[j] == b)
        ++miss_used[j];
    }
    block[i] = b;
    cross_used[i] = cross_i;
    miss_used[i] = miss_i;
    return true;
  }

  void unplace(int i) {
    const int b = block[i];
    for (int j = 0; j < i; ++j) {
      const bool adj = (adj_mask[i] >> j) & 1u;
      if (adj && block[j] != b)
        --cross_used[j];
      else if (!adj && block[j] == b)
        --miss_used[j];
    }
    block[i] = -1;
    cross_used[i] = 0;
    miss_used[i] = 0;
  }

  // Depth-first over restricted growth strings: position i may use blocks
  // 0..max_used+1.
  bool search(int i, int blocks_used) {
    const int k = static_cast<int>(verts.size());
    if (i == k) return true;
    const int limit = std::min(blocks_used + 1, k);
    for (int b = 0; b < limit; ++b) {
      if (!place(i, b)) continue;
      if (search(i + 1, std::max(blocks_used, b + 1))) return true;
      unplace(i);
    }
    return false;
  }
};

inline void check_oracle_size(const Instance& g) {
  if (g.num_vertices() > kOracleMaxVertices)
    throw UsageError("oracle: instance has " +
                     std::to_string(g.num_vertices()) +
                     " vertices, cap is " + std::to_string(kOracleMaxVertices));
}

}  // namespace detail

// Witness partition into cliques-to-be, or nullopt for a no-instance.
// Blocks are ordered by first member; members ascend.
inline std::optional<std::vector<std::vector<VertexId>>> oracle_partition(
    const Instance& g) {
  detail::check_oracle_size(g);
  detail::OracleSearch s(g);
  if (!s.search(0, 0)) return std::nullopt;
  int nblocks = 0;
  for (int b : s.block) nblocks = std::max(nblocks, b + 1);
  std::vector<std::vector<VertexId>> blocks(nblocks);
  for (std::size_t i = 0; i < s.verts.size(); ++i)
    blocks[s.block[i]].push_back(s.verts[i]);
  return blocks;
}

inline bool oracle_decide(const Instance& g) {
  detail::check_oracle_size(g);
  detail::OracleSearch s(g);
  return s.search(0, 0);
}

// Canonical edit solution derived from the witness partition: deletions are
// the cross-block edges, additions the missing same-block pairs, both sorted.
inline std::optional<EditSolution> oracle_solve(const Instance& g) {
  auto part = oracle_partition(g);
  if (!part) return std::nullopt;
  std::vector<int> block_of(g.id_bound(), -1);
  for (std::size_t b = 0; b < part->size(); ++b)
    for (VertexId v : (*part)[b]) block_of[v] = static_cast<int>(b);
  EditSolution sol;
  for (const Edge& e : g.edges())
    if (block_of[e.u] != block_of[e.v]) sol.deletions.push_back(e);
  for (const auto& blk : *part)
    for (std::size_t i = 0; i < blk.size(); ++i)
      for (std::size_t j = i + 1; j < blk.size(); ++j)
        if (!g.has_edge(blk[i], blk[j]))
          sol.additions.push_back(Edge{blk[i], blk[j]});
  std::sort(sol.additions.begin(), sol.additions.end());
  return sol;
}

}  // namespace cep11
