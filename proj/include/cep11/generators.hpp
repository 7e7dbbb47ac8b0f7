// generators.hpp
//
// Deterministic instance generators for tests, benchmarks and the CLI `gen`
// command. All randomness flows through a splitmix64 generator so the same
// seed produces the same instance on every platform (std:: distributions are
// not portable across standard library implementations).
//
//   gen_named    fixed small graphs by name, unit budgets
//   gen_random   G(n, p) with unit or random budgets
//   gen_planted  yes-instances by construction: a hidden cluster graph,
//                minus a matching of intra-clique edges, plus a matching of
//                inter-clique edges, budgets forced to 1 where the hidden
//                solution needs them

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cep11/core.hpp"

namespace cep11 {

// splitmix64: tiny, well-mixed, reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw UsageError("Rng::below: zero bound");
    // Rejection sampling to kill modulo bias.
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
    for (;;) {
      std::uint64_t x = next_u64();
      if (x <= limit) return x % bound;
    }
  }

  bool flip() { return next_u64() >> 63; }

  // Bernoulli with probability p (53-bit resolution).
  bool chance(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return static_cast<double>(next_u64() >> 11) < p * 9007199254740992.0;
  }

 private:
  std::uint64_t state_;
};

// Fixed graphs, unit budgets. Names: k13, k14, k23, c4, c5, p4, cube,
// petersen, h-graph.
inline Instance gen_named(const std::string& name) {
  auto path = [](Instance& g, std::initializer_list<VertexId> vs) {
    const VertexId* prev = nullptr;
    for (const VertexId& v : vs) {
      if (prev) g.add_edge(*prev, v);
      prev = &v;
    }
  };
  if (name == "k13" || name == "k14") {
    int leaves = name == "k13" ? 3 : 4;
    Instance g(1 + leaves);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
  }
  if (name == "k23") {
    Instance g(5);
    for (VertexId c : {0, 1})
      for (VertexId t : {2, 3, 4}) g.add_edge(c, t);
    return g;
  }
  if (name == "c4" || name == "c5") {
    int n = name == "c4" ? 4 : 5;
    Instance g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
  }
  if (name == "p4") {
    Instance g(4);
    path(g, {0, 1, 2, 3});
    return g;
  }
  if (name == "cube") {
    Instance g(8);
    for (int u = 0; u < 8; ++u)
      for (int b = 0; b < 3; ++b)
        if (int v = u ^ (1 << b); u < v) g.add_edge(u, v);
    return g;
  }
  if (name == "petersen") {
    Instance g(10);
    for (int i = 0; i < 5; ++i) {
      g.add_edge(i, (i + 1) % 5);          // outer cycle
      g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
      g.add_edge(i, 5 + i);                // spokes
    }
    return g;
  }
  if (name == "h-graph") {
    Instance g(6);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 4);
    g.add_edge(1, 5);
    return g;
  }
  throw InputError("unknown named graph '" + name + "'");
}

// G(n, p). Draw order (fixed): edges over pairs (u, v), u < v ascending,
// then, when random_budgets, per vertex an a-bit then a d-bit.
inline Instance gen_random(int n, double p, std::uint64_t seed,
                           bool random_budgets = false) {
  if (n < 0) throw InputError("gen_random: negative n");
  Instance g(n);
  Rng rng(seed);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (rng.chance(p)) g.add_edge(u, v);
  if (random_budgets) {
    for (VertexId v = 0; v < n; ++v) {
      g.set_a_budget(v, rng.flip() ? 1 : 0);
      g.set_d_budget(v, rng.flip() ? 1 : 0);
    }
  }
  return g;
}

// Planted yes-instance. Hidden solution: re-add the removed intra-clique
// matching (additions) and re-delete the added inter-clique matching
// (deletions); budgets are forced to 1 at the endpoints of those edits and
// random elsewhere, so the hidden solution stays feasible whatever the other
// budgets say.
inline Instance gen_planted(int n, std::uint64_t seed, int clique_max = 6,
                            double edit_density = 0.3) {
  if (n < 0) throw InputError("gen_planted: negative n");
  if (clique_max < 1) throw InputError("gen_planted: clique_max < 1");
  Instance g(n);
  Rng rng(seed);

  // Partition 0..n-1 into consecutive cliques.
  std::vector<int> clique_of(n, -1);
  std::vector<std::pair<VertexId, VertexId>> ranges;  // [first, last]
  for (VertexId first = 0; first < n;) {
    VertexId size = static_cast<VertexId>(
        1 + rng.below(static_cast<std::uint64_t>(
                std::min<VertexId>(clique_max, n - first))));
    for (VertexId v = first; v < first + size; ++v) {
      clique_of[v] = static_cast<int>(ranges.size());
      for (VertexId u = first; u < v; ++u) g.add_edge(u, v);
    }
    ranges.emplace_back(first, first + size - 1);
    first += size;
  }

  std::vector<char> force_a(n, 0), force_d(n, 0);

  // Remove at most one intra-clique edge per clique: a matching, since the
  // cliques are disjoint.
  for (auto [lo, hi] : ranges) {
    VertexId size = hi - lo + 1;
    if (size < 2 || !rng.chance(edit_density)) continue;
    VertexId u = lo + static_cast<VertexId>(rng.below(size));
    VertexId v = lo + static_cast<VertexId>(rng.below(size - 1));
    if (v >= u) ++v;
    g.remove_edge(u, v);
    force_a[u] = force_a[v] = 1;
  }

  // Add a matching of inter-clique edges.
  if (n >= 2 && ranges.size() >= 2 && edit_density > 0.0) {
    std::uint64_t target = std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(edit_density * n / 4.0));
    std::vector<char> covered(n, 0);
    for (std::uint64_t tries = 0; tries < 4 * target; ++tries) {
      VertexId u = static_cast<VertexId>(rng.below(n));
      VertexId v = static_cast<VertexId>(rng.below(n));
      if (u == v || covered[u] || covered[v]) continue;
      if (clique_of[u] == clique_of[v]) continue;
      g.add_edge(u, v);
      covered[u] = covered[v] = 1;
      force_d[u] = force_d[v] = 1;
    }
  }

  for (VertexId v = 0; v < n; ++v) {
    g.set_a_budget(v, force_a[v] ? 1 : (rng.flip() ? 1 : 0));
    g.set_d_budget(v, force_d[v] ? 1 : (rng.flip() ? 1 : 0));
  }
  return g;
}

}  // namespace cep11
