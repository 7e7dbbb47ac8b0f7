// End-to-end solver. A work queue holds one vertex list per pending
// component of a single working instance. Each round pops a component,
// looks for its highest-priority obstruction and either rewrites it away
// (re-enqueueing whatever the component turned into) or, when the component
// already sits inside the restricted class, finishes it with the
// matching-based solver. There is no NO certificate: a single failed
// component decides the whole instance.
//
// YES certificates are rebuilt by folding the recorded trace backwards:
// every step knows how to translate a deletion set of its output instance
// into one of its input instance. Added edges are never tracked through the
// fold; once the full deletion set is known, the additions are exactly the
// missing pairs inside each surviving component.

#pragma once

#include <cep11/core.hpp>
#include <cep11/reductions.hpp>
#include <cep11/special.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cep11 {

struct SolveOptions {
  bool want_certificate = true;  // lift and attach an EditSolution on YES
  bool want_trace = false;       // attach the reduction trace to the verdict
};

struct SolveStats {
  std::int64_t total_steps = 0;  // rewriting steps actually applied
  std::int64_t step_cap = 0;     // hard budget: 64 * n^3 for n input vertices
  std::map<std::string, std::int64_t> steps_by_kind;
  int components_finished = 0;   // components the matching solver accepted
  int peak_vertices = 0;         // most live vertices the working graph held
};

struct Verdict {
  bool answer = false;
  std::optional<EditSolution> certificate;  // present iff YES and requested
  std::vector<ReductionStep> trace;         // filled iff requested
  SolveStats stats;
};

// ---------------------------------------------------------------------------
// verify_solution: full independent check of an edit against an instance.
// Returns the first failing check as text, or an empty string when the edit
// is valid. Never throws; meant for both internal assertions and the CLI.
// ---------------------------------------------------------------------------

inline std::string verify_solution(const Instance& g, const EditSolution& sol) {
  // Diagnostics use the 1-based numbering of the on-disk format.
  auto pair_text = [](VertexId a, VertexId b) {
    return std::to_string(a + 1) + "-" + std::to_string(b + 1);
  };
  auto vertex_text = [](VertexId v) { return std::to_string(v + 1); };
  auto vertex_ok = [&](VertexId v) { return v >= 0 && v < g.id_bound() && g.alive(v); };

  std::vector<int> load(static_cast<std::size_t>(g.id_bound()), 0);
  std::set<Edge> seen;
  for (const Edge& e : sol.deletions) {
    if (!vertex_ok(e.u) || !vertex_ok(e.v) || e.u == e.v)
      return "deletion " + pair_text(e.u, e.v) + " does not name two distinct vertices";
    if (!g.has_edge(e.u, e.v))
      return "deleted pair " + pair_text(e.u, e.v) + " is not an edge";
    if (!seen.insert(make_edge(e.u, e.v)).second)
      return "deletion " + pair_text(e.u, e.v) + " listed twice";
    if (++load[static_cast<std::size_t>(e.u)] > g.d_budget(e.u))
      return "deletion budget exceeded at vertex " + vertex_text(e.u);
    if (++load[static_cast<std::size_t>(e.v)] > g.d_budget(e.v))
      return "deletion budget exceeded at vertex " + vertex_text(e.v);
  }

  std::fill(load.begin(), load.end(), 0);
  seen.clear();
  for (const Edge& e : sol.additions) {
    if (!vertex_ok(e.u) || !vertex_ok(e.v) || e.u == e.v)
      return "addition " + pair_text(e.u, e.v) + " does not name two distinct vertices";
    if (g.has_edge(e.u, e.v))
      return "added pair " + pair_text(e.u, e.v) + " is already an edge";
    if (!seen.insert(make_edge(e.u, e.v)).second)
      return "addition " + pair_text(e.u, e.v) + " listed twice";
    if (++load[static_cast<std::size_t>(e.u)] > g.a_budget(e.u))
      return "addition budget exceeded at vertex " + vertex_text(e.u);
    if (++load[static_cast<std::size_t>(e.v)] > g.a_budget(e.v))
      return "addition budget exceeded at vertex " + vertex_text(e.v);
  }

  Instance edited = g;
  for (const Edge& e : sol.deletions) edited.remove_edge(e.u, e.v);
  for (const Edge& e : sol.additions) edited.add_edge(e.u, e.v);
  if (!is_cluster_graph(edited))
    return "edited graph is not a disjoint union of cliques";
  return "";
}

// ---------------------------------------------------------------------------
// lift_solution: fold a trace backwards, mapping a deletion set of the fully
// reduced instance onto the original one, then recompute the additions as
// the missing pairs inside each surviving component. Throws InternalError
// whenever the deletion set contradicts a step's case analysis; with a trace
// produced by solve() and a valid reduced solution that cannot happen.
// ---------------------------------------------------------------------------

inline EditSolution lift_solution(const Instance& original,
                                  const std::vector<ReductionStep>& trace,
                                  const EditSolution& reduced) {
  std::set<Edge> dels(reduced.deletions.begin(), reduced.deletions.end());
  auto has = [&](VertexId a, VertexId b) { return dels.count(make_edge(a, b)) > 0; };
  auto put = [&](VertexId a, VertexId b) { dels.insert(make_edge(a, b)); };
  auto drop = [&](VertexId a, VertexId b) { dels.erase(make_edge(a, b)); };

  for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
    if (const auto* s = std::get_if<TriangleAbsorbStep>(&*it)) {
      for (const Edge& e : s->deleted) put(e.u, e.v);
    } else if (const auto* s = std::get_if<RDeletableStep>(&*it)) {
      for (const Edge& e : s->cut) put(e.u, e.v);
      for (const Edge& e : s->inner.deletions) put(e.u, e.v);
    } else if (const auto* s = std::get_if<RingClosureStep>(&*it)) {
      // The step inserted (w0,w1) and (w2,w3); the ring edges (w0,w3) and
      // (w1,w2) predate it. A valid deletion set takes both inserted edges
      // or neither, and never the ring pair.
      if (has(s->w[1], s->w[2]) || has(s->w[3], s->w[0]))
        throw InternalError("ring-closure lift: ring edge deleted");
      const bool front = has(s->w[0], s->w[1]);
      const bool back = has(s->w[2], s->w[3]);
      if (front != back)
        throw InternalError("ring-closure lift: only one inserted edge deleted");
      if (front) {
        drop(s->w[0], s->w[1]);
        drop(s->w[2], s->w[3]);
        for (int i = 0; i < 4; ++i) put(s->v[i], s->w[i]);
      } else {
        put(s->v[0], s->v[1]);
        put(s->v[2], s->v[3]);
      }
    } else if (const auto* s = std::get_if<RingContractionStep>(&*it)) {
      const bool e01 = has(s->v[0], s->v[1]);
      const bool e12 = has(s->v[1], s->v[2]);
      const bool e23 = has(s->v[2], s->v[3]);
      const bool e30 = has(s->v[3], s->v[0]);
      const int on_cycle = int(e01) + int(e12) + int(e23) + int(e30);
      if (on_cycle == 2 && ((e01 && e23) || (e12 && e30))) {
        // The cycle was split in half: restore it and cut the pendants.
        if (e01) {
          drop(s->v[0], s->v[1]);
          drop(s->v[2], s->v[3]);
        } else {
          drop(s->v[1], s->v[2]);
          drop(s->v[3], s->v[0]);
        }
        for (int i = 0; i < 4; ++i) put(s->v[i], s->w[i]);
      } else if (on_cycle == 0) {
        // The cycle survived whole, so its outer attachments were cut.
        if (!has(s->z1, s->v[0]))
          throw InternalError("ring-contraction lift: surviving cycle keeps its attachment");
        drop(s->z1, s->v[0]);
        put(s->z1, s->w[0]);
        put(s->v[0], s->v[1]);
        put(s->v[2], s->v[3]);
        if (s->z >= 0) {
          if (!has(s->z, s->v[2]))
            throw InternalError("ring-contraction lift: surviving cycle keeps its attachment");
          drop(s->z, s->v[2]);
          put(s->z, s->z_attach);
        }
      } else {
        throw InternalError("ring-contraction lift: cycle edges in the deletion set are not an opposite pair");
      }
    } else if (const auto* s = std::get_if<PendantPathGadgetStep>(&*it)) {
      const VertexId ws = s->w[s->s - 1];
      if (has(s->x, ws))
        throw InternalError("pendant-path lift: guard edge deleted");
      if (has(ws, s->w[2])) {
        drop(ws, s->w[2]);
        for (int i = 0; i < 3; ++i) put(s->v[i], s->w[i]);
      } else {
        put(s->v[1], s->v[2]);
        put(s->v[3], s->v[0]);
      }
    } else if (const auto* s = std::get_if<CycleShrinkStep>(&*it)) {
      if (has(s->v[0], s->v[1]))
        throw InternalError("cycle-shrink lift: edge with spent budget deleted");
      if (!has(s->v[0], s->pendant)) {
        put(s->v[1], s->v[2]);
        put(s->v[3], s->v[0]);
      }
    } else if (const auto* s = std::get_if<CyclePathGadgetStep>(&*it)) {
      if (has(s->q[0], s->x) || has(s->y, s->q[3]))
        throw InternalError("cycle-path lift: edge with spent budget deleted");
      if (has(s->q[1], s->q[2])) {
        // Option one: the path was split in the middle, both outward edges
        // fell; the cycle survives whole.
        if (!has(s->x, s->x_out) || !has(s->y, s->y_out))
          throw InternalError("cycle-path lift: split path keeps an outward edge");
        drop(s->q[1], s->q[2]);
      } else if (has(s->x, s->q[1])) {
        // Option two: both inner gadget edges fell; the cycle loses the
        // opposite pair that keeps one cycle edge at each branch vertex.
        if (!has(s->q[2], s->y))
          throw InternalError("cycle-path lift: inner gadget edges deleted on one side only");
        drop(s->x, s->q[1]);
        drop(s->q[2], s->y);
        put(s->v[1], s->v[2]);
        put(s->v[3], s->v[0]);
      } else {
        throw InternalError("cycle-path lift: gadget path not split");
      }
    } else if (const auto* s = std::get_if<NormalizeEdgeCutStep>(&*it)) {
      put(s->u, s->w);
    }
    // ComponentSplitStep: bookkeeping only, nothing to fold.
  }

  EditSolution out;
  out.deletions.assign(dels.begin(), dels.end());
  for (const Edge& e : out.deletions)
    if (e.u < 0 || e.v >= original.id_bound() || !original.alive(e.u) ||
        !original.alive(e.v) || !original.has_edge(e.u, e.v))
      throw InternalError("lift: deletion " + std::to_string(e.u) + "-" +
                          std::to_string(e.v) + " is not an original edge");

  // Additions: every missing pair inside a surviving component. Each must be
  // an addable non-edge, and together they must form a matching.
  Instance residue = original;
  for (const Edge& e : out.deletions) residue.remove_edge(e.u, e.v);
  std::vector<int> add_load(static_cast<std::size_t>(original.id_bound()), 0);
  for (const std::vector<VertexId>& comp : components(residue)) {
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (std::size_t j = i + 1; j < comp.size(); ++j) {
        if (residue.has_edge(comp[i], comp[j])) continue;
        if (!is_addable_pair(original, comp[i], comp[j]))
          throw InternalError("lift: surviving component needs a pair that cannot be added");
        if (++add_load[static_cast<std::size_t>(comp[i])] > 1 ||
            ++add_load[static_cast<std::size_t>(comp[j])] > 1)
          throw InternalError("lift: recomputed additions are not a matching");
        out.additions.push_back(make_edge(comp[i], comp[j]));
      }
    }
  }
  std::sort(out.additions.begin(), out.additions.end());
  return out;
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

namespace detail {

inline std::array<VertexId, 4> cycle_witness(const Violation& v) {
  return {v.witness[0], v.witness[1], v.witness[2], v.witness[3]};
}

}  // namespace detail

inline Verdict solve(const Instance& input, const SolveOptions& options = {}) {
  Verdict verdict;
  SolveStats& stats = verdict.stats;
  const std::int64_t n0 = input.num_vertices();
  stats.step_cap = 64 * n0 * n0 * n0;
  stats.peak_vertices = input.num_vertices();
  const bool need_trace = options.want_certificate || options.want_trace;

  Instance work = input;
  std::vector<ReductionStep> trace;
  std::vector<Edge> reduced_deletions;

  std::deque<std::vector<VertexId>> queue;
  for (std::vector<VertexId>& comp : components(work)) queue.push_back(std::move(comp));

  while (!queue.empty()) {
    std::vector<VertexId> comp = std::move(queue.front());
    queue.pop_front();

    std::optional<Violation> viol = find_violation_in(work, comp);
    if (!viol) {
      // The component sits inside the restricted class: one matching query.
      if (options.want_certificate) {
        std::optional<EditSolution> sol = solve_special_component(work, comp);
        if (!sol) return verdict;  // answer stays NO
        reduced_deletions.insert(reduced_deletions.end(), sol->deletions.begin(),
                                 sol->deletions.end());
      } else if (!decide_special_component(work, comp)) {
        return verdict;
      }
      ++stats.components_finished;
      continue;
    }

    StepOutcome out;
    switch (viol->kind) {
      case ViolationKind::Triangle:
        out = reduce_triangles(
            work, std::array<VertexId, 3>{viol->witness[0], viol->witness[1],
                                          viol->witness[2]});
        break;
      case ViolationKind::HighDegree:  // triangle-free with degree >= 4
      case ViolationKind::K23:         // forced double deletion at one vertex
        return verdict;
      case ViolationKind::C4FourDeg3:
        out = reduce_c4_four_deg3(work, detail::cycle_witness(*viol));
        break;
      case ViolationKind::C4ThreeDeg3:
        out = reduce_c4_three_deg3(work, detail::cycle_witness(*viol));
        break;
      case ViolationKind::C4General:
        out = reduce_c4_general(work, detail::cycle_witness(*viol));
        break;
      case ViolationKind::SpecialBreach:
        out = normalize_special(work, *viol);
        break;
    }

    if (out.decided) {
      if (!out.answer) return verdict;
      throw InternalError("solve: rewriting step decided YES");
    }

    if (++stats.total_steps > stats.step_cap)
      throw InternalError("solve: step budget of 64*n^3 exhausted; termination argument violated");
    ++stats.steps_by_kind[step_name(*out.step)];

    const VertexId old_bound = work.id_bound();
    work = std::move(*out.next);
    stats.peak_vertices = std::max(stats.peak_vertices, work.num_vertices());
    if (need_trace) trace.push_back(std::move(*out.step));

    // Whatever remains of this component — survivors plus any vertices the
    // step introduced — goes back on the queue, split if it fell apart.
    std::vector<VertexId> remnant;
    for (VertexId v : comp)
      if (work.alive(v)) remnant.push_back(v);
    for (VertexId v = old_bound; v < work.id_bound(); ++v)
      if (work.alive(v)) remnant.push_back(v);
    if (remnant.empty()) continue;
    std::vector<std::vector<VertexId>> parts = components_within(work, remnant);
    if (parts.size() > 1 && need_trace) trace.push_back(ComponentSplitStep{parts});
    for (std::vector<VertexId>& part : parts) queue.push_back(std::move(part));
  }

  verdict.answer = true;
  if (options.want_certificate) {
    EditSolution cert = lift_solution(
        input, trace, EditSolution{std::move(reduced_deletions), {}});
    const std::string flaw = verify_solution(input, cert);
    if (!flaw.empty()) throw InternalError("solve: lifted certificate rejected: " + flaw);
    verdict.certificate = std::move(cert);
  }
  if (options.want_trace) verdict.trace = std::move(trace);
  return verdict;
}

}  // namespace cep11
