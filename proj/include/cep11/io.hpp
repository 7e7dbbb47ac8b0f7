// io.hpp
//
// Text formats.
//
// Instance file (DIMACS-like; vertices are 1-based in files, 0-based in
// memory):
//
//   c free-form comment
//   p cep11 <n> <m>
//   w <v> <a> <d>        per-vertex budgets, each 0 or 1 (default: 1 1)
//   e <u> <v>            undirected edge, u != v, no duplicates
//
// Exactly one p line, appearing before any w/e line. Every id must lie in
// 1..n, each vertex gets at most one w line, and the number of e lines must
// equal m. Blank lines are ignored. Anything else is an InputError.
//
// Certificate file (vertex numbers refer to the instance file it certifies):
//
//   c free-form comment
//   d <u> <v>            delete edge uv
//   a <u> <v>            add vertex pair uv
//
// Parsing is strictly syntactic; semantic validity of a certificate
// (matching/budget/cluster conditions) is checked by verify_solution.

#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cep11/core.hpp"

namespace cep11 {

namespace detail {

inline InputError parse_error(int line_no, const std::string& what) {
  return InputError("line " + std::to_string(line_no) + ": " + what);
}

// Splits on whitespace.
inline std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

inline long long to_int(const std::string& tok, int line_no) {
  std::size_t pos = 0;
  long long val = 0;
  try {
    val = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw parse_error(line_no, "expected integer, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw parse_error(line_no, "expected integer, got '" + tok + "'");
  return val;
}

// File id -> internal id, bounds-checked.
inline VertexId to_vertex(const std::string& tok, long long n, int line_no) {
  long long v = to_int(tok, line_no);
  if (v < 1 || v > n)
    throw parse_error(line_no, "vertex " + tok + " out of range 1.." +
                                   std::to_string(n));
  return static_cast<VertexId>(v - 1);
}

}  // namespace detail

inline Instance parse_instance(std::istream& in) {
  Instance g;
  bool have_header = false;
  long long n = 0, m = 0, edges_seen = 0;
  std::vector<char> weighted;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = detail::tokens_of(line);
    if (toks.empty()) continue;
    const std::string& tag = toks[0];
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_header) throw detail::parse_error(line_no, "duplicate p line");
      if (toks.size() != 4 || toks[1] != "cep11")
        throw detail::parse_error(line_no, "expected 'p cep11 <n> <m>'");
      n = detail::to_int(toks[2], line_no);
      m = detail::to_int(toks[3], line_no);
      if (n < 0 || m < 0)
        throw detail::parse_error(line_no, "negative count in p line");
      have_header = true;
      for (long long i = 0; i < n; ++i) g.add_vertex();
      weighted.assign(static_cast<std::size_t>(n), 0);
      continue;
    }
    if (!have_header)
      throw detail::parse_error(line_no, "'" + tag + "' line before p line");
    if (tag == "w") {
      if (toks.size() != 4)
        throw detail::parse_error(line_no, "expected 'w <v> <a> <d>'");
      VertexId v = detail::to_vertex(toks[1], n, line_no);
      long long a = detail::to_int(toks[2], line_no);
      long long d = detail::to_int(toks[3], line_no);
      if ((a != 0 && a != 1) || (d != 0 && d != 1))
        throw detail::parse_error(line_no, "budgets must be 0 or 1");
      if (weighted[v])
        throw detail::parse_error(line_no, "duplicate w line for vertex " +
                                               toks[1]);
      weighted[v] = 1;
      g.set_a_budget(v, static_cast<int>(a));
      g.set_d_budget(v, static_cast<int>(d));
      continue;
    }
    if (tag == "e") {
      if (toks.size() != 3)
        throw detail::parse_error(line_no, "expected 'e <u> <v>'");
      VertexId u = detail::to_vertex(toks[1], n, line_no);
      VertexId v = detail::to_vertex(toks[2], n, line_no);
      if (u == v) throw detail::parse_error(line_no, "self loop");
      if (g.has_edge(u, v))
        throw detail::parse_error(line_no, "duplicate edge");
      g.add_edge(u, v);
      ++edges_seen;
      continue;
    }
    throw detail::parse_error(line_no, "unknown line type '" + tag + "'");
  }
  if (!have_header) throw InputError("missing p line");
  if (edges_seen != m)
    throw InputError("p line promises " + std::to_string(m) + " edges, file has " +
                     std::to_string(edges_seen));
  return g;
}

// Writes the instance with live vertices renumbered 1..n in ascending id
// order. Budget lines are emitted only for non-default budgets.
inline void serialize_instance(const Instance& g, std::ostream& out,
                               const std::string& comment = "") {
  if (!comment.empty()) out << "c " << comment << "\n";
  auto verts = g.vertices();
  std::vector<long long> file_id(g.id_bound(), 0);
  for (std::size_t i = 0; i < verts.size(); ++i) file_id[verts[i]] = i + 1;
  out << "p cep11 " << verts.size() << " " << g.num_edges() << "\n";
  for (VertexId v : verts)
    if (g.a_budget(v) != 1 || g.d_budget(v) != 1)
      out << "w " << file_id[v] << " " << g.a_budget(v) << " " << g.d_budget(v)
          << "\n";
  for (const Edge& e : g.edges())
    out << "e " << file_id[e.u] << " " << file_id[e.v] << "\n";
}

// Reads a certificate against an instance with n_file_vertices vertices.
inline EditSolution parse_certificate(std::istream& in,
                                      long long n_file_vertices) {
  EditSolution sol;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = detail::tokens_of(line);
    if (toks.empty()) continue;
    const std::string& tag = toks[0];
    if (tag == "c") continue;
    if (tag != "d" && tag != "a")
      throw detail::parse_error(line_no, "unknown line type '" + tag + "'");
    if (toks.size() != 3)
      throw detail::parse_error(line_no,
                                "expected '" + tag + " <u> <v>'");
    VertexId u = detail::to_vertex(toks[1], n_file_vertices, line_no);
    VertexId v = detail::to_vertex(toks[2], n_file_vertices, line_no);
    if (u == v) throw detail::parse_error(line_no, "self loop");
    (tag == "d" ? sol.deletions : sol.additions).push_back(make_edge(u, v));
  }
  return sol;
}

inline void serialize_certificate(const EditSolution& sol, std::ostream& out) {
  for (const Edge& e : sol.deletions)
    out << "d " << e.u + 1 << " " << e.v + 1 << "\n";
  for (const Edge& e : sol.additions)
    out << "a " << e.u + 1 << " " << e.v + 1 << "\n";
}

}  // namespace cep11
