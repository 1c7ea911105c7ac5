#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "hypergraph.hpp"

namespace hypertri {

/*
 * `.hg` text format
 *
 *   # comment lines start with '#'
 *   r n m
 *   v_1 ... v_r      (m lines, ascending vertex ids)
 *
 * Blank lines are skipped. Duplicate edges, unsorted edges, out-of-range
 * ids and a wrong edge count are parse errors.
 */

namespace detail {

inline bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

inline std::vector<long long> parse_ints(const std::string& line, std::size_t lineno) {
  std::istringstream in(line);
  std::vector<long long> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw ParseError(lineno, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(lineno, "expected an integer, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace detail

inline Hypergraph parse_hg(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  long long r = 0, n = 0, m = 0;
  std::vector<VertexSet> edges;
  std::vector<std::size_t> edge_lines;

  while (std::getline(in, line)) {
    ++lineno;
    if (detail::blank_or_comment(line)) continue;
    const auto ints = detail::parse_ints(line, lineno);
    if (!have_header) {
      if (ints.size() != 3) throw ParseError(lineno, "header must be 'r n m'");
      r = ints[0];
      n = ints[1];
      m = ints[2];
      if (r < 2) throw ParseError(lineno, "uniformity must be at least 2");
      if (n < 0 || m < 0) throw ParseError(lineno, "negative vertex or edge count");
      if (n > kMaxVertices) {
        throw CapacityError("vertex count " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
      }
      have_header = true;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) throw ParseError(lineno, "more edge lines than declared m");
    if (static_cast<long long>(ints.size()) != r) {
      throw ParseError(lineno, "edge must list exactly " + std::to_string(r) + " vertices");
    }
    VertexSet e;
    for (std::size_t i = 0; i < ints.size(); ++i) {
      if (ints[i] < 0 || ints[i] >= n) throw ParseError(lineno, "vertex " + std::to_string(ints[i]) + " outside [0,n)");
      if (i > 0 && ints[i] <= ints[i - 1]) throw ParseError(lineno, "edge vertices must be strictly ascending");
      e.insert(static_cast<Vertex>(ints[i]));
    }
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (edges[j] == e) {
        throw ParseError(lineno, "duplicate edge (first seen on line " + std::to_string(edge_lines[j]) + ")");
      }
    }
    edges.push_back(e);
    edge_lines.push_back(lineno);
  }
  if (!have_header) throw ParseError(0, "missing 'r n m' header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(0, "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Hypergraph(static_cast<int>(r), static_cast<int>(n), std::move(edges));
}

inline Hypergraph parse_hg(const std::string& text) {
  std::istringstream in(text);
  return parse_hg(in);
}

inline Hypergraph read_hg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open " + path);
  return parse_hg(in);
}

inline std::string to_hg(const Hypergraph& h) {
  std::string out = std::to_string(h.uniformity()) + " " + std::to_string(h.vertex_count()) + " " +
                    std::to_string(h.edge_count()) + "\n";
  for (const VertexSet& e : h.edges()) {
    bool first = true;
    e.for_each([&](Vertex v) {
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
    });
    out += '\n';
  }
  return out;
}

}  // namespace hypertri
