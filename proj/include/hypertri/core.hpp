#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "hypergraph.hpp"
#include "threshold.hpp"
#include "vertex_set.hpp"

namespace hypertri {

inline const ShadowIndex& shadow(const Hypergraph& h) { return h.shadow_index(); }

namespace detail {

inline void check_vertex(const Hypergraph& h, Vertex v) {
  if (v < 0 || v >= h.vertex_count()) {
    throw RangeError("vertex " + std::to_string(v) + " outside [0," + std::to_string(h.vertex_count()) + ")");
  }
}

inline void check_shadow_level(const Hypergraph& h, int i) {
  if (i < 1 || i > h.uniformity() - 1) {
    throw RangeError("shadow level " + std::to_string(i) + " outside [1," + std::to_string(h.uniformity() - 1) + "]");
  }
}

}  // namespace detail

/**
 * i-th shadow: the (r-i)-sets contained in some edge. Computed by iterating
 * the one-step shadow i times; the result is in colex order.
 */
inline std::vector<VertexSet> ith_shadow(const Hypergraph& h, int i) {
  detail::check_shadow_level(h, i);
  std::set<VertexSet> level(h.edges().begin(), h.edges().end());
  for (int step = 0; step < i; ++step) {
    std::set<VertexSet> next;
    for (const VertexSet& s : level) {
      s.for_each([&](Vertex v) {
        VertexSet t = s;
        t.erase(v);
        next.insert(t);
      });
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

// All u != v that share an edge with v.
inline VertexSet neighborhood_of_vertex(const Hypergraph& h, Vertex v) {
  detail::check_vertex(h, v);
  VertexSet out;
  for (const VertexSet& e : h.edges()) {
    if (e.contains(v)) out |= e;
  }
  out.erase(v);
  return out;
}

inline int vertex_degree(const Hypergraph& h, Vertex v) {
  detail::check_vertex(h, v);
  int d = 0;
  for (const VertexSet& e : h.edges()) d += e.contains(v) ? 1 : 0;
  return d;
}

// Link of S: the sets e disjoint from S with S + e an edge.
inline std::vector<VertexSet> link_of_set(const Hypergraph& h, const VertexSet& s) {
  const int k = s.size();
  if (k < 1 || k > h.uniformity() - 1) {
    throw RangeError("link set size " + std::to_string(k) + " outside [1," + std::to_string(h.uniformity() - 1) + "]");
  }
  if (!s.is_subset_of(VertexSet::prefix(h.vertex_count()))) throw RangeError("link set has a vertex >= n");
  std::vector<VertexSet> out;
  for (const VertexSet& e : h.edges()) {
    if (s.is_subset_of(e)) out.push_back(e - s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline int set_degree(const Hypergraph& h, const VertexSet& s) { return static_cast<int>(link_of_set(h, s).size()); }

// Minimum neighborhood size over the shadow; 0 for an edgeless hypergraph.
inline int min_positive_codegree(const Hypergraph& h) {
  const ShadowIndex& idx = h.shadow_index();
  if (idx.empty()) return 0;
  int best = std::numeric_limits<int>::max();
  for (const auto& [key, nbrs] : idx) best = std::min(best, nbrs.size());
  return best;
}

/**
 * Positive minimum i-degree: the least number of edges through an i-set that
 * lies in at least one edge. Level r-1 is the minimum positive codegree.
 * Returns 0 when there are no edges.
 */
inline int min_positive_idegree(const Hypergraph& h, int i) {
  detail::check_shadow_level(h, i);
  std::map<VertexSet, int> deg;
  for (const VertexSet& e : h.edges()) {
    for_each_subset(e, i, [&](const VertexSet& s) { ++deg[s]; });
  }
  if (deg.empty()) return 0;
  int best = std::numeric_limits<int>::max();
  for (const auto& [s, d] : deg) best = std::min(best, d);
  return best;
}

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
  Fraction average;  // r*m/n
};

inline DegreeStats degree_stats(const Hypergraph& h) {
  const int n = h.vertex_count();
  if (n == 0) throw ContractError("degree statistics are undefined on zero vertices");
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const VertexSet& e : h.edges()) e.for_each([&](Vertex v) { ++deg[static_cast<std::size_t>(v)]; });
  const auto [lo, hi] = std::minmax_element(deg.begin(), deg.end());
  return {*lo, *hi, Fraction(static_cast<std::int64_t>(h.uniformity()) * static_cast<std::int64_t>(h.edge_count()), n)};
}

// True iff every edge meets `set` in at most one vertex.
inline bool is_independent(const Hypergraph& h, const VertexSet& set) {
  return std::none_of(h.edges().begin(), h.edges().end(),
                      [&](const VertexSet& e) { return (e & set).size() > 1; });
}

}  // namespace hypertri
