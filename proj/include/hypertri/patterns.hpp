#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "errors.hpp"
#include "hypergraph.hpp"
#include "vertex_set.hpp"

namespace hypertri {

// Injective pattern-vertex -> host-vertex map sending pattern edges to host edges.
struct Embedding {
  Hypergraph pattern;
  Hypergraph host;
  std::vector<Vertex> map;
};

// Three host edges with |A & B| = r-1 and (A ^ B) contained in C.
struct SigmaWitness {
  VertexSet a;
  VertexSet b;
  VertexSet c;

  friend bool operator==(const SigmaWitness&, const SigmaWitness&) = default;
};

inline bool verify_embedding(const Hypergraph& host, const Hypergraph& pattern, const std::vector<Vertex>& map) {
  if (host.uniformity() != pattern.uniformity()) return false;
  if (static_cast<int>(map.size()) != pattern.vertex_count()) return false;
  VertexSet used;
  for (Vertex v : map) {
    if (v < 0 || v >= host.vertex_count() || used.contains(v)) return false;
    used.insert(v);
  }
  for (const VertexSet& e : pattern.edges()) {
    VertexSet img;
    e.for_each([&](Vertex v) { img.insert(map[static_cast<std::size_t>(v)]); });
    if (!host.has_edge(img)) return false;
  }
  return true;
}

inline bool verify_embedding(const Embedding& emb) { return verify_embedding(emb.host, emb.pattern, emb.map); }

namespace detail {

/*
 * Backtracking subhypergraph search over raw edge masks.
 *
 * Pattern vertices are placed in order of decreasing pattern degree (ties by
 * id); host candidates are tried in ascending id, filtered by degree. After a
 * placement every pattern edge touching the new vertex must map into some
 * host edge (partially mapped edges) or onto a host edge (complete ones).
 * The first map found is returned, so results are deterministic.
 */
class EmbeddingSearch {
 public:
  EmbeddingSearch(int host_n, const std::vector<VertexSet>& host_edges, int pattern_n,
                  const std::vector<VertexSet>& pattern_edges)
      : host_n_(host_n), host_edges_(host_edges), pattern_n_(pattern_n), pattern_edges_(pattern_edges) {
    std::sort(host_edges_.begin(), host_edges_.end());
    host_deg_.assign(static_cast<std::size_t>(host_n_), 0);
    for (const VertexSet& e : host_edges_) e.for_each([&](Vertex v) { ++host_deg_[static_cast<std::size_t>(v)]; });
    pattern_deg_.assign(static_cast<std::size_t>(pattern_n_), 0);
    for (const VertexSet& e : pattern_edges_) e.for_each([&](Vertex v) { ++pattern_deg_[static_cast<std::size_t>(v)]; });

    order_.resize(static_cast<std::size_t>(pattern_n_));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return pattern_deg_[static_cast<std::size_t>(a)] > pattern_deg_[static_cast<std::size_t>(b)];
    });
    position_.assign(static_cast<std::size_t>(pattern_n_), 0);
    for (int p = 0; p < pattern_n_; ++p) position_[static_cast<std::size_t>(order_[static_cast<std::size_t>(p)])] = p;

    // Edges to check when the vertex at position p is placed.
    touching_.resize(static_cast<std::size_t>(pattern_n_));
    for (std::size_t i = 0; i < pattern_edges_.size(); ++i) {
      pattern_edges_[i].for_each([&](Vertex v) { touching_[static_cast<std::size_t>(position_[static_cast<std::size_t>(v)])].push_back(i); });
    }
  }

  std::optional<std::vector<Vertex>> run() {
    if (pattern_n_ > host_n_) return std::nullopt;
    if (pattern_edges_.size() > host_edges_.size()) return std::nullopt;
    map_.assign(static_cast<std::size_t>(pattern_n_), -1);
    used_ = VertexSet{};
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool extend(int pos) {
    if (pos == pattern_n_) return true;
    const Vertex pv = order_[static_cast<std::size_t>(pos)];
    for (Vertex hv = 0; hv < host_n_; ++hv) {
      if (used_.contains(hv)) continue;
      if (host_deg_[static_cast<std::size_t>(hv)] < pattern_deg_[static_cast<std::size_t>(pv)]) continue;
      map_[static_cast<std::size_t>(pv)] = hv;
      used_.insert(hv);
      if (consistent(pos) && extend(pos + 1)) return true;
      used_.erase(hv);
      map_[static_cast<std::size_t>(pv)] = -1;
    }
    return false;
  }

  bool consistent(int pos) const {
    for (std::size_t ei : touching_[static_cast<std::size_t>(pos)]) {
      const VertexSet& pe = pattern_edges_[ei];
      VertexSet img;
      bool complete = true;
      pe.for_each([&](Vertex v) {
        if (position_[static_cast<std::size_t>(v)] <= pos) img.insert(map_[static_cast<std::size_t>(v)]);
        else complete = false;
      });
      if (complete) {
        if (!std::binary_search(host_edges_.begin(), host_edges_.end(), img)) return false;
      } else if (img.size() >= 2) {
        const bool covered = std::any_of(host_edges_.begin(), host_edges_.end(),
                                         [&](const VertexSet& he) { return img.is_subset_of(he); });
        if (!covered) return false;
      }
    }
    return true;
  }

  int host_n_;
  std::vector<VertexSet> host_edges_;
  int pattern_n_;
  std::vector<VertexSet> pattern_edges_;
  std::vector<int> host_deg_;
  std::vector<int> pattern_deg_;
  std::vector<Vertex> order_;
  std::vector<int> position_;
  std::vector<std::vector<std::size_t>> touching_;
  std::vector<Vertex> map_;
  VertexSet used_;
};

// Lexicographically least generalized triangle (A, B, C) in colex edge order, if any.
// With `sigma` the third edge may meet A & B.
inline std::optional<SigmaWitness> find_triangle_triple(int r, const std::vector<VertexSet>& edges, bool sigma) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const VertexSet core = edges[i] & edges[j];
      if (core.size() != r - 1) continue;
      const VertexSet diff = edges[i] ^ edges[j];
      for (const VertexSet& c : edges) {
        if (!diff.is_subset_of(c)) continue;
        if (!sigma && c.intersects(core)) continue;
        return SigmaWitness{edges[i], edges[j], c};
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline std::optional<Embedding> find_embedding(const Hypergraph& host, const Hypergraph& pattern) {
  if (host.uniformity() != pattern.uniformity()) {
    throw ContractError("uniformity mismatch: host r=" + std::to_string(host.uniformity()) +
                        ", pattern r=" + std::to_string(pattern.uniformity()));
  }
  detail::EmbeddingSearch search(host.vertex_count(), host.edges(), pattern.vertex_count(), pattern.edges());
  if (auto map = search.run()) return Embedding{pattern, host, std::move(*map)};
  return std::nullopt;
}

// The generalized triangle on 0-based vertices: core {0..r-2}, tips r-1 and r,
// third edge {r-1, r, r+1, ..., 2r-2}.
inline Hypergraph generalized_triangle_pattern(int r) {
  if (r < 2) throw ContractError("generalized triangle needs r >= 2");
  VertexSet core = VertexSet::prefix(r - 1);
  VertexSet a = core, b = core, c;
  a.insert(r - 1);
  b.insert(r);
  for (Vertex v = r - 1; v <= 2 * r - 2; ++v) c.insert(v);
  return Hypergraph(r, 2 * r - 1, {a, b, c});
}

/**
 * Specialized generalized-triangle search: pairs (A, B) sharing r-1 vertices,
 * then an edge C covering A ^ B and missing A & B. The embedding sends the
 * core to A & B (ascending), tips to A - B and B - A, and the remaining
 * pattern vertices to C - (A ^ B) (ascending).
 */
inline std::optional<Embedding> contains_generalized_triangle(const Hypergraph& h) {
  const int r = h.uniformity();
  auto w = detail::find_triangle_triple(r, h.edges(), false);
  if (!w) return std::nullopt;
  const VertexSet core = w->a & w->b;
  std::vector<Vertex> map;
  map.reserve(static_cast<std::size_t>(2 * r - 1));
  core.for_each([&](Vertex v) { map.push_back(v); });
  map.push_back((w->a - w->b).front());
  map.push_back((w->b - w->a).front());
  (w->c - (w->a ^ w->b)).for_each([&](Vertex v) { map.push_back(v); });
  return Embedding{generalized_triangle_pattern(r), h, std::move(map)};
}

inline std::optional<SigmaWitness> contains_sigma(const Hypergraph& h) {
  return detail::find_triangle_triple(h.uniformity(), h.edges(), true);
}

namespace detail {

// Adjacency (as bit masks) of the graph joining vertices that share an edge.
inline std::vector<VertexSet> cooccurrence_graph(int n, const std::vector<VertexSet>& edges) {
  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  for (const VertexSet& e : edges) {
    e.for_each([&](Vertex v) { adj[static_cast<std::size_t>(v)] |= e; });
  }
  for (Vertex v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)].erase(v);
  return adj;
}

inline bool has_clique(const std::vector<VertexSet>& adj, VertexSet candidates, int needed) {
  if (needed <= 0) return true;
  if (candidates.size() < needed) return false;
  while (!candidates.empty()) {
    if (candidates.size() < needed) return false;
    const Vertex v = candidates.front();
    candidates.erase(v);
    const VertexSet& nv = adj[static_cast<std::size_t>(v)];
    // Degree pruning: v needs needed-1 neighbours among the remaining candidates.
    if ((nv & candidates).size() >= needed - 1 && has_clique(adj, candidates & nv, needed - 1)) return true;
  }
  return false;
}

}  // namespace detail

/**
 * k-clique in the (r-2)-th shadow, which is the graph of vertex pairs that
 * lie in a common edge. Other shadow levels are rejected.
 */
inline bool contains_clique_in_ith_shadow(const Hypergraph& h, int k, int i) {
  if (i != h.uniformity() - 2) {
    throw ContractError("clique search supports only shadow level r-2 = " + std::to_string(h.uniformity() - 2));
  }
  if (k <= 0) return true;
  const int n = h.vertex_count();
  if (k == 1) return !h.edges().empty();
  const auto adj = detail::cooccurrence_graph(n, h.edges());
  return detail::has_clique(adj, VertexSet::prefix(n), k);
}

/**
 * Expansion of K_{l+1}: core vertices 0..l, then for each core pair (i, j)
 * in lexicographic order a fresh block of r-2 vertices padding that pair.
 */
inline Hypergraph expansion_of_clique(int r, int ell) {
  if (r < 3 || ell < r) throw ContractError("expansion needs l >= r >= 3");
  const int core = ell + 1;
  const int pairs = core * (core - 1) / 2;
  const int n = core + (r - 2) * pairs;
  if (n > kMaxVertices) throw CapacityError("expansion has " + std::to_string(n) + " vertices");
  std::vector<VertexSet> edges;
  Vertex next = core;
  for (Vertex i = 0; i < core; ++i) {
    for (Vertex j = i + 1; j < core; ++j) {
      VertexSet e{i, j};
      for (int t = 0; t < r - 2; ++t) e.insert(next++);
      edges.push_back(e);
    }
  }
  return Hypergraph(r, n, std::move(edges));
}

inline bool contains_expansion(const Hypergraph& h, int ell) {
  if (h.uniformity() < 3 || ell < h.uniformity()) throw ContractError("expansion needs l >= r >= 3");
  const int r = h.uniformity();
  const int core = ell + 1;
  const long long need = core + static_cast<long long>(r - 2) * core * (core - 1) / 2;
  if (need > h.vertex_count()) return false;
  return find_embedding(h, expansion_of_clique(r, ell)).has_value();
}

}  // namespace hypertri
