#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "hypergraph.hpp"
#include "patterns.hpp"
#include "vertex_set.hpp"

// Vertex numbering is fixed per generator so fixtures and witnesses are stable:
//   wheels:     hub u_1..u_{r-2} first, then rim v_1..v_5
//   blowups:    classes in base-vertex order, clones consecutive
//   r-partite:  parts in declaration order, larger parts first
//   expansions: core vertices first, then one padding block per core pair

namespace hypertri {

namespace detail {

inline void check_size(long long n) {
  if (n > kMaxVertices) throw CapacityError("construction needs " + std::to_string(n) + " vertices");
}

}  // namespace detail

inline Hypergraph complete(int r, int m) {
  if (r < 2 || m < r) throw ContractError("complete r-graph needs m >= r >= 2");
  detail::check_size(m);
  std::vector<VertexSet> edges;
  for_each_subset(VertexSet::prefix(m), r, [&](const VertexSet& e) { edges.push_back(e); });
  return Hypergraph(r, m, std::move(edges));
}

inline Hypergraph generalized_triangle(int r) { return generalized_triangle_pattern(r); }

inline Hypergraph wheel5(int r) {
  if (r < 3) throw ContractError("5-wheel needs r >= 3");
  const VertexSet hub = VertexSet::prefix(r - 2);
  const Vertex rim0 = r - 2;
  std::vector<VertexSet> edges;
  for (int i = 0; i < 5; ++i) {
    VertexSet e = hub;
    e.insert(rim0 + i);
    e.insert(rim0 + (i + 1) % 5);
    edges.push_back(e);
  }
  return Hypergraph(r, r + 3, std::move(edges));
}

struct BlowupSpec {
  Hypergraph base;
  std::vector<int> sizes;
};

// Vertex v of the base becomes the class [offset[v], offset[v] + sizes[v]); each
// base edge becomes every transversal of its classes.
inline Hypergraph blowup(const BlowupSpec& spec) {
  const Hypergraph& base = spec.base;
  if (static_cast<int>(spec.sizes.size()) != base.vertex_count()) {
    throw ContractError("blowup needs one size per base vertex (" + std::to_string(base.vertex_count()) + ")");
  }
  std::vector<int> offset;
  long long total = 0;
  for (int s : spec.sizes) {
    if (s < 1) throw ContractError("blowup class sizes must be positive");
    offset.push_back(static_cast<int>(total));
    total += s;
  }
  detail::check_size(total);

  std::vector<VertexSet> edges;
  for (const VertexSet& e : base.edges()) {
    const std::vector<Vertex> verts = e.members();
    std::vector<int> pick(verts.size(), 0);
    while (true) {
      VertexSet img;
      for (std::size_t i = 0; i < verts.size(); ++i) {
        img.insert(offset[static_cast<std::size_t>(verts[i])] + pick[i]);
      }
      edges.push_back(img);
      std::size_t i = 0;
      while (i < verts.size() && ++pick[i] == spec.sizes[static_cast<std::size_t>(verts[i])]) pick[i++] = 0;
      if (i == verts.size()) break;
    }
  }
  return Hypergraph(base.uniformity(), static_cast<int>(total), std::move(edges));
}

// Sizes (2n/(2r+1) x (r-2), n/(2r+1) x 5) for n divisible by 2r+1.
inline std::vector<int> wheel5_tight_sizes(int r, int n) {
  if (r < 3) throw ContractError("5-wheel needs r >= 3");
  if (n <= 0 || n % (2 * r + 1) != 0) {
    throw ContractError("tight 5-wheel blowup needs n a positive multiple of 2r+1 = " + std::to_string(2 * r + 1));
  }
  const int unit = n / (2 * r + 1);
  std::vector<int> sizes(static_cast<std::size_t>(r - 2), 2 * unit);
  sizes.insert(sizes.end(), 5, unit);
  return sizes;
}

inline Hypergraph wheel5_blowup(int r, const std::vector<int>& sizes) { return blowup({wheel5(r), sizes}); }

inline std::vector<int> balanced_part_sizes(int r, int n) {
  std::vector<int> sizes;
  for (int i = 0; i < r; ++i) sizes.push_back(n / r + (i < n % r ? 1 : 0));
  return sizes;
}

inline Hypergraph balanced_r_partite(int r, int n) {
  if (r < 2 || n < r) throw ContractError("balanced r-partite r-graph needs n >= r >= 2");
  detail::check_size(n);
  // Blowup of a single edge.
  return blowup({Hypergraph(r, r, {VertexSet::prefix(r)}), balanced_part_sizes(r, n)});
}

// K_{2r-2}^r on 0..2r-3 followed by isolated vertices.
inline Hypergraph clique_plus_isolated(int r, int n) {
  if (r < 2 || n < 2 * r - 2) throw ContractError("clique plus isolated vertices needs n >= 2r-2");
  detail::check_size(n);
  const Hypergraph k = complete(r, 2 * r - 2);
  return Hypergraph(r, n, k.edges());
}

}  // namespace hypertri
