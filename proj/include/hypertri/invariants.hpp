#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "core.hpp"
#include "hg_io.hpp"
#include "hypergraph.hpp"
#include "patterns.hpp"
#include "search.hpp"

// Structural identities and the codegree structure results as executable checks. Each
// check returns human-readable violation messages; an empty result means the
// hypergraph satisfies the property (or does not meet its hypotheses).

namespace hypertri::invariants {

using Violations = std::vector<std::string>;

namespace detail {

inline std::string describe(const Hypergraph& h) {
  std::string s = to_hg(h);
  for (char& c : s) {
    if (c == '\n') c = ';';
  }
  return s;
}

}  // namespace detail

// The shadow entries rebuild the edge set, and sum |N(e)| = r * |E|.
inline Violations shadow_reconstruction(const Hypergraph& h) {
  Violations out;
  std::vector<VertexSet> rebuilt;
  long long total = 0;
  for (const auto& [key, nbrs] : h.shadow_index()) {
    if (nbrs.empty()) out.push_back("empty neighbourhood stored for " + key.to_string());
    total += nbrs.size();
    nbrs.for_each([&](Vertex v) {
      VertexSet e = key;
      e.insert(v);
      rebuilt.push_back(e);
    });
  }
  std::sort(rebuilt.begin(), rebuilt.end());
  rebuilt.erase(std::unique(rebuilt.begin(), rebuilt.end()), rebuilt.end());
  if (rebuilt != h.edges()) out.push_back("shadow does not reconstruct the edges of " + detail::describe(h));
  if (total != static_cast<long long>(h.uniformity()) * static_cast<long long>(h.edge_count())) {
    out.push_back("sum of codegrees != r*m for " + detail::describe(h));
  }
  return out;
}

// For every v: the union of N(e) over shadow sets e containing v is N(v).
inline Violations union_identity(const Hypergraph& h) {
  Violations out;
  std::vector<VertexSet> via_shadow(static_cast<std::size_t>(h.vertex_count()));
  for (const auto& [key, nbrs] : h.shadow_index()) {
    key.for_each([&](Vertex v) { via_shadow[static_cast<std::size_t>(v)] |= nbrs; });
  }
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (via_shadow[static_cast<std::size_t>(v)] != neighborhood_of_vertex(h, v)) {
      out.push_back("union identity fails at vertex " + std::to_string(v) + " of " + detail::describe(h));
    }
  }
  return out;
}

// T_r-free with minimum positive codegree >= r.
inline bool meets_structure_hypotheses(const Hypergraph& h) {
  return !h.edges().empty() && min_positive_codegree(h) >= h.uniformity() && !contains_generalized_triangle(h);
}

// T_r-free and codegree >= r implies no member of Sigma_r.
inline Violations sigma_freeness(const Hypergraph& h) {
  if (!meets_structure_hypotheses(h)) return {};
  if (auto w = contains_sigma(h)) {
    return {"Sigma_r witness " + w->a.to_string() + w->b.to_string() + w->c.to_string() + " in " + detail::describe(h)};
  }
  return {};
}

/**
 * For every edge e = {u_1..u_r} of a T_r-free hypergraph with codegree >= r,
 * the sets N(e - u_i) are pairwise disjoint, independent, and miss N(u_i).
 */
inline Violations edge_neighbourhood_structure(const Hypergraph& h) {
  if (!meets_structure_hypotheses(h)) return {};
  Violations out;
  std::vector<VertexSet> vertex_nbr(static_cast<std::size_t>(h.vertex_count()));
  for (Vertex v = 0; v < h.vertex_count(); ++v) vertex_nbr[static_cast<std::size_t>(v)] = neighborhood_of_vertex(h, v);
  for (const VertexSet& e : h.edges()) {
    const std::vector<Vertex> us = e.members();
    std::vector<VertexSet> parts;
    for (Vertex u : us) {
      VertexSet face = e;
      face.erase(u);
      parts.push_back(h.shadow_index().neighborhood(face));
    }
    for (std::size_t i = 0; i < us.size(); ++i) {
      if (parts[i].intersects(vertex_nbr[static_cast<std::size_t>(us[i])])) {
        out.push_back("N(e-u) meets N(u) for e=" + e.to_string() + " u=" + std::to_string(us[i]));
      }
      if (!is_independent(h, parts[i])) {
        out.push_back("N(e-u) not independent for e=" + e.to_string() + " u=" + std::to_string(us[i]));
      }
      for (std::size_t j = i + 1; j < us.size(); ++j) {
        if (parts[i].intersects(parts[j])) out.push_back("face neighbourhoods overlap for e=" + e.to_string());
      }
    }
  }
  return out;
}

/**
 * Expansion criterion: no K_{l+1} in the (r-2)-th shadow and codegree above
 * (r-2)C(l,2) rule out a copy of H_{l+1}^r. Reported as a violation when a
 * copy exists anyway.
 */
inline Violations expansion_criterion(const Hypergraph& h, int ell) {
  const int r = h.uniformity();
  const long long bound = static_cast<long long>(r - 2) * ell * (ell - 1) / 2;
  if (contains_clique_in_ith_shadow(h, ell + 1, r - 2)) return {};
  if (min_positive_codegree(h) <= bound) return {};
  if (contains_expansion(h, ell)) return {"expansion present despite clique-free shadow in " + detail::describe(h)};
  return {};
}

// Every check above that applies to an arbitrary hypergraph.
inline Violations all_structural(const Hypergraph& h) {
  Violations out;
  for (auto* check : {&shadow_reconstruction, &union_identity, &sigma_freeness, &edge_neighbourhood_structure}) {
    auto v = check(h);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fixture families

// Every named construction at small parameters.
inline std::vector<Hypergraph> construction_fixtures() {
  std::vector<Hypergraph> out;
  for (int r = 3; r <= 5; ++r) {
    out.push_back(generalized_triangle(r));
    out.push_back(wheel5(r));
    out.push_back(complete(r, 2 * r - 2));
    for (int n = 2 * r - 2; n <= 2 * r + 2; ++n) out.push_back(clique_plus_isolated(r, n));
  }
  for (int n = 3; n <= 12; ++n) out.push_back(balanced_r_partite(3, n));
  for (int n = 4; n <= 12; ++n) out.push_back(balanced_r_partite(4, n));
  out.push_back(wheel5_blowup(3, wheel5_tight_sizes(3, 7)));
  out.push_back(wheel5_blowup(3, wheel5_tight_sizes(3, 14)));
  out.push_back(wheel5_blowup(3, wheel5_tight_sizes(3, 21)));
  out.push_back(wheel5_blowup(4, wheel5_tight_sizes(4, 9)));
  out.push_back(wheel5_blowup(4, wheel5_tight_sizes(4, 18)));
  out.push_back(expansion_of_clique(3, 3));
  out.push_back(expansion_of_clique(3, 4));
  return out;
}

// `count` seeded greedy T_r-free hypergraphs with r in {3,4} and n <= 10.
inline std::vector<Hypergraph> random_triangle_free_fixtures(std::size_t count, std::uint64_t seed) {
  std::vector<Hypergraph> out;
  out.reserve(count);
  std::mt19937_64 rng(seed);
  const std::vector<ForbiddenPattern> forbid = {GeneralizedTriangleMode{}};
  while (out.size() < count) {
    const int r = 3 + static_cast<int>(rng() % 2);
    const int n = r + static_cast<int>(rng() % static_cast<std::uint64_t>(11 - r));
    const int slots = static_cast<int>(hypertri::detail::binom(n, r));
    const int target = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(slots));
    out.push_back(random_pattern_free(r, n, target, forbid, rng()));
  }
  return out;
}

/**
 * T_r-free blowups with every class of size r or r+1, so that the codegree
 * is at least r. Bases are the 3-uniform 5-wheel or a small random T_r-free
 * graph on r or r+1 vertices; at most 24 vertices.
 */
inline std::vector<Hypergraph> random_blowup_fixtures(std::size_t count, std::uint64_t seed) {
  std::vector<Hypergraph> out;
  out.reserve(count);
  std::mt19937_64 rng(seed);
  const std::vector<ForbiddenPattern> forbid = {GeneralizedTriangleMode{}};
  while (out.size() < count) {
    const int r = 3 + static_cast<int>(rng() % 2);
    const bool wheel = r == 3 && rng() % 2 == 0;
    const Hypergraph base = wheel ? wheel5(r)
                                  : random_pattern_free(r, r + static_cast<int>(rng() % 2),
                                                        1 + static_cast<int>(rng() % 3), forbid, rng());
    std::vector<int> sizes;
    int total = 0;
    for (int v = 0; v < base.vertex_count(); ++v) {
      sizes.push_back(r + static_cast<int>(rng() % 2));
      total += sizes.back();
    }
    if (total > 24) continue;
    Hypergraph h = blowup({base, sizes});
    if (contains_generalized_triangle(h)) continue;
    out.push_back(std::move(h));
  }
  return out;
}

/**
 * Random 3-graphs on n in [10, 14] vertices containing a planted expansion
 * H_4^3 on randomly chosen vertices, plus each other slot with probability p.
 */
inline std::vector<Hypergraph> planted_expansion_fixtures(std::size_t count, std::uint64_t seed) {
  std::vector<Hypergraph> out;
  std::mt19937_64 rng(seed);
  const Hypergraph pattern = expansion_of_clique(3, 3);
  while (out.size() < count) {
    const int n = 10 + static_cast<int>(rng() % 5);
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
    std::vector<VertexSet> edges;
    for (const VertexSet& e : pattern.edges()) {
      VertexSet img;
      e.for_each([&](Vertex v) { img.insert(perm.at(static_cast<std::size_t>(v))); });
      edges.push_back(img);
    }
    const std::uint64_t per_mille = rng() % 400;
    for_each_subset(VertexSet::prefix(n), 3, [&](const VertexSet& e) {
      if (rng() % 1000 < per_mille) edges.push_back(e);
    });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    out.emplace_back(3, n, std::move(edges));
  }
  return out;
}

}  // namespace hypertri::invariants
