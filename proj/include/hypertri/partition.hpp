#pragma once

#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "hypergraph.hpp"
#include "patterns.hpp"
#include "vertex_set.hpp"

namespace hypertri {

// parts[v] in [0, r); labels are arbitrary.
struct PartitionCertificate {
  std::vector<int> parts;
};

// Every edge must take its r vertices from r distinct parts.
inline bool verify_partition(const Hypergraph& h, const PartitionCertificate& cert) {
  if (static_cast<int>(cert.parts.size()) != h.vertex_count()) {
    throw ContractError("certificate assigns " + std::to_string(cert.parts.size()) + " of " +
                        std::to_string(h.vertex_count()) + " vertices");
  }
  const int r = h.uniformity();
  for (int p : cert.parts) {
    if (p < 0 || p >= r) return false;
  }
  for (const VertexSet& e : h.edges()) {
    unsigned seen = 0;
    bool ok = true;
    e.for_each([&](Vertex v) {
      const unsigned bit = 1U << cert.parts[static_cast<std::size_t>(v)];
      if (seen & bit) ok = false;
      seen |= bit;
    });
    if (!ok) return false;
  }
  return true;
}

namespace detail {

/*
 * Proper r-colouring of the co-occurrence graph. An edge is rainbow iff all
 * of its internal pairs get distinct colours, so this decides r-partiteness.
 * DSATUR order; a vertex may open colour c only if colours 0..c-1 are open.
 */
class Colouring {
 public:
  Colouring(std::vector<VertexSet> adj, int colours) : adj_(std::move(adj)), k_(colours) {
    colour_.assign(adj_.size(), -1);
  }

  bool run(VertexSet active) {
    active_ = active;
    return step(0, 0);
  }

  const std::vector<int>& colours() const { return colour_; }

 private:
  bool step(int coloured, int open) {
    if (coloured == active_.size()) return true;
    // Pick the uncoloured vertex with most distinct neighbour colours, then most uncoloured neighbours.
    Vertex best = -1;
    int best_sat = -1, best_deg = -1;
    unsigned best_used = 0;
    active_.for_each([&](Vertex v) {
      if (colour_[static_cast<std::size_t>(v)] >= 0) return;
      unsigned used = 0;
      int deg = 0;
      adj_[static_cast<std::size_t>(v)].for_each([&](Vertex u) {
        const int c = colour_[static_cast<std::size_t>(u)];
        if (c >= 0) used |= 1U << c;
        else ++deg;
      });
      const int sat = std::popcount(used);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
        best_used = used;
      }
    });
    if (best_sat >= k_) return false;
    const int limit = std::min(k_, open + 1);
    for (int c = 0; c < limit; ++c) {
      if (best_used & (1U << c)) continue;
      colour_[static_cast<std::size_t>(best)] = c;
      if (step(coloured + 1, std::max(open, c + 1))) return true;
    }
    colour_[static_cast<std::size_t>(best)] = -1;
    return false;
  }

  std::vector<VertexSet> adj_;
  int k_;
  VertexSet active_;
  std::vector<int> colour_;
};

}  // namespace detail

inline std::optional<PartitionCertificate> find_r_partition(const Hypergraph& h) {
  const int r = h.uniformity();
  const int n = h.vertex_count();
  if (r > 31) throw CapacityError("partition search supports r <= 31");
  auto adj = detail::cooccurrence_graph(n, h.edges());
  VertexSet active;
  for (Vertex v = 0; v < n; ++v) {
    if (!adj[static_cast<std::size_t>(v)].empty()) active.insert(v);
  }
  if (detail::has_clique(adj, active, r + 1)) return std::nullopt;
  detail::Colouring colouring(std::move(adj), r);
  if (!colouring.run(active)) return std::nullopt;
  PartitionCertificate cert;
  cert.parts.reserve(static_cast<std::size_t>(n));
  for (int c : colouring.colours()) cert.parts.push_back(c < 0 ? 0 : c);
  return cert;
}

}  // namespace hypertri
