#pragma once

// Brute-force reference implementations for the test suites. They work on a
// plain list-of-sorted-vectors representation and share no code with the
// library beyond conversion helpers, so they can serve as independent oracles.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "hypertri/hypergraph.hpp"

namespace oracle {

using Edge = std::vector<int>;

struct Plain {
  int r = 0;
  int n = 0;
  std::vector<Edge> edges;  // each ascending
};

inline Plain from(const hypertri::Hypergraph& h) {
  Plain p{h.uniformity(), h.vertex_count(), {}};
  for (const auto& e : h.edges()) p.edges.push_back(e.members());
  return p;
}

inline hypertri::Hypergraph to_hypergraph(const Plain& p) {
  return hypertri::Hypergraph::from_lists(p.r, p.n, p.edges);
}

// All k-subsets of {0..n-1}, lexicographic.
inline std::vector<Edge> subsets(int n, int k) {
  std::vector<Edge> out;
  Edge cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

inline bool has(const std::vector<Edge>& edges, const Edge& e) {
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

inline Edge with(Edge e, int v) {
  e.push_back(v);
  std::sort(e.begin(), e.end());
  return e;
}

inline int codegree_of(const Plain& h, const Edge& face) {
  int c = 0;
  for (int v = 0; v < h.n; ++v) {
    if (std::find(face.begin(), face.end(), v) != face.end()) continue;
    if (has(h.edges, with(face, v))) ++c;
  }
  return c;
}

// min |N(e)| over (r-1)-sets with at least one extension; 0 when edgeless.
inline int min_positive_codegree(const Plain& h) {
  int best = 0;
  for (const Edge& face : subsets(h.n, h.r - 1)) {
    const int c = codegree_of(h, face);
    if (c > 0 && (best == 0 || c < best)) best = c;
  }
  return best;
}

inline int common(const Edge& a, const Edge& b) {
  int c = 0;
  for (int v : a) c += std::count(b.begin(), b.end(), v) ? 1 : 0;
  return c;
}

inline bool contains_all(const Edge& big, const Edge& small) {
  return std::all_of(small.begin(), small.end(), [&](int v) { return std::count(big.begin(), big.end(), v) > 0; });
}

// Ordered triples of distinct edges; `sigma` drops the core-avoidance condition.
inline bool has_triangle(const Plain& h, bool sigma = false) {
  for (const Edge& a : h.edges) {
    for (const Edge& b : h.edges) {
      if (a == b || common(a, b) != h.r - 1) continue;
      Edge diff, core;
      for (int v : a) (std::count(b.begin(), b.end(), v) ? core : diff).push_back(v);
      for (int v : b) {
        if (!std::count(a.begin(), a.end(), v)) diff.push_back(v);
      }
      for (const Edge& c : h.edges) {
        if (c == a || c == b || !contains_all(c, diff)) continue;
        if (sigma || common(c, core) == 0) return true;
      }
    }
  }
  return false;
}

// Every one of r^n part assignments.
inline bool is_r_partite(const Plain& h) {
  std::vector<int> part(static_cast<std::size_t>(h.n), 0);
  while (true) {
    bool ok = true;
    for (const Edge& e : h.edges) {
      std::vector<int> seen;
      for (int v : e) seen.push_back(part[static_cast<std::size_t>(v)]);
      std::sort(seen.begin(), seen.end());
      if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < part.size() && ++part[i] == h.r) part[i++] = 0;
    if (i == part.size()) return false;
  }
}

// Every injective map pattern -> host.
inline bool embeds(const Plain& host, const Plain& pattern) {
  if (pattern.n > host.n) return false;
  std::vector<int> map(static_cast<std::size_t>(pattern.n), -1);
  std::vector<bool> used(static_cast<std::size_t>(host.n), false);
  std::function<bool(int)> rec = [&](int i) {
    if (i == pattern.n) {
      for (const Edge& e : pattern.edges) {
        Edge img;
        for (int v : e) img.push_back(map[static_cast<std::size_t>(v)]);
        std::sort(img.begin(), img.end());
        if (!has(host.edges, img)) return false;
      }
      return true;
    }
    for (int v = 0; v < host.n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      map[static_cast<std::size_t>(i)] = v;
      if (rec(i + 1)) return true;
      used[static_cast<std::size_t>(v)] = false;
    }
    return false;
  };
  return rec(0);
}

inline std::vector<Edge> sorted_image(const Plain& h, const std::vector<int>& perm) {
  std::vector<Edge> out;
  for (const Edge& e : h.edges) {
    Edge img;
    for (int v : e) img.push_back(perm[static_cast<std::size_t>(v)]);
    std::sort(img.begin(), img.end());
    out.push_back(img);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Every one of n! relabellings.
inline bool isomorphic(const Plain& a, const Plain& b) {
  if (a.r != b.r || a.n != b.n || a.edges.size() != b.edges.size()) return false;
  std::vector<Edge> target = b.edges;
  std::sort(target.begin(), target.end());
  std::vector<int> perm(static_cast<std::size_t>(a.n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (sorted_image(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Calls f on every labelled r-graph on n vertices (2^C(n,r) of them).
inline void for_each_hypergraph(int r, int n, const std::function<void(const Plain&)>& f) {
  const auto slots = subsets(n, r);
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Plain h{r, n, {}};
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((mask >> i) & 1U) h.edges.push_back(slots[i]);
    }
    f(h);
  }
}

}  // namespace oracle
