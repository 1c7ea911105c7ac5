#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "hypergraph.hpp"
#include "vertex_set.hpp"

namespace hypertri {

inline constexpr int kMaxCanonicalVertices = 12;

/**
 * Isomorphism-class key: the colex-sorted edge list of the relabelled copy
 * that is lexicographically least among the labellings reached by the
 * refinement search. Two hypergraphs have equal keys iff they are isomorphic.
 */
struct CanonicalForm {
  int r = 0;
  int n = 0;
  std::vector<VertexSet> edges;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    if (auto c = a.r <=> b.r; c != 0) return c;
    if (auto c = a.n <=> b.n; c != 0) return c;
    return std::lexicographical_compare_three_way(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end());
  }

  // "3,6:012.013.023.123"; vertices in base 36.
  std::string to_string() const {
    static constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
    std::string s = std::to_string(r) + "," + std::to_string(n) + ":";
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i) s += '.';
      edges[i].for_each([&](Vertex v) { s += v < 36 ? kDigits[v] : '?'; });
    }
    return s;
  }

  Hypergraph representative() const { return Hypergraph(r, n, edges); }
};

namespace detail {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Hypergraph& h) : h_(h), n_(h.vertex_count()) {
    incident_.resize(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < h_.edges().size(); ++i) {
      h_.edges()[i].for_each([&](Vertex v) { incident_[static_cast<std::size_t>(v)].push_back(i); });
    }
    swap_cache_.assign(static_cast<std::size_t>(n_ * n_), -1);
  }

  std::vector<Vertex> run() {
    std::vector<int> colours(static_cast<std::size_t>(n_), 0);
    descend(std::move(colours));
    return best_perm_;
  }

 private:
  // Iterated colour refinement; colours become ranks 0..k-1 ordered by signature.
  void refine(std::vector<int>& colour) const {
    using Signature = std::pair<int, std::vector<std::vector<int>>>;
    int classes = count_classes(colour);
    while (true) {
      std::vector<Signature> sig(static_cast<std::size_t>(n_));
      for (Vertex v = 0; v < n_; ++v) {
        auto& s = sig[static_cast<std::size_t>(v)];
        s.first = colour[static_cast<std::size_t>(v)];
        for (std::size_t ei : incident_[static_cast<std::size_t>(v)]) {
          std::vector<int> cs;
          h_.edges()[ei].for_each([&](Vertex u) {
            if (u != v) cs.push_back(colour[static_cast<std::size_t>(u)]);
          });
          std::sort(cs.begin(), cs.end());
          s.second.push_back(std::move(cs));
        }
        std::sort(s.second.begin(), s.second.end());
      }
      std::vector<Signature> distinct = sig;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (Vertex v = 0; v < n_; ++v) {
        colour[static_cast<std::size_t>(v)] = static_cast<int>(
            std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<std::size_t>(v)]) - distinct.begin());
      }
      const int now = static_cast<int>(distinct.size());
      if (now == classes) return;
      classes = now;
    }
  }

  static int count_classes(const std::vector<int>& colour) {
    std::vector<int> c = colour;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  // Whether swapping u and v is an automorphism of the hypergraph.
  bool swap_is_automorphism(Vertex u, Vertex v) {
    signed char& cached = swap_cache_[static_cast<std::size_t>(u * n_ + v)];
    if (cached < 0) {
      cached = 1;
      for (const VertexSet& e : h_.edges()) {
        if (e.contains(u) == e.contains(v)) continue;
        VertexSet img = e;
        if (e.contains(u)) {
          img.erase(u);
          img.insert(v);
        } else {
          img.erase(v);
          img.insert(u);
        }
        if (!h_.has_edge(img)) {
          cached = 0;
          break;
        }
      }
      swap_cache_[static_cast<std::size_t>(v * n_ + u)] = cached;
    }
    return cached == 1;
  }

  void descend(std::vector<int> colour) {
    refine(colour);
    // Smallest colour whose cell is not a singleton.
    std::vector<int> cell_size(static_cast<std::size_t>(n_), 0);
    for (int c : colour) ++cell_size[static_cast<std::size_t>(c)];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (cell_size[static_cast<std::size_t>(c)] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      leaf(colour);
      return;
    }
    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n_; ++v) {
      if (colour[static_cast<std::size_t>(v)] != target) continue;
      const bool equivalent = std::any_of(tried.begin(), tried.end(), [&](Vertex w) { return swap_is_automorphism(w, v); });
      if (equivalent) continue;
      tried.push_back(v);
      std::vector<int> next(colour.size());
      for (std::size_t u = 0; u < colour.size(); ++u) next[u] = 2 * colour[u];
      next[static_cast<std::size_t>(v)] = 2 * target - 1;
      descend(std::move(next));
    }
  }

  void leaf(const std::vector<int>& perm) {
    std::vector<VertexSet> key;
    key.reserve(h_.edges().size());
    for (const VertexSet& e : h_.edges()) {
      VertexSet img;
      e.for_each([&](Vertex v) { img.insert(perm[static_cast<std::size_t>(v)]); });
      key.push_back(img);
    }
    std::sort(key.begin(), key.end());
    if (!best_ || key < *best_) {
      best_ = std::move(key);
      best_perm_ = perm;
    }
  }

  const Hypergraph& h_;
  int n_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<signed char> swap_cache_;
  std::optional<std::vector<VertexSet>> best_;
  std::vector<Vertex> best_perm_;
};

}  // namespace detail

// Vertex map old -> new taking `h` to its canonical representative.
inline std::vector<Vertex> canonical_labeling(const Hypergraph& h) {
  if (h.vertex_count() > kMaxCanonicalVertices) {
    throw CapacityError("canonical form supports n <= " + std::to_string(kMaxCanonicalVertices) + ", got " +
                        std::to_string(h.vertex_count()));
  }
  return detail::CanonicalSearch(h).run();
}

inline CanonicalForm canonical_form(const Hypergraph& h) {
  const Hypergraph rep = h.relabeled(canonical_labeling(h));
  return CanonicalForm{rep.uniformity(), rep.vertex_count(), rep.edges()};
}

}  // namespace hypertri
