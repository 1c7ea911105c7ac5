#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "vertex_set.hpp"

namespace hypertri {

/**
 * Map from every (r-1)-set of the shadow to its neighborhood
 * N(e) = { v : e + v is an edge }. A key is present iff its neighborhood is
 * nonempty. Iteration is in colex order of the keys.
 */
class ShadowIndex {
 public:
  using Map = std::map<VertexSet, VertexSet>;

  ShadowIndex() = default;

  static ShadowIndex build(const std::vector<VertexSet>& edges) {
    ShadowIndex idx;
    for (const VertexSet& e : edges) {
      e.for_each([&](Vertex v) {
        VertexSet key = e;
        key.erase(v);
        idx.map_[key].insert(v);
      });
    }
    return idx;
  }

  // Empty set when `key` is not in the shadow.
  VertexSet neighborhood(const VertexSet& key) const {
    auto it = map_.find(key);
    return it == map_.end() ? VertexSet{} : it->second;
  }

  bool contains(const VertexSet& key) const { return map_.count(key) != 0; }
  std::size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }

  Map::const_iterator begin() const { return map_.begin(); }
  Map::const_iterator end() const { return map_.end(); }

 private:
  Map map_;
};

/**
 * Immutable r-uniform hypergraph on vertices {0, ..., n-1}.
 *
 * Edges are stored as VertexSets sorted in colex order. The vertex count is
 * authoritative, so isolated vertices are representable. The shadow index is
 * built once at construction and shared between copies.
 */
class Hypergraph {
 public:
  Hypergraph(int r, int n, std::vector<VertexSet> edges) : r_(r), n_(n), edges_(std::move(edges)) {
    if (r_ < 2) throw ContractError("uniformity must be at least 2, got " + std::to_string(r_));
    if (n_ < 0) throw ContractError("negative vertex count");
    if (n_ > kMaxVertices) {
      throw CapacityError("vertex count " + std::to_string(n_) + " exceeds " + std::to_string(kMaxVertices));
    }
    const VertexSet all = VertexSet::prefix(n_);
    for (const VertexSet& e : edges_) {
      if (e.size() != r_) throw ContractError("edge " + e.to_string() + " does not have " + std::to_string(r_) + " vertices");
      if (!e.is_subset_of(all)) throw ContractError("edge " + e.to_string() + " has a vertex >= n");
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
      throw ContractError("duplicate edge " + dup->to_string());
    }
    shadow_ = std::make_shared<const ShadowIndex>(ShadowIndex::build(edges_));
  }

  static Hypergraph from_lists(int r, int n, const std::vector<std::vector<Vertex>>& lists) {
    std::vector<VertexSet> edges;
    edges.reserve(lists.size());
    for (const auto& l : lists) {
      VertexSet e;
      for (Vertex v : l) {
        if (v < 0 || v >= n) throw ContractError("vertex " + std::to_string(v) + " outside [0," + std::to_string(n) + ")");
        if (e.contains(v)) throw ContractError("repeated vertex " + std::to_string(v) + " in an edge");
        e.insert(v);
      }
      edges.push_back(e);
    }
    return Hypergraph(r, n, std::move(edges));
  }

  int uniformity() const { return r_; }
  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<VertexSet>& edges() const { return edges_; }
  const ShadowIndex& shadow_index() const { return *shadow_; }

  bool has_edge(const VertexSet& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

  // Same vertex set, edge list filtered or extended; returns a new value.
  Hypergraph with_edges(std::vector<VertexSet> edges) const { return Hypergraph(r_, n_, std::move(edges)); }

  // Image under a vertex bijection perm: old id -> new id.
  Hypergraph relabeled(const std::vector<Vertex>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw ContractError("permutation size does not match vertex count");
    std::vector<VertexSet> out;
    out.reserve(edges_.size());
    for (const VertexSet& e : edges_) {
      VertexSet img;
      e.for_each([&](Vertex v) { img.insert(perm.at(static_cast<std::size_t>(v))); });
      out.push_back(img);
    }
    return Hypergraph(r_, n_, std::move(out));
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.r_ == b.r_ && a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int r_;
  int n_;
  std::vector<VertexSet> edges_;
  std::shared_ptr<const ShadowIndex> shadow_;
};

}  // namespace hypertri
