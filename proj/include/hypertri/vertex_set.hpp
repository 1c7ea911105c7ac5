#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "errors.hpp"

namespace hypertri {

using Vertex = int;

inline constexpr int kMaxVertices = 128;

/**
 * Fixed-width set of vertices in {0, ..., 127}, stored as two 64-bit words.
 *
 * The total order compares the high word first and then the low word, so it
 * coincides with the numeric order of the 128-bit mask. For sets of equal
 * cardinality this is exactly the colexicographic order, which is the order
 * edges are kept in throughout the library.
 */
class VertexSet {
 public:
  constexpr VertexSet() = default;

  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  static VertexSet from_range(const std::vector<Vertex>& vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  // {0, ..., n-1}
  static VertexSet prefix(int n) {
    VertexSet s;
    if (n >= 64) {
      s.lo_ = ~std::uint64_t{0};
      s.hi_ = n >= 128 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n - 64)) - 1);
    } else if (n > 0) {
      s.lo_ = (std::uint64_t{1} << n) - 1;
    }
    return s;
  }

  static constexpr VertexSet from_words(std::uint64_t lo, std::uint64_t hi) {
    VertexSet s;
    s.lo_ = lo;
    s.hi_ = hi;
    return s;
  }

  void insert(Vertex v) {
    check(v);
    if (v < 64) lo_ |= std::uint64_t{1} << v;
    else hi_ |= std::uint64_t{1} << (v - 64);
  }

  void erase(Vertex v) {
    check(v);
    if (v < 64) lo_ &= ~(std::uint64_t{1} << v);
    else hi_ &= ~(std::uint64_t{1} << (v - 64));
  }

  bool contains(Vertex v) const {
    if (v < 0 || v >= kMaxVertices) return false;
    return v < 64 ? (lo_ >> v) & 1U : (hi_ >> (v - 64)) & 1U;
  }

  int size() const { return std::popcount(lo_) + std::popcount(hi_); }
  bool empty() const { return lo_ == 0 && hi_ == 0; }

  // Smallest member, or -1 when empty.
  Vertex front() const {
    if (lo_ != 0) return std::countr_zero(lo_);
    if (hi_ != 0) return 64 + std::countr_zero(hi_);
    return -1;
  }

  // Largest member, or -1 when empty.
  Vertex back() const {
    if (hi_ != 0) return 127 - std::countl_zero(hi_);
    if (lo_ != 0) return 63 - std::countl_zero(lo_);
    return -1;
  }

  bool is_subset_of(const VertexSet& o) const {
    return (lo_ & ~o.lo_) == 0 && (hi_ & ~o.hi_) == 0;
  }

  bool intersects(const VertexSet& o) const {
    return (lo_ & o.lo_) != 0 || (hi_ & o.hi_) != 0;
  }

  VertexSet operator|(const VertexSet& o) const { return from_words(lo_ | o.lo_, hi_ | o.hi_); }
  VertexSet operator&(const VertexSet& o) const { return from_words(lo_ & o.lo_, hi_ & o.hi_); }
  VertexSet operator^(const VertexSet& o) const { return from_words(lo_ ^ o.lo_, hi_ ^ o.hi_); }
  // Set difference.
  VertexSet operator-(const VertexSet& o) const { return from_words(lo_ & ~o.lo_, hi_ & ~o.hi_); }

  VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }
  VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }
  VertexSet& operator-=(const VertexSet& o) { return *this = *this - o; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.hi_ <=> b.hi_; c != 0) return c;
    return a.lo_ <=> b.lo_;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t w = lo_; w != 0; w &= w - 1) f(static_cast<Vertex>(std::countr_zero(w)));
    for (std::uint64_t w = hi_; w != 0; w &= w - 1) f(static_cast<Vertex>(64 + std::countr_zero(w)));
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  std::uint64_t low_word() const { return lo_; }
  std::uint64_t high_word() const { return hi_; }

  // "{0,1,4}"
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for_each([&](Vertex v) {
      if (!first) s += ',';
      s += std::to_string(v);
      first = false;
    });
    return s + "}";
  }

 private:
  static void check(Vertex v) {
    if (v < 0 || v >= kMaxVertices) throw CapacityError("vertex id " + std::to_string(v) + " outside [0,128)");
  }

  std::uint64_t lo_ = 0;
  std::uint64_t hi_ = 0;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    std::uint64_t h = s.low_word() * 0x9E3779B97F4A7C15ULL;
    h ^= s.high_word() + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// Calls f on every k-subset of `base`, in colex order.
template <typename F>
void for_each_subset(const VertexSet& base, int k, F&& f) {
  const std::vector<Vertex> elems = base.members();
  const int m = static_cast<int>(elems.size());
  if (k < 0 || k > m) return;
  if (k == 0) {
    f(VertexSet{});
    return;
  }
  // Colex order over positions: increment the lowest index that can move.
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    VertexSet s;
    for (int i : idx) s.insert(elems[static_cast<std::size_t>(i)]);
    f(s);
    int j = 0;
    while (j < k - 1 && idx[static_cast<std::size_t>(j)] + 1 == idx[static_cast<std::size_t>(j + 1)]) {
      idx[static_cast<std::size_t>(j)] = j;
      ++j;
    }
    if (idx[static_cast<std::size_t>(j)] + 1 >= m) return;
    ++idx[static_cast<std::size_t>(j)];
  }
}

}  // namespace hypertri
