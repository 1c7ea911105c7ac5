#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <variant>
#include <vector>

#include "canonical.hpp"
#include "core.hpp"
#include "errors.hpp"
#include "hypergraph.hpp"
#include "partition.hpp"
#include "patterns.hpp"
#include "threshold.hpp"
#include "vertex_set.hpp"

namespace hypertri {

inline constexpr int kMaxSearchVertices = 16;

struct GeneralizedTriangleMode {
  friend bool operator==(const GeneralizedTriangleMode&, const GeneralizedTriangleMode&) = default;
};

struct ExpansionMode {
  int ell = 0;
  friend bool operator==(const ExpansionMode&, const ExpansionMode&) = default;
};

// Generalized triangle of the problem's uniformity, expansion of K_{l+1}, or an explicit pattern.
using ForbiddenPattern = std::variant<GeneralizedTriangleMode, ExpansionMode, Hypergraph>;

struct SearchBudget {
  std::uint64_t max_nodes = 10'000'000'000ULL;
  double max_seconds = 0.0;  // 0: no wall-clock limit
};

struct SearchProblem {
  int r = 3;
  int n = 0;
  // Solutions must have minimum positive codegree strictly above this bound.
  Threshold threshold = Threshold::at_least(1);
  std::vector<ForbiddenPattern> forbidden;
  bool require_not_r_partite = false;
  SearchBudget budget;

  int workers = 1;
  // Depth of the slot-decision tree at which work is split between workers.
  int split_depth = 6;
  // Rules (a) and (b); solutions are re-verified at leaves either way.
  bool pruning = true;
  // Only labelled hypergraphs containing the edge {0..r-1} are visited. Every
  // nonempty hypergraph has such a relabelling, so the set of isomorphism
  // classes found is unchanged while the labelled count shrinks.
  bool anchor_first_edge = false;
  // Stop after the first solution.
  bool stop_at_first = false;
};

enum class SearchStatus { exhaustive_complete, budget_exhausted, stopped_early };

inline std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::exhaustive_complete: return "exhaustive-complete";
    case SearchStatus::budget_exhausted: return "budget-exhausted";
    case SearchStatus::stopped_early: return "stopped-early";
  }
  return "unknown";
}

struct Witness {
  CanonicalForm canonical;
  Hypergraph representative;  // the canonical relabelling
};

struct SearchReport {
  SearchStatus status = SearchStatus::exhaustive_complete;
  std::uint64_t nodes_explored = 0;
  std::uint64_t labeled_solutions = 0;
  // One entry per isomorphism class, ordered by canonical form.
  std::vector<Witness> witnesses;
  std::chrono::duration<double> elapsed{0};
};

// Called once per labelled solution; return false to stop the search.
using SearchVisitor = std::function<bool(const Hypergraph&)>;

namespace detail {

inline std::uint64_t binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return b;
}

// Rank of a k-set among all k-sets in colex order.
inline int colex_rank(std::uint32_t mask) {
  int rank = 0;
  int i = 1;
  for (std::uint32_t w = mask; w != 0; w &= w - 1, ++i) rank += static_cast<int>(binom(std::countr_zero(w), i));
  return rank;
}

inline VertexSet to_vertex_set(std::uint32_t mask) { return VertexSet::from_words(mask, 0); }

/*
 * The C(n, r) edge slots in colex order together with, for every slot, the
 * colex ranks of its r sub-(r-1)-sets. Shared read-only between workers.
 */
struct SlotSpace {
  int r = 0;
  int n = 0;
  std::vector<std::uint32_t> slots;
  std::vector<int> sub_rank;            // slots.size() * r
  std::vector<std::uint32_t> sub_mask;  // by rank
  int sub_count = 0;

  SlotSpace(int r_, int n_) : r(r_), n(n_) {
    sub_count = static_cast<int>(binom(n, r - 1));
    sub_mask.assign(static_cast<std::size_t>(sub_count), 0);
    for_each_subset(VertexSet::prefix(n), r - 1, [&](const VertexSet& s) {
      const auto m = static_cast<std::uint32_t>(s.low_word());
      sub_mask[static_cast<std::size_t>(colex_rank(m))] = m;
    });
    for_each_subset(VertexSet::prefix(n), r, [&](const VertexSet& s) {
      const auto m = static_cast<std::uint32_t>(s.low_word());
      slots.push_back(m);
      for (std::uint32_t w = m; w != 0; w &= w - 1) sub_rank.push_back(colex_rank(m & ~(w & -w)));
    });
  }

  int slot_count() const { return static_cast<int>(slots.size()); }
  const int* subs(int slot) const { return &sub_rank[static_cast<std::size_t>(slot) * static_cast<std::size_t>(r)]; }
};

/*
 * Edge set under construction on at most 16 vertices: the included edges as
 * a stack and, for every (r-1)-set, the mask of its current neighbourhood.
 * Supports the incremental "would adding E create a forbidden copy" test.
 */
class PartialHypergraph {
 public:
  PartialHypergraph(const SlotSpace& space, std::vector<ForbiddenPattern> forbidden)
      : space_(space), forbidden_(std::move(forbidden)) {
    nbr_.assign(static_cast<std::size_t>(space_.sub_count), 0);
    for (const auto& f : forbidden_) {
      if (const auto* h = std::get_if<Hypergraph>(&f)) {
        if (h->uniformity() != space_.r) throw ContractError("forbidden pattern has the wrong uniformity");
        explicit_.push_back(*h);
      } else if (const auto* x = std::get_if<ExpansionMode>(&f)) {
        explicit_.push_back(expansion_of_clique(space_.r, x->ell));
      } else {
        triangle_ = true;
      }
    }
  }

  void add(int slot) {
    const std::uint32_t e = space_.slots[static_cast<std::size_t>(slot)];
    const int* subs = space_.subs(slot);
    for (int j = 0; j < space_.r; ++j) {
      const auto s = static_cast<std::size_t>(subs[j]);
      nbr_[s] |= e & ~space_.sub_mask[s];
    }
    edges_.push_back(e);
  }

  void remove_last(int slot) {
    const int* subs = space_.subs(slot);
    const std::uint32_t e = space_.slots[static_cast<std::size_t>(slot)];
    for (int j = 0; j < space_.r; ++j) {
      const auto s = static_cast<std::size_t>(subs[j]);
      nbr_[s] &= ~(e & ~space_.sub_mask[s]);
    }
    edges_.pop_back();
  }

  int codegree(int rank) const { return std::popcount(nbr_[static_cast<std::size_t>(rank)]); }
  const std::vector<std::uint32_t>& edges() const { return edges_; }

  bool would_create_forbidden(int slot) const {
    const std::uint32_t e = space_.slots[static_cast<std::size_t>(slot)];
    if (triangle_ && triangle_with(slot, e)) return true;
    if (!explicit_.empty()) {
      std::vector<VertexSet> host;
      host.reserve(edges_.size() + 1);
      for (std::uint32_t x : edges_) host.push_back(to_vertex_set(x));
      host.push_back(to_vertex_set(e));
      for (const Hypergraph& p : explicit_) {
        if (p.vertex_count() > space_.n || p.edge_count() > host.size()) continue;
        EmbeddingSearch s(space_.n, host, p.vertex_count(), p.edges());
        if (s.run()) return true;
      }
    }
    return false;
  }

 private:
  // Does E complete a generalized triangle with the current edges?
  bool triangle_with(int slot, std::uint32_t e) const {
    // E as one of the two edges sharing the core.
    const int* subs = space_.subs(slot);
    for (int j = 0; j < space_.r; ++j) {
      const auto s = static_cast<std::size_t>(subs[j]);
      const std::uint32_t core = space_.sub_mask[s];
      const std::uint32_t a = e & ~core;
      for (std::uint32_t bs = nbr_[s] & ~a; bs != 0; bs &= bs - 1) {
        const std::uint32_t pair = a | (bs & -bs);
        for (std::uint32_t c : edges_) {
          if ((c & pair) == pair && (c & core) == 0) return true;
        }
      }
    }
    // E as the third edge: a core disjoint from E with two neighbours inside E.
    for (int s = 0; s < space_.sub_count; ++s) {
      const std::uint32_t nb = nbr_[static_cast<std::size_t>(s)];
      if (std::popcount(nb & e) >= 2 && (space_.sub_mask[static_cast<std::size_t>(s)] & e) == 0) return true;
    }
    return false;
  }

  const SlotSpace& space_;
  std::vector<ForbiddenPattern> forbidden_;
  bool triangle_ = false;
  std::vector<Hypergraph> explicit_;
  std::vector<std::uint32_t> nbr_;
  std::vector<std::uint32_t> edges_;
};

inline bool contains_forbidden(const Hypergraph& h, const std::vector<ForbiddenPattern>& forbidden) {
  for (const auto& f : forbidden) {
    if (std::holds_alternative<GeneralizedTriangleMode>(f)) {
      if (contains_generalized_triangle(h)) return true;
    } else if (const auto* x = std::get_if<ExpansionMode>(&f)) {
      if (contains_expansion(h, x->ell)) return true;
    } else if (find_embedding(h, std::get<Hypergraph>(f))) {
      return true;
    }
  }
  return false;
}

inline void validate(const SearchProblem& p) {
  if (p.r < 3) throw ContractError("search needs r >= 3");
  if (p.n < 0) throw ContractError("negative vertex count");
  if (p.n > kMaxSearchVertices) {
    throw CapacityError("search supports n <= " + std::to_string(kMaxSearchVertices) + ", got " + std::to_string(p.n));
  }
  if (p.workers < 1) throw ContractError("workers must be positive");
  for (const auto& f : p.forbidden) {
    if (const auto* x = std::get_if<ExpansionMode>(&f); x && x->ell < p.r) throw ContractError("expansion needs l >= r");
  }
}

struct SharedState {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> budget_hit{false};
  std::atomic<bool> visitor_stop{false};
  std::chrono::steady_clock::time_point start;
  std::mutex mutex;
  std::uint64_t solutions = 0;
  std::map<CanonicalForm, Hypergraph> classes;
  std::vector<Hypergraph> labeled_witnesses;  // used when n is too large to canonicalize
};

/*
 * Depth-first decision of the edge slots in colex order. Each worker owns
 * its partial state; only the solution sink is shared.
 *
 *  (a) an included slot that completes a forbidden copy is cut;
 *  (b) an (r-1)-set already in the shadow whose current neighbours plus the
 *      undecided slots containing it cannot reach the required codegree is cut.
 * Leaves are re-verified from scratch before they are emitted.
 */
class SearchWorker {
 public:
  SearchWorker(const SearchProblem& p, const SlotSpace& space, SharedState& shared, const SearchVisitor& visitor)
      : p_(p), space_(space), shared_(shared), visitor_(visitor), partial_(space, p.forbidden),
        required_(p.threshold.min_integer_exceeding()) {
    remaining_.assign(static_cast<std::size_t>(space_.sub_count), space_.n - (space_.r - 1));
    decisions_.reserve(static_cast<std::size_t>(space_.slot_count()));
  }

  // Depth-first from slot 0; with `split` >= 0, stop at that depth and record prefixes.
  void run(int split, std::vector<std::vector<char>>* prefixes) {
    split_ = split;
    prefixes_ = prefixes;
    dfs(0);
    flush(true);
  }

  // Replays a recorded prefix, then explores its subtree. The subtree root was
  // already counted while the prefix was generated.
  void run_prefix(const std::vector<char>& prefix) {
    for (std::size_t s = 0; s < prefix.size(); ++s) apply(static_cast<int>(s), prefix[s] != 0);
    split_ = -1;
    --local_nodes_;
    dfs(static_cast<int>(prefix.size()));
    for (std::size_t s = prefix.size(); s-- > 0;) undo(static_cast<int>(s), prefix[s] != 0);
    flush(true);
  }

 private:
  void apply(int slot, bool include) {
    const int* subs = space_.subs(slot);
    for (int j = 0; j < space_.r; ++j) --remaining_[static_cast<std::size_t>(subs[j])];
    if (include) partial_.add(slot);
    decisions_.push_back(include ? 1 : 0);
  }

  void undo(int slot, bool include) {
    const int* subs = space_.subs(slot);
    for (int j = 0; j < space_.r; ++j) ++remaining_[static_cast<std::size_t>(subs[j])];
    if (include) partial_.remove_last(slot);
    decisions_.pop_back();
  }

  // Rule (b) for the (r-1)-sets of the slot just decided.
  bool codegree_feasible(int slot) const {
    const int* subs = space_.subs(slot);
    for (int j = 0; j < space_.r; ++j) {
      const auto s = subs[j];
      const int have = partial_.codegree(s);
#ifdef HYPERTRI_SEARCH_SELF_CHECK
      check_remaining(slot, s);
#endif
      if (have > 0 && have + remaining_[static_cast<std::size_t>(s)] < required_) return false;
    }
    return true;
  }

#ifdef HYPERTRI_SEARCH_SELF_CHECK
  // Recounts the undecided slots through the (r-1)-set of rank s.
  void check_remaining(int slot, int s) const {
    int undecided = 0;
    for (int t = slot + 1; t < space_.slot_count(); ++t) {
      const int* subs = space_.subs(t);
      undecided += static_cast<int>(std::count(subs, subs + space_.r, s));
    }
    if (undecided != remaining_[static_cast<std::size_t>(s)]) throw std::logic_error("feasibility bound miscounted");
  }
#endif

  void dfs(int pos) {
    if (++local_nodes_ >= flush_at_) flush(false);
    if (shared_.stop.load(std::memory_order_relaxed)) return;
    if (pos == split_ && prefixes_ != nullptr) {
      prefixes_->push_back(decisions_);
      return;
    }
    if (pos == space_.slot_count()) {
      leaf();
      return;
    }
    const bool anchored = p_.anchor_first_edge && pos == 0 && required_ >= 1;
    // Include first, so small searches reach dense solutions early.
    if (!p_.pruning || !partial_.would_create_forbidden(pos)) {
      apply(pos, true);
      if (!p_.pruning || codegree_feasible(pos)) dfs(pos + 1);
      undo(pos, true);
    }
    if (anchored) return;
    apply(pos, false);
    if (!p_.pruning || codegree_feasible(pos)) dfs(pos + 1);
    undo(pos, false);
  }

  void leaf() {
    // Cheap exact codegree check from the tracked neighbourhoods.
    int min_codegree = 0;
    for (int s = 0; s < space_.sub_count; ++s) {
      const int c = partial_.codegree(s);
      if (c > 0 && (min_codegree == 0 || c < min_codegree)) min_codegree = c;
    }
    if (!p_.threshold.exceeded_by(min_codegree)) return;

    std::vector<VertexSet> edges;
    edges.reserve(partial_.edges().size());
    for (std::uint32_t e : partial_.edges()) edges.push_back(to_vertex_set(e));
    const Hypergraph h(space_.r, space_.n, std::move(edges));
    if (!p_.threshold.exceeded_by(min_positive_codegree(h))) return;
    if (contains_forbidden(h, p_.forbidden)) return;
    if (p_.require_not_r_partite && find_r_partition(h)) return;
    emit(h);
  }

  void emit(const Hypergraph& h) {
    std::optional<CanonicalForm> key;
    if (h.vertex_count() <= kMaxCanonicalVertices) key = canonical_form(h);
    std::lock_guard<std::mutex> lock(shared_.mutex);
    ++shared_.solutions;
    if (key) {
      if (!shared_.classes.count(*key)) shared_.classes.emplace(*key, key->representative());
    } else if (shared_.labeled_witnesses.size() < 16) {
      shared_.labeled_witnesses.push_back(h);
    }
    bool keep_going = true;
    if (visitor_) keep_going = visitor_(h);
    if (!keep_going || p_.stop_at_first) {
      shared_.visitor_stop = true;
      shared_.stop = true;
    }
  }

  // Publishes the local node count and checks the budget. The final flush of a
  // finished subtree only publishes: a completed search is never over budget.
  void flush(bool finished) {
    const std::uint64_t total = shared_.nodes.fetch_add(static_cast<std::uint64_t>(local_nodes_)) +
                                static_cast<std::uint64_t>(local_nodes_);
    local_nodes_ = 0;
    const std::uint64_t left = total >= p_.budget.max_nodes ? 0 : p_.budget.max_nodes - total;
    flush_at_ = static_cast<std::int64_t>(std::min<std::uint64_t>(kFlushEvery, std::max<std::uint64_t>(left, 1)));
    if (finished) return;
    bool over = left == 0;
    if (!over && p_.budget.max_seconds > 0) {
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - shared_.start;
      over = dt.count() >= p_.budget.max_seconds;
    }
    if (over && !shared_.stop.exchange(true)) shared_.budget_hit = true;
  }

  static constexpr std::int64_t kFlushEvery = 1 << 12;

  const SearchProblem& p_;
  const SlotSpace& space_;
  SharedState& shared_;
  const SearchVisitor& visitor_;
  PartialHypergraph partial_;
  std::int64_t required_;
  std::vector<int> remaining_;
  std::vector<char> decisions_;
  std::int64_t local_nodes_ = 0;
  std::int64_t flush_at_ = 1;
  int split_ = -1;
  std::vector<std::vector<char>>* prefixes_ = nullptr;
};

}  // namespace detail

/**
 * Exhaustive enumeration of labelled r-graphs on n vertices satisfying the
 * problem's constraints. Isomorphism classes of solutions are collected by
 * canonical form; the visitor, if given, sees every labelled solution.
 */
inline SearchReport enumerate(const SearchProblem& problem, const SearchVisitor& visitor = {}) {
  detail::validate(problem);
  const detail::SlotSpace space(problem.r, problem.n);
  detail::SharedState shared;
  shared.start = std::chrono::steady_clock::now();

  const int split = std::min(problem.split_depth, space.slot_count());
  if (problem.workers == 1 || split <= 0) {
    detail::SearchWorker(problem, space, shared, visitor).run(-1, nullptr);
  } else {
    std::vector<std::vector<char>> prefixes;
    detail::SearchWorker(problem, space, shared, visitor).run(split, &prefixes);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      detail::SearchWorker worker(problem, space, shared, visitor);
      for (std::size_t i = next++; i < prefixes.size(); i = next++) {
        if (shared.stop) break;
        worker.run_prefix(prefixes[i]);
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < problem.workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  SearchReport report;
  report.elapsed = std::chrono::steady_clock::now() - shared.start;
  report.nodes_explored = shared.nodes.load();
  report.labeled_solutions = shared.solutions;
  if (shared.budget_hit) report.status = SearchStatus::budget_exhausted;
  else if (shared.visitor_stop) report.status = SearchStatus::stopped_early;
  for (auto& [key, rep] : shared.classes) report.witnesses.push_back({key, rep});
  for (auto& h : shared.labeled_witnesses) report.witnesses.push_back({CanonicalForm{h.uniformity(), h.vertex_count(), h.edges()}, h});
  return report;
}

struct EngineOptions {
  int workers = 1;
  int split_depth = 6;
  SearchBudget budget;
};

// T_r-free, codegree above 2n/(2r+1), and not r-partite.
inline SearchProblem counterexample_problem(int r, int n, const EngineOptions& opt = {}) {
  SearchProblem p;
  p.r = r;
  p.n = n;
  p.threshold = Threshold::aes(r, n);
  p.forbidden = {GeneralizedTriangleMode{}};
  p.require_not_r_partite = true;
  p.budget = opt.budget;
  p.workers = opt.workers;
  p.split_depth = opt.split_depth;
  p.anchor_first_edge = true;
  return p;
}

inline SearchReport find_counterexamples(int r, int n, const EngineOptions& opt = {}) {
  return enumerate(counterexample_problem(r, n, opt));
}

// T_r-free with minimum positive codegree at least k, any partiteness.
inline SearchProblem min_codegree_problem(int r, int n, int k, const EngineOptions& opt = {}) {
  SearchProblem p;
  p.r = r;
  p.n = n;
  p.threshold = Threshold::at_least(k);
  p.forbidden = {GeneralizedTriangleMode{}};
  p.budget = opt.budget;
  p.workers = opt.workers;
  p.split_depth = opt.split_depth;
  p.anchor_first_edge = true;
  return p;
}

struct CoexStage {
  int k = 0;  // tested: minimum positive codegree >= k
  SearchStatus status = SearchStatus::exhaustive_complete;
  std::uint64_t nodes = 0;
  bool satisfiable = false;
};

struct CoexResult {
  int lower = 0;
  int upper = 0;
  bool exact() const { return lower == upper; }
  std::optional<Hypergraph> witness;
  std::vector<CoexStage> stages;
};

/**
 * Largest minimum positive codegree of a T_r-free r-graph on n vertices.
 * Tests k = n-r+1 down to 1 and stops at the first satisfiable k. A stage
 * that runs out of budget leaves the upper bound open, so the result is then
 * a bracket [lower, upper].
 */
inline CoexResult copositive_turan(int r, int n, const EngineOptions& opt = {}) {
  if (r < 3) throw ContractError("copositive Turan number needs r >= 3");
  if (n > kMaxSearchVertices) throw CapacityError("search supports n <= " + std::to_string(kMaxSearchVertices));
  CoexResult out;
  out.upper = std::max(0, n - r + 1);
  for (int k = n - r + 1; k >= 1; --k) {
    SearchProblem p = min_codegree_problem(r, n, k, opt);
    p.stop_at_first = true;
    std::optional<Hypergraph> found;
    const SearchReport rep = enumerate(p, [&](const Hypergraph& h) {
      if (!found) found = h;
      return false;
    });
    out.stages.push_back({k, rep.status, rep.nodes_explored, found.has_value()});
    if (found) {
      out.lower = k;
      out.witness = found;
      return out;
    }
    if (rep.status == SearchStatus::exhaustive_complete && out.upper == k) out.upper = k - 1;
  }
  return out;
}

/**
 * Greedy randomized pattern-free hypergraph: slots are visited in a seeded
 * random order and kept unless they complete a forbidden copy. Stops at
 * target_edges or when every slot has been tried.
 */
inline Hypergraph random_pattern_free(int r, int n, int target_edges, const std::vector<ForbiddenPattern>& forbidden,
                                      std::uint64_t seed) {
  if (r < 2) throw ContractError("uniformity must be at least 2");
  if (n < 0) throw ContractError("negative vertex count");
  if (n > kMaxSearchVertices) throw CapacityError("random generator supports n <= " + std::to_string(kMaxSearchVertices));
  if (r > n || target_edges <= 0) return Hypergraph(r, n, {});
  for (const auto& f : forbidden) {
    if (const auto* x = std::get_if<ExpansionMode>(&f); x && (r < 3 || x->ell < r)) throw ContractError("expansion needs l >= r >= 3");
  }
  const detail::SlotSpace space(r, n);
  detail::PartialHypergraph partial(space, forbidden);

  std::mt19937_64 rng(seed);
  std::vector<int> order(static_cast<std::size_t>(space.slot_count()));
  for (int i = 0; i < space.slot_count(); ++i) order[static_cast<std::size_t>(i)] = i;
  // Fisher-Yates on raw engine output; std::shuffle's algorithm is not portable.
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);

  for (int slot : order) {
    if (static_cast<int>(partial.edges().size()) >= target_edges) break;
    if (!partial.would_create_forbidden(slot)) partial.add(slot);
  }
  std::vector<VertexSet> edges;
  for (std::uint32_t e : partial.edges()) edges.push_back(detail::to_vertex_set(e));
  return Hypergraph(r, n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Theorem verification table

enum class Prediction {
  counterexamples_exist,  // below the admissible range; explicit constructions exist
  no_counterexamples,     // admissible range of the stability theorem
  no_claim,               // n <= r: outside every stated range
  property_only,          // expansion mode below its admissible range
};

inline std::string to_string(Prediction p) {
  switch (p) {
    case Prediction::counterexamples_exist: return "counterexamples-exist";
    case Prediction::no_counterexamples: return "no-counterexamples";
    case Prediction::no_claim: return "no-claim";
    case Prediction::property_only: return "property-only";
  }
  return "unknown";
}

enum class Outcome { pass, fail, inconclusive, not_applicable };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "PASS";
    case Outcome::fail: return "FAIL";
    case Outcome::inconclusive: return "INCONCLUSIVE";
    case Outcome::not_applicable: return "N/A";
  }
  return "unknown";
}

struct VerifyRow {
  int n = 0;
  std::string mode;  // "theorem" or "expansion"
  int ell = 0;
  Prediction prediction = Prediction::no_claim;
  SearchReport report;
  Outcome outcome = Outcome::not_applicable;
};

struct VerifyReport {
  int r = 0;
  std::vector<VerifyRow> rows;

  // No row failed and none was left inconclusive by the budget.
  bool passed() const {
    for (const auto& row : rows) {
      if (row.outcome == Outcome::fail || row.outcome == Outcome::inconclusive) return false;
    }
    return true;
  }
};

// 2n >= (r-1)(2r+1)
inline bool in_theorem_range(int r, int n) { return 2LL * n >= static_cast<long long>(r - 1) * (2 * r + 1); }

// 2n >= (2r+1)(r-2)C(l,2)
inline bool in_expansion_range(int r, int n, int ell) {
  return 2LL * n >= static_cast<long long>(2 * r + 1) * (r - 2) * (static_cast<long long>(ell) * (ell - 1) / 2);
}

inline Prediction theorem_prediction(int r, int n) {
  if (in_theorem_range(r, n)) return Prediction::no_counterexamples;
  if (n >= r + 1) return Prediction::counterexamples_exist;
  return Prediction::no_claim;
}

struct VerifyOptions {
  EngineOptions engine;
  std::optional<int> expansion_ell;  // also run expansion mode with this l
};

inline VerifyReport verify_theorem_suite(int r, int n_from, int n_to, const VerifyOptions& opt = {}) {
  VerifyReport out;
  out.r = r;
  auto judge = [](Prediction pred, const SearchReport& rep) {
    if (pred == Prediction::property_only || pred == Prediction::no_claim) return Outcome::not_applicable;
    const bool found = !rep.witnesses.empty();
    // A re-verified witness settles existence even when the budget ran out.
    if (found && pred == Prediction::counterexamples_exist) return Outcome::pass;
    if (rep.status != SearchStatus::exhaustive_complete) return Outcome::inconclusive;
    return found == (pred == Prediction::counterexamples_exist) ? Outcome::pass : Outcome::fail;
  };
  for (int n = n_from; n <= n_to; ++n) {
    VerifyRow row;
    row.n = n;
    row.mode = "theorem";
    row.prediction = theorem_prediction(r, n);
    row.report = find_counterexamples(r, n, opt.engine);
    row.outcome = judge(row.prediction, row.report);
    out.rows.push_back(std::move(row));

    if (opt.expansion_ell) {
      VerifyRow ex;
      ex.n = n;
      ex.mode = "expansion";
      ex.ell = *opt.expansion_ell;
      SearchProblem p = counterexample_problem(r, n, opt.engine);
      p.forbidden = {ExpansionMode{ex.ell}};
      ex.prediction = in_expansion_range(r, n, ex.ell) ? Prediction::no_counterexamples : Prediction::property_only;
      ex.report = enumerate(p);
      ex.outcome = judge(ex.prediction, ex.report);
      out.rows.push_back(std::move(ex));
    }
  }
  return out;
}

}  // namespace hypertri
