// Every search in this binary also recounts the feasibility bound at each node.
#define HYPERTRI_SEARCH_SELF_CHECK 1

#include <gtest/gtest.h>

#include <random>

#include "hypertri/constructions.hpp"
#include "hypertri/core.hpp"
#include "hypertri/errors.hpp"
#include "hypertri/hg_io.hpp"
#include "hypertri/search.hpp"
#include "oracles.hpp"
#include "search_oracle.hpp"
#include "test_util.hpp"

using namespace hypertri;

namespace {

SearchProblem triangle_free(int n, int k) {
  SearchProblem p;
  p.r = 3;
  p.n = n;
  p.threshold = Threshold::at_least(k);
  p.forbidden = {GeneralizedTriangleMode{}};
  return p;
}

std::set<std::string> class_strings(const SearchReport& rep) {
  std::set<std::string> out;
  for (const auto& w : rep.witnesses) out.insert(w.canonical.to_string());
  return out;
}

}  // namespace

TEST(Enumerate, TriangleFreeCountAtFive) {
  // Explicit T_3 pattern; the brute-force count over all 1024 subsets is 260.
  SearchProblem p = triangle_free(5, 1);
  p.forbidden = {generalized_triangle(3)};
  std::uint64_t visited = 0;
  const SearchReport rep = enumerate(p, [&](const Hypergraph& h) {
    EXPECT_FALSE(contains_generalized_triangle(h));
    ++visited;
    return true;
  });
  EXPECT_EQ(rep.status, SearchStatus::exhaustive_complete);
  EXPECT_EQ(rep.labeled_solutions, 260u);
  EXPECT_EQ(visited, 260u);
  EXPECT_EQ(oracle::brute_force(p).labeled, 260u);
}

TEST(Enumerate, SingleSlot) {
  SearchProblem p;
  p.r = 3;
  p.n = 3;
  const SearchReport rep = enumerate(p);
  EXPECT_EQ(rep.labeled_solutions, 1u);
  ASSERT_EQ(rep.witnesses.size(), 1u);
  EXPECT_EQ(rep.witnesses[0].representative.edge_count(), 1u);
}

TEST(Enumerate, UnreachableThreshold) {
  for (int n = 4; n <= 6; ++n) {
    SearchProblem p;
    p.r = 3;
    p.n = n;
    p.threshold = Threshold::at_least(n - 1);
    const SearchReport rep = enumerate(p);
    EXPECT_EQ(rep.status, SearchStatus::exhaustive_complete);
    EXPECT_TRUE(rep.witnesses.empty());
  }
}

TEST(Enumerate, EdgelessOnlyWithNonpositiveThreshold) {
  SearchProblem p;
  p.r = 3;
  p.n = 4;
  p.threshold = Threshold::at_least(0);
  EXPECT_EQ(enumerate(p).labeled_solutions, 16u);
  p.threshold = Threshold::at_least(1);
  EXPECT_EQ(enumerate(p).labeled_solutions, 15u);
}

TEST(Enumerate, MatchesBruteForceOnFuzzedProblems) {
  std::mt19937_64 rng(555);
  for (int t = 0; t < 30; ++t) {
    const SearchProblem p = oracle::fuzzed_problem(rng);
    const auto truth = oracle::brute_force(p);
    const SearchReport rep = enumerate(p);
    EXPECT_EQ(rep.status, SearchStatus::exhaustive_complete);
    EXPECT_EQ(oracle::classes_of(rep), truth.classes) << "problem " << t;
    if (!p.anchor_first_edge) {
      EXPECT_EQ(rep.labeled_solutions, truth.labeled) << "problem " << t;
    }
  }
}

TEST(Enumerate, PruningNeverChangesTheWitnessSet) {
  std::mt19937_64 rng(808);
  for (int n : {5, 6}) {
    for (int t = 0; t < (n == 5 ? 6 : 2); ++t) {
      SearchProblem p = oracle::fuzzed_problem(rng);
      p.n = n;
      p.anchor_first_edge = false;
      for (auto& f : p.forbidden) {
        if (std::holds_alternative<Hypergraph>(f)) f = GeneralizedTriangleMode{};
      }
      SearchProblem raw = p;
      raw.pruning = false;
      const SearchReport a = enumerate(p);
      const SearchReport b = enumerate(raw);
      EXPECT_EQ(oracle::classes_of(a), oracle::classes_of(b));
      EXPECT_EQ(a.labeled_solutions, b.labeled_solutions);
      EXPECT_LE(a.nodes_explored, b.nodes_explored);
    }
  }
  // The counterexample problem itself at n = 6.
  SearchProblem p = counterexample_problem(3, 6);
  SearchProblem raw = p;
  raw.pruning = false;
  EXPECT_EQ(oracle::classes_of(enumerate(p)), oracle::classes_of(enumerate(raw)));
}

TEST(Enumerate, WorkerCountDoesNotMatter) {
  for (bool anchor : {false, true}) {
    SearchProblem p = triangle_free(6, 2);
    p.anchor_first_edge = anchor;
    const SearchReport one = enumerate(p);
    for (int w : {2, 3, 4}) {
      for (int split : {1, 4, 6, 20}) {
        SearchProblem q = p;
        q.workers = w;
        q.split_depth = split;
        const SearchReport many = enumerate(q);
        EXPECT_EQ(oracle::classes_of(many), oracle::classes_of(one));
        EXPECT_EQ(many.labeled_solutions, one.labeled_solutions);
        EXPECT_EQ(many.nodes_explored, one.nodes_explored) << w << " " << split;
      }
    }
  }
}

TEST(Enumerate, FrozenOracleValuesAtSix) {
  // Brute force over all 2^20 labelled 3-graphs on 6 vertices: 30 labelled
  // T_3-free graphs with codegree >= 2 in 2 classes, none with codegree >= 3.
  const SearchReport two = enumerate(triangle_free(6, 2));
  EXPECT_EQ(two.labeled_solutions, 30u);
  EXPECT_EQ(two.witnesses.size(), 2u);
  EXPECT_TRUE(enumerate(triangle_free(6, 3)).witnesses.empty());
  // No codegree >= 3 at n = 5 either; 5 labelled copies of K_4^3 + K_1 at >= 2.
  EXPECT_TRUE(enumerate(triangle_free(5, 3)).witnesses.empty());
  EXPECT_EQ(enumerate(triangle_free(5, 2)).labeled_solutions, 5u);
}

TEST(Enumerate, BudgetIsHonoured) {
  SearchProblem p = triangle_free(8, 3);
  p.budget.max_nodes = 5000;
  const SearchReport rep = enumerate(p);
  EXPECT_EQ(rep.status, SearchStatus::budget_exhausted);
  EXPECT_GE(rep.nodes_explored, 5000u);
  p.budget = {};
  p.budget.max_seconds = 1e-9;
  EXPECT_EQ(enumerate(p).status, SearchStatus::budget_exhausted);
}

TEST(Enumerate, StopsEarly) {
  SearchProblem p = triangle_free(6, 1);
  p.stop_at_first = true;
  const SearchReport rep = enumerate(p);
  EXPECT_EQ(rep.status, SearchStatus::stopped_early);
  EXPECT_EQ(rep.labeled_solutions, 1u);
  int seen = 0;
  const SearchReport rep2 = enumerate(triangle_free(6, 1), [&](const Hypergraph&) { return ++seen < 3; });
  EXPECT_EQ(rep2.status, SearchStatus::stopped_early);
  EXPECT_EQ(seen, 3);
}

TEST(Enumerate, Validation) {
  SearchProblem p = triangle_free(17, 1);
  EXPECT_THROW(enumerate(p), CapacityError);
  p.n = 5;
  p.r = 2;
  EXPECT_THROW(enumerate(p), ContractError);
  p.r = 3;
  p.workers = 0;
  EXPECT_THROW(enumerate(p), ContractError);
  p.workers = 1;
  p.forbidden = {ExpansionMode{2}};
  EXPECT_THROW(enumerate(p), ContractError);
  p.forbidden = {complete(4, 5)};
  EXPECT_THROW(enumerate(p), ContractError);
}

TEST(Enumerate, FeasibilityBoundIsAnUpperBound) {
  // For a final hypergraph and any prefix of the slot order, the final
  // codegree of an (r-1)-set is at most its prefix codegree plus the
  // number of later slots containing it.
  std::mt19937_64 rng(61);
  for (int t = 0; t < 100; ++t) {
    const int n = 5 + static_cast<int>(rng() % 4);
    const Hypergraph h = testutil::random_hypergraph(3, n, 0.4, rng);
    std::vector<VertexSet> slots;
    for_each_subset(VertexSet::prefix(n), 3, [&](const VertexSet& e) { slots.push_back(e); });
    const std::size_t cut = rng() % (slots.size() + 1);
    for_each_subset(VertexSet::prefix(n), 2, [&](const VertexSet& face) {
      int current = 0, undecided = 0;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!face.is_subset_of(slots[i])) continue;
        if (i < cut) current += h.has_edge(slots[i]) ? 1 : 0;
        else ++undecided;
      }
      EXPECT_LE(h.shadow_index().neighborhood(face).size(), current + undecided);
    });
  }
}

TEST(Counterexamples, BelowTheRange) {
  const SearchReport four = find_counterexamples(3, 4);
  EXPECT_EQ(four.status, SearchStatus::exhaustive_complete);
  EXPECT_EQ(class_strings(four), (std::set<std::string>{canonical_form(complete(3, 4)).to_string()}));

  const SearchReport five = find_counterexamples(3, 5);
  EXPECT_EQ(class_strings(five), (std::set<std::string>{"3,5:123.124.134.234"}));

  const SearchReport six = find_counterexamples(3, 6);
  EXPECT_EQ(six.status, SearchStatus::exhaustive_complete);
  EXPECT_EQ(class_strings(six), (std::set<std::string>{"3,6:234.235.245.345"}));
  EXPECT_EQ(six.witnesses[0].canonical, canonical_form(clique_plus_isolated(3, 6)));
  for (const auto& w : six.witnesses) {
    EXPECT_TRUE(Threshold::aes(3, 6).exceeded_by(min_positive_codegree(w.representative)));
    EXPECT_FALSE(contains_generalized_triangle(w.representative));
    EXPECT_FALSE(find_r_partition(w.representative));
  }
}

TEST(Counterexamples, LabeledCountAtSixMatchesBruteForce) {
  // 15 labelled copies of K_4^3 plus two isolated vertices.
  SearchProblem p = counterexample_problem(3, 6);
  p.anchor_first_edge = false;
  EXPECT_EQ(enumerate(p).labeled_solutions, 15u);
}

TEST(Counterexamples, ThresholdBoundaryIsStrict) {
  // 2n/7 is non-integral for n = 5, 6 and integral at n = 7.
  for (int n = 4; n <= 9; ++n) {
    const SearchProblem p = counterexample_problem(3, n);
    EXPECT_EQ(p.threshold.to_string(), std::to_string(2 * n) + "/7");
    EXPECT_EQ(p.threshold.min_integer_exceeding(), 2 * n / 7 + 1);
    EXPECT_EQ(p.threshold.exceeded_by(2), n <= 6) << n;
  }
  // A graph at codegree exactly 2 = 14/7 on 7 vertices is no counterexample.
  const Hypergraph tight = wheel5_blowup(3, {2, 1, 1, 1, 1, 1});
  EXPECT_FALSE(counterexample_problem(3, 7).threshold.exceeded_by(min_positive_codegree(tight)));
}

TEST(Coex, SmallValues) {
  // Oracle over all 2^10 labelled 3-graphs on 5 vertices: the maximum is 2.
  const CoexResult five = copositive_turan(3, 5);
  EXPECT_TRUE(five.exact());
  EXPECT_EQ(five.lower, 2);
  const CoexResult six = copositive_turan(3, 6);
  EXPECT_TRUE(six.exact());
  EXPECT_EQ(six.lower, 2);
  ASSERT_TRUE(six.witness);
  EXPECT_EQ(min_positive_codegree(*six.witness), 2);
  EXPECT_FALSE(contains_generalized_triangle(*six.witness));
  const CoexResult four = copositive_turan(3, 4);
  EXPECT_EQ(four.lower, 2);
  EXPECT_EQ(four.stages.front().k, 2);
  EXPECT_THROW(copositive_turan(3, 17), CapacityError);
}

TEST(Coex, BudgetLeavesABracket) {
  EngineOptions opt;
  opt.budget.max_nodes = 10;
  const CoexResult res = copositive_turan(3, 8, opt);
  EXPECT_FALSE(res.exact());
  EXPECT_LT(res.lower, res.upper);
}

TEST(RandomPatternFree, Properties) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Hypergraph h = random_pattern_free(3, 9, 40, {GeneralizedTriangleMode{}}, seed);
    EXPECT_FALSE(contains_generalized_triangle(h));
    EXPECT_LE(h.edge_count(), 40u);
    EXPECT_EQ(to_hg(h), to_hg(random_pattern_free(3, 9, 40, {GeneralizedTriangleMode{}}, seed)));
  }
  EXPECT_TRUE(random_pattern_free(3, 9, 0, {GeneralizedTriangleMode{}}, 1).edges().empty());
  EXPECT_EQ(random_pattern_free(3, 6, 100, {}, 1).edge_count(), 20u);
  const Hypergraph star = Hypergraph::from_lists(3, 5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_FALSE(find_embedding(random_pattern_free(3, 8, 56, {star}, seed), star));
  }
  EXPECT_THROW(random_pattern_free(3, 17, 5, {}, 1), CapacityError);
}

TEST(Verify, SmallTable) {
  const VerifyReport rep = verify_theorem_suite(3, 4, 7);
  ASSERT_EQ(rep.rows.size(), 4u);
  const Prediction want[] = {Prediction::counterexamples_exist, Prediction::counterexamples_exist,
                             Prediction::counterexamples_exist, Prediction::no_counterexamples};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(rep.rows[i].prediction, want[i]);
    EXPECT_EQ(rep.rows[i].outcome, Outcome::pass);
  }
  EXPECT_TRUE(rep.passed());
  EXPECT_TRUE(verify_theorem_suite(3, 5, 4).rows.empty());
}

TEST(Verify, ExpansionBelowRangeIsPropertyOnly) {
  VerifyOptions opt;
  opt.expansion_ell = 3;
  const VerifyReport rep = verify_theorem_suite(3, 5, 5, opt);
  ASSERT_EQ(rep.rows.size(), 2u);
  EXPECT_EQ(rep.rows[1].mode, "expansion");
  EXPECT_EQ(rep.rows[1].prediction, Prediction::property_only);
  EXPECT_EQ(rep.rows[1].outcome, Outcome::not_applicable);
  EXPECT_FALSE(in_expansion_range(3, 7, 3));
  EXPECT_TRUE(in_expansion_range(3, 11, 3));
  EXPECT_FALSE(in_expansion_range(3, 10, 3));
}

TEST(Verify, Ranges) {
  EXPECT_FALSE(in_theorem_range(3, 6));
  EXPECT_TRUE(in_theorem_range(3, 7));
  EXPECT_FALSE(in_theorem_range(4, 13));
  EXPECT_TRUE(in_theorem_range(4, 14));
  EXPECT_EQ(theorem_prediction(3, 3), Prediction::no_claim);
}

TEST(Verify, BudgetMakesRowsInconclusive) {
  VerifyOptions opt;
  opt.engine.budget.max_nodes = 10;
  const VerifyReport rep = verify_theorem_suite(3, 7, 7, opt);
  EXPECT_EQ(rep.rows[0].outcome, Outcome::inconclusive);
  EXPECT_FALSE(rep.passed());
}

TEST(Verify, WitnessSettlesExistenceUnderBudget) {
  VerifyOptions opt;
  opt.engine.budget.max_nodes = 2000;
  const VerifyReport rep = verify_theorem_suite(4, 10, 10, opt);
  ASSERT_EQ(rep.rows.size(), 1u);
  EXPECT_EQ(rep.rows[0].report.status, SearchStatus::budget_exhausted);
  ASSERT_FALSE(rep.rows[0].report.witnesses.empty());
  EXPECT_EQ(rep.rows[0].outcome, Outcome::pass);
}
