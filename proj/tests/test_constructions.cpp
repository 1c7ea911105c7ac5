#include <gtest/gtest.h>

#include "hypertri/canonical.hpp"
#include "hypertri/constructions.hpp"
#include "hypertri/core.hpp"
#include "hypertri/errors.hpp"
#include "hypertri/partition.hpp"
#include "hypertri/patterns.hpp"
#include "hypertri/threshold.hpp"

using namespace hypertri;

TEST(Complete, Examples) {
  EXPECT_EQ(complete(3, 4).edge_count(), 4u);
  EXPECT_EQ(complete(3, 3).edge_count(), 1u);
  EXPECT_EQ(complete(5, 9).edge_count(), 126u);
  for (int r = 3; r <= 5; ++r) EXPECT_EQ(min_positive_codegree(complete(r, 2 * r - 2)), r - 1);
  EXPECT_THROW(complete(3, 2), ContractError);
}

TEST(GeneralizedTriangleGen, Examples) {
  EXPECT_EQ(generalized_triangle(3), Hypergraph::from_lists(3, 5, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}}));
  EXPECT_EQ(generalized_triangle(2), Hypergraph::from_lists(2, 3, {{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_THROW(generalized_triangle(1), ContractError);
}

TEST(Wheel, Examples) {
  const Hypergraph w = wheel5(3);
  EXPECT_EQ(w.vertex_count(), 6);
  EXPECT_EQ(w.edge_count(), 5u);
  EXPECT_EQ(vertex_degree(w, 0), 5);
  for (Vertex v = 1; v < 6; ++v) EXPECT_EQ(vertex_degree(w, v), 2);
  EXPECT_FALSE(find_r_partition(w));
  EXPECT_FALSE(contains_generalized_triangle(w));
  EXPECT_FALSE(contains_generalized_triangle(wheel5(4)));
  EXPECT_EQ(wheel5(5).vertex_count(), 8);
  EXPECT_THROW(wheel5(2), ContractError);
}

TEST(Blowup, Examples) {
  const Hypergraph edge = Hypergraph::from_lists(3, 3, {{0, 1, 2}});
  EXPECT_EQ(blowup({edge, {2, 1, 1}}).edge_count(), 2u);
  const Hypergraph b = blowup({wheel5(3), {2, 1, 1, 1, 1, 1}});
  EXPECT_EQ(b.vertex_count(), 7);
  EXPECT_EQ(b.edge_count(), 10u);
  EXPECT_EQ(min_positive_codegree(b), 2);
  EXPECT_EQ(canonical_form(blowup({wheel5(3), {1, 1, 1, 1, 1, 1}})), canonical_form(wheel5(3)));
  EXPECT_THROW(blowup({edge, {2, 0, 1}}), ContractError);
  EXPECT_THROW(blowup({edge, {2, 1}}), ContractError);
  EXPECT_THROW(blowup({edge, {100, 20, 20}}), CapacityError);
}

TEST(Blowup, TightWheelsMeetTheBoundExactly) {
  for (auto [r, n] : {std::pair{3, 7}, {3, 14}, {3, 21}, {4, 9}, {4, 18}, {5, 11}}) {
    const Hypergraph g = wheel5_blowup(r, wheel5_tight_sizes(r, n));
    EXPECT_EQ(g.vertex_count(), n);
    const int d = min_positive_codegree(g);
    EXPECT_EQ(static_cast<long long>(d) * (2 * r + 1), 2LL * n) << r << "," << n;
    EXPECT_FALSE(Threshold::aes(r, n).exceeded_by(d));
    EXPECT_FALSE(contains_generalized_triangle(g));
    EXPECT_FALSE(find_r_partition(g));
  }
  EXPECT_EQ(wheel5_tight_sizes(3, 7), (std::vector<int>{2, 1, 1, 1, 1, 1}));
  EXPECT_EQ(wheel5_tight_sizes(4, 18), (std::vector<int>{4, 4, 2, 2, 2, 2, 2}));
  EXPECT_THROW(wheel5_tight_sizes(3, 8), ContractError);
}

TEST(BalancedPartite, Examples) {
  const Hypergraph h = balanced_r_partite(3, 6);
  EXPECT_EQ(h.edge_count(), 8u);
  EXPECT_EQ(min_positive_codegree(h), 2);
  EXPECT_EQ(min_positive_codegree(balanced_r_partite(3, 7)), 2);
  EXPECT_FALSE(contains_generalized_triangle(balanced_r_partite(3, 9)));
  EXPECT_EQ(balanced_part_sizes(3, 7), (std::vector<int>{3, 2, 2}));
  for (int r = 3; r <= 5; ++r) {
    for (int n = r; n <= 14; ++n) EXPECT_EQ(min_positive_codegree(balanced_r_partite(r, n)), n / r);
  }
  EXPECT_THROW(balanced_r_partite(3, 2), ContractError);
}

TEST(ExpansionGen, Examples) {
  const Hypergraph h = expansion_of_clique(3, 3);
  EXPECT_EQ(h.vertex_count(), 10);
  EXPECT_EQ(h.edge_count(), 6u);
  const Hypergraph g = expansion_of_clique(4, 4);
  EXPECT_EQ(g.vertex_count(), 25);
  EXPECT_EQ(g.edge_count(), 10u);
  EXPECT_TRUE(contains_clique_in_ith_shadow(h, 4, 1));
  EXPECT_THROW(expansion_of_clique(3, 2), ContractError);
}

TEST(CliquePlusIsolated, Examples) {
  const Hypergraph h = clique_plus_isolated(3, 6);
  EXPECT_EQ(h.edge_count(), 4u);
  EXPECT_EQ(h.vertex_count(), 6);
  EXPECT_EQ(vertex_degree(h, 4), 0);
  EXPECT_EQ(vertex_degree(h, 5), 0);
  EXPECT_EQ(min_positive_codegree(h), 2);
  EXPECT_FALSE(find_r_partition(h));
  EXPECT_FALSE(contains_generalized_triangle(h));
  EXPECT_TRUE(Threshold::aes(3, 6).exceeded_by(2));
  EXPECT_EQ(clique_plus_isolated(3, 4), complete(3, 4));
  EXPECT_THROW(clique_plus_isolated(3, 3), ContractError);
}

TEST(CliquePlusIsolated, BeatsThresholdBelowRange) {
  for (int r = 3; r <= 5; ++r) {
    for (int n = 2 * r - 2; 2 * n < (r - 1) * (2 * r + 1); ++n) {
      const Hypergraph h = clique_plus_isolated(r, n);
      EXPECT_EQ(min_positive_codegree(h), r - 1);
      EXPECT_TRUE(Threshold::aes(r, n).exceeded_by(r - 1)) << r << "," << n;
      EXPECT_FALSE(find_r_partition(h));
      EXPECT_FALSE(contains_generalized_triangle(h));
    }
    // At the end of the range the strict inequality fails.
    const int stop = ((r - 1) * (2 * r + 1) + 1) / 2;
    EXPECT_FALSE(Threshold::aes(r, stop).exceeded_by(r - 1));
  }
}
