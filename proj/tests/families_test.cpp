#include <gtest/gtest.h>

#include "mso/canonical.hpp"
#include "mso/error.hpp"
#include "mso/families.hpp"
#include "mso/subtree.hpp"
#include "mso/trends.hpp"

namespace mso {
namespace {

Rational frac(long a, long b) { return Rational(BigInt(a), BigInt(b)); }

std::vector<BroomSpec> feasible_specs(std::size_t max_n) {
  std::vector<BroomSpec> out;
  for (std::size_t n = 3; n <= max_n; ++n) {
    for (std::size_t s = 0; 2 * s + 3 <= n; ++s) out.push_back({n, s});
  }
  return out;
}

TEST(ConstructorTest, Sizes) {
  EXPECT_EQ(make_path(5).size(), 4u);
  EXPECT_EQ(make_cycle(5).size(), 5u);
  EXPECT_EQ(make_complete(6).size(), 15u);
  EXPECT_EQ(make_complete_bipartite(2, 4).size(), 8u);
  EXPECT_EQ(make_star(4).order(), 5u);
  EXPECT_EQ(make_h_n(8).size(), 13u);
  EXPECT_TRUE(make_h_n(8).adjacent(0, 1));
  const MultiGraph fig = make_edge_addition_counterexample();
  EXPECT_EQ(fig.order(), 7u);
  EXPECT_EQ(fig.size(), 12u);
  EXPECT_FALSE(fig.adjacent(0, 1));
  EXPECT_THROW(make_cycle(2), Error);
  EXPECT_THROW(make_h_n(3), Error);
}

TEST(ConstructorTest, DoubleBroom) {
  const MultiGraph t = make_t_n({9, 2});
  EXPECT_TRUE(is_tree(t));
  EXPECT_EQ(t.degree(0), 3u);
  EXPECT_EQ(t.degree(4), 3u);
  for (Vertex leaf = 5; leaf < 9; ++leaf) EXPECT_EQ(t.degree(leaf), 1u);
  const auto [g, e] = make_g_n({9, 2});
  EXPECT_EQ(e, (Edge{0, 4, 0}));
  EXPECT_EQ(g.size(), 9u);
  EXPECT_TRUE(are_isomorphic(make_t_n({7, 0}), make_path(7)));
  EXPECT_TRUE(are_isomorphic(make_g_n({7, 0}).first, make_cycle(7)));
  EXPECT_THROW(make_t_n({8, 3}), Error);
  try {
    BroomSpec{4, 1}.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidSpec);
  }
}

TEST(FamilySpecTest, Grammar) {
  EXPECT_EQ(parse_family_spec("path:4"), make_path(4));
  EXPECT_EQ(parse_family_spec("kbip:2:3"), make_complete_bipartite(2, 3));
  EXPECT_EQ(parse_family_spec("broom:9:2"), make_t_n({9, 2}));
  EXPECT_EQ(parse_family_spec("gn:9:2"), make_g_n({9, 2}).first);
  EXPECT_EQ(parse_family_spec("fig1"), make_edge_addition_counterexample());
  EXPECT_EQ(parse_family_spec("hn:6"), make_h_n(6));
  for (const char* bad : {"", "path", "path:", "path:x", "torus:3", "kbip:2", "broom:4:1", "cycle:2", "path:3:1"}) {
    EXPECT_THROW(parse_family_spec(bad), Error) << bad;
  }
}

TEST(CycleEdgeClosedFormTest, Examples) {
  const ClosedForm c3 = cycle_edge_closed_form(3);
  EXPECT_EQ(c3.total, 3);
  EXPECT_EQ(c3.weight, 8);
  EXPECT_EQ(c3.mean, frac(8, 3));
  const ClosedForm c4 = cycle_edge_closed_form(4);
  EXPECT_EQ(c4.total, 6);
  EXPECT_EQ(c4.weight, 20);
  EXPECT_EQ(c4.mean, frac(10, 3));
  EXPECT_THROW(cycle_edge_closed_form(2), Error);
}

TEST(CycleEdgeClosedFormTest, MatchesEngine) {
  for (std::size_t n = 3; n <= 12; ++n) {
    const auto local = local_polynomial_edge(make_cycle(n), {0, 1, 0});
    const ClosedForm c = cycle_edge_closed_form(n);
    EXPECT_EQ(local.poly, cycle_edge_polynomial(n));
    EXPECT_EQ(eval_at_one(local.poly), c.total);
    EXPECT_EQ(eval_at_one(local.poly), binomial(n, 2));
    EXPECT_EQ(deriv_at_one(local.poly), c.weight);
    EXPECT_EQ(local.mean, c.mean);
  }
}

TEST(GnEdgeTest, MeanExamples) {
  EXPECT_EQ(gn_edge_mean_closed_form({9, 2}), Rational(6));
  EXPECT_EQ(gn_edge_mean_closed_form({5, 0}), Rational(4));
  EXPECT_EQ(gn_edge_mean_closed_form({32, 10}), frac(56, 3));
  EXPECT_EQ(log_deriv_at_one(gn_edge_polynomial({32, 10})), frac(56, 3));
}

TEST(GnEdgeTest, ProductMatchesEngineForAllSmallSpecs) {
  for (const BroomSpec& spec : feasible_specs(16)) {
    const auto [g, e] = make_g_n(spec);
    const auto local = local_polynomial_edge(g, e);
    EXPECT_EQ(local.poly, gn_edge_polynomial(spec)) << spec.n << ":" << spec.s;
    EXPECT_EQ(local.mean, gn_edge_mean_closed_form(spec));
  }
}

TEST(GnEdgeTest, EdgeDecompositionAndWeightedAverage) {
  for (const BroomSpec& spec : feasible_specs(14)) {
    const auto [g, e] = make_g_n(spec);
    const auto whole = subtree_polynomial(g);
    const auto tree = tree_subtree_polynomial(make_t_n(spec));
    const IntPolynomial local = gn_edge_polynomial(spec);
    EXPECT_EQ(local + tree.poly, whole.poly);
    const Rational a(eval_at_one(local));
    const Rational b(tree.total);
    EXPECT_EQ(whole.mean, (a * gn_edge_mean_closed_form(spec) + b * tree.mean) / (a + b));
  }
}

TEST(TnCountTest, Examples) {
  EXPECT_EQ(tn_count_closed_form({5, 1}), 15);
  EXPECT_EQ(tn_count_closed_form({7, 0}), 28);
  EXPECT_EQ(tn_count_closed_form({9, 2}), tree_subtree_totals(make_t_n({9, 2})).first);
}

TEST(TnCountTest, MatchesTreeDpUpToForty) {
  for (const BroomSpec& spec : feasible_specs(40)) {
    EXPECT_EQ(tn_count_closed_form(spec), tree_subtree_polynomial(make_t_n(spec)).total) << spec.n << ":" << spec.s;
  }
}

TEST(DefaultSTest, Examples) {
  EXPECT_EQ(default_s_sequence(32), 10u);
  EXPECT_EQ(default_s_sequence(33), 11u);
  EXPECT_EQ(default_s_sequence(64), 12u);
  EXPECT_EQ(default_s_sequence(1024), 20u);
  EXPECT_EQ(default_s_sequence(4096), 24u);
  EXPECT_THROW(default_s_sequence(31), Error);
}

TEST(DefaultSTest, ConditionScan) {
  for (std::size_t n = 32; n <= 1000000; ++n) {
    const std::size_t s = default_s_sequence(n);
    const unsigned __int128 square = static_cast<unsigned __int128>(n) * n;
    ASSERT_GE(static_cast<unsigned __int128>(1) << s, square) << n;
    ASSERT_LT(static_cast<unsigned __int128>(1) << (s - 1), square) << n;
    ASSERT_LE(2 * s + 3, n) << n;
  }
}

TEST(TrendTest, DensityGapRows) {
  const auto rows = density_gap_table({32, 64, 100});
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& row : rows) {
    const auto n = static_cast<long>(row.n);
    const Rational s = row.at("s");
    EXPECT_GT(row.at("den_T"), row.at("den_T_bound"));
    EXPECT_EQ(row.at("den_T_bound"), (Rational(n) - s - Rational(1)) / Rational(n));
    EXPECT_EQ(row.at("den_G_e"), (Rational(2 * n + 2) - s) / Rational(3 * n));
    EXPECT_EQ(row.at("gap"), row.at("den_T") - row.at("den_G"));
    EXPECT_GT(row.at("gap"), Rational(0));
    EXPECT_LT(row.at("gap"), frac(1, 3));
  }
  EXPECT_THROW(density_gap_table({31}), Error);
  EXPECT_THROW(rows[0].at("nope"), Error);
}

TEST(TrendTest, DensityGapAgreesWithEngineOnSmallBroom) {
  // Same assembly applied to an enumerable broom, checked against the general engine.
  const BroomSpec spec{14, 4};
  const auto [g, e] = make_g_n(spec);
  const auto direct = subtree_polynomial(g);
  const auto tree = tree_subtree_polynomial(make_t_n(spec));
  EXPECT_EQ(direct.poly, tree.poly + gn_edge_polynomial(spec));
}

TEST(TrendTest, PathCycleGap) {
  const auto rows = path_cycle_gap_table({3, 4, 10, 100, 200});
  EXPECT_EQ(rows[0].at("gap"), frac(1, 9));
  EXPECT_EQ(rows[0].at("den_C"), frac(2, 3));
  EXPECT_EQ(rows[0].at("den_P"), frac(5, 9));
  EXPECT_EQ(rows[3].at("gap"), frac(33, 200));
  EXPECT_EQ(rows[4].at("gap"), frac(199, 1200));
  for (std::size_t n = 3; n <= 9; ++n) {
    const auto row = path_cycle_gap_table({n}).front();
    EXPECT_EQ(row.at("den_C"), subtree_polynomial(make_cycle(n)).density);
    EXPECT_EQ(row.at("den_P"), subtree_polynomial(make_path(n)).density);
  }
  EXPECT_THROW(path_cycle_gap_table({2}), Error);
}

TEST(TrendTest, PathCycleGapIncreasesUpToTwoHundred) {
  std::vector<std::size_t> ns;
  for (std::size_t n = 3; n <= 200; ++n) ns.push_back(n);
  const auto rows = path_cycle_gap_table(ns, 2);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GT(rows[i].at("gap"), rows[i - 1].at("gap")) << rows[i].n;
}

TEST(TrendTest, HnGapValues) {
  // The gap is positive throughout but peaks at n = 11 rather than shrinking from n = 8.
  const auto rows = hn_gap_table({8, 9, 10, 11});
  EXPECT_EQ(rows[0].at("gap"), frac(18225, 461879));
  EXPECT_EQ(rows[1].at("gap"), frac(14580, 244153));
  EXPECT_EQ(rows[2].at("gap"), frac(940410, 13836851));
  EXPECT_EQ(rows[3].at("gap"), frac(33579198, 479244073));
  for (const auto& row : rows) {
    EXPECT_EQ(row.at("mu_H"), subtree_polynomial(make_h_n(row.n)).mean);
    EXPECT_EQ(row.at("mu_K"), subtree_polynomial(make_complete_bipartite(2, row.n - 2)).mean);
  }
  EXPECT_THROW(hn_gap_table({17}), Error);
  EXPECT_THROW(hn_gap_table({3}), Error);
}

TEST(TrendTest, CsvAndJsonRendering) {
  const auto rows = path_cycle_gap_table({3});
  EXPECT_EQ(trend_csv(rows, 4),
            "n,den_C,den_C_decimal,den_P,den_P_decimal,gap,gap_decimal\n"
            "3,2/3,0.6667,5/9,0.5556,1/9,0.1111\n");
  const std::string json = trend_json(rows, 4);
  EXPECT_NE(json.find("\"1/9\""), std::string::npos);
  EXPECT_NE(json.find("0.1111"), std::string::npos);
}

}  // namespace
}  // namespace mso
