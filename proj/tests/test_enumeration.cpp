#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "genpow/constructions.hpp"
#include "genpow/enumeration.hpp"
#include "genpow/experiments.hpp"
#include "oracles.hpp"

using namespace genpow;

namespace {

SimpleGraph permuted(const SimpleGraph& g, const std::vector<vertex_t>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return SimpleGraph(g.order(), std::move(edges));
}

// Isomorphism by trying every bijection.
bool brute_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<vertex_t> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges()) ok = ok && b.has_edge(perm[u], perm[v]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

} // namespace

TEST(Codes, EncodeDecodeRoundTrip) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = oracle::random_connected_graph(1 + trial % 11, 0.3, rng);
    EXPECT_EQ(decode(encode(g), g.order()), g);
  }
  EXPECT_THROW(encode(path_graph(12)), std::invalid_argument);
}

TEST(Codes, CanonicalCodeInvariantUnderRelabeling) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 80; ++trial) {
    auto g = oracle::random_connected_graph(2 + trial % 8, 0.35, rng);
    std::vector<vertex_t> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto h = permuted(g, perm);
    EXPECT_EQ(canonical_code(g), canonical_code(h));
    EXPECT_TRUE(brute_isomorphic(g, canonical_form(g)));
  }
}

TEST(Codes, CanonicalCodeSeparatesClasses) {
  // Same degree sequence, different graphs: C_6 vs two triangles.
  SimpleGraph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_FALSE(isomorphic(cycle_graph(6), two_triangles));
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 4 + trial % 4;
    auto a = oracle::random_connected_graph(n, 0.3, rng);
    auto b = oracle::random_connected_graph(n, 0.3, rng);
    EXPECT_EQ(isomorphic(a, b), brute_isomorphic(a, b));
  }
}

TEST(Classes, CountsMatchKnownSequences) {
  // Graphs and connected graphs on n unlabeled vertices.
  const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044};
  const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853};
  for (std::size_t n = 1; n <= 7; ++n) {
    EXPECT_EQ(graph_classes(n).size(), all[n - 1]) << n;
    EXPECT_EQ(connected_graph_classes(n).size(), connected[n - 1]) << n;
  }
}

TEST(Classes, LabeledCountsAgree) {
  // Each class is counted n!/|Aut| times among labeled graphs on n vertices.
  for (std::size_t n = 3; n <= 5; ++n) {
    std::set<GraphCode> from_labeled;
    std::size_t labeled = 0;
    enumerate_connected_nonbipartite(
        n,
        [&](const SimpleGraph& g) {
          ++labeled;
          from_labeled.insert(canonical_code(g));
        },
        false);
    std::set<GraphCode> deduped;
    for (const auto& g : connected_nonbipartite_classes(n)) deduped.insert(canonical_code(g));
    EXPECT_EQ(from_labeled, deduped);
    EXPECT_GE(labeled, deduped.size());
  }
}

TEST(EnumerateNonbipartite, Examples) {
  auto three = connected_nonbipartite_classes(3);
  ASSERT_EQ(three.size(), 1u);
  EXPECT_TRUE(isomorphic(three.front(), cycle_graph(3)));

  auto four = connected_nonbipartite_classes(4);
  EXPECT_EQ(four.size(), 3u);
  EXPECT_TRUE(std::any_of(four.begin(), four.end(), [](auto& g) { return isomorphic(g, cycle_plus_pendant(4)); }));

  auto five = connected_nonbipartite_classes(5);
  EXPECT_EQ(five.size(), 16u);
  EXPECT_TRUE(std::any_of(five.begin(), five.end(), [](auto& g) { return isomorphic(g, cycle_graph(5)); }));
  for (const auto& g : five) {
    EXPECT_TRUE(is_connected(g));
    EXPECT_FALSE(is_bipartite(g));
  }

  EXPECT_THROW(enumerate_connected_nonbipartite(2, [](const SimpleGraph&) {}), std::out_of_range);
  EXPECT_THROW(enumerate_connected_nonbipartite(8, [](const SimpleGraph&) {}), std::out_of_range);
}

TEST(MinRho, Examples) {
  auto a5 = min_rho_search(5, MatrixKind::adjacency);
  ASSERT_EQ(a5.argmin.size(), 1u);
  EXPECT_TRUE(isomorphic(a5.argmin.front(), cycle_graph(5)));
  EXPECT_NEAR(a5.min_value, 2.0, 1e-9);
  EXPECT_EQ(a5.candidates, 16u);

  auto a6 = min_rho_search(6, MatrixKind::adjacency);
  ASSERT_EQ(a6.argmin.size(), 1u);
  EXPECT_TRUE(isomorphic(a6.argmin.front(), cycle_plus_pendant(6)));

  auto q5 = min_rho_search(5, MatrixKind::signless_laplacian);
  ASSERT_EQ(q5.argmin.size(), 1u);
  EXPECT_TRUE(isomorphic(q5.argmin.front(), cycle_graph(5)));
  EXPECT_NEAR(q5.min_value, 4.0, 1e-9);

  EXPECT_THROW(min_rho_search(3, MatrixKind::adjacency), std::out_of_range);
}

TEST(MinRho, MinimumAgreesWithEigensolverScan) {
  for (std::size_t n = 4; n <= 6; ++n)
    for (bool signless : {false, true}) {
      double best = INFINITY;
      for (const auto& g : connected_nonbipartite_classes(n)) best = std::min(best, oracle::eigen_rho(g, signless));
      auto r = min_rho_search(n, signless ? MatrixKind::signless_laplacian : MatrixKind::adjacency);
      EXPECT_NEAR(r.min_value, best, 1e-9);
    }
}

TEST(MinRho, WideTieWindowReportsSeveral) {
  auto r = min_rho_search(5, MatrixKind::adjacency, {}, 0.25);
  EXPECT_EQ(r.argmin.size(), 2u); // C_5 at 2 and the next class at 2.2143
  for (std::size_t i = 1; i < r.argmin.size(); ++i)
    EXPECT_LT(canonical_code(r.argmin[i - 1]), canonical_code(r.argmin[i]));
}

TEST(Reports, VerifyNob) {
  auto r = verify_theorem_nob(6, {4, 6});
  EXPECT_TRUE(r.passed());
  ASSERT_EQ(r.verdicts.size(), 1u);
  EXPECT_EQ(r.rows.size(), 12u);
  EXPECT_THROW(verify_theorem_nob(8, {4}), std::out_of_range);
  EXPECT_THROW(verify_theorem_nob(5, {5}), std::invalid_argument);
}

TEST(Reports, Converge) {
  auto r = convergence_report(50);
  EXPECT_TRUE(r.passed());
  ASSERT_EQ(r.rows.size(), 50u);
  EXPECT_LT(std::stod(r.rows.back()[2]), 0.02);
  // Far past double resolution the verdicts report the failure.
  EXPECT_FALSE(convergence_report(80).passed());
}

TEST(Reports, LimitPoints) {
  auto r = limit_point_report(40);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.rows.size(), 40u);
  EXPECT_EQ(r.columns.size(), 4u);
}

TEST(Reports, MinRho) {
  auto r = min_rho_report(6, MatrixKind::signless_laplacian);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.verdicts.size(), 2u);
  EXPECT_TRUE(isomorphic(expected_nonbipartite_minimizer(6), cycle_plus_pendant(6)));
  EXPECT_TRUE(isomorphic(expected_nonbipartite_minimizer(7), cycle_graph(7)));
}

TEST(Reports, CsvLayout) {
  ExperimentReport r;
  r.name = "demo";
  r.columns = {"a", "b"};
  r.rows = {{"1", format_number(1.0 / 3.0)}};
  r.add_verdict("ok", 1e-8, true);
  r.add_verdict("bad", 0.0, false, "why");
  std::ostringstream out;
  write_csv(out, r);
  EXPECT_EQ(out.str(), "a,b\n1,0.333333333333\n\ncheck,tolerance,verdict,detail\nok,1e-08,PASS,\nbad,0,FAIL,why\n");
  EXPECT_FALSE(r.passed());
}

TEST(Reports, Deterministic) {
  std::ostringstream a, b;
  write_csv(a, min_rho_report(6, MatrixKind::adjacency));
  write_csv(b, min_rho_report(6, MatrixKind::adjacency));
  EXPECT_EQ(a.str(), b.str());
}
