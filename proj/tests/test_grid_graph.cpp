#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "mmtd/mmtd.hpp"
#include "support.hpp"

using namespace mmtd;
using Idx = std::vector<std::size_t>;

namespace {

Topology triangle() { return Topology(3, {{0, 1}, {0, 2}, {1, 2}}); }
Topology path3() { return Topology(3, {{0, 1}, {1, 2}}); }

Idx one_based(const Idx& v) {
  Idx out;
  for (auto l : v) out.push_back(l + 1);
  return out;
}

}  // namespace

TEST(Bridges, Triangle) { EXPECT_TRUE(find_bridges(triangle()).empty()); }

TEST(Bridges, Path) { EXPECT_EQ(find_bridges(path3()), (Idx{0, 1})); }

TEST(Bridges, ParallelBranchesAreNeverBridges) {
  const Topology t(3, {{0, 1}, {1, 0}, {1, 2}});
  EXPECT_EQ(find_bridges(t), (Idx{2}));
}

TEST(Bridges, DisconnectedGraphPerComponent) {
  const Topology t(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
  EXPECT_EQ(find_bridges(t), (Idx{3}));
  EXPECT_EQ(t.component_count(), 2u);
}

TEST(Bridges, Bus39KnownSet) {
  const auto t = Topology::from_case(load_bundled_case("bus39"));
  EXPECT_EQ(one_based(find_bridges(t)), (Idx{5, 14, 20, 27, 32, 33, 34, 37, 39, 41, 46}));
}

TEST(Bridges, BundledCases) {
  EXPECT_TRUE(find_bridges(Topology::from_case(load_bundled_case("bus6"))).empty());
  EXPECT_EQ(one_based(find_bridges(Topology::from_case(load_bundled_case("bus14")))), (Idx{14}));
  EXPECT_EQ(one_based(find_bridges(Topology::from_case(load_bundled_case("bus57")))), (Idx{45}));
  EXPECT_EQ(one_based(find_bridges(Topology::from_case(load_bundled_case("bus118")))),
            (Idx{7, 9, 113, 133, 134, 176, 177, 183, 184}));
}

TEST(Bridges, MatchBruteForceOnRandomMultigraphs) {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 200; ++i) {
    const auto t = testing_support::random_connected(rng, 12, 20);
    EXPECT_EQ(find_bridges(t), testing_support::brute_force_bridges(t)) << "graph " << i;
  }
}

TEST(SpanningForest, TriangleTieBreak) {
  const auto f = spanning_forest(triangle());
  EXPECT_EQ(f.tree, (Idx{0, 1}));
  EXPECT_EQ(f.cotree, (Idx{2}));
}

TEST(SpanningForest, SixBusWeightedTree) {
  const auto t = Topology::from_case(load_bundled_case("bus6"));
  std::vector<double> w(t.branch_count(), 1.0);
  for (auto l : {2, 3, 5, 8, 9}) w[l - 1] = 0.0;
  EXPECT_EQ(one_based(spanning_forest(t, w).tree), (Idx{2, 3, 5, 8, 9}));
}

TEST(SpanningForest, SixBusLossPriorityTree) {
  const auto gc = load_bundled_case("bus6");
  const auto w = loss_priority_weights(gc);
  EXPECT_EQ(one_based(spanning_forest(Topology::from_case(gc), w).tree), (Idx{2, 3, 5, 7, 9}));
}

TEST(SpanningForest, DisconnectedForestSize) {
  const Topology t(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  const auto f = spanning_forest(t);
  EXPECT_EQ(f.tree.size(), t.bus_count() - t.component_count());
  EXPECT_EQ(f.tree.size(), 4u);
}

TEST(SpanningForest, RejectsBadWeights) {
  std::vector<double> short_w{1.0};
  EXPECT_THROW(spanning_forest(triangle(), short_w), std::invalid_argument);
  std::vector<double> nan_w{1.0, std::nan(""), 1.0};
  EXPECT_THROW(spanning_forest(triangle(), nan_w), std::invalid_argument);
}

TEST(SpanningForest, SizeAndAcyclicOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const auto t = testing_support::random_connected(rng, 10, 18);
    const Eigen::VectorXd w = testing_support::random_reactances(rng, t.branch_count());
    const auto f = spanning_forest(t, std::vector<double>(w.data(), w.data() + w.size()));
    ASSERT_EQ(f.tree.size(), t.bus_count() - 1);
    std::vector<Edge> tree_edges;
    for (auto l : f.tree) tree_edges.push_back(t.edge(l));
    EXPECT_EQ(testing_support::count_components(t.bus_count(), tree_edges), 1u);
  }
}

TEST(FundamentalCycles, Triangle) {
  const auto t = triangle();
  const auto G = fundamental_cycles(t, spanning_forest(t));
  ASSERT_EQ(G.G.rows(), 1);
  // cotree 2->3, back 3->1 against branch 2, then 1->2 along branch 1
  EXPECT_EQ(G.G(0, 0), 1.0);
  EXPECT_EQ(G.G(0, 1), -1.0);
  EXPECT_EQ(G.G(0, 2), 1.0);
}

TEST(FundamentalCycles, StructureOnBundledCases) {
  for (const auto& name : bundled_case_names()) {
    const auto gc = load_bundled_case(name);
    const auto t = Topology::from_case(gc);
    const auto f = spanning_forest(t, loss_priority_weights(gc));
    const auto G = fundamental_cycles(t, f);
    ASSERT_EQ(static_cast<std::size_t>(G.G.rows()), t.branch_count() - t.cut_space_dimension()) << name;
    ASSERT_EQ(f.tree.size(), t.cut_space_dimension());
    for (Eigen::Index i = 0; i < G.G.rows(); ++i) {
      int cotree_hits = 0;
      for (auto l : f.cotree) cotree_hits += G.G(i, static_cast<Eigen::Index>(l)) != 0.0 ? 1 : 0;
      EXPECT_EQ(cotree_hits, 1);
      EXPECT_EQ(G.G(i, static_cast<Eigen::Index>(G.cotree[static_cast<std::size_t>(i)])), 1.0);
    }
    const auto bridges = bridge_mask(t);
    for (std::size_t l = 0; l < t.branch_count(); ++l) {
      const double col = G.G.col(static_cast<Eigen::Index>(l)).cwiseAbs().sum();
      if (bridges[l])
        EXPECT_EQ(col, 0.0) << name << " bridge " << l + 1;
      else
        EXPECT_GT(col, 0.0) << name << " branch " << l + 1;
    }
    EXPECT_LE((G.G * measurement_matrix(t, Eigen::VectorXd::Ones(G.G.cols())).H).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(FundamentalCuts, PathIsIdentity) {
  const auto t = path3();
  const auto S = fundamental_cuts(t, spanning_forest(t));
  EXPECT_TRUE(S.S.isApprox(Eigen::MatrixXd::Identity(2, 2)));
}

TEST(FundamentalCuts, TriangleRowsPairWithCotree) {
  const auto t = triangle();
  const auto S = fundamental_cuts(t, spanning_forest(t));
  ASSERT_EQ(S.S.rows(), 2);
  for (Eigen::Index j = 0; j < 2; ++j) {
    EXPECT_NE(S.S(j, j), 0.0);
    EXPECT_NE(S.S(j, 2), 0.0);
    EXPECT_EQ(S.S(j, 1 - j), 0.0);
  }
}

TEST(FundamentalCuts, RowsIndependentAndOrthogonalToCycles) {
  for (const auto& name : bundled_case_names()) {
    const auto gc = load_bundled_case(name);
    const auto t = Topology::from_case(gc);
    const auto f = spanning_forest(t, loss_priority_weights(gc));
    const auto S = fundamental_cuts(t, f);
    const auto G = fundamental_cycles(t, f);
    EXPECT_EQ(numerical_rank(S.S), t.cut_space_dimension()) << name;
    EXPECT_LE((S.S * G.G.transpose()).cwiseAbs().maxCoeff(), 0.0) << name;
    for (std::size_t j = 0; j < f.tree.size(); ++j) {
      int tree_hits = 0;
      for (auto l : f.tree) tree_hits += S.S(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l)) != 0.0;
      EXPECT_EQ(tree_hits, 1);
      EXPECT_TRUE(S.side[j][t.edge(f.tree[j]).from]);
      EXPECT_FALSE(S.side[j][t.edge(f.tree[j]).to]);
    }
  }
}

TEST(FundamentalCuts, SideIndicatorAttackSupportedOnCut) {
  for (const auto& name : bundled_case_names()) {
    const auto gc = load_bundled_case(name);
    const auto t = Topology::from_case(gc);
    const auto f = spanning_forest(t, loss_priority_weights(gc));
    const auto S = fundamental_cuts(t, f);
    const auto H = measurement_matrix(t, gc.reactances());
    for (std::size_t j = 0; j < f.tree.size(); ++j) {
      const Eigen::VectorXd a = H.H * cut_state_shift(H, S.side[j], t.reference());
      for (Eigen::Index l = 0; l < a.size(); ++l)
        EXPECT_EQ(a[l] != 0.0, S.S(static_cast<Eigen::Index>(j), l) != 0.0) << name << " cut " << j << " line " << l;
    }
  }
}

TEST(Deployment, TableTwoCounts) {
  const std::vector<std::pair<std::string, std::size_t>> expected{
      {"bus6", 5}, {"bus14", 12}, {"bus39", 27}, {"bus57", 55}, {"bus118", 108}};
  for (const auto& [name, kd] : expected) {
    const auto gc = load_bundled_case(name);
    const auto t = Topology::from_case(gc);
    const auto plan = deployment_plan(t, loss_priority_weights(gc));
    EXPECT_EQ(plan.deployed.size(), kd) << name;
    EXPECT_EQ(plan.supremum, t.branch_count() - find_bridges(t).size()) << name;
    EXPECT_EQ(deployment_plan(t).deployed.size(), kd) << name << " uniform weights";
  }
}

TEST(Deployment, AnalyzeEdgeCases) {
  const auto t = Topology::from_case(load_bundled_case("bus39"));
  const auto none = analyze_deployment(t, {});
  EXPECT_EQ(none.m_d, 0u);
  EXPECT_EQ(none.supremum, 46u - 38u);

  Idx all(46);
  for (std::size_t l = 0; l < all.size(); ++l) all[l] = l;
  const auto full = analyze_deployment(t, all);
  EXPECT_EQ(full.supremum, 35u);
  EXPECT_EQ(full.supremum, deployment_plan(t).supremum);

  const auto bridge_only = analyze_deployment(t, {4});
  EXPECT_EQ(bridge_only.m_d, 1u);
  EXPECT_EQ(bridge_only.m_sc_d, 1u);
  EXPECT_EQ(bridge_only.supremum, 46u - 38u);
  EXPECT_THROW(analyze_deployment(t, {46}), std::invalid_argument);
}

TEST(Deployment, TreeMinusBridgesEqualsFullOnRandomGraphs) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const auto t = testing_support::random_connected(rng, 10, 16);
    Idx all(t.branch_count());
    for (std::size_t l = 0; l < all.size(); ++l) all[l] = l;
    const auto plan = deployment_plan(t);
    EXPECT_EQ(plan.supremum, analyze_deployment(t, all).supremum);
    EXPECT_EQ(plan.supremum, t.branch_count() - find_bridges(t).size());
    for (auto l : plan.deployed) EXPECT_FALSE(bridge_mask(t)[l]);
  }
}
