#include <gtest/gtest.h>

#include <random>

#include "mmtd/mmtd.hpp"
#include "support.hpp"

using namespace mmtd;

namespace {

struct Bus3 {
  GridCase gc = load_bundled_case("bus3");
  Topology t = Topology::from_case(gc);
  LoopMatrix G = fundamental_cycles(t, spanning_forest(t));
  Eigen::VectorXd x0 = gc.reactances();
};

struct CaseFixture {
  GridCase gc;
  Topology t;
  std::vector<double> w;
  LoopMatrix G;
  DeploymentPlan plan;

  explicit CaseFixture(const std::string& name)
      : gc(load_bundled_case(name)),
        t(Topology::from_case(gc)),
        w(loss_priority_weights(gc)),
        G(fundamental_cycles(t, spanning_forest(t, w))),
        plan(deployment_plan(t, w)) {}
};

}  // namespace

TEST(Rank, Basics) {
  EXPECT_EQ(numerical_rank(Eigen::MatrixXd::Identity(5, 5)), 5u);
  const Eigen::VectorXd u = Eigen::VectorXd::Random(100), v = Eigen::VectorXd::Random(100);
  EXPECT_EQ(numerical_rank(u * v.transpose()), 1u);
  EXPECT_EQ(numerical_rank(Eigen::MatrixXd(0, 4)), 0u);
  EXPECT_EQ(numerical_rank(Eigen::MatrixXd::Zero(3, 3)), 0u);
}

TEST(Rank, ToleranceIsRelative) {
  Eigen::MatrixXd M = Eigen::MatrixXd::Identity(4, 4);
  M(3, 3) = 1e-12;
  EXPECT_EQ(numerical_rank(M), 3u);
  EXPECT_EQ(numerical_rank(1e8 * M), 3u);
  M(3, 3) = 1e-8;
  EXPECT_EQ(numerical_rank(M), 4u);
}

TEST(CircuitBasis, OnesGivesLoopMatrix) {
  const Bus3 s;
  EXPECT_EQ(circuit_basis(s.G, Eigen::VectorXd::Ones(3)).F, s.G.G);
}

TEST(CircuitBasis, AnnihilatesMeasurementMatrix) {
  for (const auto& name : bundled_case_names()) {
    const CaseFixture s(name);
    const auto F = circuit_basis(s.G, s.gc.reactances()).F;
    EXPECT_LE((F * measurement_matrix(s.t, s.gc.reactances()).H).cwiseAbs().maxCoeff(), 1e-9) << name;
    const auto bridges = bridge_mask(s.t);
    for (std::size_t l = 0; l < bridges.size(); ++l)
      if (bridges[l]) EXPECT_EQ(F.col(static_cast<Eigen::Index>(l)).cwiseAbs().sum(), 0.0);
  }
}

TEST(Doa, ThreeBusTable) {
  const Bus3 s;
  EXPECT_EQ(doa({s.x0}, s.G), 2u);
  EXPECT_EQ(doa({s.x0, table1_case_i()}, s.G), 1u);
  EXPECT_EQ(doa({s.x0, table1_case_ii()}, s.G), 1u);
  EXPECT_EQ(doa({s.x0, table1_case_i(), table1_case_ii()}, s.G), 0u);
  EXPECT_EQ(composite_matrix(s.G, {s.x0, table1_case_i(), table1_case_ii()}).rank(), 3u);
}

TEST(Doa, BaseSettingGivesStateCount) {
  for (const auto& name : bundled_case_names()) {
    const CaseFixture s(name);
    EXPECT_EQ(doa({s.gc.reactances()}, s.G), s.gc.state_count()) << name;
  }
}

TEST(Supremum, Formula) {
  const auto t39 = Topology::from_case(load_bundled_case("bus39"));
  std::vector<std::size_t> all(46);
  for (std::size_t l = 0; l < 46; ++l) all[l] = l;
  EXPECT_EQ(supremum(analyze_deployment(t39, all)), 35u);
  EXPECT_EQ(supremum(analyze_deployment(t39, {})), 8u);
  const Topology tri(3, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(supremum(analyze_deployment(tri, {0, 1, 2})), 3u);
}

TEST(Plan, RejectsBadArguments) {
  const CaseFixture s("bus6");
  Rng rng(1);
  EXPECT_THROW(plan_mmtd(s.gc.reactances(), s.plan, s.G, 0.0, rng, 3), std::invalid_argument);
  EXPECT_THROW(plan_mmtd(s.gc.reactances(), s.plan, s.G, 1.0, rng, 3), std::invalid_argument);
  EXPECT_THROW(plan_mmtd(s.gc.reactances(), s.plan, s.G, 0.2, rng, 0), std::invalid_argument);
  EXPECT_THROW(plan_mmtd(s.gc.reactances(), s.plan, s.G, 0.2, rng, 3, {0.3, 64}), std::invalid_argument);
}

TEST(Plan, StageVectorsRespectBoxAndDeployment) {
  for (const auto& name : {"bus6", "bus14", "bus57"}) {
    const CaseFixture s(name);
    const Eigen::VectorXd x0 = s.gc.reactances();
    Rng rng(3);
    const auto sched = plan_mmtd(x0, s.plan, s.G, 0.2, rng, 10, {0.05, 64});
    std::vector<bool> deployed(x0.size(), false);
    for (auto l : s.plan.deployed) deployed[l] = true;
    for (const auto& x : sched.stages)
      for (Eigen::Index l = 0; l < x.size(); ++l) {
        if (!deployed[static_cast<std::size_t>(l)]) {
          EXPECT_EQ(x[l], x0[l]);
        } else {
          const double d = std::abs(x[l] / x0[l] - 1.0);
          EXPECT_LE(d, 0.2 + 1e-12);
          EXPECT_GE(d, 0.05 - 1e-12);
        }
      }
    EXPECT_NO_THROW(validate_schedule(to_document(sched, name)));
  }
}

TEST(Plan, TrajectoryStrictlyIncreasingToSupremum) {
  for (const auto& name : {"bus6", "bus14", "bus39", "bus57", "bus118"}) {
    const CaseFixture s(name);
    Rng rng(11);
    const auto sched = plan_mmtd(s.gc.reactances(), s.plan, s.G, 0.2, rng, 10);
    EXPECT_TRUE(sched.complete) << name;
    EXPECT_EQ(sched.final_rank(), s.plan.supremum);
    for (std::size_t k = 1; k < sched.rank_trajectory.size(); ++k)
      EXPECT_GT(sched.rank_trajectory[k], sched.rank_trajectory[k - 1]);
    EXPECT_EQ(composite_matrix(s.G, sched.all_settings()).rank(), sched.final_rank());
  }
}

TEST(Plan, StageCountsWithinBounds) {
  const std::vector<std::pair<std::string, std::size_t>> expected{
      {"bus6", 1}, {"bus14", 2}, {"bus57", 5}, {"bus118", 3}};
  for (const auto& [name, k] : expected) {
    const CaseFixture s(name);
    Rng rng(5);
    EXPECT_LE(plan_mmtd(s.gc.reactances(), s.plan, s.G, 0.2, rng, 10).stages.size(), k) << name;
  }
}

TEST(Plan, StopsAtMaxStagesAndFlagsIncomplete) {
  const CaseFixture s("bus57");
  Rng rng(2);
  const auto sched = plan_mmtd(s.gc.reactances(), s.plan, s.G, 0.2, rng, 1);
  EXPECT_EQ(sched.stages.size(), 1u);
  EXPECT_FALSE(sched.complete);
}

TEST(Plan, EmptyDeploymentNeedsNoStages) {
  const CaseFixture s("bus14");
  const auto plan = analyze_deployment(s.t, {});
  Rng rng(2);
  const auto sched = plan_mmtd(s.gc.reactances(), plan, s.G, 0.2, rng, 5);
  EXPECT_TRUE(sched.stages.empty());
  EXPECT_TRUE(sched.complete);
  EXPECT_EQ(sched.final_doa(), 13u);
}

TEST(Plan, ExhaustedRetriesRaiseSearchError) {
  // A lone bridge is deployed but the supremum is raised artificially: no draw can help.
  const CaseFixture s("bus14");
  auto plan = analyze_deployment(s.t, {13});
  plan.supremum += 1;
  Rng rng(2);
  EXPECT_THROW(plan_mmtd(s.gc.reactances(), plan, s.G, 0.2, rng, 5, {0.0, 8}), SearchError);
}

TEST(Plan, DeterministicForSeed) {
  const CaseFixture s("bus57");
  Rng a(9), b(9);
  const auto s1 = plan_mmtd(s.gc.reactances(), s.plan, s.G, 0.2, a, 10);
  const auto s2 = plan_mmtd(s.gc.reactances(), s.plan, s.G, 0.2, b, 10);
  ASSERT_EQ(s1.stages.size(), s2.stages.size());
  for (std::size_t k = 0; k < s1.stages.size(); ++k) EXPECT_EQ(s1.stages[k], s2.stages[k]);
}

TEST(Plan, CollinearityIsCheckedOnDeployedBranches) {
  const Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(4, 1, 2);
  EXPECT_TRUE(detail::collinear(x, 1.1 * x));
  Eigen::VectorXd y = x;
  y[0] *= 1.1;
  EXPECT_FALSE(detail::collinear(x, y));
  EXPECT_EQ(detail::restrict_to(x, {1, 3}), Eigen::Vector2d(x[1], x[3]));
}

TEST(Properties, SingleStageLowerBound) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const auto t = testing_support::random_connected(rng, 8, 14);
    const auto x0 = testing_support::random_reactances(rng, t.branch_count());
    const auto G = fundamental_cycles(t, spanning_forest(t));
    const auto m = static_cast<long>(t.branch_count());
    const auto n = static_cast<long>(t.cut_space_dimension());
    const auto d = static_cast<long>(doa({x0, testing_support::perturb(rng, x0, 0.5)}, G));
    EXPECT_GE(d, std::max(2 * n - m, 0L));
  }
}

TEST(Properties, ScaleInvariance) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 100; ++i) {
    const auto t = testing_support::random_connected(rng, 8, 14);
    const auto x0 = testing_support::random_reactances(rng, t.branch_count());
    const auto G = fundamental_cycles(t, spanning_forest(t));
    std::vector<Eigen::VectorXd> stages{x0, testing_support::perturb(rng, x0, 0.3),
                                        testing_support::perturb(rng, x0, 0.3)};
    const auto base = composite_matrix(G, stages).rank();
    for (auto& x : stages) x *= 3.7;
    EXPECT_EQ(composite_matrix(G, stages).rank(), base);
  }
}

TEST(Properties, RankMonotoneAndBounded) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 60; ++i) {
    const auto t = testing_support::random_connected(rng, 8, 14);
    const auto x0 = testing_support::random_reactances(rng, t.branch_count());
    const auto G = fundamental_cycles(t, spanning_forest(t));
    std::vector<std::size_t> all(t.branch_count());
    for (std::size_t l = 0; l < all.size(); ++l) all[l] = l;
    const auto bound = analyze_deployment(t, all).supremum;
    CompositeMatrix L(circuit_basis(G, x0));
    std::size_t prev = L.rank();
    for (int k = 0; k < 4; ++k) {
      L.append(circuit_basis(G, testing_support::perturb(rng, x0, 0.2)));
      const auto r = L.rank();
      EXPECT_GE(r, prev);
      EXPECT_LE(r, bound);
      prev = r;
    }
  }
}

TEST(Completeness, Cases) {
  const auto tri = verify_completeness(Topology(3, {{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_TRUE(tri.complete);
  EXPECT_EQ(tri.doi, 0u);
  EXPECT_EQ(verify_completeness(Topology::from_case(load_bundled_case("bus39"))).doi, 11u);
  const Topology tree(4, {{0, 1}, {1, 2}, {1, 3}});
  EXPECT_EQ(verify_completeness(tree).doi, 3u);
  EXPECT_TRUE(verify_completeness(Topology::from_case(load_bundled_case("bus3"))).complete);
}
