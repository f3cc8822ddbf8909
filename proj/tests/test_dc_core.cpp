#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mmtd/mmtd.hpp"
#include "support.hpp"

using namespace mmtd;

namespace {

struct Bus3 {
  GridCase gc = load_bundled_case("bus3");
  Topology t = Topology::from_case(gc);
  MeasurementMatrix H = measurement_matrix(t, gc.reactances());
};

}  // namespace

TEST(MeasurementMatrix, ThreeBusValues) {
  const Bus3 s;
  const Eigen::MatrixXd expected = (Eigen::MatrixXd(3, 2) << -19.84, 0, 0, -17.48, 15.72, -15.72).finished();
  EXPECT_LE((s.H.H - expected).cwiseAbs().maxCoeff(), 0.005);
  EXPECT_EQ(s.H.state_buses, (std::vector<std::size_t>{1, 2}));
}

TEST(MeasurementMatrix, DoublingReactanceHalvesEntries) {
  const Bus3 s;
  const auto H2 = measurement_matrix(s.t, 2.0 * s.gc.reactances());
  EXPECT_TRUE(H2.H.isApprox(0.5 * s.H.H));
}

TEST(MeasurementMatrix, SingleBranch) {
  const Topology from_ref(2, {{0, 1}});
  EXPECT_EQ(measurement_matrix(from_ref, Eigen::VectorXd::Ones(1)).H(0, 0), -1.0);
  const Topology to_ref(2, {{1, 0}});
  EXPECT_EQ(measurement_matrix(to_ref, Eigen::VectorXd::Ones(1)).H(0, 0), 1.0);
}

TEST(MeasurementMatrix, RowStructureAndRank) {
  for (const auto& name : bundled_case_names()) {
    const auto gc = load_bundled_case(name);
    const auto t = Topology::from_case(gc);
    const auto H = measurement_matrix(t, gc.reactances());
    EXPECT_EQ(numerical_rank(H.H), gc.state_count()) << name;
    for (std::size_t l = 0; l < t.branch_count(); ++l) {
      const auto row = H.H.row(static_cast<Eigen::Index>(l));
      const bool touches_ref = t.edge(l).from == t.reference() || t.edge(l).to == t.reference();
      EXPECT_EQ((row.array() != 0.0).count(), touches_ref ? 1 : 2);
      EXPECT_NEAR(row.cwiseAbs().maxCoeff(), 1.0 / gc.branches[l].x, 1e-9);
    }
  }
}

TEST(MeasurementMatrix, IslandWithoutReferenceRejected) {
  const Topology t(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(measurement_matrix(t, Eigen::VectorXd::Ones(2)), ModelError);
  EXPECT_THROW(measurement_matrix(Topology(2, {{0, 1}}), Eigen::VectorXd::Zero(1)), ModelError);
}

TEST(StateEstimate, NoiselessRecovery) {
  std::mt19937_64 rng(3);
  const auto gc = load_bundled_case("bus14");
  const auto H = measurement_matrix(Topology::from_case(gc), gc.reactances());
  for (int i = 0; i < 20; ++i) {
    Eigen::VectorXd theta = Eigen::VectorXd::Random(H.cols());
    const auto est = dc_state_estimate(H.H, MeasurementModel::uniform(20, 0.01), H.H * theta);
    EXPECT_LE((est.angles - theta).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_LE(est.residual_norm, 1e-9);
  }
}

TEST(StateEstimate, ThreeBusAngles) {
  const Bus3 s;
  const Eigen::VectorXd z = (Eigen::VectorXd(3) << 107.26, 24.74, -62.74).finished() / 100.0;
  const auto est = dc_state_estimate(s.H.H, MeasurementModel::proportional(z), z);
  EXPECT_NEAR(to_degrees(est.angles[0]), -3.10, 0.01);
  EXPECT_NEAR(to_degrees(est.angles[1]), -0.81, 0.01);
}

TEST(StateEstimate, AttackShiftsStateOnly) {
  std::mt19937_64 rng(11);
  const auto gc = load_bundled_case("bus14");
  const auto t = Topology::from_case(gc);
  const auto H = measurement_matrix(t, gc.reactances());
  const auto pf = dc_power_flow(gc, gc.reactances());
  const auto model = MeasurementModel::proportional(pf.flows);
  const WlsEstimator est(H.H, model);
  for (int i = 0; i < 1000; ++i) {
    const Eigen::VectorXd z = simulate_measurements(pf.flows, model, rng, i % 2 == 0 ? 0.0 : 1.0);
    const Eigen::VectorXd c = Eigen::VectorXd::Random(H.cols());
    const auto clean = est.estimate(z);
    const auto attacked = est.estimate(z + H.H * c);
    ASSERT_NEAR(attacked.residual_norm, clean.residual_norm, 1e-9);
    ASSERT_LE((attacked.angles - clean.angles - c).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(StateEstimate, SingularSystemRejected) {
  const Eigen::MatrixXd H = Eigen::MatrixXd::Zero(3, 2);
  EXPECT_THROW(dc_state_estimate(H, MeasurementModel::uniform(3, 1.0), Eigen::VectorXd::Zero(3)), EstimationError);
}

TEST(Threshold, ChiSquareOneDegree) {
  EXPECT_NEAR(chi_square_threshold(3, 2, 0.05).eta, 3.8415, 1e-4);
}

TEST(Threshold, SmallAlphaGrowsEta) {
  double prev = 0.0;
  for (double a : {0.5, 0.1, 1e-3, 1e-6, 1e-12}) {
    const double eta = chi_square_threshold(10, 4, a).eta;
    EXPECT_GT(eta, prev);
    prev = eta;
  }
  EXPECT_GT(prev, 60.0);
}

TEST(Threshold, InputChecks) {
  EXPECT_THROW(chi_square_threshold(3, 3, 0.05), DegreesOfFreedomError);
  EXPECT_THROW(chi_square_threshold(5, 2, 0.0), std::invalid_argument);
  EXPECT_THROW(chi_square_threshold(5, 2, 0.6), std::invalid_argument);
}

TEST(Threshold, MonteCarloCalibratesOnFreshSample) {
  const auto gc = load_bundled_case("bus57");
  const auto H = measurement_matrix(Topology::from_case(gc), gc.reactances());
  const auto pf = dc_power_flow(gc, gc.reactances());
  const auto model = MeasurementModel::proportional(pf.flows);
  Rng calib(1);
  const auto mc = monte_carlo_threshold(H.H, model, 0.05, calib, 10000);
  const auto chi = chi_square_threshold(80, 56, 0.05);
  const WlsEstimator est(H.H, model);
  Rng fresh(2);
  int mc_hits = 0, chi_hits = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto e = est.estimate(simulate_measurements(pf.flows, model, fresh));
    mc_hits += mc.fires(e);
    chi_hits += chi.fires(e);
  }
  EXPECT_NEAR(mc_hits / 1e4, 0.05, 0.01);
  EXPECT_NEAR(chi_hits / 1e4, 0.05, 0.01);
  EXPECT_NEAR(mc_hits / 1e4, chi_hits / 1e4, 0.01);
}

TEST(PowerFlow, ThreeBusFlows) {
  const Bus3 s;
  const auto pf = dc_power_flow(s.gc, s.gc.reactances());
  EXPECT_NEAR(pf.flows[0] * 100, 107.26, 0.01);
  EXPECT_NEAR(pf.flows[1] * 100, 24.74, 0.01);
  EXPECT_NEAR(pf.flows[2] * 100, -62.74, 0.01);
  EXPECT_NEAR(pf.slack_mw, 132.0, 1e-9);
}

TEST(PowerFlow, ZeroInjections) {
  const Bus3 s;
  const std::vector<double> zero(3, 0.0);
  EXPECT_EQ(dc_power_flow(s.t, s.gc.reactances(), zero, 100.0).flows.cwiseAbs().maxCoeff(), 0.0);
}

TEST(PowerFlow, ReversedOrientationNegatesFlows) {
  for (const auto& name : bundled_case_names()) {
    const auto gc = load_bundled_case(name);
    const auto t = Topology::from_case(gc);
    const auto inj = vertex_injections_mw(gc, t);
    const auto fwd = dc_power_flow(t, gc.reactances(), inj, gc.base_mva);
    const auto rev = dc_power_flow(t.reversed(), gc.reactances(), inj, gc.base_mva);
    EXPECT_LE((fwd.flows + rev.flows).cwiseAbs().maxCoeff(), 1e-9) << name;
  }
}

TEST(PowerFlow, NodalBalanceAndKirchhoff) {
  for (const auto& name : bundled_case_names()) {
    const auto gc = load_bundled_case(name);
    const auto t = Topology::from_case(gc);
    const auto inj = vertex_injections_mw(gc, t);
    const auto pf = dc_power_flow(t, gc.reactances(), inj, gc.base_mva);
    std::vector<double> net(t.bus_count(), 0.0);
    for (std::size_t l = 0; l < t.branch_count(); ++l) {
      net[t.edge(l).from] += pf.flows[static_cast<Eigen::Index>(l)];
      net[t.edge(l).to] -= pf.flows[static_cast<Eigen::Index>(l)];
    }
    for (std::size_t v = 0; v < t.bus_count(); ++v)
      if (v != t.reference()) EXPECT_NEAR(net[v], inj[v] / gc.base_mva, 1e-9) << name << " bus " << v;
    EXPECT_NEAR(net[t.reference()] * gc.base_mva, pf.slack_mw, 1e-6);
    const auto G = fundamental_cycles(t, spanning_forest(t));
    EXPECT_LE((circuit_basis(G, gc.reactances()).F * pf.flows).cwiseAbs().maxCoeff(), 1e-9) << name;
  }
}

TEST(PowerFlow, IslandRejected) {
  const Topology t(4, {{0, 1}, {2, 3}});
  const std::vector<double> inj(4, 0.0);
  EXPECT_THROW(dc_power_flow(t, Eigen::VectorXd::Ones(2), inj, 100.0), ModelError);
}

TEST(Noise, ZeroScaleIsExact) {
  const Eigen::VectorXd f = Eigen::VectorXd::LinSpaced(5, -1, 1);
  Rng rng(1);
  EXPECT_EQ(simulate_measurements(f, MeasurementModel::proportional(f), rng, 0.0), f);
}

TEST(Noise, DeterministicPerSeed) {
  const Eigen::VectorXd f = Eigen::VectorXd::LinSpaced(5, -1, 1);
  Rng a(42), b(42);
  EXPECT_EQ(simulate_measurements(f, MeasurementModel::proportional(f), a),
            simulate_measurements(f, MeasurementModel::proportional(f), b));
}

TEST(Noise, FloorAndProportionalSigma) {
  const Eigen::VectorXd f = (Eigen::VectorXd(3) << 0.0, 2.0, -0.5).finished();
  const auto m = MeasurementModel::proportional(f);
  EXPECT_DOUBLE_EQ(m.sigma[0], 1e-4);
  EXPECT_DOUBLE_EQ(m.sigma[1], 0.02);
  EXPECT_DOUBLE_EQ(m.sigma[2], 0.005);
  EXPECT_DOUBLE_EQ(m.weights()[1], 1.0 / (0.02 * 0.02));
  EXPECT_THROW(MeasurementModel(Eigen::VectorXd::Zero(2)), ModelError);
}

TEST(Noise, SampleMeanWithinCltBound) {
  const Eigen::VectorXd f = (Eigen::VectorXd(2) << 1.0, -3.0).finished();
  const auto model = MeasurementModel::proportional(f);
  Rng rng(5);
  const int draws = 100000;
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(2);
  for (int i = 0; i < draws; ++i) sum += simulate_measurements(f, model, rng) - f;
  const Eigen::VectorXd mean = sum / draws;
  for (Eigen::Index l = 0; l < 2; ++l) EXPECT_LE(std::abs(mean[l]), 4.0 * model.sigma[l] / std::sqrt(double(draws)));
}

TEST(LossProxy, Basics) {
  EXPECT_EQ(loss_proxy(Eigen::VectorXd::Zero(3), Eigen::VectorXd::Ones(3), 100.0), 0.0);
  EXPECT_DOUBLE_EQ(loss_proxy(Eigen::VectorXd::Ones(1), Eigen::VectorXd::Constant(1, 0.01), 100.0), 1.0);
}

TEST(LossProxy, ThreeBusRegressionValue) {
  const Bus3 s;
  const auto pf = dc_power_flow(s.gc, s.gc.reactances());
  EXPECT_NEAR(loss_proxy(pf.flows, s.gc.resistances(), 100.0), 0.86519669158878, 1e-12);
}
