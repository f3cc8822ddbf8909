#pragma once

// Experiments: attack detection probability by Monte-Carlo, the 3-bus worked
// example, and OPF-cycle loss weighting.

#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "mmtd/attack_lab.hpp"
#include "mmtd/case_io.hpp"
#include "mmtd/dc_core.hpp"
#include "mmtd/grid_graph.hpp"
#include "mmtd/mtd_engine.hpp"

namespace mmtd {

/// Largest injected flow deviation of a default attack (MW).
inline constexpr double k_default_attack_mw = 10.0;

/// splitmix64 finalizer; maps (seed, stream, index) to an independent engine seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ stream) ^ index);
}

namespace stream {
inline constexpr std::uint64_t plan = 1;
inline constexpr std::uint64_t attack = 2;
inline constexpr std::uint64_t clean = 3;
inline constexpr std::uint64_t calibration = 4;
}  // namespace stream

enum class DeploymentMode { minimal, full };
enum class ScheduleSource { planned, fixed };
enum class AttackMode { cut, stealthy };

/// Everything the tree-minus-bridges experiments share for one case.
struct CaseSetup {
  GridCase grid;
  Topology topology;
  std::vector<double> weights;  ///< loss-priority spanning-tree weights
  SpanningForest forest;
  LoopMatrix loops;
  CutBasis cuts;
  DeploymentPlan plan;
  MeasurementMatrix H0;
  std::vector<double> injections_mw;  ///< vertex order

  static CaseSetup build(GridCase gc, DeploymentMode mode = DeploymentMode::minimal) {
    CaseSetup s;
    s.topology = Topology::from_case(gc);
    s.weights = loss_priority_weights(gc);
    s.forest = spanning_forest(s.topology, s.weights);
    s.loops = fundamental_cycles(s.topology, s.forest);
    s.cuts = fundamental_cuts(s.topology, s.forest);
    if (mode == DeploymentMode::full) {
      std::vector<std::size_t> all(s.topology.branch_count());
      for (std::size_t l = 0; l < all.size(); ++l) all[l] = l;
      s.plan = analyze_deployment(s.topology, std::move(all));
    } else {
      s.plan = deployment_plan(s.topology, s.weights);
    }
    s.H0 = measurement_matrix(s.topology, gc.reactances());
    s.injections_mw = vertex_injections_mw(gc, s.topology);
    s.grid = std::move(gc);
    return s;
  }
};

struct AdpConfig {
  std::string case_name = "bus57";
  DeploymentMode deployment = DeploymentMode::minimal;
  ScheduleSource schedule = ScheduleSource::planned;
  std::vector<Eigen::VectorXd> fixed_stages;  ///< x_1 .. x_k when schedule is fixed
  AttackMode attack = AttackMode::cut;
  std::size_t trials = 10000;
  double noise = 0.01;  ///< sigma as a fraction of each reading; 0 disables noise
  double alpha = 0.05;
  double attack_mw = k_default_attack_mw;
  std::uint64_t seed = 1;
  ThresholdMethod method = ThresholdMethod::chi_square;
  double tau = 0.2;
  std::size_t max_stages = 10;
  double min_perturbation = 0.05;
  std::size_t calibration_samples = 10000;
};

struct ADPReport {
  std::string case_name;
  ThresholdMethod method = ThresholdMethod::chi_square;
  std::size_t trials = 0;
  double noise = 0.0;
  double alpha = 0.0;
  double attack_mw = 0.0;
  std::uint64_t seed = 0;
  std::vector<double> eta;  ///< per stage
  std::vector<double> stage_detection;  ///< per-stage detection rate
  double overall_detection = 0.0;  ///< detected in at least one stage
  std::vector<double> stage_false_positive;  ///< per-stage alarm rate on clean trials
  double false_positive = 0.0;  ///< alarms / (clean trials * stages)
  double clean_any_alarm = 0.0;  ///< clean trials with an alarm in any stage
  std::vector<std::size_t> doa_trajectory;
  std::size_t state_count = 0;
  std::size_t supremum = 0;
  bool schedule_complete = false;
  std::vector<std::string> warnings;
  double runtime_s = 0.0;
};

namespace detail {

inline Eigen::VectorXd stealthy_attack(const MeasurementMatrix& H0, const Eigen::MatrixXd& kernel, Rng& rng,
                                       double target_mw, double base_mva, Eigen::VectorXd& c) {
  if (kernel.cols() == 0) {
    c = Eigen::VectorXd::Zero(H0.cols());
    return Eigen::VectorXd::Zero(H0.rows());
  }
  std::normal_distribution<double> normal;
  Eigen::VectorXd w(kernel.cols());
  for (Eigen::Index i = 0; i < w.size(); ++i) w[i] = normal(rng);
  Eigen::VectorXd a = kernel * w;
  a *= target_mw / base_mva / a.cwiseAbs().maxCoeff();
  c = H0.H.completeOrthogonalDecomposition().solve(a);
  return H0.H * c;
}

}  // namespace detail

inline ADPReport run_adp(const CaseSetup& setup, const AdpConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (!(cfg.noise >= 0.0)) throw std::invalid_argument("noise must be non-negative");
  if (!(cfg.attack_mw > 0.0)) throw std::invalid_argument("attack magnitude must be positive");
  const auto started = std::chrono::steady_clock::now();
  const auto& t = setup.topology;
  const double base = setup.grid.base_mva;

  ADPReport rep;
  rep.case_name = cfg.case_name;
  rep.method = cfg.method;
  rep.trials = cfg.trials;
  rep.noise = cfg.noise;
  rep.alpha = cfg.alpha;
  rep.attack_mw = cfg.attack_mw;
  rep.seed = cfg.seed;
  rep.state_count = static_cast<std::size_t>(setup.H0.cols());
  rep.supremum = setup.plan.supremum;

  MtdSchedule schedule;
  if (cfg.schedule == ScheduleSource::planned) {
    Rng prng(derive_seed(cfg.seed, stream::plan));
    schedule = plan_mmtd(setup.grid.reactances(), setup.plan, setup.loops, cfg.tau, prng, cfg.max_stages,
                         {cfg.noise > 0.0 ? cfg.min_perturbation : 0.0, k_default_max_retries});
  } else {
    schedule.x0 = setup.grid.reactances();
    schedule.stages = cfg.fixed_stages;
    schedule.deployed = setup.plan.deployed;
    schedule.supremum = setup.plan.supremum;
    CompositeMatrix L(circuit_basis(setup.loops, schedule.x0));
    schedule.rank_trajectory.push_back(L.rank());
    for (const auto& x : schedule.stages) {
      L.append(circuit_basis(setup.loops, x));
      schedule.rank_trajectory.push_back(L.rank());
    }
    schedule.complete = schedule.final_rank() >= schedule.supremum;
  }
  rep.doa_trajectory = schedule.doa_trajectory();
  rep.schedule_complete = schedule.complete;
  if (!schedule.complete)
    rep.warnings.push_back("schedule stops at rank " + std::to_string(schedule.final_rank()) + " below the supremum " +
                           std::to_string(schedule.supremum));
  if (schedule.stages.empty()) rep.warnings.push_back("schedule has no perturbation stages");

  struct Stage {
    Eigen::VectorXd flows;
    MeasurementModel model;
    WlsEstimator estimator;
    BddThreshold threshold;
  };
  std::vector<Stage> stages;
  const double fraction = cfg.noise > 0.0 ? cfg.noise : 0.01;
  const double noise_scale = cfg.noise > 0.0 ? 1.0 : 0.0;
  for (std::size_t k = 0; k < schedule.stages.size(); ++k) {
    const auto& x = schedule.stages[k];
    const auto Hk = measurement_matrix(t, x);
    const auto pf = dc_power_flow(t, x, setup.injections_mw, base);
    auto model = MeasurementModel::proportional(pf.flows, fraction);
    Rng crng(derive_seed(cfg.seed, stream::calibration, k));
    auto th = bdd_threshold(Hk.H, model, cfg.alpha, cfg.method, crng, cfg.calibration_samples);
    rep.eta.push_back(th.eta);
    stages.push_back({pf.flows, model, WlsEstimator(Hk.H, model), th});
  }

  Eigen::MatrixXd kernel;
  if (cfg.attack == AttackMode::stealthy)
    kernel = null_space(composite_matrix(setup.loops, schedule.all_settings()).matrix());

  const std::size_t ks = stages.size();
  std::vector<std::size_t> hits(ks, 0), alarms(ks, 0);
  std::size_t detected = 0, clean_any = 0;
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Rng rng(derive_seed(cfg.seed, stream::attack, trial));
    Eigen::VectorXd a;
    if (cfg.attack == AttackMode::cut) {
      a = random_cut_attack(setup.H0, setup.cuts, t.reference(), rng, cfg.attack_mw, base).a;
    } else {
      Eigen::VectorXd c;
      a = detail::stealthy_attack(setup.H0, kernel, rng, cfg.attack_mw, base, c);
    }
    bool any = false;
    for (std::size_t k = 0; k < ks; ++k) {
      const auto& s = stages[k];
      const Eigen::VectorXd z = simulate_measurements(s.flows, s.model, rng, noise_scale) + a;
      if (s.threshold.fires(s.estimator.estimate(z))) {
        ++hits[k];
        any = true;
      }
    }
    detected += any ? 1 : 0;

    Rng clean(derive_seed(cfg.seed, stream::clean, trial));
    bool alarm = false;
    for (std::size_t k = 0; k < ks; ++k) {
      const auto& s = stages[k];
      if (s.threshold.fires(s.estimator.estimate(simulate_measurements(s.flows, s.model, clean, noise_scale)))) {
        ++alarms[k];
        alarm = true;
      }
    }
    clean_any += alarm ? 1 : 0;
  }

  const auto n = static_cast<double>(cfg.trials);
  std::size_t total_alarms = 0;
  for (std::size_t k = 0; k < ks; ++k) {
    rep.stage_detection.push_back(static_cast<double>(hits[k]) / n);
    rep.stage_false_positive.push_back(static_cast<double>(alarms[k]) / n);
    total_alarms += alarms[k];
  }
  rep.overall_detection = static_cast<double>(detected) / n;
  rep.false_positive = ks > 0 ? static_cast<double>(total_alarms) / (n * static_cast<double>(ks)) : 0.0;
  rep.clean_any_alarm = static_cast<double>(clean_any) / n;
  rep.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return rep;
}

inline ADPReport run_adp(const AdpConfig& cfg) {
  return run_adp(CaseSetup::build(load_bundled_case(cfg.case_name), cfg.deployment), cfg);
}

/// Runtime is left out unless asked for, so equal configs give equal text.
inline nlohmann::ordered_json to_json(const ADPReport& r, bool include_runtime = false) {
  nlohmann::ordered_json j;
  j["format"] = "mmtd-adp-report";
  j["version"] = 1;
  j["case"] = r.case_name;
  j["method"] = std::string(to_string(r.method));
  j["trials"] = r.trials;
  j["noise"] = r.noise;
  j["alpha"] = r.alpha;
  j["attack_mw"] = r.attack_mw;
  j["seed"] = r.seed;
  j["eta"] = r.eta;
  j["stage_detection"] = r.stage_detection;
  j["overall_detection"] = r.overall_detection;
  j["stage_false_positive"] = r.stage_false_positive;
  j["false_positive"] = r.false_positive;
  j["clean_any_alarm"] = r.clean_any_alarm;
  j["doa_trajectory"] = r.doa_trajectory;
  j["state_count"] = r.state_count;
  j["supremum"] = r.supremum;
  j["schedule_complete"] = r.schedule_complete;
  j["warnings"] = r.warnings;
  if (include_runtime) j["runtime_s"] = r.runtime_s;
  return j;
}

inline std::vector<AdpCsvRow> adp_csv_rows(const ADPReport& r) {
  std::vector<AdpCsvRow> rows;
  for (std::size_t k = 0; k < r.stage_detection.size(); ++k)
    rows.push_back({"stage_" + std::to_string(k + 1), r.case_name, r.stage_detection[k]});
  rows.push_back({"mmtd", r.case_name, r.overall_detection});
  return rows;
}

// 3-bus worked example

struct Table1Row {
  std::string label;
  std::vector<std::size_t> deployed;  ///< 1-based
  std::vector<Eigen::VectorXd> settings;  ///< perturbed reactance vectors (x_0 is implied)
  std::size_t doa = 0;
  std::vector<Eigen::VectorXd> attack_basis;  ///< normalized, identity on the trailing coordinates
  double loss_proxy_mw = 0.0;  ///< mean over the row's settings
};

struct Table1Report {
  Eigen::MatrixXd H;
  Eigen::VectorXd flows_mw;
  Eigen::VectorXd angles_deg;
  std::vector<Table1Row> rows;
};

inline const Eigen::VectorXd& table1_case_i() {
  static const Eigen::VectorXd x = (Eigen::VectorXd(3) << 0.0605, 0.0572, 0.0636).finished();
  return x;
}
inline const Eigen::VectorXd& table1_case_ii() {
  static const Eigen::VectorXd x = (Eigen::VectorXd(3) << 0.0479, 0.0572, 0.0604).finished();
  return x;
}
inline const Eigen::VectorXd& table1_economic() {
  static const Eigen::VectorXd x = (Eigen::VectorXd(3) << 0.0606, 0.0686, 0.0763).finished();
  return x;
}

/// Box bound that admits every 3-bus example setting.
inline constexpr double k_table1_tau = 0.21;

/// Kernel basis B rescaled as B * inv(bottom d x d block of B).
inline std::vector<Eigen::VectorXd> normalized_basis(const Eigen::MatrixXd& kernel) {
  std::vector<Eigen::VectorXd> out;
  const Eigen::Index d = kernel.cols();
  if (d == 0) return out;
  const Eigen::MatrixXd tail = kernel.bottomRows(d);
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(tail);
  const Eigen::MatrixXd B = lu.isInvertible() ? Eigen::MatrixXd(kernel * lu.inverse()) : kernel;
  for (Eigen::Index i = 0; i < d; ++i) {
    Eigen::VectorXd v = B.col(i);
    for (Eigen::Index k = 0; k < v.size(); ++k)
      if (std::abs(v[k]) < 1e-12) v[k] = 0.0;
    out.push_back(v);
  }
  return out;
}

inline Table1Report reproduce_table1() {
  const auto gc = load_bundled_case("bus3");
  const auto t = Topology::from_case(gc);
  const auto forest = spanning_forest(t);
  const auto loops = fundamental_cycles(t, forest);
  const Eigen::VectorXd x0 = gc.reactances();
  const auto inj = vertex_injections_mw(gc, t);

  Table1Report rep;
  rep.H = measurement_matrix(t, x0).H;
  const auto pf = dc_power_flow(t, x0, inj, gc.base_mva);
  rep.flows_mw = pf.flows * gc.base_mva;
  const auto est = dc_state_estimate(rep.H, MeasurementModel::proportional(pf.flows), pf.flows);
  rep.angles_deg = est.angles.unaryExpr([](double r) { return to_degrees(r); });

  auto row = [&](std::string label, std::vector<std::size_t> deployed, std::vector<Eigen::VectorXd> settings) {
    Table1Row r;
    r.label = std::move(label);
    r.deployed = std::move(deployed);
    r.settings = std::move(settings);
    std::vector<Eigen::VectorXd> all{x0};
    all.insert(all.end(), r.settings.begin(), r.settings.end());
    const auto L = composite_matrix(loops, all);
    r.doa = static_cast<std::size_t>(x0.size()) - L.rank();
    r.attack_basis = normalized_basis(null_space(L.matrix()));
    const auto& losses_over = r.settings.empty() ? std::vector<Eigen::VectorXd>{x0} : r.settings;
    for (const auto& x : losses_over)
      r.loss_proxy_mw += loss_proxy(dc_power_flow(t, x, inj, gc.base_mva).flows, gc.resistances(), gc.base_mva);
    r.loss_proxy_mw /= static_cast<double>(losses_over.size());
    rep.rows.push_back(std::move(r));
  };
  row("original", {}, {});
  row("economic", {1, 2, 3}, {table1_economic()});
  row("case i", {1}, {table1_case_i()});
  row("case ii", {1, 3}, {table1_case_ii()});
  row("case iii", {1, 2, 3}, {table1_case_i(), table1_case_ii(), table1_economic()});
  return rep;
}

/// Case iii as a schedule document.
inline MtdScheduleDocument table1_schedule() {
  const auto gc = load_bundled_case("bus3");
  MtdScheduleDocument doc;
  doc.case_name = "bus3";
  doc.deployment = {1, 2, 3};
  doc.tau = k_table1_tau;
  const Eigen::VectorXd x0 = gc.reactances();
  doc.x0.assign(x0.data(), x0.data() + x0.size());
  for (const auto* x : {&table1_case_i(), &table1_case_ii(), &table1_economic()})
    doc.stages.emplace_back(x->data(), x->data() + x->size());
  doc.achieved_rank = 3;
  doc.supremum = 3;
  return doc;
}

inline nlohmann::ordered_json to_json(const Table1Report& r) {
  auto vec = [](const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); };
  nlohmann::ordered_json j;
  j["format"] = "mmtd-table1";
  nlohmann::ordered_json h = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < r.H.rows(); ++i) h.push_back(vec(r.H.row(i).transpose()));
  j["H"] = h;
  j["flows_mw"] = vec(r.flows_mw);
  j["angles_deg"] = vec(r.angles_deg);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json o;
    o["case"] = row.label;
    o["deployment"] = row.deployed;
    nlohmann::ordered_json xs = nlohmann::ordered_json::array();
    for (const auto& x : row.settings) xs.push_back(vec(x));
    o["settings"] = xs;
    o["doa"] = row.doa;
    nlohmann::ordered_json basis = nlohmann::ordered_json::array();
    for (const auto& b : row.attack_basis) basis.push_back(vec(b));
    o["attack_basis"] = basis;
    o["loss_proxy_mw"] = row.loss_proxy_mw;
    rows.push_back(o);
  }
  j["rows"] = rows;
  return j;
}

// OPF-cycle weighting

struct EconomicCycle {
  double cycle_s = 300.0;  ///< T
  double window_s = 25.0;  ///< delta t, the perturbation window at the start of the cycle
  std::vector<double> stage_losses_mw;
  double steady_loss_mw = 0.0;

  double omega() const { return window_s / cycle_s; }
};

/// mean(stage losses) * omega + steady loss * (1 - omega).
inline double economic_average(const EconomicCycle& c) {
  if (!(c.cycle_s > 0.0)) throw std::invalid_argument("cycle length must be positive");
  if (!(c.window_s >= 0.0 && c.window_s <= c.cycle_s)) throw std::invalid_argument("window must lie in [0, T]");
  const double w = c.omega();
  if (w == 0.0) return c.steady_loss_mw;
  if (c.stage_losses_mw.empty()) throw std::invalid_argument("stage losses required when the window is non-zero");
  double mean = 0.0;
  for (double l : c.stage_losses_mw) mean += l;
  mean /= static_cast<double>(c.stage_losses_mw.size());
  return mean * w + c.steady_loss_mw * (1.0 - w);
}

inline nlohmann::ordered_json to_json(const EconomicCycle& c) {
  nlohmann::ordered_json j;
  j["format"] = "mmtd-economic";
  j["cycle_s"] = c.cycle_s;
  j["window_s"] = c.window_s;
  j["omega"] = c.omega();
  j["stage_losses_mw"] = c.stage_losses_mw;
  j["steady_loss_mw"] = c.steady_loss_mw;
  const double avg = economic_average(c);
  j["average_mw"] = avg;
  if (c.steady_loss_mw != 0.0) j["ratio_to_steady"] = avg / c.steady_loss_mw;
  return j;
}

}  // namespace mmtd
