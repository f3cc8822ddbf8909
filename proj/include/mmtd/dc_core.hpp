#pragma once

// DC measurement model: flow measurement matrix, WLS estimation, residual
// bad-data detection, DC power flow, Gaussian measurement noise.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/distributions/chi_squared.hpp>

#include "mmtd/case_io.hpp"
#include "mmtd/errors.hpp"
#include "mmtd/grid_graph.hpp"

namespace mmtd {

/// Random engine used everywhere a stream is passed explicitly.
using Rng = std::mt19937_64;

inline constexpr double k_pi = 3.14159265358979323846;
inline double to_degrees(double rad) { return rad * 180.0 / k_pi; }

struct MeasurementMatrix {
  Eigen::MatrixXd H;  ///< m x n, one active-flow measurement per branch
  Eigen::VectorXd x;
  std::vector<std::size_t> state_buses;  ///< vertex of each column (non-reference, ascending id)
  std::vector<Eigen::Index> column_of;  ///< vertex -> column, -1 for the reference

  Eigen::Index rows() const { return H.rows(); }
  Eigen::Index cols() const { return H.cols(); }
};

namespace detail {

inline void check_reactances(const Topology& t, const Eigen::VectorXd& x) {
  if (static_cast<std::size_t>(x.size()) != t.branch_count())
    throw ModelError("reactance vector has " + std::to_string(x.size()) + " entries, expected " +
                     std::to_string(t.branch_count()));
  for (Eigen::Index l = 0; l < x.size(); ++l)
    if (!(x[l] > 0.0) || !std::isfinite(x[l]))
      throw ModelError("reactance of branch " + std::to_string(l + 1) + " must be positive");
}

inline void check_single_island(const Topology& t) {
  for (std::size_t v = 0; v < t.bus_count(); ++v)
    if (t.component_of(v) != t.component_of(t.reference()))
      throw ModelError("bus " + std::to_string(t.bus_ids()[v]) + " lies on an island without the reference bus");
}

}  // namespace detail

/// Row l carries +1/x_l in the from-bus column and -1/x_l in the to-bus
/// column, so H*theta gives from->to flows in p.u.
inline MeasurementMatrix measurement_matrix(const Topology& t, const Eigen::VectorXd& x) {
  detail::check_reactances(t, x);
  detail::check_single_island(t);
  MeasurementMatrix mm;
  mm.x = x;
  mm.column_of.assign(t.bus_count(), -1);
  for (std::size_t v = 0; v < t.bus_count(); ++v)
    if (v != t.reference()) {
      mm.column_of[v] = static_cast<Eigen::Index>(mm.state_buses.size());
      mm.state_buses.push_back(v);
    }
  mm.H = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(t.branch_count()),
                               static_cast<Eigen::Index>(mm.state_buses.size()));
  for (std::size_t l = 0; l < t.branch_count(); ++l) {
    const auto row = static_cast<Eigen::Index>(l);
    const double b = 1.0 / x[row];
    if (auto c = mm.column_of[t.edge(l).from]; c >= 0) mm.H(row, c) += b;
    if (auto c = mm.column_of[t.edge(l).to]; c >= 0) mm.H(row, c) -= b;
  }
  return mm;
}

/// Per-measurement noise standard deviations (p.u.). The estimator weights
/// are sigma^-2.
struct MeasurementModel {
  Eigen::VectorXd sigma;

  MeasurementModel() = default;
  explicit MeasurementModel(Eigen::VectorXd s) : sigma(std::move(s)) {
    for (Eigen::Index i = 0; i < sigma.size(); ++i)
      if (!(sigma[i] > 0.0) || !std::isfinite(sigma[i])) throw ModelError("noise deviations must be positive");
  }

  /// sigma_l = fraction * |reading_l|, never below `floor`.
  static MeasurementModel proportional(const Eigen::VectorXd& readings, double fraction = 0.01, double floor = 1e-4) {
    if (!(fraction >= 0.0) || !(floor > 0.0)) throw ModelError("noise fraction must be >= 0 and floor > 0");
    Eigen::VectorXd s(readings.size());
    for (Eigen::Index i = 0; i < s.size(); ++i) s[i] = std::max(fraction * std::abs(readings[i]), floor);
    return MeasurementModel(std::move(s));
  }

  static MeasurementModel uniform(std::size_t m, double s) {
    return MeasurementModel(Eigen::VectorXd::Constant(static_cast<Eigen::Index>(m), s));
  }

  std::size_t size() const { return static_cast<std::size_t>(sigma.size()); }
  Eigen::VectorXd weights() const { return sigma.array().square().inverse().matrix(); }
};

struct StateEstimate {
  Eigen::VectorXd angles;  ///< radians, one per state column
  double residual_norm = 0.0;  ///< ||z - H theta||_2
  double weighted_residual = 0.0;  ///< sum ((z - H theta)_l / sigma_l)^2
};

/// Factorizes sigma^-1 H once so repeated estimates against the same matrix
/// and noise model are cheap.
class WlsEstimator {
 public:
  WlsEstimator(const Eigen::MatrixXd& H, const MeasurementModel& model) : H_(H), inv_sigma_(model.sigma.cwiseInverse()) {
    if (model.sigma.size() != H.rows()) throw ModelError("noise model size does not match measurement count");
    if (H.cols() > 0) {
      qr_.compute(inv_sigma_.asDiagonal() * H);
      if (qr_.rank() < H.cols()) throw EstimationError("normal matrix is singular; the system is not observable");
    }
  }

  StateEstimate estimate(const Eigen::VectorXd& z) const {
    if (z.size() != H_.rows()) throw ModelError("measurement vector has the wrong length");
    StateEstimate est;
    if (H_.cols() > 0) {
      est.angles = qr_.solve(Eigen::VectorXd(inv_sigma_.asDiagonal() * z));
    } else {
      est.angles = Eigen::VectorXd(0);
    }
    const Eigen::VectorXd r = H_.cols() > 0 ? Eigen::VectorXd(z - H_ * est.angles) : z;
    est.residual_norm = r.norm();
    est.weighted_residual = r.cwiseProduct(inv_sigma_).squaredNorm();
    return est;
  }

  Eigen::Index measurements() const { return H_.rows(); }
  Eigen::Index states() const { return H_.cols(); }

 private:
  Eigen::MatrixXd H_;
  Eigen::VectorXd inv_sigma_;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr_;
};

inline StateEstimate dc_state_estimate(const Eigen::MatrixXd& H, const MeasurementModel& model,
                                       const Eigen::VectorXd& z) {
  return WlsEstimator(H, model).estimate(z);
}

enum class ThresholdMethod { chi_square, monte_carlo };

inline std::string_view to_string(ThresholdMethod m) {
  return m == ThresholdMethod::chi_square ? "chi_square" : "monte_carlo";
}

inline ThresholdMethod parse_threshold_method(std::string_view s) {
  if (s == "chi_square") return ThresholdMethod::chi_square;
  if (s == "monte_carlo") return ThresholdMethod::monte_carlo;
  throw std::invalid_argument("unknown threshold method '" + std::string(s) + "'");
}

/// Residual test. chi_square compares the weighted residual, monte_carlo the
/// plain 2-norm.
struct BddThreshold {
  double eta = 0.0;
  double alpha = 0.05;
  ThresholdMethod method = ThresholdMethod::chi_square;

  double statistic(const StateEstimate& e) const {
    return method == ThresholdMethod::chi_square ? e.weighted_residual : e.residual_norm;
  }
  bool fires(const StateEstimate& e) const { return statistic(e) > eta; }
};

namespace detail {

inline void check_bdd_inputs(std::size_t m, std::size_t n, double alpha) {
  if (!(alpha > 0.0 && alpha <= 0.5)) throw std::invalid_argument("alpha must lie in (0, 0.5]");
  if (m <= n)
    throw DegreesOfFreedomError("residual test needs more measurements than states (m=" + std::to_string(m) +
                                ", n=" + std::to_string(n) + ")");
}

}  // namespace detail

/// eta = (1 - alpha) quantile of chi-square with m - n degrees of freedom.
inline BddThreshold chi_square_threshold(std::size_t m, std::size_t n, double alpha) {
  detail::check_bdd_inputs(m, n, alpha);
  const boost::math::chi_squared_distribution<double> dist(static_cast<double>(m - n));
  return {boost::math::quantile(boost::math::complement(dist, alpha)), alpha, ThresholdMethod::chi_square};
}

/// eta = empirical (1 - alpha) quantile of ||r||_2 over noise-only draws.
inline BddThreshold monte_carlo_threshold(const Eigen::MatrixXd& H, const MeasurementModel& model, double alpha,
                                          Rng& rng, std::size_t samples = 10000) {
  detail::check_bdd_inputs(static_cast<std::size_t>(H.rows()), static_cast<std::size_t>(H.cols()), alpha);
  if (samples < 1) throw std::invalid_argument("monte carlo calibration needs samples");
  const WlsEstimator est(H, model);
  std::normal_distribution<double> normal;
  std::vector<double> norms(samples);
  Eigen::VectorXd w(H.rows());
  for (auto& r : norms) {
    for (Eigen::Index i = 0; i < w.size(); ++i) w[i] = model.sigma[i] * normal(rng);
    r = est.estimate(w).residual_norm;
  }
  std::sort(norms.begin(), norms.end());
  const auto k = static_cast<std::size_t>(std::ceil((1.0 - alpha) * static_cast<double>(samples)));
  return {norms[std::clamp<std::size_t>(k, 1, samples) - 1], alpha, ThresholdMethod::monte_carlo};
}

inline BddThreshold bdd_threshold(const Eigen::MatrixXd& H, const MeasurementModel& model, double alpha,
                                  ThresholdMethod method, Rng& rng, std::size_t samples = 10000) {
  if (method == ThresholdMethod::chi_square)
    return chi_square_threshold(static_cast<std::size_t>(H.rows()), static_cast<std::size_t>(H.cols()), alpha);
  return monte_carlo_threshold(H, model, alpha, rng, samples);
}

struct PowerFlow {
  Eigen::VectorXd angles;  ///< radians, state-column order
  Eigen::VectorXd flows;  ///< p.u., from->to
  double slack_mw = 0.0;  ///< injection absorbed at the reference bus
};

/// Net injections (Pg - Pd, MW) in vertex order, i.e. ascending bus id.
inline std::vector<double> vertex_injections_mw(const GridCase& gc, const Topology& t) {
  std::vector<double> by_vertex(t.bus_count(), 0.0);
  const auto net = gc.net_injection_mw();
  for (std::size_t i = 0; i < gc.buses.size(); ++i) {
    const auto& ids = t.bus_ids();
    const auto v = static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), gc.buses[i].id) - ids.begin());
    by_vertex.at(v) += net[i];
  }
  return by_vertex;
}

/// Lossless DC flow. The reference bus takes whatever injection balances the
/// system; its entry in `injections_mw` is ignored.
inline PowerFlow dc_power_flow(const Topology& t, const Eigen::VectorXd& x, std::span<const double> injections_mw,
                               double base_mva) {
  if (injections_mw.size() != t.bus_count()) throw ModelError("one injection per bus required");
  if (!(base_mva > 0.0)) throw ModelError("base MVA must be positive");
  const auto mm = measurement_matrix(t, x);
  const Eigen::Index n = mm.cols();
  Eigen::VectorXd p(n);
  double slack = 0.0;
  for (Eigen::Index c = 0; c < n; ++c) {
    p[c] = injections_mw[mm.state_buses[static_cast<std::size_t>(c)]] / base_mva;
    slack -= injections_mw[mm.state_buses[static_cast<std::size_t>(c)]];
  }
  // B = A^T diag(1/x) A with A the reduced incidence; H = diag(1/x) A.
  Eigen::MatrixXd A = mm.H;
  for (Eigen::Index l = 0; l < A.rows(); ++l) A.row(l) *= x[l];
  const Eigen::MatrixXd B = A.transpose() * mm.H;
  PowerFlow pf;
  if (n > 0) {
    const Eigen::LDLT<Eigen::MatrixXd> ldlt(B);
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive() || ldlt.vectorD().minCoeff() <= 1e-12 * B.norm())
      throw ModelError("susceptance matrix is singular");
    pf.angles = ldlt.solve(p);
  } else {
    pf.angles = Eigen::VectorXd(0);
  }
  pf.flows = n > 0 ? Eigen::VectorXd(mm.H * pf.angles) : Eigen::VectorXd::Zero(mm.rows());
  pf.slack_mw = slack;
  return pf;
}

inline PowerFlow dc_power_flow(const GridCase& gc, const Eigen::VectorXd& x) {
  const auto t = Topology::from_case(gc);
  const auto inj = vertex_injections_mw(gc, t);
  return dc_power_flow(t, x, inj, gc.base_mva);
}

/// z = flows + noise_scale * N(0, sigma^2) per measurement.
inline Eigen::VectorXd simulate_measurements(const Eigen::VectorXd& flows, const MeasurementModel& model, Rng& rng,
                                             double noise_scale = 1.0) {
  if (model.sigma.size() != flows.size()) throw ModelError("noise model size does not match measurement count");
  Eigen::VectorXd z = flows;
  if (noise_scale == 0.0) return z;
  std::normal_distribution<double> normal;
  for (Eigen::Index i = 0; i < z.size(); ++i) z[i] += noise_scale * model.sigma[i] * normal(rng);
  return z;
}

/// Resistive loss stand-in: sum r_l f_l^2, in MW.
inline double loss_proxy(const Eigen::VectorXd& flows, const Eigen::VectorXd& r, double base_mva) {
  if (flows.size() != r.size()) throw ModelError("one resistance per flow required");
  return flows.cwiseAbs2().dot(r) * base_mva;
}

/// Spanning-tree weights that prefer heavily loaded branches: -|base-case flow|.
inline std::vector<double> loss_priority_weights(const GridCase& gc) {
  const auto pf = dc_power_flow(gc, gc.reactances());
  std::vector<double> w(static_cast<std::size_t>(pf.flows.size()));
  for (std::size_t l = 0; l < w.size(); ++l) w[l] = -std::abs(pf.flows[static_cast<Eigen::Index>(l)]);
  return w;
}

}  // namespace mmtd
