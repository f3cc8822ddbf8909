#pragma once

// False-data-injection attack vectors a = H0 c and their stealthiness
// against a perturbed measurement matrix.

#include <cmath>
#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "mmtd/dc_core.hpp"
#include "mmtd/grid_graph.hpp"

namespace mmtd {

struct AttackVector {
  Eigen::VectorXd a;  ///< p.u., one entry per measurement
  Eigen::VectorXd c;  ///< state shift that generates a
  std::optional<std::size_t> cut;  ///< row of the cut basis, when cut-restricted
  double magnitude_mw = 0.0;  ///< largest |a_l| in MW
};

inline AttackVector construct_attack(const MeasurementMatrix& H0, const Eigen::VectorXd& c) {
  if (c.size() != H0.cols()) throw std::invalid_argument("attack state shift has the wrong length");
  AttackVector av;
  av.c = c;
  av.a = H0.H * c;
  return av;
}

/// State shift that moves every bus on the cut's side by one radian relative
/// to the reference bus. H0 times it is supported exactly on the cut lines.
inline Eigen::VectorXd cut_state_shift(const MeasurementMatrix& H0, const std::vector<bool>& side,
                                       std::size_t reference) {
  const double offset = side.at(reference) ? 1.0 : 0.0;
  Eigen::VectorXd c(H0.cols());
  for (Eigen::Index k = 0; k < c.size(); ++k)
    c[k] = (side.at(H0.state_buses[static_cast<std::size_t>(k)]) ? 1.0 : 0.0) - offset;
  return c;
}

/// Attack on fundamental cut j, scaled so the largest injected flow deviation
/// is `target_mw`.
inline AttackVector cut_attack(const MeasurementMatrix& H0, const CutBasis& cuts, std::size_t j,
                               std::size_t reference, double target_mw, double base_mva) {
  if (!(target_mw > 0.0)) throw std::invalid_argument("attack magnitude must be positive");
  auto av = construct_attack(H0, cut_state_shift(H0, cuts.side.at(j), reference));
  const double peak = av.a.cwiseAbs().maxCoeff();
  const double s = target_mw / base_mva / peak;
  av.a *= s;
  av.c *= s;
  av.cut = j;
  av.magnitude_mw = target_mw;
  return av;
}

/// Uniformly random fundamental cut.
inline AttackVector random_cut_attack(const MeasurementMatrix& H0, const CutBasis& cuts, std::size_t reference, Rng& rng,
                                      double target_mw = 10.0, double base_mva = 100.0) {
  if (cuts.tree.empty()) throw std::invalid_argument("no cuts to attack");
  std::uniform_int_distribution<std::size_t> pick(0, cuts.tree.size() - 1);
  return cut_attack(H0, cuts, pick(rng), reference, target_mw, base_mva);
}

/// min ||a - H' c'||_2 / ||a||_2, zero for a = 0.
inline double stealth_residual(const Eigen::VectorXd& a, const Eigen::MatrixXd& H_prime) {
  if (a.size() != H_prime.rows()) throw std::invalid_argument("attack and matrix disagree on measurement count");
  const double na = a.norm();
  if (na == 0.0) return 0.0;
  if (H_prime.cols() == 0) return 1.0;
  const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(H_prime);
  const Eigen::VectorXd c = cod.solve(a);
  return (a - H_prime * c).norm() / na;
}

/// True when some c' gives a = H' c' (to relative tolerance).
inline bool is_stealthy(const Eigen::VectorXd& a, const Eigen::MatrixXd& H_prime, double tol = 1e-8) {
  return stealth_residual(a, H_prime) <= tol;
}

inline bool is_stealthy(const AttackVector& av, const MeasurementMatrix& H_prime, double tol = 1e-8) {
  return is_stealthy(av.a, H_prime.H, tol);
}

}  // namespace mmtd
