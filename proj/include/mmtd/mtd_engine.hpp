#pragma once

// Circuit basis F = G diag(x), composite matrix across stages, numerical rank
// and DoA, and the multi-stage perturbation search.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mmtd/case_io.hpp"
#include "mmtd/dc_core.hpp"
#include "mmtd/errors.hpp"
#include "mmtd/grid_graph.hpp"

namespace mmtd {

/// Relative rank tolerance: singular values at or below
/// max(rows, cols) * sigma_max * k_rank_kappa count as zero.
inline constexpr double k_rank_kappa = 1e-10;

/// Candidate draws allowed per stage before the search gives up.
inline constexpr std::size_t k_default_max_retries = 64;

inline double rank_tolerance(const Eigen::VectorXd& singular_values, Eigen::Index rows, Eigen::Index cols,
                             double kappa) {
  if (singular_values.size() == 0) return 0.0;
  return static_cast<double>(std::max(rows, cols)) * singular_values.maxCoeff() * kappa;
}

inline std::size_t numerical_rank(const Eigen::MatrixXd& M, double kappa = k_rank_kappa) {
  if (M.size() == 0) return 0;
  const Eigen::BDCSVD<Eigen::MatrixXd> svd(M);
  const Eigen::VectorXd& s = svd.singularValues();
  const double eps = rank_tolerance(s, M.rows(), M.cols(), kappa);
  if (s.size() == 0 || s.maxCoeff() == 0.0) return 0;
  return static_cast<std::size_t>((s.array() > eps).count());
}

/// Orthonormal basis (columns) of ker(M), at the same tolerance as numerical_rank.
inline Eigen::MatrixXd null_space(const Eigen::MatrixXd& M, double kappa = k_rank_kappa) {
  const Eigen::Index cols = M.cols();
  if (M.rows() == 0) return Eigen::MatrixXd::Identity(cols, cols);
  const Eigen::BDCSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  const auto r = static_cast<Eigen::Index>(numerical_rank(M, kappa));
  return svd.matrixV().rightCols(cols - r);
}

struct CircuitBasis {
  Eigen::MatrixXd F;
  Eigen::VectorXd x;
};

inline CircuitBasis circuit_basis(const LoopMatrix& G, const Eigen::VectorXd& x) {
  if (x.size() != G.G.cols()) throw std::invalid_argument("reactance vector does not match the loop matrix");
  for (Eigen::Index l = 0; l < x.size(); ++l)
    if (!(x[l] > 0.0)) throw std::invalid_argument("reactances must be positive");
  return {G.G * x.asDiagonal(), x};
}

/// Vertical stack [F_0; F_1; ...; F_k].
class CompositeMatrix {
 public:
  CompositeMatrix() = default;
  explicit CompositeMatrix(const CircuitBasis& f0) : L_(f0.F), blocks_(1) {}

  void append(const CircuitBasis& f) {
    if (blocks_ > 0 && f.F.cols() != L_.cols()) throw std::invalid_argument("circuit basis width mismatch");
    Eigen::MatrixXd next(L_.rows() + f.F.rows(), f.F.cols());
    if (L_.rows() > 0) next.topRows(L_.rows()) = L_;
    next.bottomRows(f.F.rows()) = f.F;
    L_ = std::move(next);
    ++blocks_;
  }

  const Eigen::MatrixXd& matrix() const noexcept { return L_; }
  /// Number of perturbation stages k (blocks after F_0).
  std::size_t stages() const noexcept { return blocks_ == 0 ? 0 : blocks_ - 1; }
  std::size_t rank(double kappa = k_rank_kappa) const { return numerical_rank(L_, kappa); }

 private:
  Eigen::MatrixXd L_;
  std::size_t blocks_ = 0;
};

/// `stages` starts with x_0.
inline CompositeMatrix composite_matrix(const LoopMatrix& G, const std::vector<Eigen::VectorXd>& stages) {
  if (stages.empty()) throw std::invalid_argument("at least the base reactance vector is required");
  CompositeMatrix L(circuit_basis(G, stages.front()));
  for (std::size_t k = 1; k < stages.size(); ++k) L.append(circuit_basis(G, stages[k]));
  return L;
}

/// m - rank(L): dimension of the attack space stealthy in every stage.
inline std::size_t doa(const std::vector<Eigen::VectorXd>& stages, const LoopMatrix& G) {
  return static_cast<std::size_t>(G.G.cols()) - composite_matrix(G, stages).rank();
}

inline std::size_t supremum(const DeploymentPlan& plan) { return plan.supremum; }

struct PlanOptions {
  double min_perturbation = 0.0;  ///< resample |delta| below this (fraction of x_0)
  std::size_t max_retries = k_default_max_retries;
};

struct MtdSchedule {
  Eigen::VectorXd x0;
  std::vector<Eigen::VectorXd> stages;  ///< x_1 .. x_k
  std::vector<std::size_t> deployed;  ///< 0-based branch indices
  double tau = 0.0;
  std::vector<std::size_t> rank_trajectory;  ///< rank(L) after x_0, x_1, ...
  std::size_t supremum = 0;
  bool complete = false;  ///< rank reached the supremum

  std::size_t branch_count() const { return static_cast<std::size_t>(x0.size()); }
  std::size_t final_rank() const { return rank_trajectory.empty() ? 0 : rank_trajectory.back(); }
  std::size_t final_doa() const { return branch_count() - final_rank(); }
  std::vector<std::size_t> doa_trajectory() const {
    std::vector<std::size_t> d;
    for (auto r : rank_trajectory) d.push_back(branch_count() - r);
    return d;
  }
  /// x_0 followed by every stage.
  std::vector<Eigen::VectorXd> all_settings() const {
    std::vector<Eigen::VectorXd> v{x0};
    v.insert(v.end(), stages.begin(), stages.end());
    return v;
  }
};

namespace detail {

inline bool collinear(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) return true;
  return std::abs(a.dot(b)) / (na * nb) > 1.0 - 1e-12;
}

inline Eigen::VectorXd restrict_to(const Eigen::VectorXd& x, const std::vector<std::size_t>& idx) {
  Eigen::VectorXd r(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) r[static_cast<Eigen::Index>(i)] = x[static_cast<Eigen::Index>(idx[i])];
  return r;
}

}  // namespace detail

/// Greedy multi-stage search: each stage draws x_k uniformly in the tau box on
/// the deployed branches, and is kept only if it is not collinear with an
/// earlier setting on those branches and strictly raises rank(L). Stops at the
/// supremum or after `max_stages`.
inline MtdSchedule plan_mmtd(const Eigen::VectorXd& x0, const DeploymentPlan& plan, const LoopMatrix& G, double tau,
                             Rng& rng, std::size_t max_stages, const PlanOptions& options = {}) {
  if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("tau must lie in (0, 1)");
  if (max_stages < 1) throw std::invalid_argument("max_stages must be at least 1");
  if (options.min_perturbation < 0.0 || options.min_perturbation >= tau)
    throw std::invalid_argument("min_perturbation must lie in [0, tau)");
  if (options.max_retries < 1) throw std::invalid_argument("max_retries must be at least 1");
  for (auto l : plan.deployed)
    if (static_cast<Eigen::Index>(l) >= x0.size()) throw std::invalid_argument("deployment exceeds branch count");

  MtdSchedule s;
  s.x0 = x0;
  s.deployed = plan.deployed;
  s.tau = tau;
  s.supremum = plan.supremum;
  CompositeMatrix L(circuit_basis(G, x0));
  std::size_t rank = L.rank();
  s.rank_trajectory.push_back(rank);

  std::vector<Eigen::VectorXd> restricted{detail::restrict_to(x0, plan.deployed)};
  std::uniform_real_distribution<double> box(-tau, tau);
  auto draw_delta = [&] {
    double d = box(rng);
    while (std::abs(d) < options.min_perturbation) d = box(rng);
    return d;
  };

  while (rank < s.supremum && s.stages.size() < max_stages) {
    bool accepted = false;
    for (std::size_t attempt = 0; attempt < options.max_retries && !accepted; ++attempt) {
      Eigen::VectorXd x = x0;
      for (auto l : plan.deployed) x[static_cast<Eigen::Index>(l)] *= 1.0 + draw_delta();
      const auto xr = detail::restrict_to(x, plan.deployed);
      if (plan.deployed.size() >= 2 &&
          std::any_of(restricted.begin(), restricted.end(), [&](const auto& y) { return detail::collinear(xr, y); }))
        continue;
      CompositeMatrix trial = L;
      trial.append(circuit_basis(G, x));
      const auto r = trial.rank();
      if (r <= rank) continue;
      L = std::move(trial);
      rank = r;
      s.stages.push_back(std::move(x));
      restricted.push_back(xr);
      s.rank_trajectory.push_back(rank);
      accepted = true;
    }
    if (!accepted)
      throw SearchError("no candidate raised rank(L) after " + std::to_string(options.max_retries) + " draws at stage " +
                        std::to_string(s.stages.size() + 1));
  }
  s.complete = rank >= s.supremum;
  return s;
}

inline MtdScheduleDocument to_document(const MtdSchedule& s, std::string case_name) {
  MtdScheduleDocument doc;
  doc.case_name = std::move(case_name);
  for (auto l : s.deployed) doc.deployment.push_back(l + 1);
  doc.tau = s.tau;
  doc.x0.assign(s.x0.data(), s.x0.data() + s.x0.size());
  for (const auto& x : s.stages) doc.stages.emplace_back(x.data(), x.data() + x.size());
  doc.achieved_rank = s.final_rank();
  doc.supremum = s.supremum;
  return doc;
}

struct Completeness {
  bool complete = false;
  std::size_t doi = 0;  ///< degree of incompleteness = bridge count
  std::vector<std::size_t> bridges;
};

inline Completeness verify_completeness(const Topology& t) {
  Completeness c;
  c.bridges = find_bridges(t);
  c.doi = c.bridges.size();
  c.complete = c.bridges.empty();
  return c;
}

}  // namespace mmtd
