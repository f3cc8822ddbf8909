#pragma once

// Hand-rolled generators and brute-force oracles shared by the test suites.

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "mmtd/mmtd.hpp"

namespace testing_support {

inline std::size_t count_components(std::size_t buses, const std::vector<mmtd::Edge>& edges) {
  mmtd::detail::DisjointSets sets(buses);
  std::size_t c = buses;
  for (const auto& e : edges)
    if (sets.unite(e.from, e.to)) --c;
  return c;
}

/// Connected multigraph: a random tree plus extra random (possibly parallel)
/// branches, random orientation, random reference vertex.
inline mmtd::Topology random_connected(std::mt19937_64& rng, std::size_t max_buses, std::size_t max_edges) {
  std::uniform_int_distribution<std::size_t> nb(2, max_buses);
  const std::size_t buses = nb(rng);
  std::vector<mmtd::Edge> edges;
  std::bernoulli_distribution flip(0.5);
  for (std::size_t v = 1; v < buses; ++v) {
    std::uniform_int_distribution<std::size_t> parent(0, v - 1);
    const auto p = parent(rng);
    edges.push_back(flip(rng) ? mmtd::Edge{p, v} : mmtd::Edge{v, p});
  }
  std::uniform_int_distribution<std::size_t> extra(0, max_edges > edges.size() ? max_edges - edges.size() : 0);
  std::uniform_int_distribution<std::size_t> any(0, buses - 1);
  for (std::size_t k = extra(rng); k > 0; --k) {
    const auto a = any(rng);
    auto b = any(rng);
    while (b == a) b = any(rng);
    edges.push_back({a, b});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return mmtd::Topology(buses, std::move(edges), any(rng));
}

inline std::vector<std::size_t> brute_force_bridges(const mmtd::Topology& t) {
  const auto base = count_components(t.bus_count(), t.edges());
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < t.branch_count(); ++l) {
    auto rest = t.edges();
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(l));
    if (count_components(t.bus_count(), rest) > base) out.push_back(l);
  }
  return out;
}

inline Eigen::VectorXd random_reactances(std::mt19937_64& rng, std::size_t m) {
  std::uniform_real_distribution<double> u(0.01, 0.5);
  Eigen::VectorXd x(static_cast<Eigen::Index>(m));
  for (Eigen::Index l = 0; l < x.size(); ++l) x[l] = u(rng);
  return x;
}

/// x scaled by independent factors in [1 - tau, 1 + tau] on every branch.
inline Eigen::VectorXd perturb(std::mt19937_64& rng, const Eigen::VectorXd& x, double tau) {
  std::uniform_real_distribution<double> u(-tau, tau);
  Eigen::VectorXd y = x;
  for (Eigen::Index l = 0; l < y.size(); ++l) y[l] *= 1.0 + u(rng);
  return y;
}

inline Eigen::MatrixXd column_space_intersection(const std::vector<Eigen::MatrixXd>& Hs) {
  // a in every col(H_k)  <=>  (I - P_k) a = 0 for all k. The stacked
  // annihilators have singular values near 0 or >= 1, so a fixed cut works.
  const Eigen::Index m = Hs.front().rows();
  Eigen::MatrixXd stacked(static_cast<Eigen::Index>(Hs.size()) * m, m);
  for (std::size_t k = 0; k < Hs.size(); ++k) {
    const Eigen::MatrixXd P = Hs[k] * Hs[k].completeOrthogonalDecomposition().pseudoInverse();
    stacked.middleRows(static_cast<Eigen::Index>(k) * m, m) = Eigen::MatrixXd::Identity(m, m) - P;
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeFullV);
  const auto r = (svd.singularValues().array() > 1e-6).count();
  return svd.matrixV().rightCols(m - r);
}

}  // namespace testing_support
