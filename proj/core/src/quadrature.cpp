#include "wavelet_landau/quadrature.hpp"

#include <Eigen/Dense>

#include <map>
#include <mutex>
#include <stdexcept>

namespace wavelet_landau {

namespace {

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix, weights are
// mu0 * (first eigenvector component)^2.
QuadratureRule golub_welsch(int order, double mu0,
                            const std::vector<double>& offdiag) {
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int i = 0; i + 1 < order; ++i) {
    jacobi(i, i + 1) = offdiag[i];
    jacobi(i + 1, i) = offdiag[i];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  QuadratureRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    rule.nodes[i] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

QuadratureRule make_legendre(int order) {
  std::vector<double> off(order - 1);
  for (int k = 1; k < order; ++k)
    off[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  return golub_welsch(order, 2.0, off);
}

QuadratureRule make_hermite(int order) {
  std::vector<double> off(order - 1);
  for (int k = 1; k < order; ++k) off[k - 1] = std::sqrt(0.5 * k);
  return golub_welsch(order, std::sqrt(pi), off);
}

const QuadratureRule& cached(int order, std::map<int, QuadratureRule>& cache,
                             std::mutex& mutex,
                             QuadratureRule (*make)(int)) {
  if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, make(order)).first;
  return it->second;
}

}  // namespace

const QuadratureRule& gauss_legendre(int order) {
  static std::map<int, QuadratureRule> cache;
  static std::mutex mutex;
  return cached(order, cache, mutex, make_legendre);
}

const QuadratureRule& gauss_hermite(int order) {
  static std::map<int, QuadratureRule> cache;
  static std::mutex mutex;
  return cached(order, cache, mutex, make_hermite);
}

}  // namespace wavelet_landau
