#pragma once

// Matrix elements <psi_a, x psi_b> and <psi_a, psi_b'> of the orthonormal
// Hermite functions psi_b = h_b(x) exp(-x^2/2), computed by Gauss-Hermite
// quadrature for the weight exp(-x^2).

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

namespace oracle {

struct Quadrature {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// h(i, b) = normalized Hermite polynomial h_b at node i.
inline Eigen::MatrixXd hermite_values(const Eigen::VectorXd& x, int count);

/// Nodes from the Jacobi matrix, polished by Newton steps on h_q; weights from
/// the Christoffel function 1 / sum_b h_b(x)^2, which keeps small weights accurate.
inline Quadrature gauss_hermite(int q) {
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(q, q);
  for (int k = 1; k < q; ++k) jacobi(k - 1, k) = jacobi(k, k - 1) = std::sqrt(k / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi, Eigen::EigenvaluesOnly);
  Eigen::VectorXd x = es.eigenvalues();
  for (int iter = 0; iter < 3; ++iter) {
    const Eigen::MatrixXd h = hermite_values(x, q + 1);
    x -= h.col(q).cwiseQuotient(std::sqrt(2.0 * q) * h.col(q - 1));
  }
  const Eigen::MatrixXd h = hermite_values(x, q);
  return {x, h.rowwise().squaredNorm().cwiseInverse()};
}

inline Eigen::MatrixXd hermite_values(const Eigen::VectorXd& x, int count) {
  Eigen::MatrixXd h(x.size(), count);
  h.col(0).setConstant(std::pow(std::numbers::pi, -0.25));
  if (count > 1) h.col(1) = std::sqrt(2.0) * x.cwiseProduct(h.col(0));
  for (int b = 1; b + 1 < count; ++b) {
    h.col(b + 1) = std::sqrt(2.0 / (b + 1)) * x.cwiseProduct(h.col(b)) - std::sqrt(double(b) / (b + 1)) * h.col(b - 1);
  }
  return h;
}

inline Eigen::MatrixXd position_elements(int cutoff) {
  const Quadrature g = gauss_hermite(cutoff + 10);
  const Eigen::MatrixXd h = hermite_values(g.nodes, cutoff);
  const Eigen::MatrixXd wh = g.weights.asDiagonal() * h;
  return wh.transpose() * g.nodes.asDiagonal() * h;
}

/// Uses psi_b' = sqrt(2b) psi_{b-1} - x psi_b.
inline Eigen::MatrixXd derivative_elements(int cutoff) {
  const Quadrature g = gauss_hermite(cutoff + 10);
  const Eigen::MatrixXd h = hermite_values(g.nodes, cutoff);
  Eigen::MatrixXd dh(h.rows(), cutoff);
  for (int b = 0; b < cutoff; ++b) {
    dh.col(b) = -g.nodes.cwiseProduct(h.col(b));
    if (b > 0) dh.col(b) += std::sqrt(2.0 * b) * h.col(b - 1);
  }
  return (g.weights.asDiagonal() * h).transpose() * dh;
}

}  // namespace oracle
