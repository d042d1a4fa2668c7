#include "spinc/exterior_model.hpp"

#include <bit>

namespace spinc {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using cd = std::complex<double>;

namespace {

MatrixXcd creation(int m, int l) {
  const int dim = 1 << m;
  MatrixXcd a = MatrixXcd::Zero(dim, dim);
  for (int s = 0; s < dim; ++s) {
    if (s & (1 << l)) continue;
    const int below = std::popcount(static_cast<unsigned>(s & ((1 << l) - 1)));
    a(s | (1 << l), s) = (below & 1) ? -1.0 : 1.0;
  }
  return a;
}

std::vector<int> members(int mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(i);
  }
  return out;
}

void check_unitary(const MatrixXcd& u, int m) {
  if (u.rows() != m || u.cols() != m) throw Error(Errc::ShapeMismatch, "unitary must be m x m");
  const double err = (u.adjoint() * u - MatrixXcd::Identity(m, m)).cwiseAbs().maxCoeff();
  if (!(err <= 1e-10)) throw Error(Errc::NotUnitary, "matrix is not unitary to 1e-10");
}

}  // namespace

std::vector<MatrixXcd> exterior_gammas(int m) {
  if (m < 1 || m > 5) throw Error(Errc::InvalidArgument, "exterior model supports 1 <= m <= 5");
  std::vector<MatrixXcd> gammas(2 * m);
  const cd i{0.0, 1.0};
  for (int l = 0; l < m; ++l) {
    const MatrixXcd up = creation(m, l);
    const MatrixXcd down = up.adjoint();
    gammas[l] = up - down;
    gammas[m + l] = i * (up + down);
  }
  return gammas;
}

MatrixXcd exterior_power(const MatrixXcd& u) {
  const int m = static_cast<int>(u.rows());
  const int dim = 1 << m;
  MatrixXcd out = MatrixXcd::Zero(dim, dim);
  for (int s = 0; s < dim; ++s) {
    const std::vector<int> cols = members(s);
    for (int t = 0; t < dim; ++t) {
      if (std::popcount(static_cast<unsigned>(t)) != static_cast<int>(cols.size())) continue;
      if (cols.empty()) {
        out(t, s) = 1.0;
        continue;
      }
      const std::vector<int> rows = members(t);
      MatrixXcd sub(rows.size(), cols.size());
      for (std::size_t a = 0; a < rows.size(); ++a) {
        for (std::size_t b = 0; b < cols.size(); ++b) sub(a, b) = u(rows[a], cols[b]);
      }
      out(t, s) = sub.determinant();
    }
  }
  return out;
}

MatrixXd realify(const MatrixXcd& u) {
  const Eigen::Index m = u.rows();
  MatrixXd r(2 * m, 2 * m);
  r.topLeftCorner(m, m) = u.real();
  r.topRightCorner(m, m) = -u.imag();
  r.bottomLeftCorner(m, m) = u.imag();
  r.bottomRightCorner(m, m) = u.real();
  return r;
}

double exterior_equivariance_residual(const MatrixXcd& u) {
  const int m = static_cast<int>(u.rows());
  const std::vector<MatrixXcd> gammas = exterior_gammas(m);
  const MatrixXd p = realify(u);
  const MatrixXcd lam = exterior_power(u);
  const MatrixXcd lam_inv = lam.inverse();
  double worst = 0.0;
  for (int j = 0; j < 2 * m; ++j) {
    MatrixXcd lhs = MatrixXcd::Zero(lam.rows(), lam.cols());
    for (int l = 0; l < 2 * m; ++l) lhs += p(l, j) * gammas[l];
    worst = std::max(worst, (lhs - lam * gammas[j] * lam_inv).norm());
  }
  return worst;
}

SolutionInstance unitary_exterior_instance(int m, std::span<const MatrixXcd> us, std::span<const ClosureHint> hints) {
  for (const auto& u : us) check_unitary(u, m);
  const std::vector<MatrixXcd> model = exterior_gammas(m);
  const GammaRepd target = build_gamma(2 * m);
  const auto t = intertwiner_solve(model, target.gammas());
  if (!t) throw Error(Errc::NotCentral, "exterior model is not equivalent to the reference representation");
  const MatrixXcd t_inv = t->inverse();

  SolutionInstance inst{"unitary", {}, {hints.begin(), hints.end()}};
  for (std::size_t i = 0; i < us.size(); ++i) {
    inst.samples.push_back({"U" + std::to_string(i), realify(us[i]), *t * exterior_power(us[i]) * t_inv});
  }
  return inst;
}

}  // namespace spinc
