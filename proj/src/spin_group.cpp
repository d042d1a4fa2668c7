#include "spinc/spin_group.hpp"

#include <cmath>
#include <numbers>

namespace spinc {

using Eigen::MatrixXd;
using cd = std::complex<double>;

namespace {

double scalar_part_of_norm(const Multivectord& a) { return (a * reverse(a)).coefficient(0).real(); }

Multivectord unit_vector_mv(const BilinearForm& form, const Eigen::VectorXd& v) {
  return Multivectord::vector(form, std::span<const double>(v.data(), static_cast<std::size_t>(v.size())));
}

}  // namespace

SpinElement::SpinElement(Multivectord mv) : mv_(std::move(mv)) {
  if (!mv_.form().is_negative_definite_unit()) throw Error(Errc::FormMismatch, "spin elements live in C_n");
  if (!is_even(mv_)) throw Error(Errc::NotSpin, "odd grades present");
  const Multivectord norm = mv_ * reverse(mv_) - Multivectord::scalar(mv_.form(), 1.0);
  if (coefficient_norm(norm) > 1e-10) throw Error(Errc::NotSpin, "A reverse(A) differs from 1");
}

SpinElement SpinElement::identity(int n) {
  return unchecked(Multivectord::scalar(BilinearForm::negative_definite(n), 1.0));
}

MatrixXd adjoint_matrix(const SpinElement& a) {
  const int n = a.n();
  const BilinearForm& form = a.mv().form();
  const Multivectord inv = reverse(a.mv()) * cd(1.0 / scalar_part_of_norm(a.mv()));
  MatrixXd r(n, n);
  for (int j = 0; j < n; ++j) {
    const Multivectord img = a.mv() * Multivectord::basis(form, j) * inv;
    double stray = 0.0;
    r.col(j).setZero();
    for (const auto& [mask, coef] : img.terms()) {
      if (grade(mask) == 1) {
        r(std::countr_zero(mask), j) = coef.real();
        stray += coef.imag() * coef.imag();
      } else {
        stray += std::norm(coef);
      }
    }
    if (std::sqrt(stray) > 1e-8) throw Error(Errc::NotSpin, "conjugation does not preserve R^n");
  }
  return r;
}

void check_rotation(const MatrixXd& r) {
  if (r.rows() != r.cols() || r.rows() < 1) throw Error(Errc::ShapeMismatch, "rotation must be square");
  if (!r.allFinite()) throw Error(Errc::NonFinite, "rotation has non-finite entries");
  const double orth = (r.transpose() * r - MatrixXd::Identity(r.rows(), r.cols())).cwiseAbs().maxCoeff();
  if (orth > 1e-10) throw Error(Errc::NotRotation, "matrix is not orthogonal");
  if (r.determinant() < 0) throw Error(Errc::NotSpecial, "reflections have no spin lift");
}

int canonical_flip(const Multivectord& a) {
  const cd* first = nullptr;
  for (const auto& [mask, coef] : a.terms()) {
    if (std::abs(coef) <= 1e-8) continue;
    if (!first) first = &coef;
    if (std::abs(coef.real()) > 1e-8) return coef.real() > 0 ? 1 : -1;
  }
  if (first && first->imag() < 0) return -1;
  return 1;
}

SpinElement canonical_sign(const SpinElement& a) { return canonical_flip(a.mv()) > 0 ? a : -a; }

SpinElement lift_rotation(const MatrixXd& r) {
  check_rotation(r);
  const int n = static_cast<int>(r.rows());
  const BilinearForm form = BilinearForm::negative_definite(n);
  MatrixXd m = r;
  Multivectord prod = Multivectord::scalar(form, 1.0);
  // Householder steps sending column i to -sign(m_ii) e_i, so |u| >= 1; the
  // remaining diagonal of signs is a product of coordinate reflections.
  for (int i = 0; i + 1 < n; ++i) {
    Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
    u.tail(n - i) = m.col(i).tail(n - i);
    u(i) += m(i, i) >= 0.0 ? 1.0 : -1.0;
    u.normalize();
    m -= 2.0 * u * (u.transpose() * m);
    prod = prod * unit_vector_mv(form, u);
  }
  for (int i = 0; i < n; ++i) {
    if (m(i, i) < 0.0) prod = prod * Multivectord::basis(form, i);
  }
  const double norm = scalar_part_of_norm(prod);
  if (!(norm > 0.0)) throw Error(Errc::NotSpecial, "reflection count is odd");
  prod = prod * cd(1.0 / std::sqrt(norm));
  return canonical_sign(SpinElement::unchecked(std::move(prod)));
}

int path_monodromy(std::span<const MatrixXd> loop) {
  if (loop.size() < 2) throw Error(Errc::InvalidArgument, "loop needs at least two samples");
  if ((loop.front() - loop.back()).cwiseAbs().maxCoeff() > 1e-9) throw Error(Errc::OpenLoop, "first and last rotations differ");
  const SpinElement start = lift_rotation(loop.front());
  SpinElement prev = start;
  for (std::size_t i = 1; i < loop.size(); ++i) {
    const double step = Eigen::JacobiSVD<MatrixXd>(loop[i] - loop[i - 1]).singularValues()(0);
    if (step > 0.5) throw Error(Errc::StepTooCoarse, "consecutive rotations farther apart than 0.5");
    SpinElement next = lift_rotation(loop[i]);
    const double keep = spin_distance(next, prev);
    const double flip = spin_distance(-next, prev);
    if (std::min(keep, flip) >= 1.0) throw Error(Errc::StepTooCoarse, "continuation is not sign separable");
    prev = keep <= flip ? next : -next;
  }
  return spin_distance(prev, start) <= spin_distance(-prev, start) ? 1 : -1;
}

MatrixXd plane_rotation(int n, int p, int q, double theta) {
  if (p < 0 || q < 0 || p >= n || q >= n || p == q) throw Error(Errc::InvalidArgument, "invalid rotation plane");
  MatrixXd r = MatrixXd::Identity(n, n);
  r(p, p) = std::cos(theta);
  r(q, q) = std::cos(theta);
  r(q, p) = std::sin(theta);
  r(p, q) = -std::sin(theta);
  return r;
}

std::vector<MatrixXd> plane_rotation_loop(int n, int p, int q, int turns, int steps) {
  if (steps < 1) throw Error(Errc::InvalidArgument, "steps must be positive");
  std::vector<MatrixXd> loop;
  loop.reserve(steps + 1);
  for (int i = 0; i <= steps; ++i) {
    const double t = static_cast<double>(i) / steps;
    loop.push_back(plane_rotation(n, p, q, 2.0 * std::numbers::pi * turns * t));
  }
  return loop;
}

SpinElement random_spin(Rng& rng, int n, int pairs) {
  if (pairs <= 0) pairs = n;
  const BilinearForm form = BilinearForm::negative_definite(n);
  Multivectord prod = Multivectord::scalar(form, 1.0);
  for (int i = 0; i < 2 * pairs; ++i) prod = prod * unit_vector_mv(form, rng.unit_vector(n));
  prod = prod * cd(1.0 / std::sqrt(scalar_part_of_norm(prod)));
  return SpinElement::unchecked(std::move(prod));
}

}  // namespace spinc
