#include "spinc/universal_spinc.hpp"

#include <cmath>
#include <limits>

namespace spinc {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using cd = std::complex<double>;

SpinCElement SpinCElement::canonical() const {
  if (canonical_flip(a.mv()) > 0) return *this;
  return {-a, -c};
}

double class_distance(const SpinCElement& x, const SpinCElement& y) {
  const double same = std::max(spin_distance(x.a, y.a), std::abs(x.c - y.c));
  const double flip = std::max(spin_distance(x.a, -y.a), std::abs(x.c + y.c));
  return std::min(same, flip);
}

MatrixXcd epsilon(const SpinCElement& x, const GammaRepd& rep) { return x.c * rep_apply(rep, x.a.mv()); }

Multivectord act_on_multivector(const MatrixXd& r, const Multivectord& y) {
  const BilinearForm& form = y.form();
  const int n = y.dim();
  if (r.rows() != n || r.cols() != n) throw Error(Errc::ShapeMismatch, "rotation size differs from multivector dimension");
  std::vector<Multivectord> images;
  images.reserve(n);
  for (int j = 0; j < n; ++j) {
    images.push_back(Multivectord::vector(form, std::span<const double>(r.col(j).data(), static_cast<std::size_t>(n))));
  }
  Multivectord out(form);
  for (const auto& [mask, coef] : y.terms()) {
    Multivectord term = Multivectord::scalar(form, coef);
    for (Blade rest = mask; rest != 0; rest &= rest - 1) term = term * images[std::countr_zero(rest)];
    out = out + term;
  }
  return out;
}

double equivariance_residual(const GammaRepd& rep, const SpinCElement& x, const Multivectord& y) {
  const MatrixXcd lhs = rep_apply(rep, act_on_multivector(p_map(x), y));
  const MatrixXcd eps = epsilon(x, rep);
  const MatrixXcd rhs = eps * rep_apply(rep, y) * eps.inverse();
  return (lhs - rhs).norm();
}

ScalarFit fit_scalar(const MatrixXcd& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw Error(Errc::ShapeMismatch, "scalar fit needs a square matrix");
  const cd c = m.trace() / static_cast<double>(m.rows());
  const double off = (m - c * MatrixXcd::Identity(m.rows(), m.cols())).norm();
  return {c, off / std::max(1.0, m.norm())};
}

cd scalar_extract(const MatrixXcd& m, double tol) {
  const ScalarFit fit = fit_scalar(m);
  if (!(fit.residual <= tol)) throw Error(Errc::NotScalar, "matrix is not a multiple of the identity");
  if (!(std::abs(fit.c) > tol)) throw Error(Errc::NotScalar, "scalar vanishes");
  return fit.c;
}

FactorizationResult factorize(const GammaRepd& rep, const MatrixXd& pPrime, const MatrixXcd& epsPrime, double tol) {
  if (pPrime.rows() != rep.n() || pPrime.cols() != rep.n()) throw Error(Errc::ShapeMismatch, "pPrime must be n x n");
  if (epsPrime.rows() != rep.k() || epsPrime.cols() != rep.k()) throw Error(Errc::ShapeMismatch, "epsPrime must be k x k");
  if (!epsPrime.allFinite()) throw Error(Errc::NonFinite, "epsPrime has non-finite entries");
  const SpinElement a = lift_rotation(pPrime);
  const MatrixXcd m = rep_apply(rep, a.inverse().mv()) * epsPrime;
  const ScalarFit fit = fit_scalar(m);
  const cd c = scalar_extract(m, tol);
  return {SpinCElement{a, c}.canonical(), fit.residual, true};
}

SolutionInstance spin_instance(const GammaRepd& rep, Rng& rng, int count, int pairs) {
  SolutionInstance inst{"spin", {}, {}};
  std::vector<SpinElement> elems;
  for (int i = 0; i < count; ++i) elems.push_back(random_spin(rng, rep.n()));
  for (int i = 0; i < pairs && count > 0; ++i) {
    const auto l = static_cast<std::size_t>(rng.uniform_int(0, count - 1));
    const auto r = static_cast<std::size_t>(rng.uniform_int(0, count - 1));
    inst.hints.push_back({l, r, elems.size()});
    elems.push_back(elems[l] * elems[r]);
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    inst.samples.push_back({"g" + std::to_string(i), adjoint_matrix(elems[i]), rep_apply(rep, elems[i].mv())});
  }
  return inst;
}

SolutionInstance identity_instance(const GammaRepd& rep) {
  SolutionInstance inst{"identity", {}, {}};
  inst.samples.push_back({"e", MatrixXd::Identity(rep.n(), rep.n()), MatrixXcd::Identity(rep.k(), rep.k())});
  inst.hints.push_back({0, 0, 0});
  return inst;
}

InstanceReport homomorphism_check(const GammaRepd& rep, const SolutionInstance& inst, double tol) {
  std::vector<std::optional<SpinCElement>> cache(inst.samples.size());
  auto f = [&](std::size_t i) -> const SpinCElement& {
    if (!cache[i]) cache[i] = factorize(rep, inst.samples[i].pPrime, inst.samples[i].epsPrime).element;
    return *cache[i];
  };
  InstanceReport report;
  for (const auto& hint : inst.hints) {
    const SpinCElement lhs = (f(hint.left) * f(hint.right)).canonical();
    const double d = class_distance(lhs, f(hint.product));
    report.worst = std::max(report.worst, d);
    ++report.checked;
  }
  report.pass = report.worst < tol;
  return report;
}

InstanceReport bijection_roundtrip(const GammaRepd& rep, const SolutionInstance& inst, double tol) {
  InstanceReport report;
  for (const auto& s : inst.samples) {
    const SpinCElement g = factorize(rep, s.pPrime, s.epsPrime).element;
    const MatrixXcd eps = epsilon(g, rep);
    const MatrixXd p = p_map(g);
    const double forward = std::max((eps - s.epsPrime).norm() / std::max(1.0, s.epsPrime.norm()), (p - s.pPrime).norm());
    const SpinCElement back = factorize(rep, p, eps).element;
    const double backward = class_distance(back, g);
    report.worst = std::max({report.worst, forward, backward});
    ++report.checked;
  }
  report.pass = report.worst < tol;
  return report;
}

ObstructionReport so_obstruction_demo(int n, int steps) {
  if (n < 3) throw Error(Errc::InvalidArgument, "the obstruction needs n >= 3");
  if (steps < 100) throw Error(Errc::InvalidArgument, "steps must be at least 100");
  const int once = path_monodromy(plane_rotation_loop(n, 0, 1, 1, steps));
  const int twice = path_monodromy(plane_rotation_loop(n, 0, 1, 2, 2 * steps));
  return {once, twice, once == -1 ? "no section" : "section not excluded"};
}

}  // namespace spinc
