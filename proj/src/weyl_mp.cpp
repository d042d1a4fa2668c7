#include "spinc/weyl_mp.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "spinc/errors.hpp"

namespace spinc {

using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using cd = std::complex<double>;

namespace {

constexpr int kMaxWorkCutoff = 1024;
constexpr Index kMaxWorkDim = 2048;
constexpr double kTailAmplitude = 1e-10;
constexpr int kTailLevels = 8;

Index int_pow(int base, int exp) {
  Index r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

/// Sparse operator acting as `op` on mode j and as the identity elsewhere.
SparseMatrixcd embed(const MatrixXcd& op, int modes, int cutoff, int j) {
  const Index dim = int_pow(cutoff, modes);
  const Index stride = int_pow(cutoff, modes - 1 - j);
  std::vector<Eigen::Triplet<cd>> triplets;
  for (Index col = 0; col < dim; ++col) {
    const int level = static_cast<int>((col / stride) % cutoff);
    for (int row_level = 0; row_level < cutoff; ++row_level) {
      const cd v = op(row_level, level);
      if (v == cd(0.0)) continue;
      triplets.emplace_back(col + (row_level - level) * stride, col, v);
    }
  }
  SparseMatrixcd m(dim, dim);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

SparseMatrixcd column_selection(Index dim, const std::vector<Index>& cols) {
  SparseMatrixcd p(dim, static_cast<Index>(cols.size()));
  std::vector<Eigen::Triplet<cd>> triplets;
  for (std::size_t k = 0; k < cols.size(); ++k) triplets.emplace_back(cols[k], static_cast<Index>(k), 1.0);
  p.setFromTriplets(triplets.begin(), triplets.end());
  return p;
}

MatrixXcd columns(const MatrixXcd& m, const std::vector<Index>& cols) {
  MatrixXcd out(m.rows(), static_cast<Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) out.col(static_cast<Index>(k)) = m.col(cols[k]);
  return out;
}

void check_hamiltonian(const MatrixXd& h, int modes) {
  if (h.rows() != 2 * modes || h.cols() != 2 * modes) throw Error(Errc::ShapeMismatch, "Hamiltonian must be 2n x 2n");
  if (!h.allFinite()) throw Error(Errc::NonFinite, "Hamiltonian has non-finite entries");
  if ((h - h.transpose()).cwiseAbs().maxCoeff() > 1e-12) throw Error(Errc::InvalidArgument, "Hamiltonian must be symmetric");
  for (int r = 0; r < 2 * modes; ++r) {
    for (int c = 0; c < 2 * modes; ++c) {
      if (r % modes != c % modes && h(r, c) != 0.0) {
        throw Error(Errc::UnsupportedGenerator, "generators coupling different modes are not supported");
      }
    }
  }
}

/// exp(-i t h) for the quantized per-mode generator of the 2x2 block hp
/// (already conjugated by J), compressed to `cutoff` levels.
MatrixXcd mode_propagator(const Eigen::Matrix2d& hp, double t, int cutoff) {
  using SparseXd = Eigen::SparseMatrix<double>;
  const SparseXd x = ladder_position(cutoff + 2).sparseView();
  const SparseXd d = ladder_derivative(cutoff + 2).sparseView();
  const MatrixXd x2 = MatrixXd(SparseXd(x * x)).topLeftCorner(cutoff, cutoff);
  const MatrixXd p2 = -MatrixXd(SparseXd(d * d)).topLeftCorner(cutoff, cutoff);
  const MatrixXcd sym_xp =
      cd(0.0, -0.5) * MatrixXd(MatrixXd(SparseXd(x * d + d * x)).topLeftCorner(cutoff, cutoff)).cast<cd>();
  MatrixXcd gen = (0.5 * (hp(0, 0) * x2 + hp(1, 1) * p2)).cast<cd>() + hp(0, 1) * sym_xp;

  MatrixXcd off = gen;
  off.diagonal().setZero();
  if (off.cwiseAbs().maxCoeff() == 0.0) {
    MatrixXcd u = MatrixXcd::Zero(cutoff, cutoff);
    for (int a = 0; a < cutoff; ++a) u(a, a) = std::exp(cd(0.0, -t * gen(a, a).real()));
    return u;
  }
  // Quadratic generators only couple levels of equal parity, and each parity
  // block is tridiagonal; a diagonal phase change makes it real.
  MatrixXcd u = MatrixXcd::Zero(cutoff, cutoff);
  for (int parity = 0; parity < 2; ++parity) {
    const int size = (cutoff - parity + 1) / 2;
    Eigen::VectorXd diag(size);
    Eigen::VectorXd sub(std::max(size - 1, 0));
    Eigen::VectorXcd phase(size);
    phase(0) = 1.0;
    for (int r = 0; r < size; ++r) diag(r) = gen(2 * r + parity, 2 * r + parity).real();
    for (int r = 0; r + 1 < size; ++r) {
      const cd b = gen(2 * r + 2 + parity, 2 * r + parity);
      sub(r) = std::abs(b);
      phase(r + 1) = sub(r) > 0.0 ? phase(r) * b / sub(r) : phase(r);
    }
    Eigen::SelfAdjointEigenSolver<MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    Eigen::VectorXcd phases(size);
    for (int a = 0; a < size; ++a) phases(a) = std::exp(cd(0.0, -t * es.eigenvalues()(a)));
    const MatrixXcd v = phase.asDiagonal() * es.eigenvectors().cast<cd>();
    const MatrixXcd ub = v * phases.asDiagonal() * v.adjoint();
    for (int r = 0; r < size; ++r)
      for (int c = 0; c < size; ++c) u(2 * r + parity, 2 * c + parity) = ub(r, c);
  }
  return u;
}

/// Per-mode products over the path of the single-mode propagators.
std::vector<MatrixXcd> mode_factors(int modes, int cutoff, std::span<const MpStep> steps) {
  const MatrixXd j = symplectic_form(modes);
  std::vector<MatrixXcd> factors(modes, MatrixXcd::Identity(cutoff, cutoff));
  std::vector<bool> touched(modes, false);
  for (const auto& step : steps) {
    check_hamiltonian(step.h, modes);
    const MatrixXd hp = j.transpose() * step.h * j;
    for (int m = 0; m < modes; ++m) {
      Eigen::Matrix2d block;
      block << hp(m, m), hp(m, modes + m), hp(modes + m, m), hp(modes + m, modes + m);
      if (block.cwiseAbs().maxCoeff() == 0.0) continue;
      MatrixXcd p = mode_propagator(block, step.t, cutoff);
      factors[m] = touched[m] ? MatrixXcd(factors[m] * p) : std::move(p);
      touched[m] = true;
    }
  }
  return factors;
}

bool tails_small(const std::vector<MatrixXcd>& factors, int cutoff, int bound) {
  const int top = cutoff - kTailLevels;
  for (const auto& f : factors) {
    for (int a = 0; a <= bound; ++a) {
      for (int r = top; r < cutoff; ++r) {
        if (std::abs(f(r, a)) > kTailAmplitude || std::abs(f(a, r)) > kTailAmplitude) return false;
      }
    }
  }
  return true;
}

MpCElement assemble(int modes, int cutoff, std::span<const MpStep> steps, const std::vector<MatrixXcd>& factors) {
  MpCElement g;
  g.workCutoff = cutoff;
  g.s = MatrixXd::Identity(2 * modes, 2 * modes);
  for (const auto& step : steps) g.s = g.s * sp_one_param(step.h, step.t);
  g.factors = factors;
  if (int_pow(cutoff, modes) <= kMaxWorkDim) {
    g.u = factors.front();
    for (int m = 1; m < modes; ++m) g.u = Eigen::kroneckerProduct(g.u, factors[m]).eval();
  }
  return g;
}

std::string step_tag(const char* family, int mode, double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%d(t=%.17g)", family, mode, t);
  return buf;
}

}  // namespace

MatrixXd ladder_position(int cutoff) {
  MatrixXd x = MatrixXd::Zero(cutoff, cutoff);
  for (int a = 0; a + 1 < cutoff; ++a) x(a, a + 1) = x(a + 1, a) = std::sqrt((a + 1) / 2.0);
  return x;
}

MatrixXd ladder_derivative(int cutoff) {
  MatrixXd d = MatrixXd::Zero(cutoff, cutoff);
  for (int a = 0; a + 1 < cutoff; ++a) {
    d(a, a + 1) = std::sqrt((a + 1) / 2.0);
    d(a + 1, a) = -d(a, a + 1);
  }
  return d;
}

HermiteModel::HermiteModel(int modes, int cutoff) : modes_(modes), cutoff_(cutoff) {
  if (cutoff < 8) throw Error(Errc::CutoffTooSmall, "cutoff must be at least 8");
  if (modes < 1) throw Error(Errc::InvalidArgument, "modes must be positive");
  if (static_cast<double>(modes) * std::log2(cutoff) > 22) throw Error(Errc::InvalidArgument, "model dimension too large");
  dim_ = int_pow(cutoff, modes);
  const MatrixXcd x = cd(0.0, 1.0) * ladder_position(cutoff).cast<cd>();
  const MatrixXcd d = ladder_derivative(cutoff).cast<cd>();
  for (int j = 0; j < modes; ++j) {
    xops_.push_back(embed(x, modes, cutoff, j));
    dops_.push_back(embed(d, modes, cutoff, j));
  }
}

std::vector<int> HermiteModel::levels(Index index) const {
  std::vector<int> out(modes_);
  for (int j = modes_ - 1; j >= 0; --j) {
    out[j] = static_cast<int>(index % cutoff_);
    index /= cutoff_;
  }
  return out;
}

std::vector<Index> HermiteModel::interior_indices(int bound) const {
  if (bound < 0) bound = interior_bound();
  std::vector<Index> out;
  for (Index i = 0; i < dim_; ++i) {
    const auto lv = levels(i);
    if (std::all_of(lv.begin(), lv.end(), [bound](int l) { return l <= bound; })) out.push_back(i);
  }
  return out;
}

SparseMatrixcd clifford_mult(const HermiteModel& model, std::span<const double> y) {
  const int n = model.modes();
  if (static_cast<int>(y.size()) != 2 * n) throw Error(Errc::ShapeMismatch, "phase-space vector must have 2n entries");
  SparseMatrixcd out(model.dim(), model.dim());
  for (int j = 0; j < n; ++j) {
    if (y[j] != 0.0) out += cd(y[j]) * model.xop(j);
    if (y[n + j] != 0.0) out += cd(y[n + j]) * model.dop(j);
  }
  return out;
}

MatrixXd symplectic_form(int modes) {
  MatrixXd j = MatrixXd::Zero(2 * modes, 2 * modes);
  j.topRightCorner(modes, modes).setIdentity();
  j.bottomLeftCorner(modes, modes) = -MatrixXd::Identity(modes, modes);
  return j;
}

double omega(std::span<const double> v, std::span<const double> w) {
  if (v.size() != w.size() || v.size() % 2 != 0) throw Error(Errc::ShapeMismatch, "omega needs equal even lengths");
  const std::size_t n = v.size() / 2;
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) s += v[j] * w[n + j] - v[n + j] * w[j];
  return s;
}

double ccr_residual(const HermiteModel& model, std::span<const double> v, std::span<const double> w, int bound) {
  const SparseMatrixcd a = clifford_mult(model, v);
  const SparseMatrixcd b = clifford_mult(model, w);
  const SparseMatrixcd p = column_selection(model.dim(), model.interior_indices(bound));
  const SparseMatrixcd ap = a * p;
  const SparseMatrixcd bp = b * p;
  const SparseMatrixcd comm = SparseMatrixcd(a * bp) - SparseMatrixcd(b * ap);
  const SparseMatrixcd r = comm + cd(0.0, omega(v, w)) * p;
  return r.norm();
}

double symplectic_residual(const MatrixXd& s) {
  const int modes = static_cast<int>(s.rows() / 2);
  const MatrixXd j = symplectic_form(modes);
  return (s.transpose() * j * s - j).cwiseAbs().maxCoeff();
}

MatrixXd sp_one_param(const MatrixXd& h, double t) {
  if (h.rows() != h.cols() || h.rows() % 2 != 0) throw Error(Errc::ShapeMismatch, "Hamiltonian must be 2n x 2n");
  const MatrixXd gen = t * symplectic_form(static_cast<int>(h.rows() / 2)) * h;
  return gen.exp();
}

MatrixXd oscillator_hamiltonian(int modes, int j) {
  MatrixXd h = MatrixXd::Zero(2 * modes, 2 * modes);
  h(j, j) = 1.0;
  h(modes + j, modes + j) = 1.0;
  return h;
}

MatrixXd squeeze_hamiltonian(int modes, int j) {
  MatrixXd h = MatrixXd::Zero(2 * modes, 2 * modes);
  h(j, modes + j) = 1.0;
  h(modes + j, j) = 1.0;
  return h;
}

MatrixXd shear_hamiltonian(int modes, int j) {
  MatrixXd h = MatrixXd::Zero(2 * modes, 2 * modes);
  h(j, j) = 1.0;
  return h;
}

MpCElement mp_path_at(int modes, int workCutoff, std::span<const MpStep> steps) {
  return assemble(modes, workCutoff, steps, mode_factors(modes, workCutoff, steps));
}

MpCElement mp_path(const HermiteModel& model, std::span<const MpStep> steps) {
  const int modes = model.modes();
  for (int cutoff = 2 * model.cutoff();; cutoff *= 2) {
    if (cutoff > kMaxWorkCutoff) {
      throw Error(Errc::CutoffTooSmall, "working cutoff needed for this path exceeds the supported size");
    }
    const auto factors = mode_factors(modes, cutoff, steps);
    if (tails_small(factors, cutoff, model.interior_bound())) return assemble(modes, cutoff, steps, factors);
  }
}

MpCElement mp_one_param(const HermiteModel& model, const MatrixXd& h, double t) {
  const MpStep step{h, t, "H"};
  return mp_path(model, std::span<const MpStep>(&step, 1));
}

double mp_equivariance_residual(const HermiteModel& model, const MpCElement& g, std::span<const double> y) {
  const int n = model.modes();
  if (g.s.rows() != 2 * n || static_cast<int>(g.factors.size()) != n) {
    throw Error(Errc::ShapeMismatch, "element and model differ in modes");
  }
  if (static_cast<int>(y.size()) != 2 * n) throw Error(Errc::ShapeMismatch, "phase-space vector must have 2n entries");
  const HermiteModel work(1, g.workCutoff);
  const std::vector<Index> cols = work.interior_indices(model.interior_bound());
  const SparseMatrixcd select = column_selection(work.dim(), cols);
  const Eigen::VectorXd sy = g.s * Eigen::Map<const Eigen::VectorXd>(y.data(), static_cast<Index>(y.size()));

  // The error is sum_j I (x) E_j (x) I with E_j acting on mode j alone, so its
  // norm on the interior follows from per-mode norms and traces.
  const double m = static_cast<double>(cols.size());
  double norms = 0.0;
  double trace_norms = 0.0;
  cd trace_sum = 0.0;
  for (int j = 0; j < n; ++j) {
    const MatrixXcd& f = g.factors[j];
    if (f.rows() != work.dim()) throw Error(Errc::ShapeMismatch, "U does not match its working cutoff");
    MatrixXcd inv_cols(work.dim(), static_cast<Index>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) inv_cols.col(static_cast<Index>(k)) = f.row(cols[k]).adjoint();
    const double yj[2] = {y[j], y[n + j]};
    const double syj[2] = {sy(j), sy(n + j)};
    const MatrixXcd e = f * MatrixXcd(clifford_mult(work, yj) * inv_cols) - MatrixXcd(clifford_mult(work, syj) * select);
    cd trace = 0.0;
    for (std::size_t k = 0; k < cols.size(); ++k) trace += e(cols[k], static_cast<Index>(k));
    norms += e.squaredNorm();
    trace_norms += std::norm(trace);
    trace_sum += trace;
  }
  const double total = std::pow(m, n - 2) * (m * norms + std::norm(trace_sum) - trace_norms);
  return std::sqrt(std::max(total, 0.0));
}

MpFactorization mp_factorize(const HermiteModel& model, const MatrixXd& pPrime, const MatrixXcd& epsPrime, double tol) {
  const int n = model.modes();
  if (pPrime.rows() != 2 * n || pPrime.cols() != 2 * n) throw Error(Errc::ShapeMismatch, "pPrime must be 2n x 2n");
  if (symplectic_residual(pPrime) > 1e-10) throw Error(Errc::InvalidArgument, "pPrime is not symplectic");
  std::vector<MpStep> path;
  for (int m = 0; m < n; ++m) {
    for (int c = 0; c < 2 * n; ++c) {
      for (int r : {m, n + m}) {
        if (c % n != m && std::abs(pPrime(r, c)) > 1e-9) throw Error(Errc::PathUnavailable, "pPrime couples different modes");
      }
    }
    Eigen::Matrix2d b;
    b << pPrime(m, m), pPrime(m, n + m), pPrime(n + m, m), pPrime(n + m, n + m);
    struct Candidate {
      const char* family;
      MatrixXd h;
      double t;
    };
    std::vector<Candidate> candidates;
    candidates.push_back({"osc", oscillator_hamiltonian(n, m), std::atan2(b(0, 1), b(0, 0))});
    if (b(0, 0) > 0) candidates.push_back({"squeeze", squeeze_hamiltonian(n, m), std::log(b(0, 0))});
    candidates.push_back({"shear", shear_hamiltonian(n, m), -b(1, 0)});
    bool found = false;
    for (const auto& cand : candidates) {
      const MatrixXd s = sp_one_param(cand.h, cand.t);
      Eigen::Matrix2d sb;
      sb << s(m, m), s(m, n + m), s(n + m, m), s(n + m, n + m);
      if ((sb - b).cwiseAbs().maxCoeff() < 1e-9) {
        path.push_back({cand.h, cand.t, step_tag(cand.family, m, cand.t)});
        found = true;
        break;
      }
    }
    if (!found) throw Error(Errc::PathUnavailable, "mode block matches no registered generator");
  }
  return mp_factorize(model, pPrime, epsPrime, path, tol);
}

MpFactorization mp_factorize(const HermiteModel& model, const MatrixXd& pPrime, const MatrixXcd& epsPrime,
                             std::span<const MpStep> path, double tol) {
  const int n = model.modes();
  if (epsPrime.rows() != epsPrime.cols()) throw Error(Errc::ShapeMismatch, "epsPrime must be square");
  if (!epsPrime.allFinite()) throw Error(Errc::NonFinite, "epsPrime has non-finite entries");
  const int work = static_cast<int>(std::lround(std::pow(static_cast<double>(epsPrime.rows()), 1.0 / n)));
  if (int_pow(work, n) != epsPrime.rows() || work < model.cutoff()) {
    throw Error(Errc::ShapeMismatch, "epsPrime size is not a working-cutoff power");
  }
  const MpCElement g = mp_path_at(n, work, path);
  if ((g.s - pPrime).cwiseAbs().maxCoeff() > 1e-9) throw Error(Errc::PathUnavailable, "path does not reach pPrime");

  const HermiteModel space(n, work);
  const std::vector<Index> cols = space.interior_indices(model.interior_bound());
  const MatrixXcd d = g.u.adjoint() * columns(epsPrime, cols);
  cd c = 0.0;
  for (std::size_t k = 0; k < cols.size(); ++k) c += d(cols[k], static_cast<Index>(k));
  c /= static_cast<double>(cols.size());
  MatrixXcd off = d;
  for (std::size_t k = 0; k < cols.size(); ++k) off(cols[k], static_cast<Index>(k)) -= c;
  const double residual = off.norm() / std::max(1.0, d.norm());
  if (!(residual <= tol)) throw Error(Errc::NotScalar, "U^{-1} epsPrime is not scalar on the interior");
  if (!(std::abs(c) > tol)) throw Error(Errc::NotScalar, "scalar vanishes");

  MpFactorization out;
  out.path.assign(path.begin(), path.end());
  for (const auto& step : path) out.pathTag += (out.pathTag.empty() ? "" : "*") + step.tag;
  out.s = g.s;
  out.u = g.u;
  out.c = c;
  out.scalarResidual = residual;
  out.ok = true;
  return out;
}

double mp_class_distance(const HermiteModel& model, const MatrixXcd& ua, cd ca, const MatrixXcd& ub, cd cb) {
  if (ua.rows() != ub.rows()) throw Error(Errc::ShapeMismatch, "elements live on different working spaces");
  const int n = model.modes();
  const int work = static_cast<int>(std::lround(std::pow(static_cast<double>(ua.rows()), 1.0 / n)));
  const std::vector<Index> cols = HermiteModel(n, work).interior_indices(model.interior_bound());
  const MatrixXcd a = columns(ua, cols);
  const MatrixXcd b = columns(ub, cols);
  const double scale = std::max(1e-300, a.norm());
  const double same = std::max((a - b).norm() / scale, std::abs(ca - cb));
  const double flip = std::max((a + b).norm() / scale, std::abs(ca + cb));
  return std::min(same, flip);
}

MpMonodromyReport mp_monodromy(const HermiteModel& model) {
  const int n = model.modes();
  const int cutoff = model.cutoff();
  const MatrixXd h = oscillator_hamiltonian(n, 0);
  auto at = [&](double t) {
    const MpStep step{h, t, "osc0"};
    return mp_path_at(n, cutoff, std::span<const MpStep>(&step, 1));
  };
  const double two_pi = 2.0 * std::numbers::pi;
  const MpCElement full = at(two_pi);
  const MpCElement half = at(std::numbers::pi);
  const MpCElement twice = at(2.0 * two_pi);
  const Index dim = full.u.rows();
  const MatrixXcd id = MatrixXcd::Identity(dim, dim);

  MpMonodromyReport r;
  r.loopClosure = (full.s - MatrixXd::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff();
  r.phaseDeviation = (full.u + id).cwiseAbs().maxCoeff();
  r.halfLoop = (half.s + MatrixXd::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff();
  r.halfSquare = (half.u * half.u + id).cwiseAbs().maxCoeff();
  r.doubled = (twice.u - id).cwiseAbs().maxCoeff();
  const double to_plus = (full.u - id).cwiseAbs().maxCoeff();
  r.monodromy = r.phaseDeviation < 1e-10 ? -1 : (to_plus < 1e-10 ? 1 : 0);
  return r;
}

}  // namespace spinc
