#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace spinc {

using SparseMatrixcd = Eigen::SparseMatrix<std::complex<double>>;

/// Matrix of <h_a, x h_b> on the first `cutoff` orthonormal Hermite functions:
/// tridiagonal with X(a, a+1) = X(a+1, a) = sqrt((a+1)/2).
Eigen::MatrixXd ladder_position(int cutoff);

/// Matrix of <h_a, h_b'>: D(a, a+1) = sqrt((a+1)/2), D(a+1, a) = -sqrt((a+1)/2).
Eigen::MatrixXd ladder_derivative(int cutoff);

/// Truncated Hermite-basis model of the Schwartz space of R^n.
///
/// Basis vectors are products h_{l_0}(x_1) ... h_{l_{n-1}}(x_n) with
/// 0 <= l_j < cutoff, ordered with mode 0 varying slowest. Clifford
/// multiplication is rho(e_j) = i x_j and rho(e_{n+j}) = d/dx_j. Because X and
/// D move levels by one, products of two of them are exact on levels up to
/// cutoff - 3 (the interior).
class HermiteModel {
 public:
  /// Throws CutoffTooSmall when cutoff < 8.
  HermiteModel(int modes, int cutoff);

  int modes() const { return modes_; }
  int cutoff() const { return cutoff_; }
  Eigen::Index dim() const { return dim_; }
  int interior_bound() const { return cutoff_ - 3; }

  const SparseMatrixcd& xop(int j) const { return xops_[j]; }
  const SparseMatrixcd& dop(int j) const { return dops_[j]; }

  /// Indices whose levels are all <= bound (default: the interior).
  std::vector<Eigen::Index> interior_indices(int bound = -1) const;
  std::vector<int> levels(Eigen::Index index) const;

 private:
  int modes_;
  int cutoff_;
  Eigen::Index dim_;
  std::vector<SparseMatrixcd> xops_;
  std::vector<SparseMatrixcd> dops_;
};

/// sum_j y_j Xop_j + y_{n+j} Dop_j
SparseMatrixcd clifford_mult(const HermiteModel& model, std::span<const double> y);

/// J with omega(x, y) = x^T J y = sum_j x_j y_{n+j} - x_{n+j} y_j.
Eigen::MatrixXd symplectic_form(int modes);
double omega(std::span<const double> v, std::span<const double> w);

/// ||([rho(v), rho(w)] + i omega(v, w) I) P|| with P the projection onto
/// basis levels <= bound (default: the interior).
double ccr_residual(const HermiteModel& model, std::span<const double> v, std::span<const double> w, int bound = -1);

/// max |S^T J S - J|
double symplectic_residual(const Eigen::MatrixXd& s);

/// exp(t J H)
Eigen::MatrixXd sp_one_param(const Eigen::MatrixXd& h, double t);

/// Quadratic generators on mode j of an n-mode phase space.
Eigen::MatrixXd oscillator_hamiltonian(int modes, int j);
Eigen::MatrixXd squeeze_hamiltonian(int modes, int j);
Eigen::MatrixXd shear_hamiltonian(int modes, int j);

struct MpStep {
  Eigen::MatrixXd h;
  double t;
  std::string tag;
};

/// Element [A, z] of (Mp(n) x C^x)/K on the working model of cutoff
/// workCutoff: S = p(A), U = m(A), eps = z U.
///
/// U is the Kronecker product of the per-mode factors; it is only
/// materialized when M^n <= 2048 and left empty otherwise.
struct MpCElement {
  Eigen::MatrixXd s;
  std::vector<Eigen::MatrixXcd> factors;
  Eigen::MatrixXcd u;
  std::complex<double> z{1.0, 0.0};
  int workCutoff = 0;
};

/// Product g_1 g_2 ... g_k of one-parameter elements exp(t_i H_i).
///
/// The quantized generator of H is -i h with h = (1/2) z^T (J^T H J) z,
/// z = (x, p), p = -i d/dx, symmetrized in x and p, so that
/// U rho(y) U^{-1} = rho(S y). Each mode's generator is compressed exactly to
/// a working cutoff M and exponentiated. M starts at 2N and doubles until the
/// images of interior vectors have no amplitude above 1e-10 in the top
/// 8 levels. Throws UnsupportedGenerator for H coupling different
/// modes and CutoffTooSmall when M would exceed 1024.
MpCElement mp_path(const HermiteModel& model, std::span<const MpStep> steps);
MpCElement mp_one_param(const HermiteModel& model, const Eigen::MatrixXd& h, double t);

/// Same product at a fixed working cutoff.
MpCElement mp_path_at(int modes, int workCutoff, std::span<const MpStep> steps);

/// ||(eps rho(y) eps^{-1} - rho(S y)) P_int|| with eps = z U and P_int the
/// interior of `model`, evaluated in g's working space.
double mp_equivariance_residual(const HermiteModel& model, const MpCElement& g, std::span<const double> y);

struct MpFactorization {
  std::string pathTag;
  std::vector<MpStep> path;
  Eigen::MatrixXd s;
  Eigen::MatrixXcd u;
  std::complex<double> c;
  double scalarResidual;
  bool ok;
};

/// Matches each mode block of pPrime against the oscillator, squeeze and
/// shear closed forms (PathUnavailable if none fits to 1e-9), rebuilds U at
/// the working cutoff read off from epsPrime, and extracts c from
/// D = U^{-1} epsPrime on the interior (diagonal mean). Throws NotScalar when
/// D is not scalar there.
MpFactorization mp_factorize(const HermiteModel& model, const Eigen::MatrixXd& pPrime, const Eigen::MatrixXcd& epsPrime,
                             double tol = 1e-8);
/// Same with the path given instead of searched.
MpFactorization mp_factorize(const HermiteModel& model, const Eigen::MatrixXd& pPrime, const Eigen::MatrixXcd& epsPrime,
                             std::span<const MpStep> path, double tol = 1e-8);

/// min over s = +-1 of max(||(U_a - s U_b) P_int|| / ||U_a P_int||, |c_a - s c_b|).
double mp_class_distance(const HermiteModel& model, const Eigen::MatrixXcd& ua, std::complex<double> ca,
                         const Eigen::MatrixXcd& ub, std::complex<double> cb);

struct MpMonodromyReport {
  /// max |S(2 pi) - I|
  double loopClosure;
  /// max_m |U(2 pi)_mm + 1| and largest off-diagonal modulus.
  double phaseDeviation;
  /// max |S(pi) + I|
  double halfLoop;
  /// max |U(pi)^2 + I|
  double halfSquare;
  /// max |U(4 pi) - I|
  double doubled;
  int monodromy;
};

/// The oscillator loop on mode 0, t from 0 to 2 pi.
MpMonodromyReport mp_monodromy(const HermiteModel& model);

}  // namespace spinc
