#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spinc/spin_group.hpp"
#include "spinc/spinor_rep.hpp"

namespace spinc {

/// Class [A, c] in (Spin(n) x C^x) / {(1, 1), (-1, -1)}.
struct SpinCElement {
  SpinElement a;
  std::complex<double> c;

  /// Representative whose A carries the canonical sign; c follows A.
  SpinCElement canonical() const;
};

inline SpinCElement operator*(const SpinCElement& x, const SpinCElement& y) { return {x.a * y.a, x.c * y.c}; }

/// min over s = +-1 of max(||A - s A'||, |c - s c'|); zero iff the classes agree.
double class_distance(const SpinCElement& x, const SpinCElement& y);

/// p([A, c]) = Ad_A.
inline Eigen::MatrixXd p_map(const SpinCElement& x) { return adjoint_matrix(x.a); }

/// eps([A, c]) = c rho(A).
Eigen::MatrixXcd epsilon(const SpinCElement& x, const GammaRepd& rep);

/// Image of y under the automorphism of C_n induced by R (vectors map by R,
/// blades by the product of the images of their factors).
Multivectord act_on_multivector(const Eigen::MatrixXd& r, const Multivectord& y);

/// ||rho(p(x) y) - eps(x) rho(y) eps(x)^{-1}||_F
double equivariance_residual(const GammaRepd& rep, const SpinCElement& x, const Multivectord& y);

struct ScalarFit {
  std::complex<double> c;
  /// ||M - cI||_F / max(1, ||M||_F)
  double residual;
};

/// c = trace(M) / k and the relative off-scalar residual.
ScalarFit fit_scalar(const Eigen::MatrixXcd& m);

/// c when ||M - cI|| <= tol max(1, ||M||) and |c| > tol; throws NotScalar otherwise.
std::complex<double> scalar_extract(const Eigen::MatrixXcd& m, double tol);

struct FactorizationResult {
  SpinCElement element;
  double scalarResidual;
  bool ok;
};

/// Lifts pPrime to A and extracts c from rho(A^{-1}) epsPrime = cI.
/// Throws NotScalar when the input is not a solution, NotSpecial/NotRotation
/// from the lift, ShapeMismatch on size errors.
FactorizationResult factorize(const GammaRepd& rep, const Eigen::MatrixXd& pPrime, const Eigen::MatrixXcd& epsPrime,
                              double tol = 1e-8);

struct Sample {
  std::string tag;
  Eigen::MatrixXd pPrime;
  Eigen::MatrixXcd epsPrime;
};

/// samples[product] is the group product of samples[left] and samples[right].
struct ClosureHint {
  std::size_t left;
  std::size_t right;
  std::size_t product;
};

/// Finite sample of a solution (G', p', eps').
struct SolutionInstance {
  std::string label;
  std::vector<Sample> samples;
  std::vector<ClosureHint> hints;
};

/// G' = Spin(n) with p' = Ad and eps' = rho: `count` random elements plus
/// `pairs` hinted products of two of them.
SolutionInstance spin_instance(const GammaRepd& rep, Rng& rng, int count, int pairs);

/// Only the identity.
SolutionInstance identity_instance(const GammaRepd& rep);

struct InstanceReport {
  std::size_t checked = 0;
  double worst = 0.0;
  bool pass = true;
};

/// canonical(f(g1) f(g2)) against f(g1 g2) on every hint, residual < tol.
InstanceReport homomorphism_check(const GammaRepd& rep, const SolutionInstance& inst, double tol = 1e-8);

/// Both directions of the correspondence between solutions and
/// homomorphisms: eps(f(g)) = eps'(g), p(f(g)) = p'(g), and refactorizing the
/// rebuilt pair gives the same class.
InstanceReport bijection_roundtrip(const GammaRepd& rep, const SolutionInstance& inst, double tol = 1e-8);

struct ObstructionReport {
  int monodromy;
  int doubled;
  std::string conclusion;
};

/// Monodromy of the generator loop of pi_1(SO(n)) (a full turn in the
/// (1,2)-plane) and of the doubled loop. Requires n >= 3 and steps >= 100.
ObstructionReport so_obstruction_demo(int n, int steps);

}  // namespace spinc
