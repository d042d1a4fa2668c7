#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "spinc/clifford.hpp"
#include "spinc/random.hpp"

namespace spinc {

/// Even, unit-norm element of C_n (a product of an even number of unit vectors).
class SpinElement {
 public:
  /// Validates evenness, A reverse(A) = 1 to 1e-10 and the C_n form.
  explicit SpinElement(Multivectord mv);

  static SpinElement identity(int n);
  /// Skips validation; for values produced by trusted constructions.
  static SpinElement unchecked(Multivectord mv) { return SpinElement(std::move(mv), 0); }

  const Multivectord& mv() const { return mv_; }
  int n() const { return mv_.dim(); }
  /// reverse(A), which is A^{-1} for unit elements.
  SpinElement inverse() const { return unchecked(reverse(mv_)); }
  SpinElement operator-() const { return unchecked(-mv_); }
  friend SpinElement operator*(const SpinElement& a, const SpinElement& b) { return unchecked(a.mv_ * b.mv_); }

 private:
  SpinElement(Multivectord mv, int) : mv_(std::move(mv)) {}
  Multivectord mv_;
};

/// Column j holds the grade-1 coefficients of A e_j A^{-1}. Throws NotSpin
/// when conjugation leaves grade one by more than 1e-8.
Eigen::MatrixXd adjoint_matrix(const SpinElement& a);

/// Throws NotRotation unless R^T R = I to 1e-10, NotSpecial when det R < 0.
void check_rotation(const Eigen::MatrixXd& r);

/// Lift to Spin(n) by Householder factorization R = r_{v1} ... r_{vm},
/// A = v1 ... vm normalized and put in canonical sign.
SpinElement lift_rotation(const Eigen::MatrixXd& r);

/// Chooses between A and -A: the first blade (ascending mask) whose
/// coefficient has modulus > 1e-8 must have argument in (-pi/2, pi/2].
/// Blades with a vanishing real part defer to the next one.
SpinElement canonical_sign(const SpinElement& a);
/// +1 if canonical_sign keeps a, -1 if it flips it.
int canonical_flip(const Multivectord& a);

/// Lifts the discrete loop step by step, continuing with whichever of +-A is
/// nearer the previous lift, and reports +1 if the lift closes up and -1 if
/// it ends at minus its start.
/// Errors: OpenLoop when first != last, StepTooCoarse when consecutive
/// rotations are more than 0.5 apart in operator norm or a continuation is
/// not sign separable.
int path_monodromy(std::span<const Eigen::MatrixXd> loop);

/// Rotation by theta in the (p, q) coordinate plane (0-based), taking e_p
/// towards e_q. Lifts to cos(theta/2) + sin(theta/2) e_p e_q.
Eigen::MatrixXd plane_rotation(int n, int p, int q, double theta);

/// steps + 1 samples of the rotation by 2 pi turns t, t in [0, 1].
std::vector<Eigen::MatrixXd> plane_rotation_loop(int n, int p, int q, int turns, int steps);

/// Product of 2 * pairs random unit vectors.
SpinElement random_spin(Rng& rng, int n, int pairs = 0);

/// Frobenius distance between the coefficient vectors.
inline double spin_distance(const SpinElement& a, const SpinElement& b) {
  return coefficient_distance(a.mv(), b.mv());
}

}  // namespace spinc
