#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "spinc/clifford.hpp"
#include "spinc/errors.hpp"
#include "spinc/rational.hpp"

namespace spinc {

/// Matrices gamma_j = rho(e_j) of a representation of C_n^c on C^k.
///
/// The representation is extended to all blades through a table of ordered
/// products gamma_{i1} ... gamma_{ir}, built once at construction. The branch
/// tag records which of the two inequivalent irreducibles was chosen for odd
/// n; it is +1 for even n.
template <typename Scalar>
class GammaRep {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  GammaRep(std::vector<Matrix> gammas, int branch) : branch_(branch) {
    if (gammas.empty()) throw Error(Errc::InvalidArgument, "representation needs at least one generator");
    const Eigen::Index k = gammas.front().rows();
    for (const auto& g : gammas) {
      if (g.rows() != k || g.cols() != k) throw Error(Errc::ShapeMismatch, "generators must be square and equal size");
    }
    if (gammas.size() > 10) throw Error(Errc::InvalidArgument, "blade table limited to n <= 10");
    auto table = std::make_shared<std::vector<Matrix>>(std::size_t{1} << gammas.size());
    (*table)[0] = Matrix::Identity(k, k);
    for (Blade mask = 1; mask < table->size(); ++mask) {
      const int top = 31 - std::countl_zero(mask);
      (*table)[mask] = (*table)[mask & ~(Blade{1} << top)] * gammas[top];
    }
    gammas_ = std::move(gammas);
    blades_ = std::move(table);
  }

  int n() const { return static_cast<int>(gammas_.size()); }
  int k() const { return static_cast<int>(gammas_.front().rows()); }
  int branch() const { return branch_; }
  const Matrix& gamma(int j) const { return gammas_[j]; }
  const std::vector<Matrix>& gammas() const { return gammas_; }
  /// rho of a basis blade, ascending index order.
  const Matrix& blade(Blade mask) const { return (*blades_)[mask]; }

 private:
  std::vector<Matrix> gammas_;
  std::shared_ptr<const std::vector<Matrix>> blades_;
  int branch_;
};

using GammaRepd = GammaRep<std::complex<double>>;
using GammaRepq = GammaRep<GaussianRational>;

/// Deterministic irreducible representation of C_n^c, k = 2^{floor(n/2)}.
///
/// Even part: starting from k = 1, each step maps
///   gamma_j -> gamma_j (x) diag(1, -1),   and appends
///   I (x) [[0, i], [i, 0]],  I (x) [[0, 1], [-1, 0]].
/// For odd n = 2m+1 the last generator is branch * i^{m+1} * gamma_1...gamma_{2m},
/// which makes gamma_1...gamma_n = branch * i^{m+1} * (-1)^m * I.
/// All entries lie in {0, +-1, +-i}.
GammaRepd build_gamma(int n, int branch = +1);

/// The classical 2x2 triple diag(i, -i), [[0,-1],[1,0]], [[0,i],[i,0]]
/// whose ordered product is the identity.
GammaRepd classical_n3_gammas();

/// Exact copy of a representation whose entries are Gaussian integers.
GammaRepq to_exact(const GammaRepd& rep);

/// Largest entry of gamma_j gamma_l + gamma_l gamma_j + 2 delta_jl I.
double relation_error(std::span<const Eigen::MatrixXcd> gammas);
inline double relation_error(const GammaRepd& rep) { return relation_error(rep.gammas()); }

/// Algebra homomorphism C_n^c -> M_k(C) on a multivector over the C_n form.
template <typename Scalar>
typename GammaRep<Scalar>::Matrix rep_apply(const GammaRep<Scalar>& rep, const Multivector<Scalar>& x) {
  if (x.dim() != rep.n() || !x.form().is_negative_definite_unit()) {
    throw Error(Errc::FormMismatch, "rep_apply needs a multivector over the C_n form of matching n");
  }
  using Matrix = typename GammaRep<Scalar>::Matrix;
  Matrix out = Matrix::Zero(rep.k(), rep.k());
  for (const auto& [mask, coef] : x.terms()) out += rep.blade(mask) * coef;
  return out;
}

/// Dimension of {X : X gamma_j = gamma_j X for all j}; 1 certifies a scalar commutant.
int commutant_dim(std::span<const Eigen::MatrixXcd> gammas);
inline int commutant_dim(const GammaRepd& rep) { return commutant_dim(rep.gammas()); }

/// Scalar s with gamma_1 ... gamma_n = s I. Throws OddOnly for even n and
/// NotCentral when the product is not scalar to 1e-12.
std::complex<double> branch_invariant(const GammaRepd& rep);

/// Invertible T with T a_j = b_j T for all j, normalized to ||T||_F = sqrt(k)
/// with its first largest entry real positive; nullopt when the
/// solution space holds no invertible element.
std::optional<Eigen::MatrixXcd> intertwiner_solve(std::span<const Eigen::MatrixXcd> a,
                                                  std::span<const Eigen::MatrixXcd> b);
inline std::optional<Eigen::MatrixXcd> intertwiner_solve(const GammaRepd& a, const GammaRepd& b) {
  return intertwiner_solve(a.gammas(), b.gammas());
}

/// max_j ||T a_j - b_j T||_F
double intertwiner_residual(const Eigen::MatrixXcd& t, std::span<const Eigen::MatrixXcd> a,
                            std::span<const Eigen::MatrixXcd> b);

}  // namespace spinc
