#include "spinc/spinor_rep.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include "spinc/linalg.hpp"

namespace spinc {

using Eigen::MatrixXcd;
using cd = std::complex<double>;

namespace {

constexpr cd kI{0.0, 1.0};

cd i_power(int p) {
  static constexpr cd table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[((p % 4) + 4) % 4];
}

}  // namespace

GammaRepd build_gamma(int n, int branch) {
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be positive");
  if (branch != 1 && branch != -1) throw Error(Errc::InvalidArgument, "branch must be +1 or -1");

  MatrixXcd chir(2, 2), a(2, 2), b(2, 2);
  chir << 1, 0, 0, -1;
  a << 0, kI, kI, 0;
  b << 0, 1, -1, 0;

  std::vector<MatrixXcd> gammas;
  Eigen::Index k = 1;
  for (int step = 0; step < n / 2; ++step) {
    for (auto& g : gammas) g = Eigen::kroneckerProduct(g, chir).eval();
    const MatrixXcd id = MatrixXcd::Identity(k, k);
    gammas.push_back(Eigen::kroneckerProduct(id, a));
    gammas.push_back(Eigen::kroneckerProduct(id, b));
    k *= 2;
  }
  if (n % 2 == 1) {
    const int m = n / 2;
    MatrixXcd prod = MatrixXcd::Identity(k, k);
    for (const auto& g : gammas) prod = prod * g;
    gammas.push_back(static_cast<double>(branch) * i_power(m + 1) * prod);
    return GammaRepd(std::move(gammas), branch);
  }
  return GammaRepd(std::move(gammas), +1);
}

GammaRepd classical_n3_gammas() {
  MatrixXcd g1(2, 2), g2(2, 2), g3(2, 2);
  g1 << kI, 0, 0, -kI;
  g2 << 0, -1, 1, 0;
  g3 << 0, kI, kI, 0;
  return GammaRepd({g1, g2, g3}, +1);
}

GammaRepq to_exact(const GammaRepd& rep) {
  std::vector<GammaRepq::Matrix> out;
  out.reserve(rep.n());
  for (const auto& g : rep.gammas()) {
    GammaRepq::Matrix q(g.rows(), g.cols());
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      for (Eigen::Index j = 0; j < g.cols(); ++j) q(i, j) = GaussianRational::from_gaussian_integer(g(i, j));
    }
    out.push_back(std::move(q));
  }
  return GammaRepq(std::move(out), rep.branch());
}

double relation_error(std::span<const MatrixXcd> gammas) {
  double worst = 0.0;
  for (std::size_t j = 0; j < gammas.size(); ++j) {
    const Eigen::Index k = gammas[j].rows();
    for (std::size_t l = j; l < gammas.size(); ++l) {
      MatrixXcd r = gammas[j] * gammas[l] + gammas[l] * gammas[j];
      if (j == l) r += 2.0 * MatrixXcd::Identity(k, k);
      worst = std::max(worst, linalg::max_abs(r));
    }
  }
  return worst;
}

int commutant_dim(std::span<const MatrixXcd> gammas) {
  return linalg::gram_nullity(linalg::intertwining_gram(gammas, gammas));
}

cd branch_invariant(const GammaRepd& rep) {
  if (rep.n() % 2 == 0) throw Error(Errc::OddOnly, "branch invariant is defined for odd n only");
  const MatrixXcd& prod = rep.blade((Blade{1} << rep.n()) - 1);
  const cd s = prod.trace() / static_cast<double>(rep.k());
  const double off = linalg::max_abs(prod - s * MatrixXcd::Identity(rep.k(), rep.k()));
  if (off > 1e-12) throw Error(Errc::NotCentral, "gamma_1...gamma_n is not a scalar matrix");
  return s;
}

double intertwiner_residual(const MatrixXcd& t, std::span<const MatrixXcd> a, std::span<const MatrixXcd> b) {
  double worst = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) worst = std::max(worst, (t * a[j] - b[j] * t).norm());
  return worst;
}

std::optional<MatrixXcd> intertwiner_solve(std::span<const MatrixXcd> a, std::span<const MatrixXcd> b) {
  if (a.size() != b.size()) throw Error(Errc::ShapeMismatch, "representations of different n");
  const Eigen::Index k = a.front().rows();
  if (b.front().rows() != k) return std::nullopt;

  const MatrixXcd basis = linalg::gram_nullspace(linalg::intertwining_gram(a, b));
  if (basis.cols() == 0) return std::nullopt;

  auto unvec = [k](const Eigen::VectorXcd& v) { return MatrixXcd(Eigen::Map<const MatrixXcd>(v.data(), k, k)); };
  std::vector<MatrixXcd> candidates;
  for (Eigen::Index c = 0; c < basis.cols(); ++c) candidates.push_back(unvec(basis.col(c)));
  if (basis.cols() > 1) {
    Eigen::VectorXcd mix = Eigen::VectorXcd::Zero(basis.rows());
    for (Eigen::Index c = 0; c < basis.cols(); ++c) mix += basis.col(c) / static_cast<double>(c + 1);
    candidates.push_back(unvec(mix));
  }

  for (MatrixXcd t : candidates) {
    Eigen::JacobiSVD<MatrixXcd> svd(t);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= 1e-8 * sv(0)) continue;
    t *= std::sqrt(static_cast<double>(k)) / t.norm();
    // fix the phase on the first entry of maximal modulus
    const double top = t.cwiseAbs().maxCoeff();
    for (Eigen::Index idx = 0; idx < t.size(); ++idx) {
      const cd e = t(idx % k, idx / k);
      if (std::abs(e) >= top * (1.0 - 1e-12)) {
        t *= std::conj(e) / std::abs(e);
        break;
      }
    }
    return t;
  }
  return std::nullopt;
}

}  // namespace spinc
