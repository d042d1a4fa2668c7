#pragma once

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spinc/random.hpp"
#include "spinc/rational.hpp"
#include "spinc/spinor_rep.hpp"

namespace spinc {

using Exponent = std::vector<int>;

/// Polynomial in n variables with exact coefficients; no zero coefficients stored.
class Polynomial {
 public:
  explicit Polynomial(int n) : n_(n) {}

  int n() const { return n_; }
  const std::map<Exponent, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Exponent& e, const GaussianRational& c);
  static Polynomial monomial(int n, const Exponent& e, const GaussianRational& c = 1);

  Polynomial derivative(int j) const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const GaussianRational& s, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  int n_;
  std::map<Exponent, GaussianRational> terms_;
};

std::string monomial_str(const Exponent& e);

/// k polynomial components in n variables.
struct PolySpinor {
  int n;
  std::vector<Polynomial> components;

  static PolySpinor zero(int n, int k) { return {n, std::vector<Polynomial>(k, Polynomial(n))}; }
  friend bool operator==(const PolySpinor&, const PolySpinor&) = default;
};

/// P f = sum_j gamma_j d f / dx_j. Throws ShapeMismatch on n or k mismatch.
PolySpinor dirac_apply(const GammaRepq& rep, const PolySpinor& f);

/// Delta f = -sum_j d^2 f / dx_j^2 componentwise.
PolySpinor laplacian_apply(const PolySpinor& f);

struct SquareCheck {
  bool equal;
  /// First differing (component, monomial) when not equal.
  std::string mismatch;
};

/// Exact comparison of P(P f) with Delta f.
SquareCheck verify_square(const GammaRepq& rep, const PolySpinor& f);

/// Random spinor: each component gets up to `terms` monomials of total degree
/// <= degree with small rational Gaussian coefficients.
PolySpinor random_poly_spinor(Rng& rng, int n, int k, int degree, int terms = 6);

/// e^{i <xi, x>} v
struct PlaneWaveSpinor {
  Eigen::VectorXd xi;
  Eigen::VectorXcd v;
};

/// ||(i rho(xi))^2 v - |xi|^2 v||
double plane_wave_check(const GammaRepd& rep, const PlaneWaveSpinor& w);

}  // namespace spinc
