#include "spinc/dirac.hpp"

#include <sstream>

namespace spinc {

void Polynomial::add(const Exponent& e, const GaussianRational& c) {
  if (static_cast<int>(e.size()) != n_) throw Error(Errc::ShapeMismatch, "exponent length differs from n");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial Polynomial::monomial(int n, const Exponent& e, const GaussianRational& c) {
  Polynomial p(n);
  p.add(e, c);
  return p;
}

Polynomial Polynomial::derivative(int j) const {
  Polynomial out(n_);
  for (const auto& [e, c] : terms_) {
    if (e[j] == 0) continue;
    Exponent d = e;
    --d[j];
    out.add(d, GaussianRational(e[j]) * c);
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) throw Error(Errc::ShapeMismatch, "polynomials in different variable counts");
  Polynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add(e, c);
  return out;
}

Polynomial operator*(const GaussianRational& s, const Polynomial& p) {
  Polynomial out(p.n_);
  if (s.is_zero()) return out;
  for (const auto& [e, c] : p.terms_) out.terms_.emplace(e, s * c);
  return out;
}

std::string monomial_str(const Exponent& e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (!first) os << '*';
    os << 'x' << j + 1;
    if (e[j] > 1) os << '^' << e[j];
    first = false;
  }
  return first ? "1" : os.str();
}

PolySpinor dirac_apply(const GammaRepq& rep, const PolySpinor& f) {
  const int k = rep.k();
  if (rep.n() != f.n) throw Error(Errc::ShapeMismatch, "representation and spinor differ in n");
  if (static_cast<int>(f.components.size()) != k) throw Error(Errc::ShapeMismatch, "spinor has wrong component count");
  PolySpinor out = PolySpinor::zero(f.n, k);
  for (int j = 0; j < f.n; ++j) {
    const auto& g = rep.gamma(j);
    for (int b = 0; b < k; ++b) {
      const Polynomial d = f.components[b].derivative(j);
      if (d.is_zero()) continue;
      for (int a = 0; a < k; ++a) {
        if (!g(a, b).is_zero()) out.components[a] = out.components[a] + g(a, b) * d;
      }
    }
  }
  return out;
}

PolySpinor laplacian_apply(const PolySpinor& f) {
  PolySpinor out = PolySpinor::zero(f.n, static_cast<int>(f.components.size()));
  for (std::size_t a = 0; a < f.components.size(); ++a) {
    for (int j = 0; j < f.n; ++j) {
      out.components[a] = out.components[a] + GaussianRational(-1) * f.components[a].derivative(j).derivative(j);
    }
  }
  return out;
}

SquareCheck verify_square(const GammaRepq& rep, const PolySpinor& f) {
  const PolySpinor lhs = dirac_apply(rep, dirac_apply(rep, f));
  const PolySpinor rhs = laplacian_apply(f);
  for (std::size_t a = 0; a < lhs.components.size(); ++a) {
    const Polynomial diff = lhs.components[a] + GaussianRational(-1) * rhs.components[a];
    if (!diff.is_zero()) {
      const auto& [e, c] = *diff.terms().begin();
      return {false, "component " + std::to_string(a) + ", monomial " + monomial_str(e) + ", difference " + c.str()};
    }
  }
  return {true, {}};
}

PolySpinor random_poly_spinor(Rng& rng, int n, int k, int degree, int terms) {
  PolySpinor f = PolySpinor::zero(n, k);
  for (auto& comp : f.components) {
    for (int t = 0; t < terms; ++t) {
      Exponent e(n, 0);
      const int deg = rng.uniform_int(0, degree);
      for (int d = 0; d < deg; ++d) ++e[rng.uniform_int(0, n - 1)];
      const Rational re(rng.uniform_int(-9, 9), rng.uniform_int(1, 6));
      const Rational im(rng.uniform_int(-9, 9), rng.uniform_int(1, 6));
      comp.add(e, GaussianRational(re, im));
    }
  }
  return f;
}

double plane_wave_check(const GammaRepd& rep, const PlaneWaveSpinor& w) {
  if (w.xi.size() != rep.n() || w.v.size() != rep.k()) throw Error(Errc::ShapeMismatch, "plane wave shape mismatch");
  Eigen::MatrixXcd symbol = Eigen::MatrixXcd::Zero(rep.k(), rep.k());
  for (int j = 0; j < rep.n(); ++j) symbol += std::complex<double>(0.0, w.xi(j)) * rep.gamma(j);
  const Eigen::VectorXcd lhs = symbol * (symbol * w.v);
  return (lhs - w.xi.squaredNorm() * w.v).norm();
}

}  // namespace spinc
