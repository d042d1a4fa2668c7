#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spinc/errors.hpp"
#include "spinc/rational.hpp"

namespace spinc {

/// Basis blade e_{i1} e_{i2} ... e_{ir} (i1 < ... < ir) encoded as the bit mask
/// with bits i1..ir set. Bit 0 is e_1.
using Blade = std::uint32_t;

inline int grade(Blade b) { return std::popcount(b); }

/// Diagonal symmetric bilinear form B(e_j, e_j) = d_j on an orthogonal basis.
class BilinearForm {
 public:
  explicit BilinearForm(std::vector<double> diag) : diag_(std::move(diag)) {
    if (diag_.empty() || diag_.size() > 24) {
      throw Error(Errc::InvalidArgument, "form dimension must be in [1, 24]");
    }
    for (std::size_t j = 0; j < diag_.size(); ++j) {
      if (diag_[j] == 0.0) throw Error(Errc::InvalidArgument, "degenerate forms are not supported");
      if (diag_[j] == -1.0) negative_ |= std::uint32_t{1} << j;
      unit_ = unit_ && std::abs(diag_[j]) == 1.0;
    }
  }

  /// The form -<,> on R^n used for C_n.
  static BilinearForm negative_definite(int n) { return BilinearForm(std::vector<double>(n, -1.0)); }

  int dim() const { return static_cast<int>(diag_.size()); }
  double diag(int j) const { return diag_[j]; }
  const std::vector<double>& diagonal() const { return diag_; }
  bool is_negative_definite_unit() const {
    return std::all_of(diag_.begin(), diag_.end(), [](double d) { return d == -1.0; });
  }

  /// All d_j are +-1; then the bits of negative_mask() carry the metric.
  bool is_unit() const { return unit_; }
  std::uint32_t negative_mask() const { return negative_; }

  friend bool operator==(const BilinearForm& a, const BilinearForm& b) { return a.diag_ == b.diag_; }

 private:
  std::vector<double> diag_;
  std::uint32_t negative_ = 0;
  bool unit_ = true;
};

struct BladeProduct {
  Blade mask;
  double factor;
};

/// Product of two basis blades: the result blade is the symmetric difference;
/// the factor collects one sign per transposition needed to sort the
/// concatenated indices and d_j for every index the blades share.
inline BladeProduct blade_mul(Blade a, Blade b, const BilinearForm& form) {
  // Only the parity of the swap count matters, so the words can be xor-ed.
  Blade acc = 0;
  for (Blade s = a >> 1; s != 0; s >>= 1) acc ^= s & b;
  if (form.is_unit()) acc ^= a & b & form.negative_mask();
  int swaps = std::popcount(acc);
  if (form.is_unit()) return {a ^ b, (swaps & 1) ? -1.0 : 1.0};
  double factor = (swaps & 1) ? -1.0 : 1.0;
  for (Blade common = a & b; common != 0; common &= common - 1) {
    factor *= form.diag(std::countr_zero(common));
  }
  return {a ^ b, factor};
}

/// Sign (-1)^{r(r-1)/2} picked up by a grade-r blade under reversion.
inline int reverse_sign(Blade b) {
  const int r = grade(b);
  return ((r * (r - 1) / 2) & 1) ? -1 : 1;
}

/// Element of Cl(V, B) stored as a sorted list of (blade, coefficient) terms.
///
/// Terms are kept in ascending mask order with structural zeros removed
/// (exact zero for exact scalars, |c| < 1e-14 for complex doubles), so two
/// equal multivectors have identical term lists.
template <typename Scalar>
class Multivector {
 public:
  using Term = std::pair<Blade, Scalar>;

  explicit Multivector(BilinearForm form) : form_(std::move(form)) {}

  Multivector(BilinearForm form, std::vector<Term> terms) : form_(std::move(form)) {
    const Blade limit = Blade{1} << form_.dim();
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& [mask, coef] : terms) {
      if (mask >= limit) throw Error(Errc::InvalidArgument, "blade mask exceeds dimension");
      if (!terms_.empty() && terms_.back().first == mask) {
        terms_.back().second += coef;
      } else {
        terms_.emplace_back(mask, coef);
      }
    }
    prune();
  }

  static Multivector scalar(const BilinearForm& form, const Scalar& value) {
    return Multivector(form, {{Blade{0}, value}});
  }
  static Multivector blade(const BilinearForm& form, Blade mask, const Scalar& value = Scalar(1)) {
    return Multivector(form, {{mask, value}});
  }
  /// Basis vector e_{j+1} (0-based j).
  static Multivector basis(const BilinearForm& form, int j) { return blade(form, Blade{1} << j); }
  /// Grade-1 element sum_j v_j e_{j+1}.
  static Multivector vector(const BilinearForm& form, std::span<const double> v) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < v.size(); ++j) terms.emplace_back(Blade{1} << j, scalar_from_real<Scalar>(v[j]));
    return Multivector(form, std::move(terms));
  }

  const BilinearForm& form() const { return form_; }
  int dim() const { return form_.dim(); }
  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(Blade mask) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                               [](const Term& t, Blade m) { return t.first < m; });
    return (it != terms_.end() && it->first == mask) ? it->second : Scalar(0);
  }

  Multivector operator-() const {
    Multivector r(form_);
    r.terms_.reserve(terms_.size());
    for (const auto& [mask, coef] : terms_) r.terms_.emplace_back(mask, -coef);
    return r;
  }

  friend Multivector operator+(const Multivector& x, const Multivector& y) { return merge(x, y, false); }
  friend Multivector operator-(const Multivector& x, const Multivector& y) { return merge(x, y, true); }

  friend Multivector operator*(const Multivector& x, const Scalar& s) {
    Multivector r(x.form_);
    r.terms_.reserve(x.terms_.size());
    for (const auto& [mask, coef] : x.terms_) r.terms_.emplace_back(mask, coef * s);
    r.prune();
    return r;
  }
  friend Multivector operator*(const Scalar& s, const Multivector& x) { return x * s; }

  friend Multivector operator*(const Multivector& x, const Multivector& y) {
    check_forms(x, y);
    const int n = x.dim();
    Multivector r(x.form_);
    if (x.terms_.empty() || y.terms_.empty()) return r;
    const std::size_t size = std::size_t{1} << n;
    if (n <= 12 || size <= 4 * x.terms_.size() * y.terms_.size()) {
      std::vector<Scalar> acc(size, Scalar(0));
      std::vector<char> used(size, 0);
      for (const auto& [ma, ca] : x.terms_) {
        for (const auto& [mb, cb] : y.terms_) {
          const BladeProduct p = blade_mul(ma, mb, x.form_);
          if (p.factor == 1.0) {
            acc[p.mask] += ca * cb;
          } else if (p.factor == -1.0) {
            acc[p.mask] -= ca * cb;
          } else {
            acc[p.mask] += ca * cb * scalar_from_real<Scalar>(p.factor);
          }
          used[p.mask] = 1;
        }
      }
      for (std::size_t m = 0; m < size; ++m) {
        if (used[m]) r.terms_.emplace_back(static_cast<Blade>(m), acc[m]);
      }
    } else {
      std::map<Blade, Scalar> acc;
      for (const auto& [ma, ca] : x.terms_) {
        for (const auto& [mb, cb] : y.terms_) {
          const BladeProduct p = blade_mul(ma, mb, x.form_);
          auto [it, inserted] = acc.try_emplace(p.mask, Scalar(0));
          it->second += ca * cb * scalar_from_real<Scalar>(p.factor);
        }
      }
      for (auto& [mask, coef] : acc) r.terms_.emplace_back(mask, coef);
    }
    r.prune();
    return r;
  }

  friend bool operator==(const Multivector& x, const Multivector& y) {
    return x.form_ == y.form_ && x.terms_ == y.terms_;
  }

 private:
  static void check_forms(const Multivector& x, const Multivector& y) {
    if (!(x.form_ == y.form_)) throw Error(Errc::FormMismatch, "multivectors over different forms");
  }

  static Multivector merge(const Multivector& x, const Multivector& y, bool subtract) {
    check_forms(x, y);
    Multivector r(x.form_);
    r.terms_.reserve(x.terms_.size() + y.terms_.size());
    auto a = x.terms_.begin();
    auto b = y.terms_.begin();
    while (a != x.terms_.end() || b != y.terms_.end()) {
      if (b == y.terms_.end() || (a != x.terms_.end() && a->first < b->first)) {
        r.terms_.push_back(*a++);
      } else if (a == x.terms_.end() || b->first < a->first) {
        r.terms_.emplace_back(b->first, subtract ? -b->second : b->second);
        ++b;
      } else {
        r.terms_.emplace_back(a->first, subtract ? a->second - b->second : a->second + b->second);
        ++a;
        ++b;
      }
    }
    r.prune();
    return r;
  }

  void prune() {
    std::erase_if(terms_, [](const Term& t) { return is_negligible(t.second); });
  }

  BilinearForm form_;
  std::vector<Term> terms_;
};

using Multivectord = Multivector<std::complex<double>>;
using Multivectorq = Multivector<GaussianRational>;

template <typename Scalar>
Multivector<Scalar> mv_mul(const Multivector<Scalar>& x, const Multivector<Scalar>& y) {
  return x * y;
}

/// Reversion: the anti-automorphism fixing vectors.
template <typename Scalar>
Multivector<Scalar> reverse(const Multivector<Scalar>& x) {
  std::vector<typename Multivector<Scalar>::Term> terms;
  terms.reserve(x.terms().size());
  for (const auto& [mask, coef] : x.terms()) {
    terms.emplace_back(mask, reverse_sign(mask) > 0 ? coef : -coef);
  }
  return Multivector<Scalar>(x.form(), std::move(terms));
}

template <typename Scalar>
std::set<int> grades(const Multivector<Scalar>& x) {
  std::set<int> out;
  for (const auto& term : x.terms()) out.insert(grade(term.first));
  return out;
}

template <typename Scalar>
Multivector<Scalar> grade_part(const Multivector<Scalar>& x, int r) {
  std::vector<typename Multivector<Scalar>::Term> terms;
  for (const auto& term : x.terms()) {
    if (grade(term.first) == r) terms.push_back(term);
  }
  return Multivector<Scalar>(x.form(), std::move(terms));
}

template <typename Scalar>
bool is_even(const Multivector<Scalar>& x) {
  return std::all_of(x.terms().begin(), x.terms().end(),
                     [](const auto& t) { return grade(t.first) % 2 == 0; });
}

/// Euclidean norm of the coefficient vector.
inline double coefficient_norm(const Multivectord& x) {
  double s = 0.0;
  for (const auto& term : x.terms()) s += std::norm(term.second);
  return std::sqrt(s);
}

inline double coefficient_distance(const Multivectord& x, const Multivectord& y) {
  return coefficient_norm(x - y);
}

nlohmann::json to_json(const Multivectord& x);
Multivectord multivector_from_json(const nlohmann::json& j);

}  // namespace spinc
