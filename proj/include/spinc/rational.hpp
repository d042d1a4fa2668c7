#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <Eigen/Core>

namespace spinc {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always stored reduced with a positive denominator. Arithmetic goes through
/// 128-bit intermediates; a result that does not fit back into 64 bits throws
/// Error(Errc::Overflow) instead of wrapping.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design of the number tower
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Exact conversion; only integral doubles in int64 range are accepted.
  static Rational from_integral_double(double value);

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  friend bool operator==(const Rational& a, const Rational& b) = default;

  std::string str() const;

 private:
  static Rational reduce(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Exact complex number re + i*im over the rationals.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(std::int64_t re) : re_(re) {}  // NOLINT
  GaussianRational(Rational re, Rational im = Rational()) : re_(re), im_(im) {}  // NOLINT

  /// Exact conversion of a complex double whose parts are integers.
  static GaussianRational from_gaussian_integer(const std::complex<double>& z);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
  GaussianRational conj() const { return {re_, -im_}; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

  std::string str() const;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);
std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

inline bool is_negligible(const GaussianRational& z) { return z.is_zero(); }
inline bool is_negligible(const std::complex<double>& z) { return std::abs(z) < 1e-14; }

template <typename Scalar>
Scalar scalar_from_real(double value);

template <>
inline std::complex<double> scalar_from_real<std::complex<double>>(double value) {
  return {value, 0.0};
}

template <>
inline GaussianRational scalar_from_real<GaussianRational>(double value) {
  return GaussianRational(Rational::from_integral_double(value));
}

}  // namespace spinc

namespace Eigen {

template <>
struct NumTraits<spinc::GaussianRational> : GenericNumTraits<spinc::GaussianRational> {
  using Real = spinc::GaussianRational;
  using NonInteger = spinc::GaussianRational;
  using Nested = spinc::GaussianRational;
  using Literal = spinc::GaussianRational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 16,
    MulCost = 32
  };
};

}  // namespace Eigen
