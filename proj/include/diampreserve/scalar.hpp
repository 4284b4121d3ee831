#pragma once

#include <complex>
#include <string>

#include "diampreserve/rational.hpp"

namespace diampreserve {

enum class Field { Real, Complex };

/// Exact: every equality is decided on rationals. Float: user-supplied decimals, compared with a tolerance.
enum class NumberMode { Exact, Float };

const char* to_string(Field field);
Field field_from_string(const std::string& text);

inline Field common_field(Field a, Field b) {
  return (a == Field::Complex || b == Field::Complex) ? Field::Complex : Field::Real;
}

/// A rational complex number. Real-field values have a zero imaginary part.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  /// Point on the unit circle ((1 - s^2) + 2si) / (1 + s^2); |result|^2 == 1 exactly.
  static Scalar unit_from_parameter(const Rational& s);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_real() const { return sgn(im_) == 0; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

  Rational norm2() const { return re_ * re_ + im_ * im_; }
  Scalar conj() const { return Scalar(re_, -im_); }
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

std::string to_string(const Scalar& value);
Scalar scalar_from_complex(std::complex<double> value);

/// Lexicographic on (re, im); only for use as a set/map key.
struct ScalarLess {
  bool operator()(const Scalar& a, const Scalar& b) const {
    if (a.re() != b.re()) return a.re() < b.re();
    return a.im() < b.im();
  }
};

/// Equality policy. A zero tolerance means exact comparison; otherwise values are equal when
/// they differ by at most `relative * max(1, |a|, |b|)`.
class Tolerance {
 public:
  Tolerance() = default;

  static Tolerance exact() { return {}; }
  static Tolerance relative(double rel);

  bool is_exact() const { return relative_ == 0.0; }
  double value() const { return relative_; }

  bool equal(const Rational& a, const Rational& b) const;
  bool equal(const Scalar& a, const Scalar& b) const;
  bool is_zero(const Scalar& a) const { return equal(a, Scalar()); }
  /// a <= b, allowing the same slack as equal().
  bool less_equal(const Rational& a, const Rational& b) const;

 private:
  explicit Tolerance(double rel);

  double relative_ = 0.0;
  Rational relative_q_{0};
};

}  // namespace diampreserve
