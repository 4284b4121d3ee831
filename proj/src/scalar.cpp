#include "diampreserve/scalar.hpp"

#include <cmath>

#include "diampreserve/errors.hpp"

namespace diampreserve {

const char* to_string(Field field) { return field == Field::Real ? "real" : "complex"; }

Field field_from_string(const std::string& text) {
  if (text == "real") return Field::Real;
  if (text == "complex") return Field::Complex;
  throw ParseError("unknown field '" + text + "' (expected real or complex)");
}

const char* to_string(DecompositionFailure failure) {
  switch (failure) {
    case DecompositionFailure::NotAPermutation: return "NotAPermutation";
    case DecompositionFailure::InconsistentTau: return "InconsistentTau";
    case DecompositionFailure::TauNotUnimodular: return "TauNotUnimodular";
    case DecompositionFailure::RowsNotConstant: return "RowsNotConstant";
  }
  return "Unknown";
}

Scalar Scalar::unit_from_parameter(const Rational& s) {
  const Rational s2 = s * s;
  const Rational den = 1 + s2;
  return Scalar(Rational((1 - s2) / den), Rational(2 * s / den));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const Rational n = o.norm2();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string to_string(const Scalar& value) {
  if (value.is_real()) return format_rational(value.re());
  return format_rational(value.re()) + (sgn(value.im()) < 0 ? "" : "+") + format_rational(value.im()) + "i";
}

Scalar scalar_from_complex(std::complex<double> value) {
  return Scalar(rational_from_double(value.real()), rational_from_double(value.imag()));
}

Tolerance::Tolerance(double rel) : relative_(rel), relative_q_(rational_from_double(rel)) {}

Tolerance Tolerance::relative(double rel) {
  if (!(rel >= 0.0) || !std::isfinite(rel)) throw std::invalid_argument("tolerance must be finite and nonnegative");
  return Tolerance(rel);
}

namespace {

Rational max_abs_or_one(const Rational& a, const Rational& b) {
  Rational m = abs(a);
  if (abs(b) > m) m = abs(b);
  if (m < 1) m = 1;
  return m;
}

}  // namespace

bool Tolerance::equal(const Rational& a, const Rational& b) const {
  if (is_exact()) return a == b;
  return abs(a - b) <= relative_q_ * max_abs_or_one(a, b);
}

bool Tolerance::equal(const Scalar& a, const Scalar& b) const {
  if (is_exact()) return a == b;
  const Rational scale = max_abs_or_one(a.norm2(), b.norm2());
  return (a - b).norm2() <= relative_q_ * relative_q_ * scale;
}

bool Tolerance::less_equal(const Rational& a, const Rational& b) const {
  if (is_exact()) return a <= b;
  return a <= b + relative_q_ * max_abs_or_one(a, b);
}

}  // namespace diampreserve
