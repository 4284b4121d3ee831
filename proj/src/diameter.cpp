#include "diampreserve/diameter.hpp"

#include <cmath>
#include <stdexcept>

namespace diampreserve {

IndexPair IndexPair::of(std::size_t a, std::size_t b) {
  if (a == b) throw std::invalid_argument("an index pair needs two distinct indices");
  return a < b ? IndexPair{a, b} : IndexPair{b, a};
}

double Diameter::approx() const { return std::sqrt(squared_.get_d()); }

namespace {

bool all_real(const FunctionVector& f) {
  for (const Scalar& s : f.entries())
    if (!s.is_real()) return false;
  return true;
}

}  // namespace

Diameter diam(const FunctionVector& f) {
  if (all_real(f)) {
    const Rational* lo = &f[0].re();
    const Rational* hi = lo;
    for (const Scalar& s : f.entries()) {
      if (s.re() < *lo) lo = &s.re();
      if (s.re() > *hi) hi = &s.re();
    }
    Rational d = *hi - *lo;
    return Diameter(d * d);
  }
  Rational best(0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      Rational d2 = (f[i] - f[j]).norm2();
      if (d2 > best) best = std::move(d2);
    }
  return Diameter(std::move(best));
}

PairSet achieving_pairs(const FunctionVector& f, const Tolerance& tol) {
  PairSet out;
  const Rational d2 = diam(f).squared();
  if (tol.is_exact() ? sgn(d2) == 0 : tol.equal(d2, Rational(0))) return out;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (tol.equal((f[i] - f[j]).norm2(), d2)) out.insert({i, j});
  return out;
}

}  // namespace diampreserve
