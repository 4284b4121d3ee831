#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "diampreserve/scalar.hpp"

namespace diampreserve {

/// A function on the finite space {0, ..., n-1}, stored as its n values.
/// The length is fixed at construction; real-field vectors hold only real entries.
class FunctionVector {
 public:
  FunctionVector(Field field, std::vector<Scalar> entries);

  static FunctionVector constant(Field field, std::size_t n, const Scalar& value);
  static FunctionVector zeros(Field field, std::size_t n) { return constant(field, n, Scalar()); }
  static FunctionVector ones(Field field, std::size_t n) { return constant(field, n, Scalar(1)); }

  Field field() const { return field_; }
  std::size_t size() const { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Scalar> entries() const { return entries_; }

  bool is_constant() const;
  /// sum_k coefficients_k * f_k, i.e. the functional with coefficient vector *this applied to f.
  Scalar dot(const FunctionVector& f) const;
  Scalar sum() const;

  FunctionVector& operator+=(const FunctionVector& o);
  FunctionVector& operator-=(const FunctionVector& o);
  FunctionVector& operator*=(const Scalar& c);

  friend FunctionVector operator+(FunctionVector a, const FunctionVector& b) { return a += b; }
  friend FunctionVector operator-(FunctionVector a, const FunctionVector& b) { return a -= b; }
  friend FunctionVector operator*(const Scalar& c, FunctionVector f) { return f *= c; }

  friend bool operator==(const FunctionVector& a, const FunctionVector& b) {
    return a.field_ == b.field_ && a.entries_ == b.entries_;
  }

 private:
  Field field_;
  std::vector<Scalar> entries_;
};

}  // namespace diampreserve
