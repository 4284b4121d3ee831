#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "diampreserve/function_vector.hpp"
#include "diampreserve/scalar.hpp"

namespace diampreserve {

/// Square n x n matrix over the rational reals or complexes, stored row-major.
class LinearMap {
 public:
  LinearMap(Field field, std::size_t n, std::vector<Scalar> row_major);

  /// Throws DimensionMismatch unless `rows` is square and nonempty.
  static LinearMap from_rows(Field field, const std::vector<std::vector<Scalar>>& rows);
  static LinearMap identity(Field field, std::size_t n) { return scalar(field, n, Scalar(1)); }
  static LinearMap zero(Field field, std::size_t n);
  static LinearMap scalar(Field field, std::size_t n, const Scalar& c);

  Field field() const { return field_; }
  std::size_t size() const { return n_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::span<const Scalar> row(std::size_t i) const { return {entries_.data() + i * n_, n_}; }
  FunctionVector row_vector(std::size_t i) const;
  FunctionVector column_vector(std::size_t j) const;

  LinearMap with_entry(std::size_t i, std::size_t j, const Scalar& value) const;

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  Field field_;
  std::size_t n_;
  std::vector<Scalar> entries_;
};

/// (A f)_i = sum_j A_ij f_j.
FunctionVector apply(const LinearMap& a, const FunctionVector& f);

LinearMap multiply(const LinearMap& a, const LinearMap& b);

/// Subtracts from every column its mean, so that each column of the result sums to zero.
LinearMap quotient_project(const LinearMap& a);

/// Exact determinant by fraction-field Gaussian elimination.
Scalar determinant(const LinearMap& a);

/// Exact inverse, or nullopt when the determinant is zero.
std::optional<LinearMap> inverse(const LinearMap& a);

/// Singular under `tol`: exactly when the determinant is 0, or, with a tolerance, when
/// |det| <= tol * (Hadamard bound of A).
bool is_singular(const LinearMap& a, const Tolerance& tol);

bool approx_equal(const LinearMap& a, const LinearMap& b, const Tolerance& tol);

}  // namespace diampreserve
