#include "diampreserve/linear_map.hpp"

#include "diampreserve/errors.hpp"

namespace diampreserve {

LinearMap::LinearMap(Field field, std::size_t n, std::vector<Scalar> row_major)
    : field_(field), n_(n), entries_(std::move(row_major)) {
  if (n_ == 0) throw DimensionMismatch("matrix must be at least 1x1");
  if (entries_.size() != n_ * n_) throw DimensionMismatch("matrix entry count is not n*n");
  if (field_ == Field::Real) {
    for (const Scalar& s : entries_)
      if (!s.is_real()) throw FieldMismatch("complex entry in a real matrix");
  }
}

LinearMap LinearMap::from_rows(Field field, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw DimensionMismatch("matrix has no rows");
  std::vector<Scalar> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw DimensionMismatch("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                              " entries, expected " + std::to_string(n));
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return LinearMap(field, n, std::move(flat));
}

LinearMap LinearMap::zero(Field field, std::size_t n) {
  return LinearMap(field, n, std::vector<Scalar>(n * n));
}

LinearMap LinearMap::scalar(Field field, std::size_t n, const Scalar& c) {
  std::vector<Scalar> flat(n * n);
  for (std::size_t i = 0; i < n; ++i) flat[i * n + i] = c;
  return LinearMap(field, n, std::move(flat));
}

FunctionVector LinearMap::row_vector(std::size_t i) const {
  auto r = row(i);
  return FunctionVector(field_, std::vector<Scalar>(r.begin(), r.end()));
}

FunctionVector LinearMap::column_vector(std::size_t j) const {
  std::vector<Scalar> col(n_);
  for (std::size_t i = 0; i < n_; ++i) col[i] = (*this)(i, j);
  return FunctionVector(field_, std::move(col));
}

LinearMap LinearMap::with_entry(std::size_t i, std::size_t j, const Scalar& value) const {
  std::vector<Scalar> flat = entries_;
  flat[i * n_ + j] = value;
  return LinearMap(value.is_real() ? field_ : Field::Complex, n_, std::move(flat));
}

FunctionVector apply(const LinearMap& a, const FunctionVector& f) {
  const std::size_t n = a.size();
  if (f.size() != n)
    throw DimensionMismatch("cannot apply a " + std::to_string(n) + "x" + std::to_string(n) +
                            " map to a vector of length " + std::to_string(f.size()));
  std::vector<Scalar> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Scalar acc;
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j).is_zero() || f[j].is_zero()) continue;
      acc += a(i, j) * f[j];
    }
    out[i] = std::move(acc);
  }
  return FunctionVector(common_field(a.field(), f.field()), std::move(out));
}

LinearMap multiply(const LinearMap& a, const LinearMap& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DimensionMismatch("matrix sizes differ");
  std::vector<Scalar> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b(k, j).is_zero()) continue;
        out[i * n + j] += a(i, k) * b(k, j);
      }
    }
  return LinearMap(common_field(a.field(), b.field()), n, std::move(out));
}

LinearMap quotient_project(const LinearMap& a) {
  const std::size_t n = a.size();
  const Scalar inv_n(Rational(1, n));
  std::vector<Scalar> out(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    Scalar mean;
    for (std::size_t i = 0; i < n; ++i) mean += a(i, j);
    mean *= inv_n;
    for (std::size_t i = 0; i < n; ++i) out[i * n + j] = a(i, j) - mean;
  }
  return LinearMap(a.field(), n, std::move(out));
}

namespace {

// Row-reduces `work` (n x width, row-major) to echelon form in place; returns the determinant
// of the leading n x n block. When `reduce` is set, continues to reduced row echelon form.
Scalar eliminate(std::vector<Scalar>& work, std::size_t n, std::size_t width, bool reduce) {
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work[pivot * width + col].is_zero()) ++pivot;
    if (pivot == n) return Scalar();
    if (pivot != col) {
      for (std::size_t j = 0; j < width; ++j) std::swap(work[pivot * width + j], work[col * width + j]);
      det = -det;
    }
    const Scalar p = work[col * width + col];
    det *= p;
    if (reduce) {
      for (std::size_t j = col; j < width; ++j) work[col * width + j] /= p;
    }
    for (std::size_t r = reduce ? 0 : col + 1; r < n; ++r) {
      if (r == col || work[r * width + col].is_zero()) continue;
      const Scalar factor = reduce ? work[r * width + col] : work[r * width + col] / p;
      for (std::size_t j = col; j < width; ++j) {
        if (work[col * width + j].is_zero()) continue;
        work[r * width + j] -= factor * work[col * width + j];
      }
    }
  }
  return det;
}

}  // namespace

Scalar determinant(const LinearMap& a) {
  const std::size_t n = a.size();
  std::vector<Scalar> work(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) work[i * n + j] = a(i, j);
  return eliminate(work, n, n, false);
}

std::optional<LinearMap> inverse(const LinearMap& a) {
  const std::size_t n = a.size();
  const std::size_t width = 2 * n;
  std::vector<Scalar> work(n * width);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) work[i * width + j] = a(i, j);
    work[i * width + n + i] = Scalar(1);
  }
  if (eliminate(work, n, width, true).is_zero()) return std::nullopt;
  std::vector<Scalar> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = work[i * width + n + j];
  return LinearMap(a.field(), n, std::move(out));
}

bool is_singular(const LinearMap& a, const Tolerance& tol) {
  const Scalar det = determinant(a);
  if (tol.is_exact()) return det.is_zero();
  Rational bound2(1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational row2(0);
    for (const Scalar& s : a.row(i)) row2 += s.norm2();
    bound2 *= row2;
  }
  const Rational t = rational_from_double(tol.value());
  return det.norm2() <= t * t * bound2;
}

bool approx_equal(const LinearMap& a, const LinearMap& b, const Tolerance& tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!tol.equal(a(i, j), b(i, j))) return false;
  return true;
}

}  // namespace diampreserve
