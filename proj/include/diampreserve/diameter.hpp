#pragma once

#include <compare>
#include <cstddef>
#include <set>

#include "diampreserve/function_vector.hpp"
#include "diampreserve/rational.hpp"

namespace diampreserve {

/// Unordered pair {first, second} of distinct indices, stored with first < second.
struct IndexPair {
  std::size_t first;
  std::size_t second;

  static IndexPair of(std::size_t a, std::size_t b);

  bool contains(std::size_t k) const { return first == k || second == k; }
  bool intersects(const IndexPair& o) const { return contains(o.first) || contains(o.second); }

  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

using PairSet = std::set<IndexPair>;

/// The diameter max |f_i - f_j|. Only the square is exact; equality logic must use squared().
class Diameter {
 public:
  explicit Diameter(Rational squared) : squared_(std::move(squared)) {}

  const Rational& squared() const { return squared_; }
  double approx() const;

 private:
  Rational squared_;
};

Diameter diam(const FunctionVector& f);

inline Rational diam_squared(const FunctionVector& f) { return diam(f).squared(); }

/// All pairs {i, j} with |f_i - f_j|^2 == diam(f)^2 under `tol`; empty exactly when f is constant.
PairSet achieving_pairs(const FunctionVector& f, const Tolerance& tol = Tolerance::exact());

}  // namespace diampreserve
