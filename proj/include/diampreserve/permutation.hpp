#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "diampreserve/function_vector.hpp"
#include "diampreserve/linear_map.hpp"

namespace diampreserve {

/// A bijection of {0, ..., n-1}, stored as its image list.
class Permutation {
 public:
  /// Throws InvalidForm unless `images` is a bijection of {0, ..., images.size()-1}.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);
  static Permutation random(std::size_t n, std::mt19937_64& rng);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }
  bool is_identity() const;

  Permutation inverse() const;
  /// i -> next(this(i)).
  Permutation then(const Permutation& next) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// (f o p)_i = f_{p(i)}.
FunctionVector compose(const FunctionVector& f, const Permutation& p);

/// The matrix with `scale` at (i, p(i)) and zeros elsewhere, so that P f = f o p.
LinearMap permutation_matrix(Field field, const Permutation& p, const Scalar& scale = Scalar(1));

}  // namespace diampreserve
