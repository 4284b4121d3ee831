#include "diampreserve/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "diampreserve/errors.hpp"

namespace diampreserve {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const std::size_t v = images_[i];
    if (v >= images_.size() || seen[v])
      throw InvalidForm("not a permutation: image of " + std::to_string(i) + " is " + std::to_string(v));
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::random(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw DimensionMismatch("permutation sizes differ");
  std::vector<std::size_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = next(images_[i]);
  return Permutation(std::move(out));
}

FunctionVector compose(const FunctionVector& f, const Permutation& p) {
  if (f.size() != p.size()) throw DimensionMismatch("vector and permutation sizes differ");
  std::vector<Scalar> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[p(i)];
  return FunctionVector(f.field(), std::move(out));
}

LinearMap permutation_matrix(Field field, const Permutation& p, const Scalar& scale) {
  const std::size_t n = p.size();
  std::vector<Scalar> flat(n * n);
  for (std::size_t i = 0; i < n; ++i) flat[i * n + p(i)] = scale;
  return LinearMap(scale.is_real() ? field : Field::Complex, n, std::move(flat));
}

}  // namespace diampreserve
