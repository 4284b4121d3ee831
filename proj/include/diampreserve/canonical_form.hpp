#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "diampreserve/function_vector.hpp"
#include "diampreserve/linear_map.hpp"
#include "diampreserve/permutation.hpp"
#include "diampreserve/scalar.hpp"

namespace diampreserve {

/// The triple (tau, sigma, t) describing the map (A f)_i = tau * f_{sigma(i)} + t(f),
/// where t(f) = sum_k t_k f_k. Well-formed when |tau| = 1.
struct CanonicalForm {
  Scalar tau;
  Permutation sigma;
  FunctionVector t;

  std::size_t size() const { return t.size(); }
  Field field() const { return t.field(); }

  static CanonicalForm identity(Field field, std::size_t n);

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Throws InvalidForm when |tau|^2 != 1 (under `tol`), sizes disagree, or tau is not real
/// in a real-field form.
void validate(const CanonicalForm& form, const Tolerance& tol = Tolerance::exact());

/// A_ij = tau * [j == sigma(i)] + t_j.
LinearMap assemble(const CanonicalForm& form, const Tolerance& tol = Tolerance::exact());

struct BijectivityVerdict {
  bool invertible;
  Scalar t_of_one;
  Scalar tau;
};

/// The assembled map is invertible exactly when t(1) != -tau.
BijectivityVerdict is_bijective(const CanonicalForm& form, const Tolerance& tol = Tolerance::exact());

/// Canonical form of assemble(f) * assemble(g).
CanonicalForm compose(const CanonicalForm& f, const CanonicalForm& g);

/// Two-sided inverse; throws SingularForm when t(1) = -tau.
CanonicalForm invert(const CanonicalForm& form, const Tolerance& tol = Tolerance::exact());

struct RandomFormOptions {
  /// Force t(1) = -tau.
  bool singular = false;
  long max_numerator = 9;
  long max_denominator = 9;
  /// Bound on p and q for the circle parameter s = p/q of a complex tau.
  long max_tau_parameter = 12;
};

/// Uniform sigma; tau = +-1 (real) or a rational point of the unit circle (complex);
/// bounded rational t, resampled until invertible unless `options.singular`.
CanonicalForm random_form(std::size_t n, Field field, std::mt19937_64& rng, const RandomFormOptions& options = {});
CanonicalForm random_form(std::size_t n, Field field, std::uint64_t seed, const RandomFormOptions& options = {});

Scalar random_scalar(Field field, std::mt19937_64& rng, long max_numerator, long max_denominator);
Scalar random_unimodular(Field field, std::mt19937_64& rng, long max_parameter = 12);

}  // namespace diampreserve
