#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "diampreserve/function_vector.hpp"
#include "diampreserve/linear_map.hpp"
#include "diampreserve/rational.hpp"

namespace diampreserve {

/// A vector whose diameter changes under the map.
struct Witness {
  FunctionVector f;
  Rational diam_squared_before;
  Rational diam_squared_after;
};

/// Returns a Witness when diam^2(A f) != diam^2(f) under `tol`.
std::optional<Witness> evaluate_probe(const LinearMap& a, const FunctionVector& f,
                                      const Tolerance& tol = Tolerance::exact());

struct WitnessOptions {
  std::uint64_t seed = 0;
  /// 0/1 vectors (and their preimages) are enumerated up to this dimension.
  std::size_t zero_one_max_n = 16;
  /// {0, 1, rho} vectors are enumerated up to this dimension (complex field only).
  std::size_t circle_max_n = 8;
  std::size_t random_probes = 10000;
  std::size_t ascent_restarts = 100;
  Tolerance tol;
};

/// Searches, in order: 0/1 vectors, the all-ones vector, {0, 1, rho} vectors (complex),
/// preimages A^-1 w of those probes, random rational probes, then coordinate ascent on
/// |diam^2(Af) / diam^2(f) - 1| with exact re-verification of every candidate.
/// Throws WitnessSearchExhausted when the budget runs out.
Witness find_witness(const LinearMap& a, const WitnessOptions& options = {});

}  // namespace diampreserve
