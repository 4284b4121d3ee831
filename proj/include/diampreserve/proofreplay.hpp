#pragma once

// Finite-space versions of the sets used to characterize diameter preservers:
//   S(f)  pairs {i,j} at which f attains its diameter      (achieving_pairs, diameter.hpp)
//   T(f)  ordered triples (i, j, f_i - f_j) over those pairs (triple_set)
//   G     intersection of S(A f) over all f with {i,j} in S(f)
//   H     intersection of T(A f) over all f with (i,j,u) in T(f)
// The intersections over all f are replaced by intersections over fresh Urysohn-style
// witnesses until the result has not changed for a fixed number of consecutive rounds.
// Constant f has empty S(f) and T(f) here, and constant functions are never used as witnesses.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <variant>
#include <vector>

#include "diampreserve/canonical_form.hpp"
#include "diampreserve/diameter.hpp"
#include "diampreserve/linear_map.hpp"

namespace diampreserve {

struct Triple {
  std::size_t i;
  std::size_t j;
  Scalar u;

  friend bool operator==(const Triple&, const Triple&) = default;
};

struct TripleLess {
  bool operator()(const Triple& a, const Triple& b) const {
    if (a.i != b.i) return a.i < b.i;
    if (a.j != b.j) return a.j < b.j;
    return ScalarLess{}(a.u, b.u);
  }
};

using TripleSet = std::set<Triple, TripleLess>;

/// All (i, j, f_i - f_j) with {i,j} achieving the diameter; closed under (i,j,u) -> (j,i,-u).
TripleSet triple_set(const FunctionVector& f, const Tolerance& tol = Tolerance::exact());

/// Exact test of sqrt(lhs_squared) == sum_k sqrt(terms_squared[k]) for nonnegative rationals.
/// Square roots of positive rationals whose ratios are not rational squares are linearly
/// independent over Q, so equality forces every nonzero term into the class of the left side.
bool sqrt_sum_equals(const Rational& lhs_squared, std::span<const Rational> terms_squared);

/// An ordered pair (x, y) with f_k(x) - f_k(y) = diam(f_k) * v for every k, where
/// v = direction / |direction|.
struct Alignment {
  std::size_t x;
  std::size_t y;
  Scalar direction;
};

struct AdditivityResult {
  /// diam(f_1 + ... + f_m) == diam(f_1) + ... + diam(f_m), decided exactly.
  bool diameters_add;
  /// A common aligned pair, when one exists. Oriented so that direction has positive real
  /// part (or zero real and positive imaginary part).
  std::optional<Alignment> alignment;
};

/// Evaluates both sides of the additivity criterion independently and throws
/// std::logic_error if they disagree. Requires n >= 2.
AdditivityResult check_additivity(std::span<const FunctionVector> fs);

using WitnessTarget = std::variant<IndexPair, Triple>;

/// Whether f witnesses the target: {i,j} in S(f), or (i,j,u) in T(f).
bool witnesses_target(const FunctionVector& f, const WitnessTarget& target);

/// Produces witnesses for a pair or triple target. The first member is the strict one
/// (f_i = 1, f_j = 0, other entries 1/2, rotated so that f_i - f_j = u for triples); later
/// members are translated, rotated and scaled copies whose other entries lie strictly inside
/// the disk with diameter [f_j, f_i], so the target is the only achieving pair.
class WitnessGenerator {
 public:
  WitnessGenerator(std::size_t n, Field field, WitnessTarget target, std::uint64_t seed);

  FunctionVector next();

 private:
  Scalar random_interior();

  std::size_t n_;
  Field field_;
  WitnessTarget target_;
  std::mt19937_64 rng_;
  bool strict_emitted_ = false;
};

struct WitnessFamily {
  WitnessTarget target;
  std::vector<FunctionVector> members;
};

WitnessFamily witness_family(std::size_t n, Field field, const WitnessTarget& target, std::size_t count,
                             std::uint64_t seed);

struct IntersectionOptions {
  /// Consecutive unchanged rounds required before the intersection is accepted.
  std::size_t stable_rounds = 20;
  std::size_t max_rounds = 1000;
  std::uint64_t seed = 0;
};

/// G({i,j}) as a stabilized finite-witness intersection. Throws IntersectionUnstable.
PairSet compute_G(const LinearMap& a, const IndexPair& pair, const IntersectionOptions& options = {});

/// H(i, j, u), u != 0, as a stabilized finite-witness intersection. Throws IntersectionUnstable.
TripleSet compute_H(const LinearMap& a, const Triple& target, const IntersectionOptions& options = {});

/// compute_G for every pair.
std::map<IndexPair, PairSet> compute_pair_map(const LinearMap& a, const IntersectionOptions& options = {});

struct PointMap {
  Permutation g;
  Scalar tau;
};

/// g(x) is the common point of G'({x,y1}) and G'({x,y2}), y1 < y2 the two smallest indices
/// other than x; tau is read from H(0, 1, 1) = {(g0, g1, tau), (g1, g0, -tau)}.
/// Requires n >= 3. Throws NonSingletonG when some G, or the point intersection, is not a
/// singleton, or g is not a bijection.
PointMap point_map_from_pairs(const LinearMap& a, const std::map<IndexPair, PairSet>& pairs,
                              const IntersectionOptions& options = {});
PointMap compute_g_and_tau(const LinearMap& a, const IntersectionOptions& options = {});

/// A (f o g) - tau f with g = sigma^-1 of `form`.
FunctionVector constancy_residual(const LinearMap& a, const CanonicalForm& form, const FunctionVector& f);

/// Whether constancy_residual(a, form, f) is a constant vector (exactly).
bool check_constancy(const LinearMap& a, const CanonicalForm& form, const FunctionVector& f);

}  // namespace diampreserve
