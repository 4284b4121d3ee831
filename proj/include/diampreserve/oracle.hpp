#pragma once

// Checkers that do not rely on the canonical-form characterization. They are the ground
// truth that decompose() and check() are validated against.
//
// The complex field has no finite extreme-point family (the diameter-at-most-one body is not a
// polytope there), so only refutation probes are offered for it; an exact complex decision
// needs the characterization itself.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "diampreserve/diameter.hpp"
#include "diampreserve/linear_map.hpp"
#include "diampreserve/proofreplay.hpp"
#include "diampreserve/witness.hpp"

namespace diampreserve {

enum class ProbeKind { ZeroOne, RationalCircle, Random };

struct ProbeFamily {
  ProbeKind kind;
  std::vector<FunctionVector> probes;
  std::optional<std::uint64_t> seed;
};

/// Visitor returns true to stop the enumeration.
using ProbeVisitor = std::function<bool(const FunctionVector&)>;

/// The 2^n - 2 nonconstant 0/1 vectors: first those with f_0 = 0 (coordinates 1..n-1 read
/// little-endian from a counter), then their complements. Returns true if the visitor stopped.
bool for_each_zero_one_probe(std::size_t n, Field field, const ProbeVisitor& visit);

/// The rational point (33 + 56i)/65 of the unit circle, within 0.02 of e^{i pi/3}.
Scalar circle_probe_point();

/// Nonconstant vectors with f_0 = 0 and other entries in {0, 1, rho}, rho = circle_probe_point().
bool for_each_circle_probe(std::size_t n, const ProbeVisitor& visit);

ProbeFamily zero_one_family(std::size_t n, Field field = Field::Real);
ProbeFamily rational_circle_family(std::size_t n);
/// `count` nonconstant vectors with entries p/q, |p| <= 9, 1 <= q <= 9.
ProbeFamily random_family(std::size_t n, Field field, std::size_t count, std::uint64_t seed);

/// First probe whose diameter changes under A. One-sided: nullopt proves nothing.
std::optional<Witness> probe_check(const LinearMap& a, const ProbeFamily& family,
                                   const Tolerance& tol = Tolerance::exact());

/// Exact decision for real invertible maps. {f : diam f <= 1} is the unit cube plus the
/// constants, so A preserves diam iff A maps constants to constants and both A and A^-1 send
/// every 0/1 vector to a vector of diameter at most 1.
/// Throws FieldMismatch for complex maps, SingularMatrix if A is singular and
/// DimensionCapExceeded above `max_n`.
bool real_exact_check(const LinearMap& a, std::size_t max_n = 16);

using PairMap = std::map<IndexPair, PairSet>;

/// G({i,j}) for every pair, each as the stabilized intersection of S(A f) over Urysohn-style
/// witnesses f with {i,j} in S(f). Requires n <= 8.
PairMap brute_force_pair_map(const LinearMap& a, const IntersectionOptions& options = {});

}  // namespace diampreserve
