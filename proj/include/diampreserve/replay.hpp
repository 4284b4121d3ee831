#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "diampreserve/decompose.hpp"
#include "diampreserve/linear_map.hpp"
#include "diampreserve/proofreplay.hpp"

namespace diampreserve {

struct ReplayStep {
  std::string name;
  bool passed;
  nlohmann::json detail;
};

/// Step-by-step replay of the necessity argument on one map. Each step records what it
/// computed and whether the finite check held; later steps still run when an earlier one fails,
/// except that nothing runs past a failed precondition.
struct ReplayTrace {
  std::size_t n;
  Field field;
  Verdict verdict;
  std::vector<ReplayStep> steps;

  bool all_passed() const;
};

struct ReplayOptions {
  IntersectionOptions intersection;
  std::size_t constancy_probes = 50;
  std::size_t additivity_family_size = 4;
  std::uint64_t seed = 0;
  CheckOptions check;
};

/// Steps, in order:
///   precondition           check(A) is Preserving and n >= 3
///   nonempty               every G({x,y}) and H(x,y,1) is nonempty
///   additivity_transport        rotated witness families add diameters before and after A, and
///                          the common aligned pair of the images lies in G({x,y})
///   disjoint               distinct pairs have disjoint G sets
///   singleton_bijection    every G is a singleton and G' permutes the pairs
///   strict_pullback        A f strict at G'({x,y}) forces f strict at {x,y}
///   intersection_transport pairs meet iff their images meet, in one point iff one point
///   point_map              g is a bijection, {g x, g y} = G'({x,y}), g = sigma^-1
///   tau                    H(x,y,1) = {(gx,gy,tau),(gy,gx,-tau)} for one common tau that
///                          matches the certificate (and is +-1 over the reals)
///   constancy              A(f o g) - tau f is the constant t(f o g) on random probes
ReplayTrace replay(const LinearMap& a, const ReplayOptions& options = {});

nlohmann::json trace_to_json(const ReplayTrace& trace);

}  // namespace diampreserve
