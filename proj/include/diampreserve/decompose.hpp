#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diampreserve/canonical_form.hpp"
#include "diampreserve/linear_map.hpp"
#include "diampreserve/witness.hpp"

namespace diampreserve {

/// Recovers (tau, sigma, t) with A = assemble(result), or throws DecompositionError.
///
/// For n >= 3 the form is read from the column-centered matrix M = quotient_project(A), whose
/// row i must be tau * (e_{sigma(i)} - 1/n); sigma(i) is the entry of largest modulus and tau
/// the gap between that entry and any other in the row. Every candidate is re-verified, so a
/// returned form always assembles to A (within `tol`).
///
/// n = 2 always returns the representative with sigma = id; n = 1 returns
/// (1, id, A_00 - 1).
CanonicalForm decompose(const LinearMap& a, const Tolerance& tol = Tolerance::exact());

enum class Verdict { Preserving, NotPreserving, DegenerateDimension, Singular };

const char* to_string(Verdict verdict);

struct FailureDetails {
  std::string reason;
  std::vector<std::size_t> indices;
  std::string message;
};

struct DiagnosticReport {
  Verdict verdict;
  /// Comparisons were made with a tolerance rather than exactly.
  bool numerical = false;
  std::optional<CanonicalForm> certificate;
  std::optional<Witness> witness;
  std::optional<FailureDetails> details;
};

struct CheckOptions {
  Tolerance tol;
  WitnessOptions witness;
};

/// Classifies A: n = 1 is DegenerateDimension (with its trivial certificate); singular maps are
/// Singular; otherwise Preserving with a certificate, or NotPreserving with a verified witness.
/// Propagates WitnessSearchExhausted if no witness is found for a non-canonical map.
DiagnosticReport check(const LinearMap& a, const CheckOptions& options = {});

}  // namespace diampreserve
