#include "diampreserve/decompose.hpp"

#include "diampreserve/errors.hpp"

namespace diampreserve {

namespace {

CanonicalForm decompose_one(const LinearMap& a) {
  return {Scalar(1), Permutation::identity(1), FunctionVector(a.field(), {a(0, 0) - Scalar(1)})};
}

void require_unimodular(const Scalar& tau, const Tolerance& tol) {
  if (!tol.equal(tau.norm2(), Rational(1)))
    throw DecompositionError(DecompositionFailure::TauNotUnimodular, {0},
                             "recovered tau " + to_string(tau) + " has |tau|^2 = " + format_rational(tau.norm2()));
}

// At n = 2 the swap is -id plus a rank-one term, so sigma = id always admits a representation.
CanonicalForm decompose_two(const LinearMap& a, const Tolerance& tol) {
  const Scalar tau = a(0, 0) - a(1, 0);
  if (!tol.equal(a(1, 1) - a(0, 1), tau))
    throw DecompositionError(DecompositionFailure::InconsistentTau, {0, 1},
                             "row differences " + to_string(tau) + " and " + to_string(a(1, 1) - a(0, 1)) +
                                 " disagree");
  require_unimodular(tau, tol);
  FunctionVector t(a.field(), {a(1, 0), a(1, 1) - tau});
  return {tau, Permutation::identity(2), std::move(t)};
}

}  // namespace

CanonicalForm decompose(const LinearMap& a, const Tolerance& tol) {
  const std::size_t n = a.size();
  if (n == 1) return decompose_one(a);
  if (n == 2) return decompose_two(a, tol);

  const LinearMap m = quotient_project(a);
  std::vector<std::size_t> images(n);
  std::vector<Scalar> taus(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t best = 0;
    Rational best_norm = m(i, 0).norm2();
    for (std::size_t j = 1; j < n; ++j) {
      Rational v = m(i, j).norm2();
      if (v > best_norm) {
        best = j;
        best_norm = std::move(v);
      }
    }
    images[i] = best;
    const std::size_t other = best == 0 ? 1 : 0;
    taus[i] = m(i, best) - m(i, other);
  }

  std::vector<std::size_t> claimed_by(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (claimed_by[images[i]] != n)
      throw DecompositionError(DecompositionFailure::NotAPermutation, {claimed_by[images[i]], i},
                               "rows " + std::to_string(claimed_by[images[i]]) + " and " + std::to_string(i) +
                                   " both select column " + std::to_string(images[i]));
    claimed_by[images[i]] = i;
  }
  for (std::size_t i = 1; i < n; ++i)
    if (!tol.equal(taus[i], taus[0]))
      throw DecompositionError(DecompositionFailure::InconsistentTau, {0, i},
                               "row 0 gives tau = " + to_string(taus[0]) + " but row " + std::to_string(i) +
                                   " gives " + to_string(taus[i]));
  const Scalar& tau = taus[0];
  require_unimodular(tau, tol);
  if (a.field() == Field::Real && !tau.is_real())
    throw DecompositionError(DecompositionFailure::TauNotUnimodular, {0}, "complex tau for a real map");

  Permutation sigma(std::move(images));
  // t is row 0 of A - tau P; every other row must agree with it.
  std::vector<Scalar> t(a.row(0).begin(), a.row(0).end());
  t[sigma(0)] -= tau;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar v = a(i, j);
      if (j == sigma(i)) v -= tau;
      if (!tol.equal(v, t[j]))
        throw DecompositionError(DecompositionFailure::RowsNotConstant, {0, i, j},
                                 "rows 0 and " + std::to_string(i) + " of A - tau P differ in column " +
                                     std::to_string(j));
    }
  return {tau, std::move(sigma), FunctionVector(a.field(), std::move(t))};
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Preserving: return "preserving";
    case Verdict::NotPreserving: return "not_preserving";
    case Verdict::DegenerateDimension: return "degenerate_dimension";
    case Verdict::Singular: return "singular";
  }
  return "unknown";
}

DiagnosticReport check(const LinearMap& a, const CheckOptions& options) {
  const Tolerance& tol = options.tol;
  DiagnosticReport report{Verdict::NotPreserving};
  report.numerical = !tol.is_exact();

  if (a.size() == 1) {
    report.verdict = Verdict::DegenerateDimension;
    report.certificate = decompose(a, tol);
    report.details = FailureDetails{"dimension_one", {}, "every map on a one-point space preserves the zero diameter"};
    return report;
  }
  if (is_singular(a, tol)) {
    report.verdict = Verdict::Singular;
    report.details = FailureDetails{"singular", {}, "the map is not a bijection"};
    return report;
  }

  try {
    CanonicalForm form = decompose(a, tol);
    if (approx_equal(assemble(form, tol), a, tol)) {
      report.verdict = Verdict::Preserving;
      report.certificate = std::move(form);
      return report;
    }
    report.details = FailureDetails{"AssemblyMismatch", {}, "recovered form does not reassemble to the input"};
  } catch (const DecompositionError& e) {
    report.details = FailureDetails{to_string(e.failure()), e.indices(), e.what()};
  }

  WitnessOptions witness_options = options.witness;
  witness_options.tol = tol;
  report.witness = find_witness(a, witness_options);
  return report;
}

}  // namespace diampreserve
