#include <gtest/gtest.h>

#include <random>

#include "diampreserve/decompose.hpp"
#include "diampreserve/diameter.hpp"
#include "diampreserve/errors.hpp"
#include "diampreserve/oracle.hpp"
#include "test_support.hpp"

using namespace diampreserve;
using namespace testsupport;

namespace {

LinearMap perturb(const LinearMap& a, std::mt19937_64& rng, const Rational& delta) {
  std::uniform_int_distribution<std::size_t> idx(0, a.size() - 1);
  const std::size_t i = idx(rng), j = idx(rng);
  return a.with_entry(i, j, a(i, j) + Scalar(delta));
}

DecompositionFailure failure_of(const LinearMap& a) {
  try {
    decompose(a);
  } catch (const DecompositionError& e) {
    return e.failure();
  }
  ADD_FAILURE() << "decompose unexpectedly succeeded";
  return DecompositionFailure::RowsNotConstant;
}

}  // namespace

TEST(Decompose, Identity) {
  EXPECT_EQ(decompose(LinearMap::identity(Field::Real, 3)), CanonicalForm::identity(Field::Real, 3));
}

TEST(Decompose, CyclicComplexExample) {
  const CanonicalForm f{Scalar::i(), Permutation({1, 2, 0}),
                        FunctionVector(Field::Complex, {Rational(1, 2), Rational(-1, 3), Rational(1, 4)})};
  EXPECT_EQ(decompose(assemble(f)), f);
}

TEST(Decompose, DiagonalFails) {
  const LinearMap d = real_mat({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  try {
    decompose(d);
    FAIL() << "diag(1,2,3) decomposed";
  } catch (const DecompositionError& e) {
    // M row 0 = (2/3, -2/3, -1): the largest entry is column 2, as for row 2.
    EXPECT_EQ(e.failure(), DecompositionFailure::NotAPermutation);
    EXPECT_EQ(e.indices(), (std::vector<std::size_t>{0, 2}));
  }
}

TEST(Decompose, EachFailureKindReachable) {
  // Consistent permutation, tau differs between rows.
  EXPECT_EQ(failure_of(real_mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}})), DecompositionFailure::InconsistentTau);
  // Uniform scaling: tau = 2.
  EXPECT_EQ(failure_of(LinearMap::scalar(Field::Real, 3, 2)), DecompositionFailure::TauNotUnimodular);
  // Column means, argmaxes and row gaps all look canonical; column 2 differs between rows.
  const LinearMap a = LinearMap::identity(Field::Real, 4)
                          .with_entry(0, 2, Scalar(Rational(1, 10)))
                          .with_entry(1, 2, Scalar(Rational(-1, 10)));
  EXPECT_EQ(failure_of(a), DecompositionFailure::RowsNotConstant);
  try {
    decompose(a);
  } catch (const DecompositionError& e) {
    EXPECT_EQ(e.indices(), (std::vector<std::size_t>{0, 1, 2}));
  }
}

TEST(Decompose, RoundTripBothFields) {
  std::mt19937_64 rng(101);
  for (int k = 0; k < 300; ++k) {
    const CanonicalForm f = random_form(3 + k % 8, k % 2 ? Field::Complex : Field::Real, rng);
    EXPECT_EQ(decompose(assemble(f)), f);
  }
}

TEST(Decompose, DimensionTwoRepresentative) {
  const CanonicalForm swap_form = decompose(real_mat({{0, 1}, {1, 0}}));
  EXPECT_EQ(swap_form.tau, Scalar(-1));
  EXPECT_TRUE(swap_form.sigma.is_identity());
  EXPECT_EQ(swap_form.t, FunctionVector(Field::Real, {1, 1}));

  const CanonicalForm neg = decompose(LinearMap::scalar(Field::Real, 2, -1));
  EXPECT_EQ(neg, (CanonicalForm{-1, Permutation::identity(2), FunctionVector::zeros(Field::Real, 2)}));

  std::mt19937_64 rng(103);
  for (int k = 0; k < 100; ++k) {
    const CanonicalForm f = random_form(2, k % 2 ? Field::Complex : Field::Real, rng);
    const CanonicalForm g = decompose(assemble(f));
    EXPECT_TRUE(g.sigma.is_identity());
    EXPECT_EQ(assemble(g), assemble(f));
    if (f.sigma.is_identity()) EXPECT_EQ(g, f);
  }
}

TEST(Decompose, DimensionOne) {
  const LinearMap a = LinearMap::scalar(Field::Real, 1, 5);
  const CanonicalForm f = decompose(a);
  EXPECT_EQ(f.tau, Scalar(1));
  EXPECT_EQ(f.t[0], Scalar(4));
  EXPECT_EQ(assemble(f), a);
}

TEST(Decompose, Functoriality) {
  std::mt19937_64 rng(107);
  for (int k = 0; k < 100; ++k) {
    const Field field = k % 2 ? Field::Complex : Field::Real;
    const std::size_t n = 3 + k % 5;
    const LinearMap a = assemble(random_form(n, field, rng));
    const LinearMap b = assemble(random_form(n, field, rng));
    EXPECT_EQ(decompose(naive_product(a, b)), compose(decompose(a), decompose(b)));
  }
}

TEST(Decompose, ToleranceModeAcceptsRoundedInput) {
  std::mt19937_64 rng(109);
  const Tolerance tol = Tolerance::relative(1e-9);
  for (int k = 0; k < 50; ++k) {
    const CanonicalForm f = random_form(3 + k % 5, k % 2 ? Field::Complex : Field::Real, rng);
    const LinearMap a = assemble(f);
    std::vector<Scalar> rounded;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (const Scalar& s : a.row(i)) rounded.push_back(scalar_from_complex(s.to_complex()));
    const LinearMap approx(a.field(), a.size(), std::move(rounded));
    const CanonicalForm g = decompose(approx, tol);
    EXPECT_EQ(g.sigma, f.sigma);
    EXPECT_TRUE(tol.equal(g.tau, f.tau));
    EXPECT_TRUE(approx_equal(assemble(g, tol), approx, tol));
  }
}

TEST(Check, Examples) {
  const DiagnosticReport swap = check(real_mat({{0, 1}, {1, 0}}));
  EXPECT_EQ(swap.verdict, Verdict::Preserving);
  ASSERT_TRUE(swap.certificate.has_value());
  EXPECT_EQ(assemble(*swap.certificate), real_mat({{0, 1}, {1, 0}}));

  const DiagnosticReport twice = check(LinearMap::scalar(Field::Real, 2, 2));
  EXPECT_EQ(twice.verdict, Verdict::NotPreserving);
  ASSERT_TRUE(twice.witness.has_value());
  EXPECT_EQ(twice.witness->f, FunctionVector(Field::Real, {0, 1}));
  EXPECT_EQ(twice.witness->diam_squared_before, 1);
  EXPECT_EQ(twice.witness->diam_squared_after, 4);

  EXPECT_EQ(check(LinearMap::scalar(Field::Complex, 1, 7)).verdict, Verdict::DegenerateDimension);
  EXPECT_EQ(check(real_mat({{1, 2}, {2, 4}})).verdict, Verdict::Singular);

  RandomFormOptions singular;
  singular.singular = true;
  // A singular canonical map preserves diam on every probe but is not certified.
  EXPECT_EQ(check(assemble(random_form(4, Field::Complex, 3, singular))).verdict, Verdict::Singular);
}

TEST(Check, PerturbedCanonicalIsRefuted) {
  std::mt19937_64 rng(113);
  const Rational delta(1, 1000000);
  for (int k = 0; k < 60; ++k) {
    const Field field = k % 2 ? Field::Complex : Field::Real;
    const LinearMap a = perturb(assemble(random_form(2 + k % 7, field, rng)), rng, delta);
    const DiagnosticReport r = check(a);
    ASSERT_EQ(r.verdict, Verdict::NotPreserving);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(diam_squared(r.witness->f), r.witness->diam_squared_before);
    EXPECT_EQ(diam_squared(apply(a, r.witness->f)), r.witness->diam_squared_after);
    EXPECT_NE(r.witness->diam_squared_before, r.witness->diam_squared_after);
  }
}

TEST(Check, ReportInvariants) {
  std::mt19937_64 rng(127);
  for (int k = 0; k < 80; ++k) {
    const Field field = k % 2 ? Field::Complex : Field::Real;
    const std::size_t n = 1 + k % 6;
    const LinearMap a = k % 3 == 0 ? random_matrix(field, n, rng) : assemble(random_form(n, field, rng));
    const DiagnosticReport r = check(a);
    if (r.verdict != Verdict::DegenerateDimension)
      EXPECT_EQ(r.verdict == Verdict::Preserving, r.certificate.has_value() && assemble(*r.certificate) == a);
    if (r.verdict == Verdict::NotPreserving) {
      ASSERT_TRUE(r.witness.has_value());
      EXPECT_NE(r.witness->diam_squared_before, r.witness->diam_squared_after);
    }
    EXPECT_FALSE(r.numerical);
  }
}

TEST(Check, SoundnessOfPreservingVerdict) {
  std::mt19937_64 rng(131);
  for (int k = 0; k < 10; ++k) {
    const Field field = k % 2 ? Field::Complex : Field::Real;
    const LinearMap a = assemble(random_form(3 + k % 4, field, rng));
    ASSERT_EQ(check(a).verdict, Verdict::Preserving);
    for (int p = 0; p < 1000; ++p) {
      const FunctionVector f = random_vector(field, a.size(), rng);
      ASSERT_EQ(diam_squared(apply(a, f)), diam_squared(f));
    }
  }
}

TEST(FindWitness, Examples) {
  const Witness w = find_witness(LinearMap::scalar(Field::Real, 4, 2));
  EXPECT_EQ(w.f, FunctionVector(Field::Real, {0, 1, 0, 0}));

  const LinearMap d = real_mat({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  const Witness wd = find_witness(d);
  EXPECT_NE(diam_squared(apply(d, wd.f)), diam_squared(wd.f));
  for (const Scalar& s : wd.f.entries()) EXPECT_TRUE(s == Scalar(0) || s == Scalar(1));
}

TEST(FindWitness, PerturbedMapsHaveZeroOneWitness) {
  // Oracle: enumerate every 0/1 vector directly; a witness must exist among them for real maps
  // that fail real_exact_check because A1 is nonconstant or A sends some 0/1 vector too far.
  std::mt19937_64 rng(137);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 3 + k % 4;
    const LinearMap a = perturb(assemble(random_form(n, Field::Real, rng)), rng, Rational(1, 1000000));
    bool any = false;
    for (std::uint64_t m = 1; m + 1 < (1ULL << n); ++m) {
      std::vector<Scalar> v(n);
      for (std::size_t b = 0; b < n; ++b) v[b] = Scalar(long((m >> b) & 1));
      const FunctionVector f(Field::Real, v);
      if (diam_squared(apply(a, f)) != diam_squared(f)) any = true;
    }
    const Witness w = find_witness(a);
    if (any) {
      for (const Scalar& s : w.f.entries()) EXPECT_TRUE(s == Scalar(0) || s == Scalar(1));
    }
    EXPECT_NE(diam_squared(apply(a, w.f)), diam_squared(w.f));
  }
}
