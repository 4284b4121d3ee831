// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero if any fails.
// Every criterion is an exact check: tolerance 0 unless stated in the line itself.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "diampreserve/decompose.hpp"
#include "diampreserve/errors.hpp"
#include "diampreserve/oracle.hpp"
#include "diampreserve/proofreplay.hpp"
#include "diampreserve/serialize.hpp"
#include "test_support.hpp"

using namespace diampreserve;
using namespace testsupport;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string summary;
  std::string first_failure;

  void fail(const std::string& why) {
    if (passed) first_failure = why;
    passed = false;
  }
};

// Real decompositions seen by criteria 1-3, checked by criterion 5.
struct RealTauLog {
  std::size_t seen = 0;
  std::size_t bad = 0;
  void record(const CanonicalForm& f) {
    if (f.field() != Field::Real) return;
    ++seen;
    if (!(f.tau == Scalar(1) || f.tau == Scalar(-1))) ++bad;
  }
} real_taus;

Field field_of(int k) { return k % 2 ? Field::Complex : Field::Real; }

Outcome round_trip() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t failures = 0;
  for (Field field : {Field::Real, Field::Complex}) {
    std::mt19937_64 rng(field == Field::Real ? 1001 : 1002);
    std::uniform_int_distribution<std::size_t> size(3, 12);
    for (int k = 0; k < 1000; ++k) {
      const CanonicalForm f = random_form(size(rng), field, rng);
      try {
        const CanonicalForm g = decompose(assemble(f));
        real_taus.record(g);
        if (!(g == f)) ++failures;
      } catch (const Error& e) {
        ++failures;
        o.fail(e.what());
      }
    }
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (failures) o.fail(std::to_string(failures) + " forms did not round-trip");
  if (seconds >= 60.0) o.fail("runtime " + std::to_string(seconds) + " s exceeds 60 s");
  std::ostringstream s;
  s << "2000 forms, n in 3..12, " << failures << " failures, " << seconds << " s (budget 60 s)";
  o.summary = s.str();
  return o;
}

Outcome sufficiency() {
  Outcome o;
  std::mt19937_64 rng(2001);
  std::size_t failures = 0;
  for (int k = 0; k < 200; ++k) {
    const Field field = field_of(k);
    const CanonicalForm f = random_form(1 + k % 10, field, rng);
    const LinearMap a = assemble(f);
    for (int p = 0; p < 100; ++p) {
      const FunctionVector v = random_vector(field, f.size(), rng);
      if (diam_squared(apply(a, v)) != diam_squared(v)) ++failures;
    }
  }
  if (failures) o.fail(std::to_string(failures) + " vectors changed diameter");
  o.summary = "200 maps x 100 vectors, " + std::to_string(failures) + " failures";
  return o;
}

LinearMap non_canonical(std::size_t n, int k, std::mt19937_64& rng) {
  for (;;) {
    LinearMap a = random_matrix(Field::Real, n, rng);
    if (k % 4 != 0) {
      // Near-canonical: one or two entries of a canonical map nudged.
      a = assemble(random_form(n, Field::Real, rng));
      std::uniform_int_distribution<std::size_t> idx(0, n - 1);
      const Rational delta = k % 4 == 1 ? Rational(1, 1000000) : k % 4 == 2 ? Rational(-1, 7) : Rational(3);
      for (int r = 0; r <= k % 2; ++r) {
        const std::size_t i = idx(rng), j = idx(rng);
        a = a.with_entry(i, j, a(i, j) + Scalar(delta));
      }
    }
    if (!leibniz_det(a).is_zero()) return a;
  }
}

Outcome oracle_agreement() {
  Outcome o;
  std::mt19937_64 rng(3001);
  std::size_t disagreements = 0, unverified = 0, canonical = 0, other = 0;
  for (int k = 0; k < 400; ++k) {
    const std::size_t n = 3 + k % 6;
    const bool make_canonical = k < 200;
    const LinearMap a = make_canonical ? assemble(random_form(n, Field::Real, rng)) : non_canonical(n, k, rng);
    CheckOptions options;
    options.witness.seed = static_cast<std::uint64_t>(k);
    const DiagnosticReport r = check(a, options);
    const bool oracle = real_exact_check(a);
    if (oracle != (r.verdict == Verdict::Preserving)) {
      ++disagreements;
      o.fail("disagreement at case " + std::to_string(k));
    }
    if (r.certificate) real_taus.record(*r.certificate);
    if (r.verdict == Verdict::NotPreserving) {
      ++other;
      if (!r.witness || diam_squared(r.witness->f) != r.witness->diam_squared_before ||
          diam_squared(apply(a, r.witness->f)) != r.witness->diam_squared_after ||
          r.witness->diam_squared_before == r.witness->diam_squared_after)
        ++unverified;
    } else {
      ++canonical;
    }
    if (make_canonical && r.verdict != Verdict::Preserving) o.fail("canonical map not certified");
  }
  if (unverified) o.fail(std::to_string(unverified) + " witnesses failed exact re-verification");
  o.summary = "400 real maps n in 3..8 (" + std::to_string(canonical) + " preserving, " + std::to_string(other) +
              " refuted), " + std::to_string(disagreements) + " disagreements";
  return o;
}

Outcome bijectivity() {
  Outcome o;
  std::mt19937_64 rng(4001);
  std::size_t failures = 0;
  for (int k = 0; k < 200; ++k) {
    const bool singular = k < 100;
    RandomFormOptions opts;
    opts.singular = singular;
    const CanonicalForm f = random_form(1 + k % 6, field_of(k), rng, opts);
    const LinearMap a = assemble(f);
    const bool det_zero = leibniz_det(a).is_zero();
    const BijectivityVerdict v = is_bijective(f);
    if (singular) {
      if (!det_zero || v.invertible || !(f.t.sum() == -f.tau)) ++failures;
      continue;
    }
    if (det_zero || !v.invertible) {
      ++failures;
      continue;
    }
    const LinearMap inv = assemble(invert(f));
    const std::optional<LinearMap> exact = inverse(a);
    const LinearMap id = LinearMap::identity(f.field(), f.size());
    if (!exact || !(inv == *exact) || !(naive_product(inv, a) == id) || !(naive_product(a, inv) == id)) ++failures;
  }
  if (failures) o.fail(std::to_string(failures) + " failures");
  o.summary = "100 singular + 100 invertible forms, n in 1..6, " + std::to_string(failures) + " failures";
  return o;
}

Outcome real_tau() {
  Outcome o;
  if (real_taus.bad) o.fail(std::to_string(real_taus.bad) + " real decompositions with tau outside {+1,-1}");
  if (real_taus.seen == 0) o.fail("no real decompositions recorded");
  o.summary = std::to_string(real_taus.seen) + " real decompositions from criteria 1-3, " +
              std::to_string(real_taus.bad) + " with tau outside {+1,-1}";
  return o;
}

FunctionVector small_entries(Field field, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> v(-2, 2);
  std::vector<Scalar> e(n);
  for (Scalar& s : e) s = field == Field::Real ? Scalar(long(v(rng))) : Scalar(Rational(v(rng)), Rational(v(rng)));
  return FunctionVector(field, std::move(e));
}

Outcome additivity() {
  Outcome o;
  std::mt19937_64 rng(6001);
  std::size_t disagreements = 0, additive = 0, float_checked = 0;
  for (int k = 0; k < 500; ++k) {
    const Field field = field_of(k);
    std::uniform_int_distribution<std::size_t> size(2, 6), count(1, 4);
    const std::size_t n = size(rng), m = count(rng);
    std::vector<FunctionVector> fs;
    // Every other family is built aligned at a random pair, then optionally spoiled.
    const bool aligned = k % 2 == 0;
    const Scalar v = random_unimodular(field, rng);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    const std::size_t x = idx(rng), y = (x + 1 + idx(rng) % (n - 1)) % n;
    for (std::size_t s = 0; s < m; ++s) {
      if (!aligned) {
        fs.push_back(small_entries(field, n, rng));
        continue;
      }
      const Scalar lambda(random_rational(rng, 5, 3) * random_rational(rng, 5, 3) + Rational(1, 8));
      std::vector<Scalar> e(n);
      for (std::size_t p = 0; p < n; ++p) {
        Scalar w = field == Field::Real ? Scalar(random_unit_interior(rng, 8))
                                        : Scalar(Rational(1, 2)) + Scalar(Rational(random_unit_interior(rng, 8) - Rational(1, 2)) / 2,
                                                                          Rational(random_unit_interior(rng, 8) - Rational(1, 2)) / 2);
        if (p == x) w = Scalar(1);
        if (p == y) w = Scalar(0);
        e[p] = lambda * v * w;
      }
      FunctionVector f(field, std::move(e));
      if (k % 6 == 2 && s == m - 1 && m > 1) f = small_entries(field, n, rng);
      fs.push_back(std::move(f));
    }
    try {
      const AdditivityResult r = check_additivity(fs);
      additive += r.diameters_add;
      if (r.alignment) {
        // Independent re-check of the returned alignment.
        for (const FunctionVector& f : fs) {
          const Scalar u = f[r.alignment->x] - f[r.alignment->y];
          if (u.norm2() != diam_squared(f)) ++disagreements;
        }
      }
      // Direct floating comparison of diam(sum) with the sum of diameters.
      FunctionVector sum = fs[0];
      double total = 0;
      for (std::size_t s = 0; s < fs.size(); ++s) {
        if (s) sum += fs[s];
        total += float_diam(fs[s]);
      }
      const double gap = total - float_diam(sum);
      if (std::abs(gap) < 1e-12 || gap > 1e-9) {
        ++float_checked;
        if ((std::abs(gap) < 1e-12) != r.diameters_add) ++disagreements;
      }
    } catch (const std::logic_error& e) {
      ++disagreements;
      o.fail(e.what());
    }
  }
  if (disagreements) o.fail(std::to_string(disagreements) + " disagreements");
  if (additive < 100 || additive > 400) o.fail("family mix degenerate: " + std::to_string(additive) + " additive");
  o.summary = "500 families, n <= 6, <= 4 summands (" + std::to_string(additive) + " additive; " +
              std::to_string(float_checked) + " also decided in doubles at 1e-12), " + std::to_string(disagreements) +
              " disagreements";
  return o;
}

Outcome proof_replay() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(7001);
  std::size_t failures = 0;
  auto fail = [&](const std::string& why) {
    ++failures;
    o.fail(why);
  };
  for (int k = 0; k < 100; ++k) {
    const Field field = field_of(k);
    const std::size_t n = 3 + k % 4;
    const CanonicalForm form = random_form(n, field, rng);
    const LinearMap a = assemble(form);
    IntersectionOptions opts;
    opts.seed = static_cast<std::uint64_t>(k) * 1000003;
    try {
      const CanonicalForm d = decompose(a);
      const Permutation g_expected = d.sigma.inverse();
      const auto pairs = compute_pair_map(a, opts);
      std::set<IndexPair> images;
      bool singletons = true;
      for (const auto& [p, image] : pairs) {
        if (image.size() != 1) singletons = false;
        else images.insert(*image.begin());
      }
      if (!singletons) {
        fail("non-singleton G at case " + std::to_string(k));
        continue;
      }
      if (images.size() != pairs.size()) fail("pair map not injective at case " + std::to_string(k));
      for (const auto& [p1, i1] : pairs)
        for (const auto& [p2, i2] : pairs)
          if (p1.intersects(p2) != i1.begin()->intersects(*i2.begin()))
            fail("disjointness not transported at case " + std::to_string(k));
      const PointMap pm = point_map_from_pairs(a, pairs, opts);
      if (!(pm.g == g_expected)) fail("g != sigma^-1 at case " + std::to_string(k));
      if (!(pm.tau == d.tau)) fail("tau mismatch at case " + std::to_string(k));
      for (int p = 0; p < 50; ++p) {
        const FunctionVector f = random_vector(field, n, rng);
        if (!check_constancy(a, d, f) || !(constancy_residual(a, d, f)[0] == d.t.dot(compose(f, pm.g))))
          fail("constancy fails at case " + std::to_string(k));
      }
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (seconds >= 600.0) o.fail("runtime exceeds 10 min");
  std::ostringstream s;
  s << "100 maps, n in 3..6, both fields, 50 constancy probes each, " << failures << " failures, " << seconds
    << " s (budget 600 s)";
  o.summary = s.str();
  return o;
}

Outcome degenerate() {
  Outcome o;
  std::mt19937_64 rng(8001);
  for (int k = 0; k < 50; ++k) {
    const LinearMap a = k == 0 ? LinearMap::zero(Field::Real, 1) : random_matrix(field_of(k), 1, rng);
    const Verdict v = check(a).verdict;
    if (v != Verdict::DegenerateDimension) o.fail("n = 1 map not reported degenerate");
  }
  struct Case {
    LinearMap a;
    const char* expected;
  };
  const Case cases[] = {
      {real_mat({{0, 1}, {1, 0}}),
       R"({"certificate":{"field":"real","n":2,"schema":"diampreserve/1","sigma":[0,1],"t":["1","1"],"tau":{"im":"0","re":"-1"}},"field":"real","n":2,"numerical":false,"schema":"diampreserve/1","verdict":"preserving"})"},
      {real_mat({{-1, 0}, {0, -1}}),
       R"({"certificate":{"field":"real","n":2,"schema":"diampreserve/1","sigma":[0,1],"t":["0","0"],"tau":{"im":"0","re":"-1"}},"field":"real","n":2,"numerical":false,"schema":"diampreserve/1","verdict":"preserving"})"},
  };
  for (const Case& c : cases) {
    const DiagnosticReport r1 = check(c.a);
    const DiagnosticReport r2 = check(c.a);
    const std::string j1 = report_to_json(r1, 2, Field::Real, NumberMode::Exact).dump();
    const std::string j2 = report_to_json(r2, 2, Field::Real, NumberMode::Exact).dump();
    if (r1.verdict != Verdict::Preserving || !r1.certificate || !r1.certificate->sigma.is_identity())
      o.fail("n = 2 map not certified with the sigma = id representative");
    if (j1 != j2 || j1 != c.expected) o.fail("n = 2 report not byte-stable: " + j1);
  }
  o.summary = "50 maps at n = 1 degenerate; swap and -identity certified (sigma = id) with pinned JSON";
  return o;
}

Outcome group_laws() {
  Outcome o;
  std::mt19937_64 rng(9001);
  std::size_t failures = 0;
  for (int k = 0; k < 300; ++k) {
    const Field field = field_of(k);
    const std::size_t n = 1 + k % 8;
    const CanonicalForm a = random_form(n, field, rng);
    const CanonicalForm b = random_form(n, field, rng);
    const CanonicalForm c = random_form(n, field, rng);
    const CanonicalForm id = CanonicalForm::identity(field, n);
    if (!(compose(compose(a, b), c) == compose(a, compose(b, c)))) ++failures;
    const CanonicalForm ai = invert(a);
    if (!(compose(a, ai) == id) || !(compose(ai, a) == id)) ++failures;
  }
  std::size_t functor_failures = 0;
  for (int k = 0; k < 200; ++k) {
    const Field field = field_of(k);
    const std::size_t n = 3 + k % 8;
    const LinearMap a = assemble(random_form(n, field, rng));
    const LinearMap b = assemble(random_form(n, field, rng));
    if (!(decompose(naive_product(a, b)) == compose(decompose(a), decompose(b)))) ++functor_failures;
  }
  if (failures) o.fail(std::to_string(failures) + " associativity/inverse failures");
  if (functor_failures) o.fail(std::to_string(functor_failures) + " functoriality failures");
  o.summary = "300 triples (associativity, two-sided inverse), 200 pairs (functoriality), " +
              std::to_string(failures + functor_failures) + " failures";
  return o;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const Entry entries[] = {
      {1, "round-trip identity", round_trip},
      {2, "preservation sufficiency", sufficiency},
      {3, "oracle agreement (real)", oracle_agreement},
      {4, "bijectivity criterion", bijectivity},
      {5, "real-field tau in {+1,-1}", real_tau},
      {6, "additivity equivalence", additivity},
      {7, "proof replay", proof_replay},
      {8, "degenerate dimensions", degenerate},
      {9, "group laws", group_laws},
  };
  int failed = 0;
  for (const Entry& e : entries) {
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o.fail(std::string("uncaught exception: ") + ex.what());
    }
    std::printf("%s criterion %d: %s: %s\n", o.passed ? "PASS" : "FAIL", e.id, e.name, o.summary.c_str());
    if (!o.passed) {
      std::printf("     first failure: %s\n", o.first_failure.c_str());
      ++failed;
    }
    std::fflush(stdout);
  }
  std::printf("%d/9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
