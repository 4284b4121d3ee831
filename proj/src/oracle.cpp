#include "diampreserve/oracle.hpp"

#include "diampreserve/errors.hpp"

namespace diampreserve {

bool for_each_zero_one_probe(std::size_t n, Field field, const ProbeVisitor& visit) {
  if (n < 2) return false;
  if (n >= 63) throw DimensionCapExceeded("0/1 enumeration is limited to n < 63");
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  const std::uint64_t total = half << 1;
  std::vector<Scalar> entries(n);
  for (std::uint64_t m = 1; m + 1 < total; ++m) {
    for (std::size_t i = 1; i < n; ++i) entries[i] = Scalar(static_cast<long>((m >> (i - 1)) & 1));
    entries[0] = Scalar(static_cast<long>((m >> (n - 1)) & 1));
    if (visit(FunctionVector(field, entries))) return true;
  }
  return false;
}

Scalar circle_probe_point() { return Scalar(Rational(33, 65), Rational(56, 65)); }

bool for_each_circle_probe(std::size_t n, const ProbeVisitor& visit) {
  if (n < 2) return false;
  const Scalar values[3] = {Scalar(), Scalar(1), circle_probe_point()};
  std::vector<std::size_t> digits(n, 0);
  std::vector<Scalar> entries(n);
  for (;;) {
    // Increment the base-3 counter over coordinates 1..n-1.
    std::size_t k = 1;
    while (k < n && digits[k] == 2) digits[k++] = 0;
    if (k == n) return false;
    ++digits[k];
    for (std::size_t i = 0; i < n; ++i) entries[i] = values[digits[i]];
    if (visit(FunctionVector(Field::Complex, entries))) return true;
  }
}

ProbeFamily zero_one_family(std::size_t n, Field field) {
  ProbeFamily family{ProbeKind::ZeroOne, {}, std::nullopt};
  for_each_zero_one_probe(n, field, [&](const FunctionVector& f) {
    family.probes.push_back(f);
    return false;
  });
  return family;
}

ProbeFamily rational_circle_family(std::size_t n) {
  ProbeFamily family{ProbeKind::RationalCircle, {}, std::nullopt};
  for_each_circle_probe(n, [&](const FunctionVector& f) {
    family.probes.push_back(f);
    return false;
  });
  return family;
}

ProbeFamily random_family(std::size_t n, Field field, std::size_t count, std::uint64_t seed) {
  ProbeFamily family{ProbeKind::Random, {}, seed};
  if (n < 2) return family;
  std::mt19937_64 rng(seed);
  family.probes.reserve(count);
  while (family.probes.size() < count) {
    std::vector<Scalar> entries(n);
    for (Scalar& s : entries) s = random_scalar(field, rng, 9, 9);
    FunctionVector f(field, std::move(entries));
    if (!f.is_constant()) family.probes.push_back(std::move(f));
  }
  return family;
}

std::optional<Witness> probe_check(const LinearMap& a, const ProbeFamily& family, const Tolerance& tol) {
  for (const FunctionVector& f : family.probes)
    if (auto w = evaluate_probe(a, f, tol)) return w;
  return std::nullopt;
}

namespace {

// max over nonconstant 0/1 vectors v of diam^2(A v) <= 1, walking a Gray code so that each
// step adds or removes a single column.
bool zero_one_images_within_unit(const LinearMap& a) {
  const std::size_t n = a.size();
  std::vector<Rational> acc(n, Rational(0));
  const std::uint64_t total = std::uint64_t{1} << n;
  std::uint64_t previous = 0;
  for (std::uint64_t m = 1; m < total; ++m) {
    const std::uint64_t gray = m ^ (m >> 1);
    const std::uint64_t flipped = gray ^ previous;
    const std::size_t col = static_cast<std::size_t>(__builtin_ctzll(flipped));
    const bool added = (gray & flipped) != 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (added) acc[i] += a(i, col).re();
      else acc[i] -= a(i, col).re();
    }
    previous = gray;
    if (gray == total - 1) continue;  // the all-ones vector is constant
    const Rational* lo = &acc[0];
    const Rational* hi = &acc[0];
    for (const Rational& r : acc) {
      if (r < *lo) lo = &r;
      if (r > *hi) hi = &r;
    }
    if (*hi - *lo > 1) return false;
  }
  return true;
}

}  // namespace

bool real_exact_check(const LinearMap& a, std::size_t max_n) {
  if (a.field() != Field::Real) throw FieldMismatch("real_exact_check needs a real map");
  const std::size_t n = a.size();
  if (n > max_n || n >= 63)
    throw DimensionCapExceeded("real_exact_check is capped at n = " + std::to_string(max_n));
  const std::optional<LinearMap> inv = inverse(a);
  if (!inv) throw SingularMatrix("real_exact_check needs an invertible map");
  if (n == 1) return true;
  if (!apply(a, FunctionVector::ones(Field::Real, n)).is_constant()) return false;
  return zero_one_images_within_unit(a) && zero_one_images_within_unit(*inv);
}

PairMap brute_force_pair_map(const LinearMap& a, const IntersectionOptions& options) {
  if (a.size() > 8) throw DimensionCapExceeded("brute_force_pair_map is capped at n = 8");
  return compute_pair_map(a, options);
}

}  // namespace diampreserve
