#include "diampreserve/proofreplay.hpp"

#include <algorithm>
#include <stdexcept>

#include "diampreserve/errors.hpp"

namespace diampreserve {

TripleSet triple_set(const FunctionVector& f, const Tolerance& tol) {
  TripleSet out;
  for (const IndexPair& p : achieving_pairs(f, tol)) {
    Scalar u = f[p.first] - f[p.second];
    out.insert({p.second, p.first, -u});
    out.insert({p.first, p.second, std::move(u)});
  }
  return out;
}

bool sqrt_sum_equals(const Rational& lhs_squared, std::span<const Rational> terms_squared) {
  if (sgn(lhs_squared) < 0) throw std::invalid_argument("negative squared value");
  Rational total(0);
  for (const Rational& b : terms_squared) {
    if (sgn(b) < 0) throw std::invalid_argument("negative squared value");
    if (sgn(b) == 0) continue;
    if (sgn(lhs_squared) == 0) return false;
    const std::optional<Rational> ratio = exact_sqrt(Rational(b / lhs_squared));
    if (!ratio) return false;
    total += *ratio;
  }
  return sgn(lhs_squared) == 0 ? true : total == 1;
}

namespace {

// u and ref are positive real multiples of each other.
bool same_phase(const Scalar& u, const Scalar& ref) {
  const Scalar p = u * ref.conj();
  return p.is_real() && sgn(p.re()) > 0;
}

bool has_positive_orientation(const Scalar& d) {
  return sgn(d.re()) > 0 || (sgn(d.re()) == 0 && sgn(d.im()) > 0);
}

std::optional<Alignment> find_alignment(std::span<const FunctionVector> fs, std::span<const Rational> lambda2) {
  const std::size_t n = fs.front().size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      std::optional<Scalar> ref;
      bool ok = true;
      for (std::size_t k = 0; k < fs.size() && ok; ++k) {
        const Scalar u = fs[k][x] - fs[k][y];
        if (u.norm2() != lambda2[k]) {
          ok = false;
        } else if (!u.is_zero()) {
          if (!ref) ref = u;
          else ok = same_phase(u, *ref);
        }
      }
      if (!ok) continue;
      Scalar direction = ref.value_or(Scalar(1));
      if (has_positive_orientation(direction)) return Alignment{x, y, std::move(direction)};
      return Alignment{y, x, -direction};
    }
  return std::nullopt;
}

}  // namespace

AdditivityResult check_additivity(std::span<const FunctionVector> fs) {
  if (fs.empty()) throw std::invalid_argument("check_additivity needs at least one function");
  const std::size_t n = fs.front().size();
  if (n < 2) throw std::invalid_argument("check_additivity needs at least two points");
  FunctionVector sum = fs.front();
  std::vector<Rational> lambda2;
  lambda2.reserve(fs.size());
  lambda2.push_back(diam_squared(fs.front()));
  for (std::size_t k = 1; k < fs.size(); ++k) {
    if (fs[k].size() != n) throw DimensionMismatch("functions of different lengths");
    sum += fs[k];
    lambda2.push_back(diam_squared(fs[k]));
  }

  AdditivityResult result{sqrt_sum_equals(diam_squared(sum), lambda2), find_alignment(fs, lambda2)};
  if (result.diameters_add != result.alignment.has_value())
    throw std::logic_error("diameter additivity and phase alignment disagree");
  return result;
}

bool witnesses_target(const FunctionVector& f, const WitnessTarget& target) {
  if (const auto* pair = std::get_if<IndexPair>(&target)) return achieving_pairs(f).contains(*pair);
  return triple_set(f).contains(std::get<Triple>(target));
}

WitnessGenerator::WitnessGenerator(std::size_t n, Field field, WitnessTarget target, std::uint64_t seed)
    : n_(n), field_(field), target_(std::move(target)), rng_(seed) {
  const auto [i, j] = std::visit(
      [](const auto& t) -> std::pair<std::size_t, std::size_t> {
        if constexpr (std::is_same_v<std::decay_t<decltype(t)>, IndexPair>) return {t.first, t.second};
        else return {t.i, t.j};
      },
      target_);
  if (i >= n || j >= n || i == j) throw std::invalid_argument("witness target indices out of range");
  if (const auto* triple = std::get_if<Triple>(&target_)) {
    if (triple->u.is_zero()) throw std::invalid_argument("triple target needs u != 0");
    if (field_ == Field::Real && !triple->u.is_real()) throw FieldMismatch("complex u for a real witness family");
    if (!triple->u.is_real()) field_ = Field::Complex;
  }
}

Scalar WitnessGenerator::random_interior() {
  if (field_ == Field::Real) return Scalar(random_unit_interior(rng_, 16));
  // Open disk of radius 1/2 about 1/2: every point is closer than 1 to both 0 and 1,
  // and any two points are closer than 1 to each other.
  const Rational half(1, 2);
  for (;;) {
    Rational a = random_unit_interior(rng_, 16);
    Rational b = random_unit_interior(rng_, 16) - half;
    if ((a - half) * (a - half) + b * b < Rational(1, 4)) return Scalar(std::move(a), std::move(b));
  }
}

FunctionVector WitnessGenerator::next() {
  std::size_t i = 0, j = 0;
  Scalar u, base;
  if (const auto* pair = std::get_if<IndexPair>(&target_)) {
    i = pair->first;
    j = pair->second;
    u = Scalar(1);
    if (strict_emitted_) {
      // S(f) is invariant under translation, rotation and positive scaling.
      u = random_unimodular(field_, rng_) * Scalar(random_unit_interior(rng_, 8) * 4);
      base = random_scalar(field_, rng_, 9, 9);
    }
  } else {
    const Triple& t = std::get<Triple>(target_);
    i = t.i;
    j = t.j;
    u = t.u;
    if (strict_emitted_) base = random_scalar(field_, rng_, 9, 9);
  }
  std::vector<Scalar> entries(n_);
  for (std::size_t k = 0; k < n_; ++k) {
    if (k == i) entries[k] = base + u;
    else if (k == j) entries[k] = base;
    else entries[k] = base + u * (strict_emitted_ ? random_interior() : Scalar(Rational(1, 2)));
  }
  strict_emitted_ = true;
  Field field = field_;
  for (const Scalar& s : entries)
    if (!s.is_real()) field = Field::Complex;
  return FunctionVector(field, std::move(entries));
}

WitnessFamily witness_family(std::size_t n, Field field, const WitnessTarget& target, std::size_t count,
                             std::uint64_t seed) {
  WitnessGenerator gen(n, field, target, seed);
  WitnessFamily family{target, {}};
  family.members.reserve(count);
  for (std::size_t k = 0; k < count; ++k) family.members.push_back(gen.next());
  return family;
}

namespace {

template <class Set, class Extract>
Set stabilized_intersection(const LinearMap& a, const WitnessTarget& target, const IntersectionOptions& options,
                            Extract extract) {
  WitnessGenerator gen(a.size(), a.field(), target, options.seed);
  Set current = extract(apply(a, gen.next()));
  std::size_t stable = 0;
  std::size_t rounds = 1;
  while (stable < options.stable_rounds) {
    if (rounds >= options.max_rounds)
      throw IntersectionUnstable("intersection did not stabilize within " + std::to_string(options.max_rounds) +
                                 " witnesses");
    const Set image = extract(apply(a, gen.next()));
    Set next;
    std::set_intersection(current.begin(), current.end(), image.begin(), image.end(),
                          std::inserter(next, next.end()), current.key_comp());
    if (next.size() == current.size()) {
      ++stable;
    } else {
      stable = 0;
      current = std::move(next);
    }
    ++rounds;
  }
  return current;
}

}  // namespace

PairSet compute_G(const LinearMap& a, const IndexPair& pair, const IntersectionOptions& options) {
  return stabilized_intersection<PairSet>(a, pair, options,
                                          [](const FunctionVector& g) { return achieving_pairs(g); });
}

TripleSet compute_H(const LinearMap& a, const Triple& target, const IntersectionOptions& options) {
  return stabilized_intersection<TripleSet>(a, target, options,
                                            [](const FunctionVector& g) { return triple_set(g); });
}

std::map<IndexPair, PairSet> compute_pair_map(const LinearMap& a, const IntersectionOptions& options) {
  std::map<IndexPair, PairSet> out;
  const std::size_t n = a.size();
  std::uint64_t salt = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      IntersectionOptions local = options;
      local.seed = options.seed + 7919 * (++salt);
      out.emplace(IndexPair{i, j}, compute_G(a, {i, j}, local));
    }
  return out;
}

PointMap point_map_from_pairs(const LinearMap& a, const std::map<IndexPair, PairSet>& pairs,
                              const IntersectionOptions& options) {
  const std::size_t n = a.size();
  if (n < 3) throw std::invalid_argument("the point map needs at least three points");
  auto image = [&](std::size_t x, std::size_t y) -> const IndexPair& {
    const PairSet& g = pairs.at(IndexPair::of(x, y));
    if (g.size() != 1)
      throw NonSingletonG("G({" + std::to_string(std::min(x, y)) + "," + std::to_string(std::max(x, y)) +
                          "}) has " + std::to_string(g.size()) + " elements");
    return *g.begin();
  };

  std::vector<std::size_t> g(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> partners;
    for (std::size_t y = 0; y < n && partners.size() < 2; ++y)
      if (y != x) partners.push_back(y);
    const IndexPair& p1 = image(x, partners[0]);
    const IndexPair& p2 = image(x, partners[1]);
    std::vector<std::size_t> common;
    for (std::size_t k : {p1.first, p1.second})
      if (p2.contains(k)) common.push_back(k);
    if (common.size() != 1)
      throw NonSingletonG("G'({x,y1}) and G'({x,y2}) do not meet in exactly one point for x = " +
                          std::to_string(x));
    g[x] = common.front();
  }
  Permutation point_map = [&] {
    try {
      return Permutation(g);
    } catch (const InvalidForm&) {
      throw NonSingletonG("the induced point map is not a bijection");
    }
  }();

  IntersectionOptions local = options;
  local.seed = options.seed + 104729;
  const TripleSet h = compute_H(a, {0, 1, Scalar(1)}, local);
  const auto first = std::find_if(h.begin(), h.end(),
                                  [&](const Triple& t) { return t.i == point_map(0) && t.j == point_map(1); });
  if (h.size() != 2 || first == h.end() || !h.contains({point_map(1), point_map(0), -first->u}))
    throw NonSingletonG("H(0,1,1) is not of the form {(g0,g1,tau), (g1,g0,-tau)}");
  return {std::move(point_map), first->u};
}

PointMap compute_g_and_tau(const LinearMap& a, const IntersectionOptions& options) {
  return point_map_from_pairs(a, compute_pair_map(a, options), options);
}

FunctionVector constancy_residual(const LinearMap& a, const CanonicalForm& form, const FunctionVector& f) {
  const Permutation g = form.sigma.inverse();
  return apply(a, compose(f, g)) - form.tau * f;
}

bool check_constancy(const LinearMap& a, const CanonicalForm& form, const FunctionVector& f) {
  return constancy_residual(a, form, f).is_constant();
}

}  // namespace diampreserve
