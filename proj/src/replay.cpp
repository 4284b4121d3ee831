#include "diampreserve/replay.hpp"

#include <functional>

#include "diampreserve/errors.hpp"
#include "diampreserve/serialize.hpp"

namespace diampreserve {

bool ReplayTrace::all_passed() const {
  if (steps.empty()) return false;
  for (const ReplayStep& s : steps)
    if (!s.passed) return false;
  return true;
}

namespace {

Json pair_json(const IndexPair& p) { return Json::array({p.first, p.second}); }

Json pair_set_json(const PairSet& s) {
  Json out = Json::array();
  for (const IndexPair& p : s) out.push_back(pair_json(p));
  return out;
}

Json triple_set_json(const TripleSet& s, Field field) {
  Json out = Json::array();
  for (const Triple& t : s) out.push_back(Json{{"i", t.i}, {"j", t.j}, {"u", scalar_to_json(t.u, field)}});
  return out;
}

std::size_t shared_points(const IndexPair& a, const IndexPair& b) {
  return static_cast<std::size_t>(b.contains(a.first)) + static_cast<std::size_t>(b.contains(a.second));
}

class Replayer {
 public:
  Replayer(const LinearMap& a, const ReplayOptions& options)
      : a_(a), options_(options), n_(a.size()), field_(a.field()) {}

  ReplayTrace run() {
    ReplayTrace trace{n_, field_, Verdict::NotPreserving, {}};
    const DiagnosticReport report = check(a_, options_.check);
    trace.verdict = report.verdict;
    const bool ok = report.verdict == Verdict::Preserving && n_ >= 3;
    trace.steps.push_back({"precondition", ok,
                           Json{{"verdict", to_string(report.verdict)}, {"n", n_}, {"requires", "preserving, n >= 3"}}});
    if (!ok) return trace;
    form_ = *report.certificate;
    inverse_ = inverse(a_);

    trace.steps.push_back(guarded("nonempty", [this] { return nonempty(); }));
    trace.steps.push_back(guarded("additivity_transport", [this] { return additivity_transport(); }));
    trace.steps.push_back(guarded("disjoint", [this] { return disjoint(); }));
    trace.steps.push_back(guarded("singleton_bijection", [this] { return singleton_bijection(); }));
    trace.steps.push_back(guarded("strict_pullback", [this] { return strict_pullback(); }));
    trace.steps.push_back(guarded("intersection_transport", [this] { return intersection_transport(); }));
    trace.steps.push_back(guarded("point_map", [this] { return point_map(); }));
    trace.steps.push_back(guarded("tau", [this] { return tau(); }));
    trace.steps.push_back(guarded("constancy", [this] { return constancy(); }));
    return trace;
  }

 private:
  struct Outcome {
    bool passed;
    Json detail;
  };

  static ReplayStep guarded(const char* name, const std::function<Outcome()>& body) {
    try {
      Outcome o = body();
      return {name, o.passed, std::move(o.detail)};
    } catch (const std::exception& e) {
      return {name, false, Json{{"error", e.what()}}};
    }
  }

  IntersectionOptions seeded(std::uint64_t salt) const {
    IntersectionOptions o = options_.intersection;
    o.seed = options_.seed + options_.intersection.seed + salt;
    return o;
  }

  const IndexPair& image(const IndexPair& p) const {
    const PairSet& g = pairs_.at(p);
    if (g.size() != 1) throw NonSingletonG("G is not a singleton");
    return *g.begin();
  }

  Outcome nonempty() {
    pairs_ = compute_pair_map(a_, seeded(1));
    bool passed = true;
    Json g = Json::array();
    Json h = Json::array();
    std::uint64_t salt = 1000;
    for (const auto& [p, set] : pairs_) {
      passed = passed && !set.empty();
      g.push_back(Json{{"pair", pair_json(p)}, {"G", pair_set_json(set)}});
      const TripleSet hs = compute_H(a_, {p.first, p.second, Scalar(1)}, seeded(++salt));
      passed = passed && !hs.empty();
      h.push_back(Json{{"triple", Json::array({p.first, p.second, "1"})}, {"H", triple_set_json(hs, field_)}});
      h_sets_.emplace(p, hs);
    }
    return {passed, Json{{"G", std::move(g)}, {"H", std::move(h)}}};
  }

  Outcome additivity_transport() {
    bool passed = true;
    Json checked = Json::array();
    std::uint64_t salt = 2000;
    for (const auto& [p, set] : pairs_) {
      const WitnessFamily family =
          witness_family(n_, field_, p, options_.additivity_family_size, options_.seed + (++salt));
      std::vector<FunctionVector> rotated, images;
      for (const FunctionVector& f : family.members) {
        const Scalar u = f[p.first] - f[p.second];
        const std::optional<Rational> modulus = exact_sqrt(u.norm2());
        if (!modulus) continue;
        rotated.push_back((u.conj() / Scalar(*modulus)) * f);
        images.push_back(apply(a_, rotated.back()));
      }
      const AdditivityResult before = check_additivity(rotated);
      const AdditivityResult after = check_additivity(images);
      bool ok = before.diameters_add && after.diameters_add;
      Json entry{{"pair", pair_json(p)}, {"members", rotated.size()}, {"sum_additive", before.diameters_add},
                 {"image_additive", after.diameters_add}};
      if (after.alignment) {
        const IndexPair common = IndexPair::of(after.alignment->x, after.alignment->y);
        ok = ok && set.contains(common);
        entry["image_pair"] = pair_json(common);
      }
      passed = passed && ok;
      checked.push_back(std::move(entry));
    }
    return {passed, Json{{"pairs", std::move(checked)}}};
  }

  Outcome disjoint() {
    bool passed = true;
    Json violations = Json::array();
    for (auto it = pairs_.begin(); it != pairs_.end(); ++it)
      for (auto jt = std::next(it); jt != pairs_.end(); ++jt)
        for (const IndexPair& q : it->second)
          if (jt->second.contains(q)) {
            passed = false;
            violations.push_back(Json{{"pairs", Json::array({pair_json(it->first), pair_json(jt->first)})},
                                      {"shared", pair_json(q)}});
          }
    return {passed, Json{{"violations", std::move(violations)}}};
  }

  Outcome singleton_bijection() {
    std::set<IndexPair> images;
    bool singletons = true;
    Json map = Json::array();
    for (const auto& [p, set] : pairs_) {
      singletons = singletons && set.size() == 1;
      if (set.size() == 1) {
        images.insert(*set.begin());
        map.push_back(Json{{"pair", pair_json(p)}, {"image", pair_json(*set.begin())}});
      }
    }
    const bool bijective = singletons && images.size() == pairs_.size();
    return {singletons && bijective, Json{{"singletons", singletons}, {"bijective", bijective}, {"G_prime", map}}};
  }

  Outcome strict_pullback() {
    if (!inverse_) throw SingularMatrix("map is not invertible");
    bool passed = true;
    Json checked = Json::array();
    std::uint64_t salt = 3000;
    for (const auto& [p, set] : pairs_) {
      const IndexPair& q = image(p);
      WitnessGenerator gen(n_, field_, q, options_.seed + (++salt));
      const FunctionVector f = apply(*inverse_, gen.next());
      const PairSet s = achieving_pairs(f);
      const bool ok = s == PairSet{p};
      passed = passed && ok;
      checked.push_back(Json{{"pair", pair_json(p)}, {"S_of_preimage", pair_set_json(s)}, {"passed", ok}});
    }
    return {passed, Json{{"pairs", std::move(checked)}}};
  }

  Outcome intersection_transport() {
    bool passed = true;
    std::size_t compared = 0;
    Json violations = Json::array();
    for (auto it = pairs_.begin(); it != pairs_.end(); ++it)
      for (auto jt = std::next(it); jt != pairs_.end(); ++jt) {
        ++compared;
        const std::size_t before = shared_points(it->first, jt->first);
        const std::size_t after = shared_points(image(it->first), image(jt->first));
        if (before != after) {
          passed = false;
          violations.push_back(Json{{"pairs", Json::array({pair_json(it->first), pair_json(jt->first)})},
                                    {"shared_before", before},
                                    {"shared_after", after}});
        }
      }
    return {passed, Json{{"pairs_compared", compared}, {"violations", std::move(violations)}}};
  }

  Outcome point_map() {
    point_map_ = point_map_from_pairs(a_, pairs_, seeded(4000));
    const Permutation& g = point_map_->g;
    bool consistent = true;
    for (const auto& [p, set] : pairs_) consistent = consistent && image(p) == IndexPair::of(g(p.first), g(p.second));
    const bool matches = g == form_->sigma.inverse();
    return {consistent && matches,
            Json{{"g", g.images()}, {"pairs_consistent", consistent}, {"equals_sigma_inverse", matches}}};
  }

  Outcome tau() {
    if (!point_map_) throw NonSingletonG("no point map available");
    const Permutation& g = point_map_->g;
    const Scalar& t = point_map_->tau;
    bool passed = true;
    for (const auto& [p, hs] : h_sets_) {
      const TripleSet expected{{g(p.first), g(p.second), t}, {g(p.second), g(p.first), -t}};
      passed = passed && hs == expected;
    }
    const bool unimodular = t.norm2() == 1;
    const bool real_sign = field_ == Field::Complex || t == Scalar(1) || t == Scalar(-1);
    const bool matches = t == form_->tau;
    return {passed && unimodular && real_sign && matches,
            Json{{"tau", scalar_to_json(t, Field::Complex)},
                 {"H_structure", passed},
                 {"unimodular", unimodular},
                 {"real_tau_is_sign", real_sign},
                 {"matches_certificate", matches}}};
  }

  Outcome constancy() {
    const Permutation g = form_->sigma.inverse();
    std::mt19937_64 rng(options_.seed + 5000);
    std::size_t held = 0;
    for (std::size_t k = 0; k < options_.constancy_probes; ++k) {
      std::vector<Scalar> entries(n_);
      for (Scalar& s : entries) s = random_scalar(field_, rng, 9, 9);
      const FunctionVector f(field_, std::move(entries));
      const FunctionVector residual = constancy_residual(a_, *form_, f);
      if (residual.is_constant() && residual[0] == form_->t.dot(compose(f, g))) ++held;
    }
    return {held == options_.constancy_probes, Json{{"probes", options_.constancy_probes}, {"held", held}}};
  }

  const LinearMap& a_;
  ReplayOptions options_;
  std::size_t n_;
  Field field_;
  std::optional<CanonicalForm> form_;
  std::optional<LinearMap> inverse_;
  std::map<IndexPair, PairSet> pairs_;
  std::map<IndexPair, TripleSet> h_sets_;
  std::optional<PointMap> point_map_;
};

}  // namespace

ReplayTrace replay(const LinearMap& a, const ReplayOptions& options) { return Replayer(a, options).run(); }

nlohmann::json trace_to_json(const ReplayTrace& trace) {
  Json steps = Json::array();
  for (const ReplayStep& s : trace.steps) steps.push_back(Json{{"step", s.name}, {"passed", s.passed}, {"detail", s.detail}});
  return Json{{"schema", kSchema},
              {"n", trace.n},
              {"field", to_string(trace.field)},
              {"verdict", to_string(trace.verdict)},
              {"all_passed", trace.all_passed()},
              {"steps", std::move(steps)}};
}

}  // namespace diampreserve
