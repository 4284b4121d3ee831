#include "diampreserve/witness.hpp"

#include <cmath>
#include <complex>

#include "diampreserve/canonical_form.hpp"
#include "diampreserve/diameter.hpp"
#include "diampreserve/errors.hpp"
#include "diampreserve/oracle.hpp"

namespace diampreserve {

std::optional<Witness> evaluate_probe(const LinearMap& a, const FunctionVector& f, const Tolerance& tol) {
  Rational before = diam_squared(f);
  Rational after = diam_squared(apply(a, f));
  if (tol.equal(before, after)) return std::nullopt;
  return Witness{f, std::move(before), std::move(after)};
}

namespace {

using Complex = std::complex<double>;

class FloatObjective {
 public:
  explicit FloatObjective(const LinearMap& a) : n_(a.size()), entries_(n_ * n_) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) entries_[i * n_ + j] = a(i, j).to_complex();
  }

  // |diam^2(A f) / diam^2(f) - 1|; scale invariant, so the ascent cannot run off to infinity.
  double operator()(const std::vector<Complex>& f) const {
    std::vector<Complex> image(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) image[i] += entries_[i * n_ + j] * f[j];
    const double before = diam2(f);
    const double after = diam2(image);
    if (before < 1e-300) return after > 0 ? 1e300 : 0.0;
    return std::abs(after / before - 1.0);
  }

 private:
  static double diam2(const std::vector<Complex>& v) {
    double best = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j) best = std::max(best, std::norm(v[i] - v[j]));
    return best;
  }

  std::size_t n_;
  std::vector<Complex> entries_;
};

Rational snap(double x, long grid) {
  Rational r(static_cast<long>(std::llround(x * static_cast<double>(grid))), grid);
  r.canonicalize();
  return r;
}

class WitnessSearch {
 public:
  WitnessSearch(const LinearMap& a, const WitnessOptions& options) : a_(a), options_(options) {}

  Witness run() {
    const std::size_t n = a_.size();
    const bool complex = a_.field() == Field::Complex;
    if (n <= options_.zero_one_max_n) {
      if (for_each_zero_one_probe(n, a_.field(), visitor())) return *found_;
      if (probe(FunctionVector::ones(a_.field(), n))) return *found_;
    }
    if (complex && n <= options_.circle_max_n && for_each_circle_probe(n, visitor())) return *found_;
    if (const std::optional<LinearMap> inv = inverse(a_)) {
      auto preimage = [&](const FunctionVector& w) { return probe(apply(*inv, w)); };
      if (n <= options_.zero_one_max_n) {
        if (for_each_zero_one_probe(n, a_.field(), preimage)) return *found_;
      }
      if (complex && n <= options_.circle_max_n && for_each_circle_probe(n, preimage)) return *found_;
    }
    const ProbeFamily random = random_family(n, a_.field(), options_.random_probes, options_.seed);
    for (const FunctionVector& f : random.probes)
      if (probe(f)) return *found_;
    if (ascend()) return *found_;
    throw WitnessSearchExhausted(probes_, "no witness found after " + std::to_string(probes_) + " probes");
  }

 private:
  ProbeVisitor visitor() {
    return [this](const FunctionVector& f) { return probe(f); };
  }

  bool probe(const FunctionVector& f) {
    ++probes_;
    found_ = evaluate_probe(a_, f, options_.tol);
    return found_.has_value();
  }

  bool ascend() {
    const std::size_t n = a_.size();
    if (n < 2) return false;
    const bool complex = a_.field() == Field::Complex;
    const FloatObjective objective(a_);
    std::mt19937_64 rng(options_.seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Complex> steps = {1.0, -1.0};
    if (complex) steps.insert(steps.end(), {Complex(0, 1), Complex(0, -1)});

    for (std::size_t restart = 0; restart < options_.ascent_restarts; ++restart) {
      std::vector<Complex> f(n);
      for (Complex& z : f) z = complex ? Complex(unit(rng), unit(rng)) : Complex(unit(rng), 0);
      double value = objective(f);
      double step = 0.5;
      for (int iter = 0; iter < 400 && step > 1e-7; ++iter) {
        bool improved = false;
        for (std::size_t k = 0; k < n; ++k)
          for (const Complex& dir : steps) {
            std::vector<Complex> trial = f;
            trial[k] += step * dir;
            const double v = objective(trial);
            if (v > value) {
              f = std::move(trial);
              value = v;
              improved = true;
            }
          }
        if (!improved) step *= 0.5;
      }
      for (long grid : {1024L, 1L << 20}) {
        std::vector<Scalar> entries(n);
        for (std::size_t k = 0; k < n; ++k)
          entries[k] = complex ? Scalar(snap(f[k].real(), grid), snap(f[k].imag(), grid))
                               : Scalar(snap(f[k].real(), grid));
        if (probe(FunctionVector(a_.field(), std::move(entries)))) return true;
      }
    }
    return false;
  }

  const LinearMap& a_;
  WitnessOptions options_;
  std::size_t probes_ = 0;
  std::optional<Witness> found_;
};

}  // namespace

Witness find_witness(const LinearMap& a, const WitnessOptions& options) {
  return WitnessSearch(a, options).run();
}

}  // namespace diampreserve
