#include "diampreserve/canonical_form.hpp"

#include "diampreserve/errors.hpp"

namespace diampreserve {

CanonicalForm CanonicalForm::identity(Field field, std::size_t n) {
  return {Scalar(1), Permutation::identity(n), FunctionVector::zeros(field, n)};
}

void validate(const CanonicalForm& form, const Tolerance& tol) {
  if (form.sigma.size() != form.t.size())
    throw InvalidForm("permutation has size " + std::to_string(form.sigma.size()) + " but t has length " +
                      std::to_string(form.t.size()));
  if (!tol.equal(form.tau.norm2(), Rational(1)))
    throw InvalidForm("tau is not unimodular: |tau|^2 = " + format_rational(form.tau.norm2()));
  if (form.field() == Field::Real && !form.tau.is_real()) throw InvalidForm("complex tau in a real-field form");
}

LinearMap assemble(const CanonicalForm& form, const Tolerance& tol) {
  validate(form, tol);
  const std::size_t n = form.size();
  std::vector<Scalar> flat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      flat[i * n + j] = form.t[j];
      if (j == form.sigma(i)) flat[i * n + j] += form.tau;
    }
  return LinearMap(form.field(), n, std::move(flat));
}

BijectivityVerdict is_bijective(const CanonicalForm& form, const Tolerance& tol) {
  const Scalar t_of_one = form.t.sum();
  return {!tol.equal(t_of_one, -form.tau), t_of_one, form.tau};
}

CanonicalForm compose(const CanonicalForm& f, const CanonicalForm& g) {
  if (f.size() != g.size()) throw DimensionMismatch("canonical forms of different sizes");
  if (f.field() != g.field()) throw FieldMismatch("canonical forms over different fields");
  const std::size_t n = f.size();
  // t_fg(h) = tau_f * t_g(h) + t_f(assemble(g) h); the second term has coefficients
  // sum_k tf_k * (tau_g [j == sigma_g(k)] + tg_j).
  const Scalar tf_sum = f.t.sum();
  std::vector<Scalar> t(n);
  for (std::size_t j = 0; j < n; ++j) t[j] = (f.tau + tf_sum) * g.t[j];
  for (std::size_t k = 0; k < n; ++k) t[g.sigma(k)] += f.t[k] * g.tau;
  return {f.tau * g.tau, f.sigma.then(g.sigma), FunctionVector(f.field(), std::move(t))};
}

CanonicalForm invert(const CanonicalForm& form, const Tolerance& tol) {
  const BijectivityVerdict verdict = is_bijective(form, tol);
  if (!verdict.invertible) throw SingularForm("t(1) = -tau; the assembled map is singular");
  const std::size_t n = form.size();
  const Scalar tau_inv = Scalar(1) / form.tau;
  const Scalar scale = -tau_inv / (form.tau + verdict.t_of_one);
  std::vector<Scalar> t(n);
  for (std::size_t m = 0; m < n; ++m) t[m] = scale * form.t[form.sigma(m)];
  return {tau_inv, form.sigma.inverse(), FunctionVector(form.field(), std::move(t))};
}

Scalar random_scalar(Field field, std::mt19937_64& rng, long max_numerator, long max_denominator) {
  Rational re = random_rational(rng, max_numerator, max_denominator);
  if (field == Field::Real) return Scalar(std::move(re));
  return Scalar(std::move(re), random_rational(rng, max_numerator, max_denominator));
}

Scalar random_unimodular(Field field, std::mt19937_64& rng, long max_parameter) {
  if (field == Field::Real) return Scalar(std::bernoulli_distribution(0.5)(rng) ? 1 : -1);
  Scalar tau = Scalar::unit_from_parameter(random_rational(rng, max_parameter, max_parameter));
  // The parametrization never reaches -1 at finite s; flip half the draws to cover the whole circle.
  if (std::bernoulli_distribution(0.5)(rng)) tau = -tau;
  return tau;
}

CanonicalForm random_form(std::size_t n, Field field, std::mt19937_64& rng, const RandomFormOptions& options) {
  if (n == 0) throw DimensionMismatch("n must be at least 1");
  Permutation sigma = Permutation::random(n, rng);
  Scalar tau = random_unimodular(field, rng, options.max_tau_parameter);
  for (;;) {
    std::vector<Scalar> t(n);
    for (Scalar& s : t) s = random_scalar(field, rng, options.max_numerator, options.max_denominator);
    if (options.singular) {
      Scalar rest;
      for (std::size_t k = 0; k + 1 < n; ++k) rest += t[k];
      t[n - 1] = -tau - rest;
    }
    CanonicalForm form{tau, sigma, FunctionVector(field, std::move(t))};
    if (options.singular || is_bijective(form).invertible) return form;
  }
}

CanonicalForm random_form(std::size_t n, Field field, std::uint64_t seed, const RandomFormOptions& options) {
  std::mt19937_64 rng(seed);
  return random_form(n, field, rng, options);
}

}  // namespace diampreserve
