#include "diampreserve/rational.hpp"

#include <cctype>
#include <cmath>

#include "diampreserve/errors.hpp"

namespace diampreserve {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("not a rational of the form p or p/q: '" + std::string(text) + "'");
  Rational value;
  value.get_num() = mpz_class(std::string(num), 10);
  value.get_den() = mpz_class(std::string(den), 10);
  if (value.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  value.canonicalize();
  if (text.front() == '-') value = -value;
  return value;
}

std::string format_rational(const Rational& value) { return value.get_str(10); }

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw ParseError("non-finite floating value");
  return Rational(value);
}

std::optional<Rational> exact_sqrt(const Rational& value) {
  if (sgn(value) < 0) return std::nullopt;
  const mpz_class& num = value.get_num();
  const mpz_class& den = value.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  Rational root(sqrt(num), sqrt(den));
  root.canonicalize();
  return root;
}

Rational random_rational(std::mt19937_64& rng, long max_numerator, long max_denominator) {
  std::uniform_int_distribution<long> num(-max_numerator, max_numerator);
  std::uniform_int_distribution<long> den(1, max_denominator);
  Rational value(num(rng), den(rng));
  value.canonicalize();
  return value;
}

Rational random_unit_interior(std::mt19937_64& rng, long max_denominator) {
  std::uniform_int_distribution<long> den_dist(2, max_denominator);
  const long den = den_dist(rng);
  std::uniform_int_distribution<long> num_dist(1, den - 1);
  Rational value(num_dist(rng), den);
  value.canonicalize();
  return value;
}

}  // namespace diampreserve
