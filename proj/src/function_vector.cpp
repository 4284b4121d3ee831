#include "diampreserve/function_vector.hpp"

#include "diampreserve/errors.hpp"

namespace diampreserve {

FunctionVector::FunctionVector(Field field, std::vector<Scalar> entries)
    : field_(field), entries_(std::move(entries)) {
  if (entries_.empty()) throw DimensionMismatch("function vector must have at least one entry");
  if (field_ == Field::Real) {
    for (const Scalar& s : entries_)
      if (!s.is_real()) throw FieldMismatch("complex entry in a real function vector");
  }
}

FunctionVector FunctionVector::constant(Field field, std::size_t n, const Scalar& value) {
  return FunctionVector(field, std::vector<Scalar>(n, value));
}

bool FunctionVector::is_constant() const {
  for (const Scalar& s : entries_)
    if (s != entries_.front()) return false;
  return true;
}

Scalar FunctionVector::dot(const FunctionVector& f) const {
  if (f.size() != size()) throw DimensionMismatch("functional and vector lengths differ");
  Scalar acc;
  for (std::size_t k = 0; k < size(); ++k) acc += entries_[k] * f[k];
  return acc;
}

Scalar FunctionVector::sum() const {
  Scalar acc;
  for (const Scalar& s : entries_) acc += s;
  return acc;
}

FunctionVector& FunctionVector::operator+=(const FunctionVector& o) {
  if (o.size() != size()) throw DimensionMismatch("vector lengths differ");
  field_ = common_field(field_, o.field_);
  for (std::size_t k = 0; k < size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

FunctionVector& FunctionVector::operator-=(const FunctionVector& o) {
  if (o.size() != size()) throw DimensionMismatch("vector lengths differ");
  field_ = common_field(field_, o.field_);
  for (std::size_t k = 0; k < size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

FunctionVector& FunctionVector::operator*=(const Scalar& c) {
  if (!c.is_real()) field_ = Field::Complex;
  for (Scalar& s : entries_) s *= c;
  return *this;
}

}  // namespace diampreserve
