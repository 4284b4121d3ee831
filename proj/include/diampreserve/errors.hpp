#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace diampreserve {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A canonical form whose scalar is not unimodular or whose permutation is not a bijection.
class InvalidForm : public Error {
 public:
  using Error::Error;
};

/// Raised by invert() when t(1) = -tau.
class SingularForm : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class DimensionCapExceeded : public Error {
 public:
  using Error::Error;
};

enum class DecompositionFailure { NotAPermutation, InconsistentTau, TauNotUnimodular, RowsNotConstant };

const char* to_string(DecompositionFailure failure);

/// Structured failure of decompose(); carries the offending row/column indices.
class DecompositionError : public Error {
 public:
  DecompositionError(DecompositionFailure failure, std::vector<std::size_t> indices, const std::string& message)
      : Error(message), failure_(failure), indices_(std::move(indices)) {}

  DecompositionFailure failure() const { return failure_; }
  const std::vector<std::size_t>& indices() const { return indices_; }

 private:
  DecompositionFailure failure_;
  std::vector<std::size_t> indices_;
};

class WitnessSearchExhausted : public Error {
 public:
  WitnessSearchExhausted(std::size_t probes_tried, const std::string& message)
      : Error(message), probes_tried_(probes_tried) {}

  std::size_t probes_tried() const { return probes_tried_; }

 private:
  std::size_t probes_tried_;
};

/// A finite-witness intersection did not settle within its round cap.
class IntersectionUnstable : public Error {
 public:
  using Error::Error;
};

/// A computed G set was not a single pair, so the map cannot be diameter preserving.
class NonSingletonG : public Error {
 public:
  using Error::Error;
};

}  // namespace diampreserve
