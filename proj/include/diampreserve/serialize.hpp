#pragma once

#include <istream>
#include <json.hpp>

#include "diampreserve/canonical_form.hpp"
#include "diampreserve/decompose.hpp"
#include "diampreserve/linear_map.hpp"
#include "diampreserve/witness.hpp"

namespace diampreserve {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "diampreserve/1";

// Exact values are written as canonical "p/q" strings; complex values as {"re": ..., "im": ...}.
// Float-mode values are written as JSON numbers.

Json scalar_to_json(const Scalar& value, Field field, NumberMode mode = NumberMode::Exact);
Scalar scalar_from_json(const Json& value, Field field);
Json vector_to_json(const FunctionVector& f, NumberMode mode = NumberMode::Exact);

/// {"schema", "n", "field", "tau": {re, im}, "sigma": [...], "t": [...]}; float forms add "mode".
Json form_to_json(const CanonicalForm& form, NumberMode mode = NumberMode::Exact);
CanonicalForm form_from_json(const Json& j);

struct MatrixFile {
  NumberMode mode;
  LinearMap matrix;
};

/// Entries that are strings or JSON integers are exact; JSON floats select float mode.
/// Files mixing the two are rejected, as are files whose "mode" disagrees with their entries.
MatrixFile matrix_file_from_json(const Json& j);
Json matrix_file_to_json(const MatrixFile& file);

/// Plain real matrix, one row per line, comma separated.
MatrixFile matrix_file_from_csv(std::istream& in);

Json witness_to_json(const Witness& w, NumberMode mode = NumberMode::Exact);
Json report_to_json(const DiagnosticReport& report, std::size_t n, Field field,
                    NumberMode mode = NumberMode::Exact);

}  // namespace diampreserve
