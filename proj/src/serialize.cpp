#include "diampreserve/serialize.hpp"

#include <sstream>

#include "diampreserve/errors.hpp"

namespace diampreserve {

namespace {

Json rational_to_json(const Rational& r, NumberMode mode) {
  if (mode == NumberMode::Float) return r.get_d();
  return format_rational(r);
}

Rational rational_from_json(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_unsigned()) return Rational(mpz_class(std::to_string(v.get<std::uint64_t>())));
  if (v.is_number_integer()) return Rational(mpz_class(std::to_string(v.get<std::int64_t>())));
  if (v.is_number_float()) return rational_from_double(v.get<double>());
  throw ParseError("expected a number or a \"p/q\" string, got " + v.dump());
}

enum class EntryKind { Exact = 1, Float = 2 };

int entry_kinds(const Json& v) {
  if (v.is_object()) {
    int kinds = 0;
    for (const char* key : {"re", "im"})
      if (v.contains(key)) kinds |= entry_kinds(v.at(key));
    return kinds;
  }
  if (v.is_number_float()) return static_cast<int>(EntryKind::Float);
  return static_cast<int>(EntryKind::Exact);
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  return j.at(key);
}

}  // namespace

Json scalar_to_json(const Scalar& value, Field field, NumberMode mode) {
  if (field == Field::Real) return rational_to_json(value.re(), mode);
  return Json{{"re", rational_to_json(value.re(), mode)}, {"im", rational_to_json(value.im(), mode)}};
}

Scalar scalar_from_json(const Json& value, Field field) {
  Scalar s;
  if (value.is_object()) {
    const Rational re = value.contains("re") ? rational_from_json(value.at("re")) : Rational(0);
    const Rational im = value.contains("im") ? rational_from_json(value.at("im")) : Rational(0);
    s = Scalar(re, im);
  } else {
    s = Scalar(rational_from_json(value));
  }
  if (field == Field::Real && !s.is_real()) throw FieldMismatch("complex entry " + value.dump() + " in a real file");
  return s;
}

Json vector_to_json(const FunctionVector& f, NumberMode mode) {
  Json out = Json::array();
  for (const Scalar& s : f.entries()) out.push_back(scalar_to_json(s, f.field(), mode));
  return out;
}

Json form_to_json(const CanonicalForm& form, NumberMode mode) {
  Json j{{"schema", kSchema},
         {"n", form.size()},
         {"field", to_string(form.field())},
         {"tau", scalar_to_json(form.tau, Field::Complex, mode)},
         {"sigma", form.sigma.images()},
         {"t", vector_to_json(form.t, mode)}};
  if (mode == NumberMode::Float) j["mode"] = "float";
  return j;
}

CanonicalForm form_from_json(const Json& j) {
  try {
    const Field field = field_from_string(require(j, "field").get<std::string>());
    const std::size_t n = require(j, "n").get<std::size_t>();
    Scalar tau = scalar_from_json(require(j, "tau"), field);
    std::vector<std::size_t> sigma = require(j, "sigma").get<std::vector<std::size_t>>();
    const Json& t_json = require(j, "t");
    if (!t_json.is_array()) throw ParseError("'t' must be an array");
    std::vector<Scalar> t;
    for (const Json& v : t_json) t.push_back(scalar_from_json(v, field));
    if (sigma.size() != n || t.size() != n) throw DimensionMismatch("form arrays do not have length n");
    CanonicalForm form{std::move(tau), Permutation(std::move(sigma)), FunctionVector(field, std::move(t))};
    validate(form, j.value("mode", "exact") == "float" ? Tolerance::relative(1e-9) : Tolerance::exact());
    return form;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed canonical form: ") + e.what());
  }
}

MatrixFile matrix_file_from_json(const Json& j) {
  try {
    const Field field = field_from_string(require(j, "field").get<std::string>());
    const Json& rows = require(j, "rows");
    if (!rows.is_array()) throw ParseError("'rows' must be an array");
    const std::size_t n = j.contains("n") ? j.at("n").get<std::size_t>() : rows.size();
    if (rows.size() != n)
      throw DimensionMismatch("'n' is " + std::to_string(n) + " but there are " + std::to_string(rows.size()) +
                              " rows");
    int kinds = 0;
    std::vector<std::vector<Scalar>> parsed;
    for (const Json& row : rows) {
      if (!row.is_array()) throw ParseError("each row must be an array");
      std::vector<Scalar> r;
      for (const Json& v : row) {
        kinds |= entry_kinds(v);
        r.push_back(scalar_from_json(v, field));
      }
      parsed.push_back(std::move(r));
    }
    if (kinds == 3) throw ParseError("file mixes exact and floating entries");
    NumberMode mode = (kinds & static_cast<int>(EntryKind::Float)) ? NumberMode::Float : NumberMode::Exact;
    if (j.contains("mode")) {
      const std::string declared = j.at("mode").get<std::string>();
      if (declared == "exact" && mode == NumberMode::Float)
        throw ParseError("mode is \"exact\" but the file holds floating entries");
      if (declared == "float") mode = NumberMode::Float;
      else if (declared != "exact") throw ParseError("unknown mode '" + declared + "'");
    }
    return {mode, LinearMap::from_rows(field, parsed)};
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed matrix file: ") + e.what());
  }
}

Json matrix_file_to_json(const MatrixFile& file) {
  const LinearMap& a = file.matrix;
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    Json row = Json::array();
    for (const Scalar& s : a.row(i)) row.push_back(scalar_to_json(s, a.field(), file.mode));
    rows.push_back(std::move(row));
  }
  return Json{{"schema", kSchema},
              {"field", to_string(a.field())},
              {"n", a.size()},
              {"mode", file.mode == NumberMode::Exact ? "exact" : "float"},
              {"rows", std::move(rows)}};
}

MatrixFile matrix_file_from_csv(std::istream& in) {
  std::vector<std::vector<Scalar>> rows;
  bool saw_exact = false, saw_float = false;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<Scalar> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t");
      const auto e = cell.find_last_not_of(" \t");
      if (b == std::string::npos) throw ParseError("empty CSV cell");
      cell = cell.substr(b, e - b + 1);
      if (cell.find_first_of(".eE") != std::string::npos) {
        saw_float = true;
        std::size_t used = 0;
        double v = 0;
        try {
          v = std::stod(cell, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != cell.size()) throw ParseError("bad CSV number '" + cell + "'");
        row.emplace_back(rational_from_double(v));
      } else {
        saw_exact = true;
        row.emplace_back(parse_rational(cell));
      }
    }
    rows.push_back(std::move(row));
  }
  if (saw_exact && saw_float) throw ParseError("CSV mixes exact and floating entries");
  return {saw_float ? NumberMode::Float : NumberMode::Exact, LinearMap::from_rows(Field::Real, rows)};
}

Json witness_to_json(const Witness& w, NumberMode mode) {
  return Json{{"vector", vector_to_json(w.f, mode)},
              {"diam_squared_before", format_rational(w.diam_squared_before)},
              {"diam_squared_after", format_rational(w.diam_squared_after)}};
}

Json report_to_json(const DiagnosticReport& report, std::size_t n, Field field, NumberMode mode) {
  Json j{{"schema", kSchema},
         {"verdict", to_string(report.verdict)},
         {"numerical", report.numerical},
         {"n", n},
         {"field", to_string(field)}};
  if (report.certificate) j["certificate"] = form_to_json(*report.certificate, mode);
  if (report.witness) j["witness"] = witness_to_json(*report.witness, mode);
  if (report.details)
    j["details"] = Json{{"reason", report.details->reason},
                        {"indices", report.details->indices},
                        {"message", report.details->message}};
  return j;
}

}  // namespace diampreserve
