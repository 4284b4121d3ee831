#include "diampreserve/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "diampreserve/decompose.hpp"
#include "diampreserve/errors.hpp"
#include "diampreserve/replay.hpp"
#include "diampreserve/serialize.hpp"

namespace diampreserve::cli {

namespace {

constexpr double kDefaultFloatTolerance = 1e-9;

struct InputOptions {
  std::string path = "-";
  std::string field;
  double tol = 0.0;
  bool exact = false;
  bool csv = false;
  bool pretty = false;
  bool json = false;
  std::uint64_t seed = 0;
  std::size_t max_probes = 10000;
};

struct Loaded {
  MatrixFile file;
  Tolerance tol;
};

void add_input_options(CLI::App* sub, InputOptions& o) {
  sub->add_option("path", o.path, "Matrix file (JSON, or CSV with --csv); '-' reads standard input");
  sub->add_option("--field", o.field, "Treat the matrix as real or complex")->check(CLI::IsMember({"real", "complex"}));
  auto* tol = sub->add_option("--tol", o.tol, "Relative tolerance for every equality (floating mode)");
  auto* exact = sub->add_flag("--exact", o.exact, "Exact rational comparisons (default)");
  tol->excludes(exact);
  sub->add_option("--seed", o.seed, "Seed for random probes");
  sub->add_option("--max-probes", o.max_probes, "Random probes tried by the witness search");
  sub->add_flag("--csv", o.csv, "Read a plain real CSV matrix, one row per line");
  sub->add_flag("--json", o.json, "JSON output (default)");
  sub->add_flag("--pretty", o.pretty, "Indent the JSON and print a human-readable summary to stderr");
}

std::string read_all(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open '" + path + "'");
    buffer << file.rdbuf();
  }
  return buffer.str();
}

Loaded load(const InputOptions& o, std::istream& in) {
  const std::string text = read_all(o.path, in);
  MatrixFile file = [&] {
    if (o.csv) {
      std::istringstream ss(text);
      return matrix_file_from_csv(ss);
    }
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return matrix_file_from_json(j);
  }();
  if (!o.field.empty()) {
    const Field wanted = field_from_string(o.field);
    if (wanted == Field::Real && file.matrix.field() == Field::Complex)
      throw FieldMismatch("--field real given for a complex matrix");
    if (wanted != file.matrix.field()) {
      const LinearMap& a = file.matrix;
      std::vector<Scalar> flat;
      for (std::size_t i = 0; i < a.size(); ++i) flat.insert(flat.end(), a.row(i).begin(), a.row(i).end());
      file.matrix = LinearMap(wanted, a.size(), std::move(flat));
    }
  }
  if (file.mode == NumberMode::Float && o.exact) throw ParseError("--exact cannot be used with floating input");
  Tolerance tol;
  if (o.tol > 0.0) tol = Tolerance::relative(o.tol);
  else if (file.mode == NumberMode::Float) tol = Tolerance::relative(kDefaultFloatTolerance);
  return {std::move(file), tol};
}

CheckOptions check_options(const InputOptions& o, const Tolerance& tol) {
  CheckOptions c;
  c.tol = tol;
  c.witness.seed = o.seed;
  c.witness.random_probes = o.max_probes;
  return c;
}

void emit(std::ostream& out, const Json& j, bool pretty) {
  const std::string text = (pretty ? j.dump(2) : j.dump()) + "\n";
  out << text << std::flush;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Preserving: return kExitPreserving;
    case Verdict::NotPreserving: return kExitNotPreserving;
    case Verdict::DegenerateDimension:
    case Verdict::Singular: return kExitDegenerate;
  }
  return kExitError;
}

int cmd_check(const InputOptions& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Loaded l = load(o, in);
  const DiagnosticReport report = check(l.file.matrix, check_options(o, l.tol));
  emit(out, report_to_json(report, l.file.matrix.size(), l.file.matrix.field(), l.file.mode), o.pretty);
  if (o.pretty) {
    err << "verdict: " << to_string(report.verdict) << (report.numerical ? " (numerical)" : "") << "\n";
    if (report.certificate) err << "tau = " << to_string(report.certificate->tau) << "\n";
    if (report.witness)
      err << "witness diam^2: " << format_rational(report.witness->diam_squared_before) << " -> "
          << format_rational(report.witness->diam_squared_after) << "\n";
  }
  return verdict_exit(report.verdict);
}

int cmd_witness(const InputOptions& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Loaded l = load(o, in);
  const DiagnosticReport report = check(l.file.matrix, check_options(o, l.tol));
  Json j{{"schema", kSchema}, {"verdict", to_string(report.verdict)}, {"numerical", report.numerical}};
  j["witness"] = report.witness ? witness_to_json(*report.witness, l.file.mode) : Json(nullptr);
  emit(out, j, o.pretty);
  if (o.pretty) err << (report.witness ? "witness found" : "no witness: the map is not refutable") << "\n";
  return verdict_exit(report.verdict);
}

int cmd_decompose(const InputOptions& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Loaded l = load(o, in);
  try {
    const CanonicalForm form = decompose(l.file.matrix, l.tol);
    Json j = form_to_json(form, l.file.mode);
    const BijectivityVerdict b = is_bijective(form, l.tol);
    j["bijective"] = b.invertible;
    emit(out, j, o.pretty);
    if (o.pretty) err << "tau = " << to_string(form.tau) << (b.invertible ? "" : " (singular: t(1) = -tau)") << "\n";
    return b.invertible ? kExitPreserving : kExitDegenerate;
  } catch (const DecompositionError& e) {
    emit(out,
         Json{{"schema", kSchema},
              {"error", to_string(e.failure())},
              {"indices", e.indices()},
              {"message", e.what()}},
         o.pretty);
    if (o.pretty) err << "decomposition failed: " << e.what() << "\n";
    return kExitNotPreserving;
  }
}

int cmd_replay(const InputOptions& o, std::size_t rounds, std::istream& in, std::ostream& out, std::ostream& err) {
  const Loaded l = load(o, in);
  if (!l.tol.is_exact()) throw ParseError("replay needs exact input");
  ReplayOptions options;
  options.seed = o.seed;
  options.intersection.stable_rounds = rounds;
  options.check = check_options(o, l.tol);
  const ReplayTrace trace = replay(l.file.matrix, options);
  emit(out, trace_to_json(trace), o.pretty);
  if (o.pretty)
    for (const ReplayStep& s : trace.steps) err << (s.passed ? "PASS " : "FAIL ") << s.name << "\n";
  if (trace.all_passed()) return kExitPreserving;
  if (trace.verdict == Verdict::Singular || trace.verdict == Verdict::DegenerateDimension || trace.n < 3)
    return kExitDegenerate;
  return kExitNotPreserving;
}

int cmd_generate(std::size_t n, const std::string& field_name, std::uint64_t seed, bool singular, bool pretty,
                 std::ostream& out) {
  RandomFormOptions options;
  options.singular = singular;
  const CanonicalForm form = random_form(n, field_from_string(field_name), seed, options);
  Json j = matrix_file_to_json({NumberMode::Exact, assemble(form)});
  j["form"] = form_to_json(form);
  emit(out, j, pretty);
  return kExitPreserving;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide, decompose and refute diameter preservation of linear maps on K^n", "diampreserve"};
  app.require_subcommand(1);

  InputOptions check_o, decompose_o, replay_o, witness_o;
  auto* check_cmd = app.add_subcommand("check", "Classify a matrix and emit a diagnostic report");
  add_input_options(check_cmd, check_o);
  auto* decompose_cmd = app.add_subcommand("decompose", "Recover (tau, sigma, t) from a matrix");
  add_input_options(decompose_cmd, decompose_o);
  auto* witness_cmd = app.add_subcommand("witness", "Emit a vector whose diameter the matrix changes");
  add_input_options(witness_cmd, witness_o);
  auto* replay_cmd = app.add_subcommand("replay", "Replay the characterization step by step on a matrix");
  add_input_options(replay_cmd, replay_o);
  std::size_t rounds = 20;
  replay_cmd->add_option("--rounds", rounds, "Unchanged rounds required for an intersection to stabilize");

  std::size_t gen_n = 3;
  std::string gen_field = "real";
  std::uint64_t gen_seed = 0;
  bool gen_singular = false, gen_pretty = false, gen_json = false;
  auto* generate_cmd = app.add_subcommand("generate", "Emit a random canonical matrix with its form");
  generate_cmd->add_option("--n", gen_n, "Dimension")->check(CLI::PositiveNumber);
  generate_cmd->add_option("--field", gen_field, "real or complex")->check(CLI::IsMember({"real", "complex"}));
  generate_cmd->add_option("--seed", gen_seed, "Random seed");
  generate_cmd->add_flag("--singular", gen_singular, "Force t(1) = -tau");
  generate_cmd->add_flag("--json", gen_json, "JSON output (default)");
  generate_cmd->add_flag("--pretty", gen_pretty, "Indent the JSON");

  std::vector<std::string> storage{"diampreserve"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*check_cmd) return cmd_check(check_o, in, out, err);
    if (*decompose_cmd) return cmd_decompose(decompose_o, in, out, err);
    if (*witness_cmd) return cmd_witness(witness_o, in, out, err);
    if (*replay_cmd) return cmd_replay(replay_o, rounds, in, out, err);
    if (*generate_cmd) return cmd_generate(gen_n, gen_field, gen_seed, gen_singular, gen_pretty, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace diampreserve::cli
