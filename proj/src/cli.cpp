#include "entwitness/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "entwitness/criteria.hpp"
#include "entwitness/errors.hpp"
#include "entwitness/format.hpp"
#include "entwitness/info_measures.hpp"
#include "entwitness/measurements.hpp"
#include "entwitness/threshold.hpp"
#include "json.hpp"

namespace entwitness::cli {
namespace {

constexpr const char* kDenseLimitEnv = "ENTWITNESS_DENSE_LIMIT";

class DenseLimitGuard {
 public:
  DenseLimitGuard() : saved_(dense_limit()) {}
  ~DenseLimitGuard() { set_dense_limit(saved_); }
  DenseLimitGuard(const DenseLimitGuard&) = delete;
  DenseLimitGuard& operator=(const DenseLimitGuard&) = delete;

 private:
  std::size_t saved_;
};

std::size_t parse_limit(const std::string& text, const char* source) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end || value == 0) {
    throw ParameterError(std::string(source) + " must be a positive integer, got '" + text + "'");
  }
  return value;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParameterError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Complex complex_entry(const nlohmann::json& pair) {
  return {pair.at(0).get<double>(), pair.at(1).get<double>()};
}

// {"amplitudes": [[re, im], ...]}
PureState read_state_file(const std::string& path) {
  const auto doc = read_json_file(path);
  try {
    const auto& raw = doc.at("amplitudes");
    ComplexVector amplitudes(static_cast<Eigen::Index>(raw.size()));
    for (std::size_t k = 0; k < raw.size(); ++k) {
      amplitudes(static_cast<Eigen::Index>(k)) = complex_entry(raw[k]);
    }
    return PureState(std::move(amplitudes));
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError("malformed state file '" + path + "': " + e.what());
  }
}

// {"matrix": [[[re, im], ...], ...]} given row by row.
DensityMatrix read_rho_file(const std::string& path) {
  const auto doc = read_json_file(path);
  try {
    const auto& rows = doc.at("matrix");
    const auto n = static_cast<Eigen::Index>(rows.size());
    ComplexMatrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      const auto& row = rows[static_cast<std::size_t>(r)];
      if (static_cast<Eigen::Index>(row.size()) != n) {
        throw DimensionError("density matrix in '" + path + "' is not square");
      }
      for (Eigen::Index c = 0; c < n; ++c) m(r, c) = complex_entry(row[static_cast<std::size_t>(c)]);
    }
    return DensityMatrix(HermitianOperator(std::move(m)));
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError("malformed density-matrix file '" + path + "': " + e.what());
  }
}

MeasurementSet read_measurement_file(const std::string& path) {
  return measurement_from_json(read_json_file(path));
}

std::size_t measurement_dim(const MeasurementSet& set) {
  return std::visit([](const auto& s) { return s.dim(); }, set);
}

void emit_json(std::ostream& out, const nlohmann::ordered_json& doc) { out << doc.dump(2) << '\n'; }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

// Flags shared by evaluate, threshold and sweep.
struct FamilyOptions {
  std::string family;
  std::size_t parties = 0;
  std::size_t local_dim = 0;
  std::string measurement = "mum";
  double s = -1.0;
  std::string detector = "skew";
  std::string moments = "auto";
  bool allow_heavy = false;
  std::string state_file;
  std::string measurement_file;
  std::string path = "closed_form";
};

void add_family_options(CLI::App* cmd, FamilyOptions& o, bool with_detector) {
  cmd->add_option("--family", o.family, "State family")
      ->check(CLI::IsMember({"dicke", "w", "antisym", "two_qutrit", "custom"}));
  cmd->add_option("--N", o.parties, "Number of parties");
  cmd->add_option("--d", o.local_dim, "Local dimension (custom states and density matrices)");
  cmd->add_option("--measurement", o.measurement, "Local measurement family")
      ->check(CLI::IsMember({"mum", "gsic"}))
      ->capture_default_str();
  cmd->add_option("--s", o.s, "Skew-information order, -1 <= s <= 0")->capture_default_str();
  if (with_detector) {
    cmd->add_option("--detector", o.detector, "Which inequality to track")
        ->check(CLI::IsMember({"skew", "variance"}))
        ->capture_default_str();
  }
  cmd->add_option("--moments", o.moments, "Pure-state moment source")
      ->check(CLI::IsMember({"auto", "dense", "analytic"}))
      ->capture_default_str();
  cmd->add_flag("--allow-heavy", o.allow_heavy, "Permit dense antisym moments for N >= 6");
  cmd->add_option("--state-file", o.state_file, "JSON {\"amplitudes\": [[re, im], ...]}");
  cmd->add_option("--measurement-file", o.measurement_file,
                  "Measurement set JSON as written by export-measurements");
  cmd->add_option("--path", o.path, "closed_form or dense_matrix evaluation")
      ->check(CLI::IsMember({"closed_form", "dense_matrix"}))
      ->capture_default_str();
}

FamilySpec build_spec(const FamilyOptions& o) {
  if (o.family.empty()) throw ParameterError("--family is required");
  const auto family = *parse_state_family(o.family);
  if (family != StateFamily::TwoQutrit && o.parties == 0) {
    throw ParameterError("--N is required for the " + o.family + " family");
  }
  FamilySpec spec = make_family_spec(family, o.parties, *parse_measurement_kind(o.measurement),
                                     *parse_detector(o.detector), o.s);
  if (family == StateFamily::Custom) {
    if (o.state_file.empty()) throw ParameterError("--family custom needs --state-file");
    if (o.local_dim == 0) throw ParameterError("--family custom needs --d");
    spec.local_dim = o.local_dim;
    spec.custom_state = read_state_file(o.state_file);
  } else {
    if (!o.state_file.empty()) throw ParameterError("--state-file needs --family custom");
    if (o.local_dim != 0 && o.local_dim != spec.local_dim) {
      throw ParameterError("--d " + std::to_string(o.local_dim) + " conflicts with the " +
                           o.family + " family (d = " + std::to_string(spec.local_dim) + ")");
    }
  }
  spec.moments = *parse_moment_mode(o.moments);
  spec.allow_heavy = o.allow_heavy;
  if (!o.measurement_file.empty()) {
    spec.measurement_set =
        std::make_shared<const MeasurementSet>(read_measurement_file(o.measurement_file));
  }
  validate(spec);
  return spec;
}

EvaluationPath build_path(const FamilyOptions& o) {
  return o.path == "dense_matrix" ? EvaluationPath::DenseMatrix : EvaluationPath::ClosedForm;
}

// ---- verify / export-measurements ----

struct MeasurementOptions {
  std::string kind;
  std::size_t dim = 0;
  std::string file;
  bool printed = false;
  double tol = kMeasurementTolerance;
  std::string out;
};

MeasurementSet load_measurement(const MeasurementOptions& o, std::string& source) {
  if (!o.file.empty()) {
    if (o.printed) throw ParameterError("--printed applies to embedded data only");
    auto set = read_measurement_file(o.file);
    const bool is_mum = std::holds_alternative<MumSet>(set);
    if (!o.kind.empty() && (o.kind == "mum") != is_mum) {
      throw ParameterError("--kind " + o.kind + " does not match the file contents");
    }
    if (o.dim != 0 && o.dim != measurement_dim(set)) {
      throw ParameterError("--d does not match the file contents");
    }
    source = o.file;
    return set;
  }
  if (o.kind.empty() || o.dim == 0) throw ParameterError("need --kind and --d, or --file");
  if (o.kind == "mum") {
    source = o.printed ? "embedded_unpatched" : "embedded";
    return o.printed ? printed_mub_set(o.dim) : mub_set(o.dim);
  }
  if (o.printed) throw ParameterError("--printed applies to MUB tables only");
  source = "embedded";
  return gsic_set(o.dim);
}

int cmd_verify(const MeasurementOptions& o, std::ostream& out) {
  std::string source;
  const auto set = load_measurement(o, source);

  const bool is_mum = std::holds_alternative<MumSet>(set);
  const auto report = is_mum ? verify_mum(std::get<MumSet>(set), o.tol)
                             : verify_gsic(std::get<GsicSet>(set), o.tol);
  nlohmann::ordered_json doc;
  doc["kind"] = is_mum ? "mum" : "gsic";
  doc["d"] = measurement_dim(set);
  doc["source"] = source;
  doc[is_mum ? "kappa" : "eta"] = round_significant(report.measured_parameter);
  const auto fields = to_json(report);
  for (const auto& [key, value] : fields.items()) doc[key] = value;
  emit_json(out, doc);
  return report.passed ? kExitOk : kExitVerificationFailed;
}

int cmd_export(const MeasurementOptions& o, std::ostream& out) {
  std::string source;
  const auto set = load_measurement(o, source);
  emit(out, o.out, measurement_to_json(set).dump(2) + "\n");
  return kExitOk;
}

// ---- evaluate / threshold / sweep ----

struct EvaluateOptions {
  FamilyOptions family;
  std::optional<double> p;
  std::string rho_file;
};

int cmd_evaluate(const EvaluateOptions& o, std::ostream& out) {
  const SkewOrder order(o.family.s);
  require_criterion_order(order);
  nlohmann::ordered_json doc;
  CriterionReport report;
  if (!o.rho_file.empty()) {
    if (!o.family.family.empty()) throw ParameterError("--rho-file replaces --family");
    if (o.p) throw ParameterError("--p does not apply to --rho-file");
    if (o.family.parties == 0 || o.family.local_dim == 0) {
      throw ParameterError("--rho-file needs --N and --d");
    }
    std::optional<MeasurementSet> set;
    if (!o.family.measurement_file.empty()) {
      set = read_measurement_file(o.family.measurement_file);
    } else if (o.family.measurement == "mum") {
      set = mub_set(o.family.local_dim);
    } else {
      set = gsic_set(o.family.local_dim);
    }
    const CriterionEvaluator evaluator(*set, o.family.parties);
    if (evaluator.local_dim() != o.family.local_dim) {
      throw ParameterError("measurement set dimension does not match --d");
    }
    report = evaluator.evaluate(read_rho_file(o.rho_file), order);
    doc = to_json(report);
    doc["state"] = "density_matrix";
    doc["provenance"] = "dense";
  } else {
    if (!o.p) throw ParameterError("--p is required");
    const auto spec = build_spec(o.family);
    const FamilyEvaluator evaluator(spec, build_path(o.family));
    report = evaluator.evaluate(*o.p);
    doc = to_json(report);
    doc["state"] = to_string(spec.family);
    doc["p"] = *o.p;
    doc["provenance"] = to_string(evaluator.provenance());
  }
  emit_json(out, doc);
  return report.verdict == Verdict::Inconclusive ? kExitOk : kExitEntangled;
}

int cmd_threshold(const FamilyOptions& o, double tol, std::ostream& out) {
  const auto spec = build_spec(o);
  const auto result = find_threshold(FamilyEvaluator(spec, build_path(o)), tol);
  auto doc = to_json(spec);
  const auto fields = to_json(result);
  for (const auto& [key, value] : fields.items()) doc[key] = value;
  emit_json(out, doc);
  return result.p_star ? kExitOk : kExitNoCrossing;
}

int cmd_sweep(const FamilyOptions& o, const std::string& grid_text, const std::string& format,
              const std::string& path, std::ostream& out) {
  const auto spec = build_spec(o);
  const auto grid = parse_grid(grid_text);
  const auto rows = sweep(FamilyEvaluator(spec, build_path(o)), grid);
  std::ostringstream text;
  if (format == "csv") {
    write_sweep_csv(text, rows);
  } else {
    auto doc = to_json(spec);
    auto& list = doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      auto entry = to_json(row.report);
      entry["p"] = row.p;
      list.push_back(std::move(entry));
    }
    text << doc.dump(2) << '\n';
  }
  emit(out, path, text.str());
  return kExitOk;
}

// ---- table ----

std::size_t display_width(const std::string& text) {
  std::size_t width = 0;
  for (const unsigned char c : text) width += (c & 0xC0) != 0x80 ? 1 : 0;
  return width;
}

std::string pad(const std::string& text, std::size_t width) {
  const std::size_t used = display_width(text);
  return text + std::string(used < width ? width - used : 1, ' ');
}

std::string threshold_cell(StateFamily family, std::size_t parties, MeasurementKind kind,
                           Detector detector, bool& analytic_used) {
  const auto spec = make_family_spec(family, parties, kind, detector, -1.0);
  const auto result = find_threshold(FamilyEvaluator(spec));
  if (!result.p_star) return "✗ no detection";
  std::string cell = "p > " + format_fixed(*result.p_star, 4);
  if (result.provenance == MomentProvenance::Analytic) {
    cell += " *";
    analytic_used = true;
  }
  return cell;
}

std::string table_one() {
  constexpr std::size_t kCol = 19;
  std::ostringstream text;
  text << "Table I: white-noise thresholds with complete MUBs (kappa = 1), s = -1\n"
       << "rho1(p) = p |D_N><D_N| + (1-p)/2^N 1    (qubits, ceil(N/2) excitations)\n"
       << "rho2(p) = p |S_N><S_N| + (1-p)/N^N 1    (antisymmetric, d = N)\n"
       << "a cell 'p > x' means the criterion detects entanglement for x < p <= 1\n\n";
  text << pad("N", 4) << pad("state", 7) << pad("skew criterion", kCol)
       << pad("variance criterion", kCol) << "external criterion\n";
  bool analytic_used = false;
  for (const std::size_t n : {3u, 4u, 5u, 8u, 9u}) {
    for (const auto& [family, label] :
         {std::pair{StateFamily::Dicke, "rho1"}, std::pair{StateFamily::Antisym, "rho2"}}) {
      text << pad(std::to_string(n), 4) << pad(label, 7);
      for (const auto detector : {Detector::Skew, Detector::Variance}) {
        text << pad(threshold_cell(family, n, MeasurementKind::Mum, detector, analytic_used),
                    kCol);
      }
      text << "n/a — external\n";
    }
  }
  if (analytic_used) text << "\n* computed from analytic moments (state vector not materialized)\n";
  return text.str();
}

std::string table_two() {
  constexpr std::size_t kCol = 8;
  std::ostringstream text;
  text << "Table II: rho3(p) = p |W_N><W_N| + (1-p)/2^N 1 with the qubit GSIC (eta = 1/4), "
          "s = -1\n"
       << "the skew criterion detects entanglement for p_N < p <= 1\n\n";
  std::string header = pad("N", 6);
  std::string row = pad("p_N", 6);
  bool analytic_used = false;
  for (std::size_t n = 3; n <= 7; ++n) {
    header += pad(std::to_string(n), kCol);
    std::string cell = threshold_cell(StateFamily::W, n, MeasurementKind::Gsic, Detector::Skew,
                                      analytic_used);
    if (cell.rfind("p > ", 0) == 0) cell = cell.substr(4);
    row += pad(cell, kCol);
  }
  auto trim = [](std::string s) {
    s.erase(s.find_last_not_of(' ') + 1);
    return s;
  };
  text << trim(header) << '\n' << trim(row) << '\n';
  return text.str();
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement witnesses from skew information and variance"};
  app.name("entwitness");
  app.require_subcommand(1);
  std::optional<std::string> dense_limit_flag;
  app.add_option("--dense-limit", dense_limit_flag,
                 "Largest dense dimension d^N (overrides ENTWITNESS_DENSE_LIMIT)");

  MeasurementOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Check the defining relations of a measurement set");
  verify->add_option("--kind", verify_opts.kind)->check(CLI::IsMember({"mum", "gsic"}));
  verify->add_option("--d", verify_opts.dim);
  verify->add_option("--file", verify_opts.file, "Measurement set JSON");
  verify->add_flag("--printed", verify_opts.printed, "Use the MUB tables without errata");
  verify->add_option("--tol", verify_opts.tol)->capture_default_str();

  EvaluateOptions eval_opts;
  auto* evaluate = app.add_subcommand("evaluate", "Evaluate both criteria for one state");
  add_family_options(evaluate, eval_opts.family, false);
  evaluate->add_option("--p", eval_opts.p, "White-noise visibility in [0, 1]");
  evaluate->add_option("--rho-file", eval_opts.rho_file,
                       "Dense density matrix JSON {\"matrix\": [[[re, im], ...], ...]}");

  FamilyOptions threshold_opts;
  double threshold_tol = kDefaultThresholdTolerance;
  auto* threshold = app.add_subcommand("threshold", "Find the critical visibility p*");
  add_family_options(threshold, threshold_opts, true);
  threshold->add_option("--tol", threshold_tol, "Final bracket width")->capture_default_str();

  FamilyOptions sweep_opts;
  std::string grid_text;
  std::string sweep_format = "csv";
  std::string sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate the criteria along a grid of p");
  add_family_options(sweep_cmd, sweep_opts, false);
  sweep_cmd->add_option("--grid", grid_text, "start:stop:steps")->required();
  sweep_cmd->add_option("--format", sweep_format)
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep_out, "Output file (default: standard output)");

  std::string table_name;
  auto* table = app.add_subcommand("table", "Recompute the threshold tables");
  table->add_option("--table", table_name)->required()->check(CLI::IsMember({"I", "II"}));

  MeasurementOptions export_opts;
  auto* export_cmd =
      app.add_subcommand("export-measurements", "Write a measurement set as JSON");
  export_cmd->add_option("--kind", export_opts.kind)->check(CLI::IsMember({"mum", "gsic"}));
  export_cmd->add_option("--d", export_opts.dim);
  export_cmd->add_flag("--printed", export_opts.printed, "Use the MUB tables without errata");
  export_cmd->add_option("--out", export_opts.out, "Output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (const char* env = std::getenv(kDenseLimitEnv); env != nullptr && *env != '\0') {
    set_dense_limit(parse_limit(env, kDenseLimitEnv));
  }
  if (dense_limit_flag) set_dense_limit(parse_limit(*dense_limit_flag, "--dense-limit"));

  if (verify->parsed()) return cmd_verify(verify_opts, out);
  if (evaluate->parsed()) return cmd_evaluate(eval_opts, out);
  if (threshold->parsed()) return cmd_threshold(threshold_opts, threshold_tol, out);
  if (sweep_cmd->parsed()) {
    return cmd_sweep(sweep_opts, grid_text, sweep_format, sweep_out, out);
  }
  if (table->parsed()) {
    out << (table_name == "I" ? table_one() : table_two());
    return kExitOk;
  }
  return cmd_export(export_opts, out);
}

}  // namespace

int exit_code_for(const std::exception& error) {
  if (dynamic_cast<const IoError*>(&error)) return kExitIo;
  if (dynamic_cast<const ParameterError*>(&error) || dynamic_cast<const DimensionError*>(&error) ||
      dynamic_cast<const UnsupportedDimensionError*>(&error) ||
      dynamic_cast<const CapacityError*>(&error)) {
    return kExitUsage;
  }
  return kExitFailure;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const DenseLimitGuard guard;
  try {
    return dispatch(argc, argv, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("entwitness");
  for (const auto& arg : args) argv.push_back(arg.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace entwitness::cli
