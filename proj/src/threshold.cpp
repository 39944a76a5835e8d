#include "entwitness/threshold.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "entwitness/errors.hpp"
#include "entwitness/format.hpp"
#include "entwitness/measurements.hpp"
#include "entwitness/states.hpp"

namespace entwitness {
namespace {

MeasurementSet measurement_for(const FamilySpec& spec) {
  if (spec.measurement_set) return *spec.measurement_set;
  if (spec.measurement == MeasurementKind::Mum) return mub_set(spec.local_dim);
  return gsic_set(spec.local_dim);
}

MomentMode resolve_mode(const FamilySpec& spec) {
  if (spec.moments != MomentMode::Auto) return spec.moments;
  if (spec.family == StateFamily::Antisym && spec.parties > kMaxDefaultDenseAntisym) {
    return MomentMode::Analytic;
  }
  return MomentMode::Dense;
}

NoisyPureState template_state(const FamilySpec& spec) {
  const MomentMode mode = resolve_mode(spec);
  if (mode == MomentMode::Analytic) return NoisyPureState(antisym_moments(spec.parties), 1.0);
  switch (spec.family) {
    case StateFamily::Dicke:
      return NoisyPureState(dicke_state(spec.parties), 1.0);
    case StateFamily::W:
      return NoisyPureState(w_state(spec.parties), 1.0);
    case StateFamily::Antisym:
      return NoisyPureState(antisym_state(spec.parties), 1.0);
    case StateFamily::TwoQutrit:
      return NoisyPureState(two_qutrit_psi(), 1.0);
    case StateFamily::Custom:
      break;
  }
  return NoisyPureState(*spec.custom_state, 1.0);
}

void require_unit_interval(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError(std::string(what) + " must lie in [0, 1], got " + std::to_string(p));
  }
}

std::string format_g15(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.15g", x);
  return buffer;
}

template <typename T>
T parse_number(std::string_view text, const char* what) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParameterError(std::string("invalid ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

const char* to_string(StateFamily family) {
  switch (family) {
    case StateFamily::Dicke:
      return "dicke";
    case StateFamily::W:
      return "w";
    case StateFamily::Antisym:
      return "antisym";
    case StateFamily::TwoQutrit:
      return "two_qutrit";
    case StateFamily::Custom:
      break;
  }
  return "custom";
}

const char* to_string(Detector detector) {
  return detector == Detector::Skew ? "skew" : "variance";
}

const char* to_string(MomentMode mode) {
  switch (mode) {
    case MomentMode::Dense:
      return "dense";
    case MomentMode::Analytic:
      return "analytic";
    case MomentMode::Auto:
      break;
  }
  return "auto";
}

std::optional<StateFamily> parse_state_family(std::string_view text) {
  for (const auto f : {StateFamily::Dicke, StateFamily::W, StateFamily::Antisym,
                       StateFamily::TwoQutrit, StateFamily::Custom}) {
    if (text == to_string(f)) return f;
  }
  return std::nullopt;
}

std::optional<Detector> parse_detector(std::string_view text) {
  if (text == "skew") return Detector::Skew;
  if (text == "variance") return Detector::Variance;
  return std::nullopt;
}

std::optional<MomentMode> parse_moment_mode(std::string_view text) {
  for (const auto m : {MomentMode::Auto, MomentMode::Dense, MomentMode::Analytic}) {
    if (text == to_string(m)) return m;
  }
  return std::nullopt;
}

FamilySpec make_family_spec(StateFamily family, std::size_t parties, MeasurementKind measurement,
                            Detector detector, double s) {
  FamilySpec spec;
  spec.family = family;
  spec.parties = parties;
  spec.measurement = measurement;
  spec.detector = detector;
  spec.order = SkewOrder(s);
  switch (family) {
    case StateFamily::Dicke:
    case StateFamily::W:
      spec.local_dim = 2;
      break;
    case StateFamily::Antisym:
      spec.local_dim = parties;
      break;
    case StateFamily::TwoQutrit:
      spec.local_dim = 3;
      if (spec.parties == 0) spec.parties = 2;
      break;
    case StateFamily::Custom:
      break;
  }
  return spec;
}

void validate(const FamilySpec& spec) {
  require_criterion_order(spec.order);
  const std::string name = to_string(spec.family);
  switch (spec.family) {
    case StateFamily::Dicke:
    case StateFamily::W:
      if (spec.local_dim != 2) throw ParameterError(name + " states are qubit states (d = 2)");
      if (spec.parties < (spec.family == StateFamily::W ? 3u : 2u)) {
        throw ParameterError(name + " state needs N >= " +
                             (spec.family == StateFamily::W ? std::string("3") : "2"));
      }
      break;
    case StateFamily::Antisym:
      if (spec.parties < 2 || spec.local_dim != spec.parties) {
        throw ParameterError("antisym needs N >= 2 and d = N");
      }
      break;
    case StateFamily::TwoQutrit:
      if (spec.local_dim != 3 || spec.parties != 2) {
        throw ParameterError("two_qutrit fixes d = 3 and N = 2");
      }
      break;
    case StateFamily::Custom: {
      if (!spec.custom_state) throw ParameterError("custom family needs a state vector");
      const auto expected = checked_power(spec.local_dim, spec.parties);
      if (spec.local_dim < 2 || spec.parties < 1 || !expected ||
          *expected != spec.custom_state->dim()) {
        throw ParameterError("custom state dimension " +
                             std::to_string(spec.custom_state->dim()) + " is not d^N");
      }
      break;
    }
  }
  if (spec.measurement_set) {
    const bool is_mum = std::holds_alternative<MumSet>(*spec.measurement_set);
    const std::size_t dim = is_mum ? std::get<MumSet>(*spec.measurement_set).dim()
                                   : std::get<GsicSet>(*spec.measurement_set).dim();
    if (is_mum != (spec.measurement == MeasurementKind::Mum) || dim != spec.local_dim) {
      throw ParameterError("supplied measurement set does not match the requested kind and d");
    }
  }
  if (spec.family != StateFamily::Custom && spec.custom_state) {
    throw ParameterError("a state vector is only accepted for the custom family");
  }
  if (spec.family != StateFamily::Antisym && spec.moments == MomentMode::Analytic) {
    throw ParameterError("analytic moments are only available for the antisym family");
  }
  if (spec.family == StateFamily::Antisym && spec.moments == MomentMode::Dense &&
      spec.parties > kMaxDefaultDenseAntisym && !spec.allow_heavy) {
    throw ParameterError("dense moments for antisym N > " +
                         std::to_string(kMaxDefaultDenseAntisym) + " need --allow-heavy");
  }
}

FamilyEvaluator::FamilyEvaluator(FamilySpec spec, EvaluationPath path)
    : spec_((validate(spec), std::move(spec))),
      path_(path),
      evaluator_(measurement_for(spec_), spec_.parties) {
  state_.emplace(template_state(spec_));
  provenance_ = state_->provenance();
  if (path_ == EvaluationPath::DenseMatrix) {
    if (!state_->pure_state()) {
      throw ParameterError("the dense-matrix path needs a dense state vector");
    }
    if (state_->total_dim() > dense_limit()) {
      throw CapacityError("dimension " + std::to_string(state_->total_dim()) +
                          " exceeds the dense limit " + std::to_string(dense_limit()));
    }
  } else {
    moments_ = evaluator_.element_moments(*state_);
  }
}

CriterionReport FamilyEvaluator::evaluate(double p) const {
  require_unit_interval(p, "p");
  if (path_ == EvaluationPath::ClosedForm) {
    return evaluator_.evaluate_noisy(p, moments_, spec_.order);
  }
  const NoisyPureState noisy(*state_->pure_state(), p);
  return evaluator_.evaluate(noisy.materialize(), spec_.order);
}

double FamilyEvaluator::gap(double p) const {
  const auto report = evaluate(p);
  return spec_.detector == Detector::Skew ? report.lhs_skew - report.bound
                                          : report.bound - report.lhs_variance;
}

bool FamilyEvaluator::detected(double p) const { return gap(p) > verdict_margin(bound()); }

double violation_gap(const FamilySpec& spec, double p) { return FamilyEvaluator(spec).gap(p); }

ThresholdResult bisect_detection(const std::function<bool(double)>& detected, double tol) {
  if (!(tol > 0.0)) throw ParameterError("threshold tolerance must be positive");
  ThresholdResult result;
  result.tolerance = tol;

  std::vector<bool> flags(kPrescanIntervals + 1);
  for (std::size_t k = 0; k <= kPrescanIntervals; ++k) {
    flags[k] = detected(static_cast<double>(k) / kPrescanIntervals);
  }
  std::vector<std::size_t> crossings;
  for (std::size_t k = 0; k < kPrescanIntervals; ++k) {
    if (flags[k] != flags[k + 1]) crossings.push_back(k);
  }
  if (flags.front()) throw StructureError("criterion reports detection at p = 0");
  if (crossings.empty()) return result;
  if (crossings.size() > 1) {
    std::string where;
    for (const auto k : crossings) {
      where += (where.empty() ? "" : ", ") +
               format_fixed(static_cast<double>(k) / kPrescanIntervals, 6) + ".." +
               format_fixed(static_cast<double>(k + 1) / kPrescanIntervals, 6);
    }
    throw StructureError("detection flips " + std::to_string(crossings.size()) +
                         " times on [0, 1], in intervals " + where);
  }

  double lo = static_cast<double>(crossings.front()) / kPrescanIntervals;
  double hi = static_cast<double>(crossings.front() + 1) / kPrescanIntervals;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (detected(mid) ? hi : lo) = mid;
    ++result.iterations;
  }
  result.p_low = lo;
  result.p_high = hi;
  result.p_star = 0.5 * (lo + hi);
  return result;
}

ThresholdResult find_threshold(const FamilyEvaluator& evaluator, double tol) {
  auto result = bisect_detection([&](double p) { return evaluator.detected(p); }, tol);
  result.detector = evaluator.spec().detector;
  result.provenance = evaluator.provenance();
  return result;
}

ThresholdResult find_threshold(const FamilySpec& spec, double tol) {
  return find_threshold(FamilyEvaluator(spec), tol);
}

std::vector<SweepRow> sweep(const FamilyEvaluator& evaluator, std::vector<double> grid) {
  for (const double p : grid) require_unit_interval(p, "grid point");
  std::stable_sort(grid.begin(), grid.end());
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (const double p : grid) rows.push_back({p, evaluator.evaluate(p)});
  return rows;
}

std::vector<SweepRow> sweep(const FamilySpec& spec, std::vector<double> grid) {
  return sweep(FamilyEvaluator(spec), std::move(grid));
}

std::vector<double> parse_grid(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
    throw ParameterError("grid must look like start:stop:steps, got '" + std::string(text) + "'");
  }
  const auto start = parse_number<double>(text.substr(0, first), "grid start");
  const auto stop = parse_number<double>(text.substr(first + 1, second - first - 1), "grid stop");
  const auto steps = parse_number<std::size_t>(text.substr(second + 1), "grid step count");
  require_unit_interval(start, "grid start");
  require_unit_interval(stop, "grid stop");
  if (start > stop) throw ParameterError("grid start must not exceed grid stop");
  if (steps == 0) throw ParameterError("grid needs at least one point");
  if (steps == 1) return {start};
  std::vector<double> grid(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    grid[k] = start + (stop - start) * static_cast<double>(k) / static_cast<double>(steps - 1);
  }
  grid.back() = stop;
  return grid;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "p,lhs_skew,lhs_variance,bound,verdict\n";
  for (const auto& row : rows) {
    out << format_g15(row.p) << ',' << format_g15(row.report.lhs_skew) << ','
        << format_g15(row.report.lhs_variance) << ',' << format_g15(row.report.bound) << ','
        << to_string(row.report.verdict) << '\n';
  }
}

nlohmann::ordered_json to_json(const FamilySpec& spec) {
  nlohmann::ordered_json doc;
  doc["family"] = to_string(spec.family);
  doc["N"] = spec.parties;
  doc["d"] = spec.local_dim;
  doc["measurement"] = to_string(spec.measurement);
  doc["detector"] = to_string(spec.detector);
  doc["s"] = spec.order.value();
  return doc;
}

nlohmann::ordered_json to_json(const ThresholdResult& result) {
  nlohmann::ordered_json doc;
  doc["detector"] = to_string(result.detector);
  doc["provenance"] = to_string(result.provenance);
  if (result.p_star) {
    doc["p_star"] = *result.p_star;
    doc["p_star_4dp"] = format_fixed(*result.p_star, 4);
  } else {
    doc["p_star"] = nullptr;
    doc["p_star_4dp"] = nullptr;
  }
  doc["bracket"] = {result.p_low, result.p_high};
  doc["iterations"] = result.iterations;
  doc["tolerance"] = result.tolerance;
  return doc;
}

}  // namespace entwitness
