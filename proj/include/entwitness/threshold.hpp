#pragma once

// Critical noise levels for white-noise families
// rho(p) = p |psi><psi| + (1-p)/D 1, and raw p-sweeps of the criteria.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "entwitness/criteria.hpp"
#include "entwitness/info_measures.hpp"
#include "json.hpp"

namespace entwitness {

enum class StateFamily { Dicke, W, Antisym, TwoQutrit, Custom };
enum class Detector { Skew, Variance };
// Auto picks analytic moments for antisym N >= 6, dense otherwise.
enum class MomentMode { Auto, Dense, Analytic };
// ClosedForm uses the two-point spectrum of rho(p); DenseMatrix builds rho(p)
// and eigendecomposes it at every p.
enum class EvaluationPath { ClosedForm, DenseMatrix };

const char* to_string(StateFamily family);
const char* to_string(Detector detector);
const char* to_string(MomentMode mode);
std::optional<StateFamily> parse_state_family(std::string_view text);
std::optional<Detector> parse_detector(std::string_view text);
std::optional<MomentMode> parse_moment_mode(std::string_view text);

// Dense antisym moments above this N need allow_heavy.
inline constexpr std::size_t kMaxDefaultDenseAntisym = 5;

struct FamilySpec {
  StateFamily family = StateFamily::Dicke;
  std::size_t parties = 0;
  std::size_t local_dim = 0;
  MeasurementKind measurement = MeasurementKind::Mum;
  SkewOrder order{-1.0};
  Detector detector = Detector::Skew;
  MomentMode moments = MomentMode::Auto;
  bool allow_heavy = false;
  std::optional<PureState> custom_state;  // Custom only
  // Replaces the embedded MUB/GSIC data; kind and d must match the spec.
  std::shared_ptr<const MeasurementSet> measurement_set;
};

// Fills local_dim from the family (2 for qubit families, N for antisym, 3
// for two_qutrit, which also forces N = 2). Custom specs need local_dim set
// by the caller.
FamilySpec make_family_spec(StateFamily family, std::size_t parties, MeasurementKind measurement,
                            Detector detector, double s = -1.0);

// Throws ParameterError for inconsistent (family, d, N) or moment mode.
void validate(const FamilySpec& spec);

class FamilyEvaluator {
 public:
  explicit FamilyEvaluator(FamilySpec spec, EvaluationPath path = EvaluationPath::ClosedForm);

  const FamilySpec& spec() const { return spec_; }
  EvaluationPath path() const { return path_; }
  MomentProvenance provenance() const { return provenance_; }
  double bound() const { return evaluator_.bound(); }

  CriterionReport evaluate(double p) const;
  // lhs_skew - bound (skew detector) or bound - lhs_variance (variance
  // detector); positive means detected.
  double gap(double p) const;
  bool detected(double p) const;

 private:
  FamilySpec spec_;
  EvaluationPath path_;
  MomentProvenance provenance_ = MomentProvenance::Dense;
  CriterionEvaluator evaluator_;
  std::optional<NoisyPureState> state_;  // p = 1 template
  std::vector<PureMoments> moments_;
};

double violation_gap(const FamilySpec& spec, double p);

inline constexpr double kDefaultThresholdTolerance = 1e-8;
inline constexpr std::size_t kPrescanIntervals = 64;

struct ThresholdResult {
  std::optional<double> p_star;
  double p_low = 0.0;
  double p_high = 1.0;
  std::size_t iterations = 0;
  double tolerance = kDefaultThresholdTolerance;
  Detector detector = Detector::Skew;
  MomentProvenance provenance = MomentProvenance::Dense;
};

// Crossing search on an arbitrary detection predicate over [0, 1]; the
// detector and provenance fields are left at their defaults.
ThresholdResult bisect_detection(const std::function<bool(double)>& detected,
                                 double tol = kDefaultThresholdTolerance);

// Pre-scans p = k/64 and bisects the single undetected-to-detected crossing
// down to a bracket of width <= tol. No crossing yields an empty p_star;
// more than one crossing throws StructureError.
ThresholdResult find_threshold(const FamilyEvaluator& evaluator,
                               double tol = kDefaultThresholdTolerance);
ThresholdResult find_threshold(const FamilySpec& spec, double tol = kDefaultThresholdTolerance);

struct SweepRow {
  double p = 0.0;
  CriterionReport report;
};

// Rows sorted by p; every p must lie in [0, 1].
std::vector<SweepRow> sweep(const FamilyEvaluator& evaluator, std::vector<double> grid);
std::vector<SweepRow> sweep(const FamilySpec& spec, std::vector<double> grid);

// "start:stop:steps" -> steps evenly spaced points including both ends.
std::vector<double> parse_grid(std::string_view text);

// Header p,lhs_skew,lhs_variance,bound,verdict; LF line endings.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

nlohmann::ordered_json to_json(const FamilySpec& spec);
nlohmann::ordered_json to_json(const ThresholdResult& result);

}  // namespace entwitness
