#pragma once

// Separability criteria built from complete MUM sets and GSICs. For a fully
// separable N-party state,
//   sum I^s(rho, sum_i M_i) <= bound <= sum V(rho, sum_i M_i),
// with bound N kappa d - N (MUM) or N d eta - N (eta d^2 + 1)/(d(d+1)) (GSIC).

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entwitness/info_measures.hpp"
#include "entwitness/linalg.hpp"
#include "entwitness/measurements.hpp"
#include "json.hpp"

namespace entwitness {

enum class MeasurementKind { Mum, Gsic };
enum class Verdict { EntangledBySkew, EntangledByVariance, Inconclusive };

const char* to_string(MeasurementKind kind);
const char* to_string(Verdict verdict);
std::optional<MeasurementKind> parse_measurement_kind(std::string_view text);
std::optional<Verdict> parse_verdict(std::string_view text);

struct CriterionReport {
  MeasurementKind family = MeasurementKind::Mum;
  std::size_t parties = 0;
  std::size_t local_dim = 0;
  double s = 0.0;
  double parameter = 0.0;  // measured kappa or eta
  double lhs_skew = 0.0;
  double lhs_variance = 0.0;
  double bound = 0.0;
  Verdict verdict = Verdict::Inconclusive;
};

// 1e-9 * max(1, |bound|).
double verdict_margin(double bound);

// Throws InvariantError when lhs_skew exceeds lhs_variance by more than
// 1e-9 * max(1, |lhs_variance|).
Verdict classify(double lhs_skew, double lhs_variance, double bound);

double mum_bound(std::size_t parties, double kappa, std::size_t local_dim);
double gsic_bound(std::size_t parties, double eta, std::size_t local_dim);

// The criteria are only proven for -1 <= s <= 0; throws ParameterError
// otherwise.
void require_criterion_order(const SkewOrder& order);

// A verified measurement set applied identically at each of N parties.
class CriterionEvaluator {
 public:
  // Verifies the set at kMeasurementTolerance and throws InvariantError on
  // failure, including a claimed kappa/eta that disagrees with the fit.
  CriterionEvaluator(MeasurementSet set, std::size_t parties);

  MeasurementKind kind() const { return kind_; }
  std::size_t local_dim() const { return local_dim_; }
  std::size_t parties() const { return parties_; }
  std::uint64_t total_dim() const { return observables_.front().total_dim(); }
  double parameter() const { return parameter_; }
  double bound() const { return bound_; }
  const std::vector<CollectiveObservable>& observables() const { return observables_; }

  CriterionReport evaluate(const DensityMatrix& rho, const SkewOrder& order) const;
  CriterionReport evaluate(const NoisyPureState& state, const SkewOrder& order) const;

  // <psi|X|psi>, <psi|X^2|psi> for every collective element, in set order.
  std::vector<PureMoments> element_moments(const NoisyPureState& state) const;
  // Noisy evaluation from precomputed element moments.
  CriterionReport evaluate_noisy(double p, const std::vector<PureMoments>& moments,
                                 const SkewOrder& order) const;

 private:
  CriterionReport make_report(double lhs_skew, double lhs_variance, const SkewOrder& order) const;

  MeasurementKind kind_;
  std::size_t local_dim_;
  std::size_t parties_;
  double parameter_;
  double bound_;
  std::vector<CollectiveObservable> observables_;
};

CriterionReport mum_criterion(const DensityMatrix& rho, const MumSet& mums, std::size_t parties,
                              const SkewOrder& order);
CriterionReport mum_criterion(const NoisyPureState& state, const MumSet& mums,
                              std::size_t parties, const SkewOrder& order);
CriterionReport gsic_criterion(const DensityMatrix& rho, const GsicSet& gsic,
                               std::size_t parties, const SkewOrder& order);
CriterionReport gsic_criterion(const NoisyPureState& state, const GsicSet& gsic,
                               std::size_t parties, const SkewOrder& order);

// {"family", "N", "d", "s", "kappa"|"eta", "lhs_skew", "lhs_variance",
//  "bound", "verdict"}; reals rounded to 15 significant digits.
nlohmann::ordered_json to_json(const CriterionReport& report);

}  // namespace entwitness
