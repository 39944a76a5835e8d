#include "entwitness/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entwitness/errors.hpp"
#include "entwitness/format.hpp"

namespace entwitness {

const char* to_string(MeasurementKind kind) {
  return kind == MeasurementKind::Mum ? "mum" : "gsic";
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::EntangledBySkew:
      return "EntangledBySkew";
    case Verdict::EntangledByVariance:
      return "EntangledByVariance";
    case Verdict::Inconclusive:
      break;
  }
  return "Inconclusive";
}

std::optional<MeasurementKind> parse_measurement_kind(std::string_view text) {
  if (text == "mum") return MeasurementKind::Mum;
  if (text == "gsic") return MeasurementKind::Gsic;
  return std::nullopt;
}

std::optional<Verdict> parse_verdict(std::string_view text) {
  for (const auto v : {Verdict::EntangledBySkew, Verdict::EntangledByVariance,
                       Verdict::Inconclusive}) {
    if (text == to_string(v)) return v;
  }
  return std::nullopt;
}

double verdict_margin(double bound) { return 1e-9 * std::max(1.0, std::abs(bound)); }

Verdict classify(double lhs_skew, double lhs_variance, double bound) {
  if (lhs_skew > lhs_variance + 1e-9 * std::max(1.0, std::abs(lhs_variance))) {
    throw InvariantError("skew sum " + std::to_string(lhs_skew) + " exceeds variance sum " +
                         std::to_string(lhs_variance));
  }
  const double margin = verdict_margin(bound);
  if (lhs_skew > bound + margin) return Verdict::EntangledBySkew;
  if (lhs_variance < bound - margin) return Verdict::EntangledByVariance;
  return Verdict::Inconclusive;
}

double mum_bound(std::size_t parties, double kappa, std::size_t local_dim) {
  const auto n = static_cast<double>(parties);
  return n * kappa * static_cast<double>(local_dim) - n;
}

double gsic_bound(std::size_t parties, double eta, std::size_t local_dim) {
  const auto n = static_cast<double>(parties);
  const auto d = static_cast<double>(local_dim);
  return n * d * eta - n * (eta * d * d + 1.0) / (d * (d + 1.0));
}

void require_criterion_order(const SkewOrder& order) {
  if (order.is_minus_infinity() || order.value() < -1.0) {
    throw ParameterError("the separability criteria hold only for -1 <= s <= 0, got s = " +
                         std::to_string(order.value()));
  }
}

CriterionEvaluator::CriterionEvaluator(MeasurementSet set, std::size_t parties)
    : parties_(parties) {
  if (parties < 1) throw ParameterError("party count must be at least 1");
  std::vector<HermitianOperator> elements;
  VerificationReport report;
  if (const auto* mum = std::get_if<MumSet>(&set)) {
    kind_ = MeasurementKind::Mum;
    local_dim_ = mum->dim();
    report = verify_mum(*mum, kMeasurementTolerance);
    elements = mum->flattened();
    bound_ = mum_bound(parties, report.measured_parameter, local_dim_);
  } else {
    const auto& gsic = std::get<GsicSet>(set);
    kind_ = MeasurementKind::Gsic;
    local_dim_ = gsic.dim();
    report = verify_gsic(gsic, kMeasurementTolerance);
    elements = gsic.elements();
    bound_ = gsic_bound(parties, report.measured_parameter, local_dim_);
  }
  if (!report.passed) {
    const auto& worst = report.worst();
    throw InvariantError(std::string("measurement set fails verification: ") + worst.relation +
                         " residual " + std::to_string(worst.residual));
  }
  parameter_ = report.measured_parameter;
  observables_.reserve(elements.size());
  for (auto& element : elements) observables_.emplace_back(std::move(element), parties);
}

CriterionReport CriterionEvaluator::make_report(double lhs_skew, double lhs_variance,
                                                const SkewOrder& order) const {
  CriterionReport report;
  report.family = kind_;
  report.parties = parties_;
  report.local_dim = local_dim_;
  report.s = order.value();
  report.parameter = parameter_;
  report.lhs_skew = lhs_skew;
  report.lhs_variance = lhs_variance;
  report.bound = bound_;
  report.verdict = classify(lhs_skew, lhs_variance, bound_);
  return report;
}

CriterionReport CriterionEvaluator::evaluate(const DensityMatrix& rho,
                                             const SkewOrder& order) const {
  require_criterion_order(order);
  if (rho.dim() != total_dim()) {
    throw DimensionError("state dimension " + std::to_string(rho.dim()) + " is not " +
                         std::to_string(local_dim_) + "^" + std::to_string(parties_));
  }
  double skew = 0.0;
  double var = 0.0;
  for (const auto& x : observables_) {
    const HermitianOperator dense = x.dense();
    skew += skew_information_dense(rho, dense, order);
    var += variance(rho, dense);
  }
  return make_report(skew, var, order);
}

std::vector<PureMoments> CriterionEvaluator::element_moments(const NoisyPureState& state) const {
  std::vector<PureMoments> out;
  out.reserve(observables_.size());
  for (const auto& x : observables_) out.push_back(state.moments(x));
  return out;
}

CriterionReport CriterionEvaluator::evaluate_noisy(double p,
                                                   const std::vector<PureMoments>& moments,
                                                   const SkewOrder& order) const {
  require_criterion_order(order);
  if (moments.size() != observables_.size()) {
    throw DimensionError("expected one moment pair per measurement element");
  }
  double skew = 0.0;
  double var = 0.0;
  for (std::size_t k = 0; k < observables_.size(); ++k) {
    const auto& x = observables_[k];
    skew += skew_information_noisy(p, x.total_dim(), moments[k], order);
    var += variance_noisy(p, x.total_dim(), moments[k], x.trace_first(), x.trace_second());
  }
  return make_report(skew, var, order);
}

CriterionReport CriterionEvaluator::evaluate(const NoisyPureState& state,
                                             const SkewOrder& order) const {
  require_criterion_order(order);
  if (state.total_dim() != total_dim()) {
    throw DimensionError("state dimension " + std::to_string(state.total_dim()) + " is not " +
                         std::to_string(local_dim_) + "^" + std::to_string(parties_));
  }
  return evaluate_noisy(state.p(), element_moments(state), order);
}

CriterionReport mum_criterion(const DensityMatrix& rho, const MumSet& mums, std::size_t parties,
                              const SkewOrder& order) {
  require_criterion_order(order);
  return CriterionEvaluator(mums, parties).evaluate(rho, order);
}

CriterionReport mum_criterion(const NoisyPureState& state, const MumSet& mums,
                              std::size_t parties, const SkewOrder& order) {
  require_criterion_order(order);
  return CriterionEvaluator(mums, parties).evaluate(state, order);
}

CriterionReport gsic_criterion(const DensityMatrix& rho, const GsicSet& gsic,
                               std::size_t parties, const SkewOrder& order) {
  require_criterion_order(order);
  return CriterionEvaluator(gsic, parties).evaluate(rho, order);
}

CriterionReport gsic_criterion(const NoisyPureState& state, const GsicSet& gsic,
                               std::size_t parties, const SkewOrder& order) {
  require_criterion_order(order);
  return CriterionEvaluator(gsic, parties).evaluate(state, order);
}

nlohmann::ordered_json to_json(const CriterionReport& report) {
  nlohmann::ordered_json doc;
  doc["family"] = to_string(report.family);
  doc["N"] = report.parties;
  doc["d"] = report.local_dim;
  doc["s"] = round_significant(report.s);
  doc[report.family == MeasurementKind::Mum ? "kappa" : "eta"] =
      round_significant(report.parameter);
  doc["lhs_skew"] = round_significant(report.lhs_skew);
  doc["lhs_variance"] = round_significant(report.lhs_variance);
  doc["bound"] = round_significant(report.bound);
  doc["verdict"] = to_string(report.verdict);
  return doc;
}

}  // namespace entwitness
