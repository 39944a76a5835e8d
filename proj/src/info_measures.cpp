#include "entwitness/info_measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "entwitness/errors.hpp"

namespace entwitness {
namespace {

constexpr double kVarianceClampTolerance = 1e-12;

double clamp_nonnegative(double value, double scale, const char* what) {
  if (value >= 0.0) return value;
  if (value >= -kVarianceClampTolerance * std::max(1.0, std::abs(scale))) return 0.0;
  throw NumericError(std::string(what) + " evaluated to " + std::to_string(value));
}

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError("noise parameter p must lie in [0, 1], got " + std::to_string(p));
  }
}

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionError("operator dimension " + std::to_string(b) +
                         " does not match state dimension " + std::to_string(a));
  }
}

}  // namespace

SkewOrder::SkewOrder(double s) : s_(s) {
  if (std::isnan(s) || s > 0.0) {
    throw ParameterError("skew order s must satisfy s <= 0, got " + std::to_string(s));
  }
}

SkewOrder SkewOrder::minus_infinity() {
  return SkewOrder(-std::numeric_limits<double>::infinity());
}

bool SkewOrder::is_minus_infinity() const { return std::isinf(s_); }

double f_s(double a, double b, const SkewOrder& order) {
  if (a <= 0.0 || b <= 0.0) return 0.0;
  if (a == b) return a;
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  if (order.is_minus_infinity()) return lo;
  if (order.is_zero()) return std::sqrt(a * b);
  // ((lo^s + hi^s)/2)^(1/s) = lo * ((1 + e^t)/2)^(1/s), t = s ln(hi/lo) <= 0.
  const double s = order.value();
  const double t = s * (std::log(hi) - std::log(lo));
  return lo * std::exp(std::log1p(0.5 * std::expm1(t)) / s);
}

DensityMatrix::DensityMatrix(const HermitianOperator& rho)
    : matrix_(rho), eigen_(hermitian_eigen(rho)) {
  const double trace = rho.trace();
  if (std::abs(trace - 1.0) > kTraceTolerance) {
    throw InvariantError("density matrix trace is " + std::to_string(trace) + ", expected 1");
  }
  // Round-off sized eigenvalues are set to exactly zero: f_s(a, eps) ~ sqrt(eps) at s = 0
  // would otherwise turn 1e-16 noise into 1e-8 errors.
  const double snap = 64.0 * std::numeric_limits<double>::epsilon() *
                      static_cast<double>(eigen_.values.size());
  bool clipped = false;
  for (Eigen::Index k = 0; k < eigen_.values.size(); ++k) {
    double& lambda = eigen_.values(k);
    if (lambda > snap || lambda == 0.0) continue;
    if (lambda <= -kEigenvalueClipTolerance) {
      throw InvariantError("density matrix has eigenvalue " + std::to_string(lambda));
    }
    lambda = 0.0;
    clipped = true;
  }
  if (clipped) {
    eigen_.values /= eigen_.values.sum();
    matrix_ = HermitianOperator(eigen_.vectors * eigen_.values.cast<Complex>().asDiagonal() *
                                eigen_.vectors.adjoint());
  }
}

DensityMatrix DensityMatrix::pure(const PureState& psi) {
  return DensityMatrix(HermitianOperator::projector(psi.amplitudes()));
}

double skew_information_dense(const DensityMatrix& rho, const HermitianOperator& x,
                              const SkewOrder& order) {
  require_same_dim(rho.dim(), x.dim());
  const auto& lambda = rho.eigenvalues();
  const ComplexMatrix y = rho.eigenvectors().adjoint() * x.matrix() * rho.eigenvectors();
  const Eigen::Index n = lambda.size();
  // Each unordered pair contributes (lambda_l + lambda_l' - 2 f_s) |y_ll'|^2.
  double total = 0.0;
  for (Eigen::Index l = 0; l < n; ++l) {
    double row = 0.0;
    for (Eigen::Index m = l + 1; m < n; ++m) {
      if (std::abs(lambda(l) - lambda(m)) <= kDegeneracyTolerance) continue;
      const double weight = lambda(l) + lambda(m) - 2.0 * f_s(lambda(l), lambda(m), order);
      row += weight * std::norm(y(l, m));
    }
    total += row;
  }
  return clamp_nonnegative(total, total, "skew information");
}

double variance(const DensityMatrix& rho, const HermitianOperator& x) {
  require_same_dim(rho.dim(), x.dim());
  const ComplexMatrix rx = rho.matrix().matrix() * x.matrix();
  const double mean = rx.trace().real();
  const double second = (rx * x.matrix()).trace().real();
  return clamp_nonnegative(second - mean * mean, second, "variance");
}

const char* to_string(MomentProvenance provenance) {
  return provenance == MomentProvenance::Analytic ? "analytic" : "dense";
}

NoisySpectrum noisy_spectrum(double p, std::uint64_t total_dim) {
  require_probability(p);
  if (total_dim == 0) throw ParameterError("total dimension must be positive");
  const double floor = (1.0 - p) / static_cast<double>(total_dim);
  return {p + floor, floor};
}

double noisy_skew_coefficient(double p, std::uint64_t total_dim, const SkewOrder& order) {
  const auto spectrum = noisy_spectrum(p, total_dim);
  if (spectrum.top - spectrum.bottom <= kDegeneracyTolerance) return 0.0;
  return spectrum.top + spectrum.bottom - 2.0 * f_s(spectrum.top, spectrum.bottom, order);
}

NoisyPureState::NoisyPureState(PureState psi, double p)
    : psi_(std::move(psi)), p_(p), total_dim_(psi_->dim()) {
  require_probability(p);
}

NoisyPureState::NoisyPureState(std::shared_ptr<const MomentProvider> provider, double p)
    : provider_(std::move(provider)), p_(p), total_dim_(0) {
  require_probability(p);
  if (!provider_) throw ParameterError("moment provider must not be null");
  const auto total = checked_power(provider_->local_dim(), provider_->parties());
  if (!total) throw CapacityError("d^N overflows 64 bits");
  total_dim_ = *total;
}

MomentProvenance NoisyPureState::provenance() const {
  return provider_ ? provider_->provenance() : MomentProvenance::Dense;
}

PureMoments NoisyPureState::moments(const CollectiveObservable& x) const {
  if (provider_) {
    if (provider_->local_dim() != x.local_dim() || provider_->parties() != x.parties()) {
      throw DimensionError("collective observable shape does not match the state");
    }
    return provider_->moments(x.local());
  }
  if (x.total_dim() != total_dim_) {
    throw DimensionError("collective observable dimension " + std::to_string(x.total_dim()) +
                         " does not match state dimension " + std::to_string(total_dim_));
  }
  const auto& amplitudes = psi_->amplitudes();
  const ComplexVector y = x.apply(amplitudes);
  return {amplitudes.dot(y).real(), y.squaredNorm()};
}

PureMoments NoisyPureState::moments(const HermitianOperator& x) const {
  if (!psi_) {
    throw ParameterError("plain operators need a dense state vector; use a collective observable");
  }
  require_same_dim(psi_->dim(), x.dim());
  const auto& amplitudes = psi_->amplitudes();
  const ComplexVector y = x.matrix() * amplitudes;
  return {amplitudes.dot(y).real(), y.squaredNorm()};
}

DensityMatrix NoisyPureState::materialize() const {
  if (!psi_) throw ParameterError("provider-backed states cannot be materialized");
  if (total_dim_ > dense_limit()) {
    throw CapacityError("dimension " + std::to_string(total_dim_) + " exceeds the dense limit " +
                        std::to_string(dense_limit()));
  }
  const auto& a = psi_->amplitudes();
  ComplexMatrix rho = p_ * (a * a.adjoint());
  rho.diagonal().array() += (1.0 - p_) / static_cast<double>(total_dim_);
  return DensityMatrix(HermitianOperator(std::move(rho)));
}

double skew_information_noisy(double p, std::uint64_t total_dim, const PureMoments& m,
                              const SkewOrder& order) {
  const double pure_variance = clamp_nonnegative(m.second - m.first * m.first, m.second,
                                                 "pure-state variance");
  return noisy_skew_coefficient(p, total_dim, order) * pure_variance;
}

double variance_noisy(double p, std::uint64_t total_dim, const PureMoments& m, double trace_x,
                      double trace_x2) {
  require_probability(p);
  const auto dim = static_cast<double>(total_dim);
  const double mean = p * m.first + (1.0 - p) * trace_x / dim;
  const double second = p * m.second + (1.0 - p) * trace_x2 / dim;
  return clamp_nonnegative(second - mean * mean, second, "variance");
}

double skew_information_noisy(const NoisyPureState& state, const CollectiveObservable& x,
                              const SkewOrder& order) {
  return skew_information_noisy(state.p(), state.total_dim(), state.moments(x), order);
}

double skew_information_noisy(const NoisyPureState& state, const HermitianOperator& x,
                              const SkewOrder& order) {
  return skew_information_noisy(state.p(), state.total_dim(), state.moments(x), order);
}

double variance_noisy(const NoisyPureState& state, const CollectiveObservable& x) {
  return variance_noisy(state.p(), state.total_dim(), state.moments(x), x.trace_first(),
                        x.trace_second());
}

double variance_noisy(const NoisyPureState& state, const HermitianOperator& x) {
  return variance_noisy(state.p(), state.total_dim(), state.moments(x), x.trace(),
                        x.trace_of_square());
}

}  // namespace entwitness
