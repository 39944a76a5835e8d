#pragma once

// Skew information of order s, variance, and the closed-form path for
// white-noise mixtures rho = p |psi><psi| + (1-p)/D 1.

#include <cstdint>
#include <memory>
#include <optional>

#include "entwitness/linalg.hpp"

namespace entwitness {

// Order s of the f_s family: any s <= 0 including -infinity. s = 0 and
// s = -infinity are dispatched to their limits (geometric mean, minimum).
class SkewOrder {
 public:
  // Throws ParameterError for NaN or s > 0.
  explicit SkewOrder(double s);
  static SkewOrder minus_infinity();

  double value() const { return s_; }
  bool is_zero() const { return s_ == 0.0; }
  bool is_minus_infinity() const;

 private:
  double s_;
};

// ((a^s + b^s)/2)^(1/s); 0 when a or b is 0.
double f_s(double a, double b, const SkewOrder& order);

inline constexpr double kDegeneracyTolerance = 1e-12;
inline constexpr double kEigenvalueClipTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;

class DensityMatrix {
 public:
  // Eigenvalues in (-1e-10, 0) are clipped to 0 and the spectrum
  // renormalized; anything more negative, or |Tr rho - 1| > 1e-10, throws
  // InvariantError.
  explicit DensityMatrix(const HermitianOperator& rho);
  static DensityMatrix pure(const PureState& psi);

  std::size_t dim() const { return matrix_.dim(); }
  const HermitianOperator& matrix() const { return matrix_; }
  const RealVector& eigenvalues() const { return eigen_.values; }
  const ComplexMatrix& eigenvectors() const { return eigen_.vectors; }

 private:
  HermitianOperator matrix_;
  EigenDecomposition eigen_;
};

// Sum over l != l' of [lambda_l - f_s(lambda_l, lambda_l')] |<l|X|l'>|^2 in
// the eigenbasis of rho.
double skew_information_dense(const DensityMatrix& rho, const HermitianOperator& x,
                              const SkewOrder& order);

// Tr(rho X^2) - Tr(rho X)^2.
double variance(const DensityMatrix& rho, const HermitianOperator& x);

// <psi|X|psi> and <psi|X^2|psi>.
struct PureMoments {
  double first = 0.0;
  double second = 0.0;
};

enum class MomentProvenance { Dense, Analytic };

const char* to_string(MomentProvenance provenance);

// Pure-state moments of collective observables sum_i M_i for a fixed
// N-party state of local dimension d.
class MomentProvider {
 public:
  virtual ~MomentProvider() = default;
  virtual std::size_t local_dim() const = 0;
  virtual std::size_t parties() const = 0;
  virtual MomentProvenance provenance() const = 0;
  virtual PureMoments moments(const HermitianOperator& local) const = 0;
};

// The two-point spectrum of p |psi><psi| + (1-p)/D 1.
struct NoisySpectrum {
  double top = 0.0;     // p + (1-p)/D, multiplicity 1
  double bottom = 0.0;  // (1-p)/D, multiplicity D-1
};

// Throws ParameterError unless p is in [0, 1] and D >= 1.
NoisySpectrum noisy_spectrum(double p, std::uint64_t total_dim);

// lambda_1 + lambda_0 - 2 f_s(lambda_1, lambda_0): I^s = coefficient * (m2 - m1^2).
double noisy_skew_coefficient(double p, std::uint64_t total_dim, const SkewOrder& order);

class NoisyPureState {
 public:
  // Throws ParameterError unless p is in [0, 1].
  NoisyPureState(PureState psi, double p);
  NoisyPureState(std::shared_ptr<const MomentProvider> provider, double p);

  double p() const { return p_; }
  std::uint64_t total_dim() const { return total_dim_; }
  NoisySpectrum spectrum() const { return noisy_spectrum(p_, total_dim_); }
  MomentProvenance provenance() const;
  // Null for provider-backed states.
  const PureState* pure_state() const { return psi_ ? &*psi_ : nullptr; }

  // Throws DimensionError when the observable does not fit the state.
  PureMoments moments(const CollectiveObservable& x) const;
  // Needs a dense state vector; provider-backed states throw ParameterError.
  PureMoments moments(const HermitianOperator& x) const;

  // The dense rho; throws CapacityError above the dense limit.
  DensityMatrix materialize() const;

 private:
  std::optional<PureState> psi_;
  std::shared_ptr<const MomentProvider> provider_;
  double p_;
  std::uint64_t total_dim_;
};

double skew_information_noisy(double p, std::uint64_t total_dim, const PureMoments& m,
                              const SkewOrder& order);
double variance_noisy(double p, std::uint64_t total_dim, const PureMoments& m,
                      double trace_x, double trace_x2);

double skew_information_noisy(const NoisyPureState& state, const CollectiveObservable& x,
                              const SkewOrder& order);
double skew_information_noisy(const NoisyPureState& state, const HermitianOperator& x,
                              const SkewOrder& order);
double variance_noisy(const NoisyPureState& state, const CollectiveObservable& x);
double variance_noisy(const NoisyPureState& state, const HermitianOperator& x);

}  // namespace entwitness
