#pragma once

// Dense complex linear algebra shared by every module: validated Hermitian
// operators and pure states, tensor embedding of local observables, and the
// Hermitian eigendecomposition.
//
// Basis ordering for multipartite spaces is |i_1 i_2 ... i_N> with i_1 the
// most significant digit, i.e. site 1 is the leftmost tensor factor.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>

#include <Eigen/Dense>

namespace entwitness {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermiticityTolerance = 1e-10;
inline constexpr double kNormTolerance = 1e-10;
inline constexpr std::size_t kDefaultDenseLimit = std::size_t{1} << 20;

// Process-wide cap on the total Hilbert-space dimension that may be
// materialized densely (state vectors and matrices alike).
std::size_t dense_limit();
void set_dense_limit(std::size_t limit);

// base^exponent, or nullopt when the result does not fit in 64 bits.
std::optional<std::uint64_t> checked_power(std::uint64_t base, std::uint64_t exponent);

// d^n as a dense dimension; throws CapacityError above dense_limit().
std::size_t dense_dimension(std::size_t local_dim, std::size_t parties);

// Largest absolute entry.
double max_abs(const ComplexMatrix& m);

class HermitianOperator {
 public:
  // Throws DimensionError for non-square input and InvariantError when
  // ||m - m^dagger||_max exceeds kHermiticityTolerance.
  explicit HermitianOperator(ComplexMatrix m);

  static HermitianOperator identity(std::size_t dim);
  // |v><v| scaled by `weight`.
  static HermitianOperator projector(const ComplexVector& v, double weight = 1.0);

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }

  double trace() const;
  double trace_of_square() const;

 private:
  ComplexMatrix matrix_;
};

class PureState {
 public:
  // Throws InvariantError unless | ||amplitudes|| - 1 | <= kNormTolerance.
  explicit PureState(ComplexVector amplitudes);

  // Normalizes first; throws InvariantError for the zero vector.
  static PureState normalized(ComplexVector amplitudes);

  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const ComplexVector& amplitudes() const { return amplitudes_; }

 private:
  ComplexVector amplitudes_;
};

// 1 (x) ... (x) M (x) ... (x) 1 with M at `site` (1-based) of `parties`.
HermitianOperator embed_local(const HermitianOperator& local, std::size_t site,
                              std::size_t parties);

// (sum_i M_i) |psi> without forming the d^N x d^N operator. Sites are
// accumulated in increasing order.
ComplexVector apply_collective(const ComplexMatrix& local, std::size_t parties,
                               const ComplexVector& psi);

// sum_i 1 (x) ... (x) M_i (x) ... (x) 1 with the same M at every site. The
// analytic trace moments never materialize the operator.
class CollectiveObservable {
 public:
  // Throws CapacityError only when d^N overflows 64 bits.
  CollectiveObservable(HermitianOperator local, std::size_t parties);

  const HermitianOperator& local() const { return local_; }
  std::size_t local_dim() const { return local_.dim(); }
  std::size_t parties() const { return parties_; }
  std::uint64_t total_dim() const { return total_dim_; }

  // Throws CapacityError above dense_limit().
  HermitianOperator dense() const;

  // Tr(sum_i M_i) = N d^(N-1) Tr M
  double trace_first() const;
  // Tr((sum_i M_i)^2) = N d^(N-1) Tr M^2 + N(N-1) d^(N-2) (Tr M)^2
  double trace_second() const;

  ComplexVector apply(const ComplexVector& psi) const;

 private:
  HermitianOperator local_;
  std::size_t parties_;
  std::uint64_t total_dim_;
};

CollectiveObservable collective(HermitianOperator local, std::size_t parties);

struct EigenDecomposition {
  RealVector values;     // ascending
  ComplexMatrix vectors;  // orthonormal columns
};

// Throws NumericError when the solver does not converge.
EigenDecomposition hermitian_eigen(const HermitianOperator& h);

}  // namespace entwitness
