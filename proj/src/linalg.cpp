#include "entwitness/linalg.hpp"

#include <atomic>
#include <cmath>
#include <string>

#include "entwitness/errors.hpp"

namespace entwitness {
namespace {

std::atomic<std::size_t> g_dense_limit{kDefaultDenseLimit};

std::uint64_t power_or_throw(std::uint64_t base, std::uint64_t exponent) {
  auto value = checked_power(base, exponent);
  if (!value) {
    throw CapacityError("dimension " + std::to_string(base) + "^" + std::to_string(exponent) +
                        " overflows 64 bits");
  }
  return *value;
}

}  // namespace

std::size_t dense_limit() { return g_dense_limit.load(std::memory_order_relaxed); }

void set_dense_limit(std::size_t limit) {
  if (limit == 0) throw ParameterError("dense limit must be positive");
  g_dense_limit.store(limit, std::memory_order_relaxed);
}

std::optional<std::uint64_t> checked_power(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
    result *= base;
  }
  return result;
}

std::size_t dense_dimension(std::size_t local_dim, std::size_t parties) {
  auto dim = checked_power(local_dim, parties);
  if (!dim || *dim > dense_limit()) {
    throw CapacityError("dense dimension " + std::to_string(local_dim) + "^" +
                        std::to_string(parties) + " exceeds the dense limit of " +
                        std::to_string(dense_limit()));
  }
  return static_cast<std::size_t>(*dim);
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

HermitianOperator::HermitianOperator(ComplexMatrix m) : matrix_(std::move(m)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw DimensionError("Hermitian operator must be a non-empty square matrix, got " +
                         std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()));
  }
  const double asym = max_abs(matrix_ - matrix_.adjoint());
  if (asym > kHermiticityTolerance) {
    throw InvariantError("matrix is not Hermitian: ||H - H^dagger||_max = " + std::to_string(asym));
  }
}

HermitianOperator HermitianOperator::identity(std::size_t dim) {
  return HermitianOperator(ComplexMatrix::Identity(static_cast<Eigen::Index>(dim),
                                                   static_cast<Eigen::Index>(dim)));
}

HermitianOperator HermitianOperator::projector(const ComplexVector& v, double weight) {
  return HermitianOperator(weight * (v * v.adjoint()));
}

double HermitianOperator::trace() const { return matrix_.trace().real(); }

double HermitianOperator::trace_of_square() const { return matrix_.squaredNorm(); }

PureState::PureState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) throw DimensionError("pure state must be non-empty");
  const double deviation = std::abs(amplitudes_.norm() - 1.0);
  if (deviation > kNormTolerance) {
    throw InvariantError("state vector is not normalized: | ||psi|| - 1 | = " +
                         std::to_string(deviation));
  }
}

PureState PureState::normalized(ComplexVector amplitudes) {
  const double norm = amplitudes.norm();
  if (norm == 0.0) throw InvariantError("cannot normalize the zero vector");
  return PureState(amplitudes / norm);
}

HermitianOperator embed_local(const HermitianOperator& local, std::size_t site,
                              std::size_t parties) {
  if (parties == 0 || site < 1 || site > parties) {
    throw ParameterError("site " + std::to_string(site) + " outside 1.." + std::to_string(parties));
  }
  const std::size_t d = local.dim();
  const std::size_t total = dense_dimension(d, parties);
  const std::size_t right = static_cast<std::size_t>(*checked_power(d, parties - site));
  const std::size_t left = total / (d * right);

  const ComplexMatrix& m = local.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(total),
                                          static_cast<Eigen::Index>(total));
  for (std::size_t a = 0; a < left; ++a) {
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        const Complex value = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        if (value == Complex{}) continue;
        const std::size_t row0 = (a * d + r) * right;
        const std::size_t col0 = (a * d + c) * right;
        for (std::size_t b = 0; b < right; ++b) {
          out(static_cast<Eigen::Index>(row0 + b), static_cast<Eigen::Index>(col0 + b)) = value;
        }
      }
    }
  }
  return HermitianOperator(std::move(out));
}

ComplexVector apply_collective(const ComplexMatrix& local, std::size_t parties,
                               const ComplexVector& psi) {
  const auto d = static_cast<std::size_t>(local.rows());
  const auto total = checked_power(d, parties);
  if (!total || *total != static_cast<std::uint64_t>(psi.size())) {
    throw DimensionError("state of dimension " + std::to_string(psi.size()) +
                         " does not match " + std::to_string(d) + "^" + std::to_string(parties));
  }
  ComplexVector out = ComplexVector::Zero(psi.size());
  std::size_t right = static_cast<std::size_t>(*total);
  for (std::size_t site = 1; site <= parties; ++site) {
    right /= d;
    const std::size_t left = static_cast<std::size_t>(*total) / (d * right);
    for (std::size_t a = 0; a < left; ++a) {
      for (std::size_t r = 0; r < d; ++r) {
        const std::size_t row0 = (a * d + r) * right;
        for (std::size_t c = 0; c < d; ++c) {
          const Complex value = local(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
          if (value == Complex{}) continue;
          const std::size_t col0 = (a * d + c) * right;
          for (std::size_t b = 0; b < right; ++b) {
            out(static_cast<Eigen::Index>(row0 + b)) +=
                value * psi(static_cast<Eigen::Index>(col0 + b));
          }
        }
      }
    }
  }
  return out;
}

CollectiveObservable::CollectiveObservable(HermitianOperator local, std::size_t parties)
    : local_(std::move(local)), parties_(parties), total_dim_(0) {
  if (parties_ == 0) throw ParameterError("collective observable needs at least one party");
  total_dim_ = power_or_throw(local_.dim(), parties_);
}

HermitianOperator CollectiveObservable::dense() const {
  const std::size_t total = dense_dimension(local_dim(), parties_);
  ComplexMatrix sum = ComplexMatrix::Zero(static_cast<Eigen::Index>(total),
                                          static_cast<Eigen::Index>(total));
  for (std::size_t site = 1; site <= parties_; ++site) {
    sum += embed_local(local_, site, parties_).matrix();
  }
  return HermitianOperator(std::move(sum));
}

double CollectiveObservable::trace_first() const {
  const double n = static_cast<double>(parties_);
  const double d = static_cast<double>(local_dim());
  return n * std::pow(d, n - 1.0) * local_.trace();
}

double CollectiveObservable::trace_second() const {
  const double n = static_cast<double>(parties_);
  const double d = static_cast<double>(local_dim());
  const double tr = local_.trace();
  double value = n * std::pow(d, n - 1.0) * local_.trace_of_square();
  if (parties_ > 1) value += n * (n - 1.0) * std::pow(d, n - 2.0) * tr * tr;
  return value;
}

ComplexVector CollectiveObservable::apply(const ComplexVector& psi) const {
  return apply_collective(local_.matrix(), parties_, psi);
}

CollectiveObservable collective(HermitianOperator local, std::size_t parties) {
  return CollectiveObservable(std::move(local), parties);
}

EigenDecomposition hermitian_eigen(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw NumericError("Hermitian eigensolver did not converge for a " + std::to_string(h.dim()) +
                       "x" + std::to_string(h.dim()) + " matrix");
  }
  return EigenDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace entwitness
