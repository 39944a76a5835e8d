#pragma once

// Seeded random instances and brute-force oracles shared by the tests.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "entwitness/info_measures.hpp"
#include "entwitness/linalg.hpp"

namespace entwitness::testing {

inline constexpr std::uint64_t kSeed = 0x5eed2024;

inline std::mt19937_64 make_rng(std::uint64_t salt = 0) { return std::mt19937_64(kSeed + salt); }

inline Complex gaussian_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  return {normal(rng), normal(rng)};
}

inline ComplexVector random_unit_vector(std::size_t dim, std::mt19937_64& rng) {
  ComplexVector v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = gaussian_complex(rng);
  return v.normalized();
}

inline PureState random_pure_state(std::size_t dim, std::mt19937_64& rng) {
  return PureState(random_unit_vector(dim, rng));
}

inline HermitianOperator random_hermitian(std::size_t dim, std::mt19937_64& rng) {
  ComplexMatrix a(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) a(r, c) = gaussian_complex(rng);
  }
  return HermitianOperator(0.5 * (a + a.adjoint()));
}

// Full-rank mixed state from a Ginibre matrix G: G G^dagger / Tr.
inline DensityMatrix random_density(std::size_t dim, std::mt19937_64& rng) {
  ComplexMatrix g(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (Eigen::Index r = 0; r < g.rows(); ++r) {
    for (Eigen::Index c = 0; c < g.cols(); ++c) g(r, c) = gaussian_complex(rng);
  }
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(HermitianOperator(0.5 * (rho + rho.adjoint())));
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

inline ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

// 1 (x) ... (x) M (x) ... (x) 1 by repeated Kronecker products.
inline ComplexMatrix kron_embed(const ComplexMatrix& m, std::size_t site, std::size_t parties) {
  const auto d = m.rows();
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (std::size_t i = 1; i <= parties; ++i) {
    out = kron(out, i == site ? m : ComplexMatrix::Identity(d, d));
  }
  return out;
}

inline ComplexMatrix kron_collective(const ComplexMatrix& m, std::size_t parties) {
  ComplexMatrix sum = kron_embed(m, 1, parties);
  for (std::size_t i = 2; i <= parties; ++i) sum += kron_embed(m, i, parties);
  return sum;
}

struct ProductState {
  std::vector<ComplexVector> factors;
  PureState state;
};

inline ProductState random_product_state(std::size_t local_dim, std::size_t parties,
                                         std::mt19937_64& rng) {
  std::vector<ComplexVector> factors;
  ComplexVector psi = ComplexVector::Ones(1);
  for (std::size_t i = 0; i < parties; ++i) {
    factors.push_back(random_unit_vector(local_dim, rng));
    psi = kron(psi, factors.back());
  }
  return {std::move(factors), PureState(psi.normalized())};
}

// Tr(rho X^2) - sum_{l,l'} f_s(lambda_l, lambda_l') |X_ll'|^2, the
// trace form of the skew information.
inline double skew_information_trace_form(const DensityMatrix& rho, const HermitianOperator& x,
                                          const SkewOrder& order) {
  const ComplexMatrix y = rho.eigenvectors().adjoint() * x.matrix() * rho.eigenvectors();
  const auto& lambda = rho.eigenvalues();
  double sum = 0.0;
  for (Eigen::Index l = 0; l < lambda.size(); ++l) {
    for (Eigen::Index m = 0; m < lambda.size(); ++m) {
      sum += f_s(lambda(l), lambda(m), order) * std::norm(y(l, m));
    }
  }
  return (rho.matrix().matrix() * x.matrix() * x.matrix()).trace().real() - sum;
}

}  // namespace entwitness::testing
