#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "entwitness/errors.hpp"
#include "entwitness/states.hpp"
#include "test_support.hpp"

using namespace entwitness;
using namespace entwitness::testing;

namespace {

// Amplitudes with the site order permuted: new site k holds old site perm[k].
ComplexVector permute_sites(const ComplexVector& psi, std::size_t d, std::size_t n,
                            const std::vector<std::size_t>& perm) {
  ComplexVector out(psi.size());
  std::vector<std::size_t> digits(n);
  for (Eigen::Index index = 0; index < psi.size(); ++index) {
    auto rest = static_cast<std::size_t>(index);
    for (std::size_t k = n; k-- > 0;) {
      digits[k] = rest % d;
      rest /= d;
    }
    std::size_t target = 0;
    for (std::size_t k = 0; k < n; ++k) target = target * d + digits[perm[k]];
    out(static_cast<Eigen::Index>(target)) = psi(index);
  }
  return out;
}

double max_permutation_deviation(const ComplexVector& psi, std::size_t d, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  double worst = 0.0;
  do {
    worst = std::max(worst, (permute_sites(psi, d, n, perm) - psi).cwiseAbs().maxCoeff());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return worst;
}

HermitianOperator pauli_z() {
  ComplexMatrix z(2, 2);
  z << 1, 0, 0, -1;
  return HermitianOperator(z);
}

}  // namespace

TEST_CASE("Dicke amplitudes") {
  const auto d2 = dicke_state(2).amplitudes();
  CHECK(std::abs(d2(1) - 1 / std::sqrt(2.0)) <= 1e-15);
  CHECK(std::abs(d2(2) - 1 / std::sqrt(2.0)) <= 1e-15);
  CHECK(std::abs(d2(0)) + std::abs(d2(3)) == 0.0);

  // N = 3 carries two excitations: |011>, |101>, |110> = indices 3, 5, 6.
  const auto d3 = dicke_state(3).amplitudes();
  for (Eigen::Index k = 0; k < 8; ++k) {
    const bool on = k == 3 || k == 5 || k == 6;
    CHECK(std::abs(d3(k) - (on ? 1 / std::sqrt(3.0) : 0.0)) <= 1e-15);
  }

  const auto d4 = dicke_state(4).amplitudes();
  int nonzero = 0;
  for (Eigen::Index k = 0; k < 16; ++k) {
    if (std::abs(d4(k)) > 0) {
      ++nonzero;
      CHECK(std::abs(d4(k) - 1 / std::sqrt(6.0)) <= 1e-15);
    }
  }
  CHECK(nonzero == 6);
  CHECK_THROWS_AS(dicke_state(1), ParameterError);
}

TEST_CASE("W state") {
  const auto w3 = w_state(3).amplitudes();
  for (Eigen::Index k = 0; k < 8; ++k) {
    const bool on = k == 4 || k == 2 || k == 1;
    CHECK(std::abs(w3(k) - (on ? 1 / std::sqrt(3.0) : 0.0)) <= 1e-15);
  }
  CHECK_THROWS_AS(w_state(2), ParameterError);
  for (const std::size_t n : {4u, 6u}) {
    CHECK(std::abs(w_state(n).amplitudes().dot(dicke_state(n).amplitudes())) == 0.0);
  }
  // Flipping every qubit of W_3 (index -> 7 - index) gives the two-excitation D_3.
  const auto d3 = dicke_state(3).amplitudes();
  for (Eigen::Index k = 0; k < 8; ++k) CHECK(std::abs(w3(k) - d3(7 - k)) <= 1e-15);
}

TEST_CASE("antisymmetric state") {
  const auto s2 = antisym_state(2).amplitudes();
  CHECK(std::abs(s2(1) - 1 / std::sqrt(2.0)) <= 1e-15);
  CHECK(std::abs(s2(2) + 1 / std::sqrt(2.0)) <= 1e-15);

  // N = 3: permutations of 012 at base-3 indices; sign by parity.
  const auto s3 = antisym_state(3).amplitudes();
  const double a = 1 / std::sqrt(6.0);
  const std::vector<std::pair<int, double>> expected = {
      {0 * 9 + 1 * 3 + 2, a},  {1 * 9 + 2 * 3 + 0, a},  {2 * 9 + 0 * 3 + 1, a},
      {0 * 9 + 2 * 3 + 1, -a}, {1 * 9 + 0 * 3 + 2, -a}, {2 * 9 + 1 * 3 + 0, -a}};
  double total = 0.0;
  for (const auto& [index, value] : expected) {
    CHECK(std::abs(s3(index) - value) <= 1e-15);
    total += std::norm(s3(index));
  }
  CHECK(total == doctest::Approx(1.0));
  CHECK(antisym_state(4).amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-12));

  const auto saved = dense_limit();
  set_dense_limit(1000);
  CHECK_THROWS_AS(antisym_state(5), CapacityError);
  set_dense_limit(saved);
}

TEST_CASE("two-qutrit state") {
  const auto psi = two_qutrit_psi().amplitudes();
  const double a = 1 / std::sqrt(6.0);
  CHECK(std::abs(psi(1) - a) <= 1e-15);
  CHECK(std::abs(psi(3) + a) <= 1e-15);
  CHECK(psi.norm() == doctest::Approx(1.0));
  ComplexVector swapped(9);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) swapped(3 * j + i) = psi(3 * i + j);
  }
  CHECK((swapped + psi).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("Dicke and W states are permutation symmetric") {
  for (const std::size_t n : {3u, 4u, 5u}) {
    CHECK(max_permutation_deviation(dicke_state(n).amplitudes(), 2, n) <= 1e-12);
    CHECK(max_permutation_deviation(w_state(n).amplitudes(), 2, n) <= 1e-12);
  }
}

TEST_CASE("pure_moments") {
  SUBCASE("product basis state") {
    ComplexMatrix m(3, 3);
    m << 0.7, 0.1, 0, 0.1, 0.2, 0, 0, 0, -0.4;
    const auto moments = pure_moments(PureState(ComplexVector::Unit(27, 0)), HermitianOperator(m),
                                      3, 3);
    CHECK(moments.first == doctest::Approx(3 * 0.7));
  }
  SUBCASE("W_3 with a Z-type observable") {
    const auto moments = pure_moments(w_state(3), pauli_z(), 3, 2);
    CHECK(moments.first == doctest::Approx(1.0));
    CHECK(moments.second == doctest::Approx(1.0));
  }
  SUBCASE("identity gives N and N^2") {
    auto rng = make_rng(41);
    const auto moments = pure_moments(random_pure_state(81, rng), HermitianOperator::identity(3),
                                      4, 3);
    CHECK(moments.first == doctest::Approx(4.0));
    CHECK(moments.second == doctest::Approx(16.0));
  }
  SUBCASE("dense oracle and Cauchy-Schwarz") {
    auto rng = make_rng(42);
    for (int trial = 0; trial < 50; ++trial) {
      const auto psi = random_pure_state(27, rng);
      const auto m = random_hermitian(3, rng);
      const auto moments = pure_moments(psi, m, 3, 3);
      const ComplexMatrix x = kron_collective(m.matrix(), 3);
      const ComplexVector y = x * psi.amplitudes();
      CHECK(moments.first == doctest::Approx(psi.amplitudes().dot(y).real()).epsilon(1e-12));
      CHECK(moments.second == doctest::Approx(y.squaredNorm()).epsilon(1e-12));
      CHECK(moments.second - moments.first * moments.first >= -1e-9);
    }
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(pure_moments(w_state(3), HermitianOperator::identity(3), 3, 2),
                    DimensionError);
    CHECK_THROWS_AS(pure_moments(w_state(3), pauli_z(), 4, 2), DimensionError);
  }
}

TEST_CASE("analytic antisym moments match the dense state") {
  SUBCASE("rank-1 projector at N = 3") {
    ComplexVector v = ComplexVector::Zero(3);
    v(1) = 1.0;
    const auto moments = AntisymMoments(3).moments(HermitianOperator::projector(v));
    CHECK(moments.first == doctest::Approx(1.0));
    CHECK(moments.second == doctest::Approx(1.0));
  }
  auto rng = make_rng(43);
  for (const std::size_t n : {3u, 4u}) {
    const DenseMoments dense(antisym_state(n), n, n);
    const AntisymMoments analytic(n);
    CHECK(analytic.provenance() == MomentProvenance::Analytic);
    for (int trial = 0; trial < 50; ++trial) {
      const auto m = random_hermitian(n, rng);
      const auto a = analytic.moments(m);
      const auto b = dense.moments(m);
      CHECK(std::abs(a.first - b.first) <= 1e-9);
      CHECK(std::abs(a.second - b.second) <= 1e-9);
    }
  }
  CHECK_THROWS_AS(AntisymMoments(1), ParameterError);
  CHECK_THROWS_AS(AntisymMoments(3).moments(HermitianOperator::identity(2)), DimensionError);
}

TEST_CASE("provider-backed noisy states") {
  const NoisyPureState state(antisym_moments(9), 0.5);
  CHECK(state.total_dim() == 387420489u);
  CHECK(state.provenance() == MomentProvenance::Analytic);
  CHECK(state.pure_state() == nullptr);
  CHECK_THROWS_AS(state.materialize(), ParameterError);
  CHECK_THROWS_AS(state.moments(HermitianOperator::identity(9)), ParameterError);
}
