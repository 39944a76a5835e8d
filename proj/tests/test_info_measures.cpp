#include <cmath>
#include <limits>

#include "doctest.h"
#include "entwitness/errors.hpp"
#include "entwitness/info_measures.hpp"
#include "test_support.hpp"

using namespace entwitness;
using namespace entwitness::testing;

namespace {

HermitianOperator pauli_z() {
  ComplexMatrix z(2, 2);
  z << 1, 0, 0, -1;
  return HermitianOperator(z);
}

DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, double q) {
  return DensityMatrix(HermitianOperator(q * a.matrix().matrix() + (1 - q) * b.matrix().matrix()));
}

}  // namespace

TEST_CASE("SkewOrder domain") {
  CHECK_THROWS_AS(SkewOrder(0.5), ParameterError);
  CHECK_THROWS_AS(SkewOrder(std::numeric_limits<double>::quiet_NaN()), ParameterError);
  CHECK(SkewOrder(0.0).is_zero());
  CHECK(SkewOrder::minus_infinity().is_minus_infinity());
  CHECK_FALSE(SkewOrder(-3.0).is_minus_infinity());
}

TEST_CASE("f_s special values") {
  for (const double s : {0.0, -0.5, -1.0, -7.0}) CHECK(f_s(0.0, 5.0, SkewOrder(s)) == 0.0);
  CHECK(f_s(0.0, 5.0, SkewOrder::minus_infinity()) == 0.0);
  CHECK(f_s(4.0, 9.0, SkewOrder(0.0)) == doctest::Approx(6.0));
  CHECK(f_s(2.0, 6.0, SkewOrder(-1.0)) == doctest::Approx(3.0));
  CHECK(f_s(2.0, 6.0, SkewOrder::minus_infinity()) == 2.0);
  CHECK(f_s(0.3, 0.3, SkewOrder(-0.4)) == 0.3);
}

TEST_CASE("f_s agrees with the textbook power mean and is symmetric") {
  auto rng = make_rng(21);
  std::uniform_real_distribution<double> value(1e-3, 1.0);
  std::uniform_real_distribution<double> order(-3.0, -0.05);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = value(rng);
    const double b = value(rng);
    const double s = order(rng);
    const double naive = std::pow((std::pow(a, s) + std::pow(b, s)) / 2.0, 1.0 / s);
    CHECK(f_s(a, b, SkewOrder(s)) == doctest::Approx(naive).epsilon(1e-12));
    CHECK(f_s(a, b, SkewOrder(s)) == f_s(b, a, SkewOrder(s)));
  }
}

TEST_CASE("f_s approaches its limits and is nondecreasing in s") {
  CHECK(f_s(0.2, 0.7, SkewOrder(-1e-9)) == doctest::Approx(std::sqrt(0.14)).epsilon(1e-8));
  CHECK(f_s(0.2, 0.7, SkewOrder(-2000.0)) == doctest::Approx(0.2).epsilon(1e-3));
  auto rng = make_rng(22);
  std::uniform_real_distribution<double> value(1e-4, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = value(rng);
    const double b = value(rng);
    double previous = f_s(a, b, SkewOrder::minus_infinity());
    for (double s = -20.0; s <= 0.0; s += 0.25) {
      const double current = f_s(a, b, SkewOrder(s));
      CHECK(current >= previous - 1e-15);
      previous = current;
    }
  }
}

TEST_CASE("DensityMatrix validation") {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix(HermitianOperator(m)), InvariantError);
  m << 1.1, 0, 0, -0.1;
  CHECK_THROWS_AS(DensityMatrix(HermitianOperator(m)), InvariantError);
  m << 1.0 + 1e-11, 0, 0, -1e-11;
  const DensityMatrix clipped{HermitianOperator(m)};
  CHECK(clipped.eigenvalues().minCoeff() == 0.0);
  CHECK(clipped.eigenvalues().sum() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(clipped.matrix().trace() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("variance of simple qubit states") {
  CHECK(variance(DensityMatrix::pure(PureState(ComplexVector::Unit(2, 0))), pauli_z()) ==
        doctest::Approx(0.0));
  ComplexVector plus(2);
  plus << 1, 1;
  CHECK(variance(DensityMatrix::pure(PureState::normalized(plus)), pauli_z()) ==
        doctest::Approx(1.0));
  const DensityMatrix mixed{HermitianOperator(0.5 * ComplexMatrix::Identity(2, 2))};
  CHECK(variance(mixed, pauli_z()) == doctest::Approx(1.0));
}

TEST_CASE("skew information special cases") {
  auto rng = make_rng(23);
  const DensityMatrix mixed{HermitianOperator(ComplexMatrix::Identity(4, 4) / 4.0)};
  CHECK(skew_information_dense(mixed, random_hermitian(4, rng), SkewOrder(-0.5)) == 0.0);
  CHECK_THROWS_AS(skew_information_dense(mixed, random_hermitian(3, rng), SkewOrder(-1)),
                  DimensionError);
  CHECK_THROWS_AS(variance(mixed, random_hermitian(2, rng)), DimensionError);
}

TEST_CASE("pairwise form agrees with the harmonic-mean trace form at s = -1") {
  auto rng = make_rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rho = random_density(4, rng);
    const auto x = random_hermitian(4, rng);
    // Tr(rho X^2) - sum 2 l l' / (l + l') |X_ll'|^2 with an independent mean.
    const ComplexMatrix y = rho.eigenvectors().adjoint() * x.matrix() * rho.eigenvectors();
    const auto& lambda = rho.eigenvalues();
    double sum = 0.0;
    for (int l = 0; l < 4; ++l) {
      for (int m = 0; m < 4; ++m) {
        sum += 2.0 * lambda(l) * lambda(m) / (lambda(l) + lambda(m)) * std::norm(y(l, m));
      }
    }
    const double oracle = (rho.matrix().matrix() * x.matrix() * x.matrix()).trace().real() - sum;
    CHECK(skew_information_dense(rho, x, SkewOrder(-1.0)) == doctest::Approx(oracle).epsilon(1e-9));
  }
}

TEST_CASE("pairwise form agrees with the trace form for other orders") {
  auto rng = make_rng(25);
  for (const double s : {0.0, -0.3, -0.7, -2.5}) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto rho = random_density(5, rng);
      const auto x = random_hermitian(5, rng);
      CHECK(std::abs(skew_information_dense(rho, x, SkewOrder(s)) -
                     skew_information_trace_form(rho, x, SkewOrder(s))) <= 1e-9);
    }
  }
}

TEST_CASE("property: monotone in s and bounded by the variance") {
  auto rng = make_rng(26);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rho = random_density(3, rng);
    const auto x = random_hermitian(3, rng);
    const double v = variance(rho, x);
    double previous = skew_information_dense(rho, x, SkewOrder(-1.0));
    CHECK(previous <= v + 1e-9);
    for (const double s : {-0.75, -0.5, -0.25, 0.0}) {
      const double current = skew_information_dense(rho, x, SkewOrder(s));
      CHECK(current <= previous + 1e-9);
      previous = current;
    }
  }
}

TEST_CASE("property: pure states have I^s = V") {
  auto rng = make_rng(27);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rho = DensityMatrix::pure(random_pure_state(4, rng));
    const auto x = random_hermitian(4, rng);
    const double v = variance(rho, x);
    for (const double s : {-1.0, -0.5, 0.0}) {
      CHECK(std::abs(skew_information_dense(rho, x, SkewOrder(s)) - v) <= 1e-9);
    }
  }
}

TEST_CASE("property: I^s convex and V concave under mixing") {
  auto rng = make_rng(28);
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  std::uniform_real_distribution<double> order(-1.0, 0.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_density(3, rng);
    const auto b = random_density(3, rng);
    const auto x = random_hermitian(3, rng);
    const double q = weight(rng);
    const SkewOrder s(order(rng));
    const auto m = mix(a, b, q);
    CHECK(skew_information_dense(m, x, s) <=
          q * skew_information_dense(a, x, s) + (1 - q) * skew_information_dense(b, x, s) + 1e-9);
    CHECK(variance(m, x) >= q * variance(a, x) + (1 - q) * variance(b, x) - 1e-9);
  }
}

TEST_CASE("property: additivity on product states") {
  auto rng = make_rng(29);
  for (const auto& [d, n] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto product = random_product_state(d, n, rng);
      const auto local = random_hermitian(d, rng);
      double expected = 0.0;
      for (const auto& f : product.factors) {
        expected += variance(DensityMatrix::pure(PureState(f)), local);
      }
      const auto rho = DensityMatrix::pure(product.state);
      const auto x = collective(local, n).dense();
      CHECK(std::abs(variance(rho, x) - expected) <= 1e-9);
      CHECK(std::abs(skew_information_dense(rho, x, SkewOrder(-0.5)) - expected) <= 1e-9);
    }
  }
}

TEST_CASE("noisy spectrum and coefficient") {
  const auto spectrum = noisy_spectrum(0.4, 8);
  CHECK(spectrum.top == doctest::Approx(0.4 + 0.6 / 8));
  CHECK(spectrum.bottom == doctest::Approx(0.6 / 8));
  CHECK(noisy_skew_coefficient(1.0, 8, SkewOrder(-1)) == doctest::Approx(1.0));
  CHECK(noisy_skew_coefficient(0.0, 8, SkewOrder(-1)) == 0.0);
  CHECK_THROWS_AS(noisy_spectrum(1.5, 8), ParameterError);
  CHECK_THROWS_AS(noisy_spectrum(-0.1, 8), ParameterError);
}

TEST_CASE("noisy closed form at the endpoints") {
  auto rng = make_rng(30);
  const auto psi = random_pure_state(6, rng);
  const auto x = random_hermitian(6, rng);
  const double pure_variance = variance(DensityMatrix::pure(psi), x);
  CHECK(skew_information_noisy(NoisyPureState(psi, 1.0), x, SkewOrder(-1)) ==
        doctest::Approx(pure_variance));
  CHECK(variance_noisy(NoisyPureState(psi, 1.0), x) == doctest::Approx(pure_variance));
  CHECK(skew_information_noisy(NoisyPureState(psi, 0.0), x, SkewOrder(-1)) == 0.0);
  const double tr = x.trace() / 6.0;
  CHECK(variance_noisy(NoisyPureState(psi, 0.0), x) ==
        doctest::Approx(x.trace_of_square() / 6.0 - tr * tr));
  CHECK_THROWS_AS(NoisyPureState(psi, 1.2), ParameterError);
}

TEST_CASE("noisy closed form matches the dense path") {
  auto rng = make_rng(31);
  std::uniform_real_distribution<double> prob(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> dim(2, 64);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = dim(rng);
    const NoisyPureState state(random_pure_state(d, rng), prob(rng));
    const auto x = random_hermitian(d, rng);
    const auto rho = state.materialize();
    for (const double s : {-1.0, -0.7, -0.3, 0.0}) {
      CHECK(std::abs(skew_information_noisy(state, x, SkewOrder(s)) -
                     skew_information_dense(rho, x, SkewOrder(s))) <= 1e-9);
    }
    CHECK(std::abs(variance_noisy(state, x) - variance(rho, x)) <= 1e-9);
  }
  const NoisyPureState fixed(random_pure_state(8, rng), 0.37);
  const auto x = random_hermitian(8, rng);
  CHECK(std::abs(skew_information_noisy(fixed, x, SkewOrder(-0.5)) -
                 skew_information_dense(fixed.materialize(), x, SkewOrder(-0.5))) <= 1e-9);
}

TEST_CASE("noisy closed form with collective observables") {
  auto rng = make_rng(32);
  const auto local = random_hermitian(2, rng);
  const auto obs = collective(local, 4);
  const NoisyPureState state(random_pure_state(16, rng), 0.55);
  const auto rho = state.materialize();
  const auto dense = obs.dense();
  CHECK(std::abs(skew_information_noisy(state, obs, SkewOrder(-1)) -
                 skew_information_dense(rho, dense, SkewOrder(-1))) <= 1e-9);
  CHECK(std::abs(variance_noisy(state, obs) - variance(rho, dense)) <= 1e-9);
  CHECK_THROWS_AS(state.moments(collective(local, 3)), DimensionError);
}
