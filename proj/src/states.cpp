#include "entwitness/states.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "entwitness/errors.hpp"

namespace entwitness {
namespace {

void require_dim(const HermitianOperator& local, std::size_t local_dim) {
  if (local.dim() != local_dim) {
    throw DimensionError("local operator has dimension " + std::to_string(local.dim()) +
                         ", expected " + std::to_string(local_dim));
  }
}

}  // namespace

PureState dicke_state(std::size_t parties, std::size_t excitations) {
  if (parties < 1 || excitations > parties) {
    throw ParameterError("Dicke state needs 0 <= k <= N and N >= 1");
  }
  const std::size_t dim = dense_dimension(2, parties);
  ComplexVector amplitudes = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  for (std::size_t index = 0; index < dim; ++index) {
    if (static_cast<std::size_t>(std::popcount(index)) == excitations) {
      amplitudes(static_cast<Eigen::Index>(index)) = 1.0;
    }
  }
  return PureState::normalized(std::move(amplitudes));
}

PureState dicke_state(std::size_t parties) {
  if (parties < 2) throw ParameterError("Dicke state needs N >= 2");
  return dicke_state(parties, (parties + 1) / 2);
}

PureState w_state(std::size_t parties) {
  if (parties < 3) throw ParameterError("W state needs N >= 3, got " + std::to_string(parties));
  return dicke_state(parties, 1);
}

PureState antisym_state(std::size_t parties) {
  if (parties < 2) throw ParameterError("antisymmetric state needs N >= 2");
  const std::size_t dim = dense_dimension(parties, parties);
  ComplexVector amplitudes = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  std::vector<std::size_t> sigma(parties);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  do {
    std::size_t index = 0;
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < parties; ++i) {
      index = index * parties + sigma[i];
      for (std::size_t j = i + 1; j < parties; ++j) inversions += sigma[i] > sigma[j] ? 1 : 0;
    }
    amplitudes(static_cast<Eigen::Index>(index)) = inversions % 2 == 0 ? 1.0 : -1.0;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return PureState::normalized(std::move(amplitudes));
}

PureState two_qutrit_psi() {
  ComplexVector amplitudes = ComplexVector::Zero(9);
  const double a = 1.0 / std::sqrt(6.0);
  // index 3 * first + second
  amplitudes(1) = a;
  amplitudes(3) = -a;
  amplitudes(2) = a;
  amplitudes(6) = -a;
  amplitudes(5) = a;
  amplitudes(7) = -a;
  return PureState(std::move(amplitudes));
}

PureMoments pure_moments(const PureState& psi, const HermitianOperator& local,
                         std::size_t parties, std::size_t local_dim) {
  require_dim(local, local_dim);
  const auto expected = checked_power(local_dim, parties);
  if (!expected || *expected != psi.dim()) {
    throw DimensionError("state dimension " + std::to_string(psi.dim()) + " is not " +
                         std::to_string(local_dim) + "^" + std::to_string(parties));
  }
  const ComplexVector y = apply_collective(local.matrix(), parties, psi.amplitudes());
  return {psi.amplitudes().dot(y).real(), y.squaredNorm()};
}

DenseMoments::DenseMoments(PureState psi, std::size_t local_dim, std::size_t parties)
    : psi_(std::move(psi)), local_dim_(local_dim), parties_(parties) {
  const auto expected = checked_power(local_dim, parties);
  if (!expected || *expected != psi_.dim()) {
    throw DimensionError("state dimension does not match d^N");
  }
}

PureMoments DenseMoments::moments(const HermitianOperator& local) const {
  return pure_moments(psi_, local, parties_, local_dim_);
}

AntisymMoments::AntisymMoments(std::size_t parties) : parties_(parties) {
  if (parties < 2) throw ParameterError("antisymmetric state needs N >= 2");
}

PureMoments AntisymMoments::moments(const HermitianOperator& local) const {
  require_dim(local, parties_);
  const auto n = static_cast<double>(parties_);
  const double d = n;
  const double tr = local.trace();
  const double tr2 = local.trace_of_square();
  return {n * tr / d, n * tr2 / d + n * (n - 1.0) * (tr * tr - tr2) / (d * (d - 1.0))};
}

std::shared_ptr<const MomentProvider> antisym_moments(std::size_t parties) {
  return std::make_shared<AntisymMoments>(parties);
}

}  // namespace entwitness
