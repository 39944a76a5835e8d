#pragma once

// Example state families and pure-state moments of collective observables.
// Qubit excitations are the |1> level; bitstrings map to indices with site 1
// as the most significant digit.

#include <cstddef>
#include <memory>

#include "entwitness/info_measures.hpp"
#include "entwitness/linalg.hpp"

namespace entwitness {

// Equal superposition of the weight-`excitations` N-qubit strings.
PureState dicke_state(std::size_t parties, std::size_t excitations);
// The default Dicke state: ceil(N/2) excitations, N >= 2.
PureState dicke_state(std::size_t parties);
// One excitation; N >= 3.
PureState w_state(std::size_t parties);
// Totally antisymmetric state of N parties with local dimension N.
PureState antisym_state(std::size_t parties);
// (|01> - |10> + |02> - |20> + |12> - |21>)/sqrt 6.
PureState two_qutrit_psi();

// m1 = <psi|sum_i M_i|psi>, m2 = ||sum_i M_i |psi>||^2, applied site by site.
PureMoments pure_moments(const PureState& psi, const HermitianOperator& local,
                         std::size_t parties, std::size_t local_dim);

class DenseMoments final : public MomentProvider {
 public:
  DenseMoments(PureState psi, std::size_t local_dim, std::size_t parties);

  std::size_t local_dim() const override { return local_dim_; }
  std::size_t parties() const override { return parties_; }
  MomentProvenance provenance() const override { return MomentProvenance::Dense; }
  PureMoments moments(const HermitianOperator& local) const override;
  const PureState& state() const { return psi_; }

 private:
  PureState psi_;
  std::size_t local_dim_;
  std::size_t parties_;
};

// Closed-form moments of the antisymmetric state from its one- and two-party
// reductions (maximally mixed, normalized antisymmetric projector). Needs no
// state vector, so any N >= 2 is allowed.
class AntisymMoments final : public MomentProvider {
 public:
  explicit AntisymMoments(std::size_t parties);

  std::size_t local_dim() const override { return parties_; }
  std::size_t parties() const override { return parties_; }
  MomentProvenance provenance() const override { return MomentProvenance::Analytic; }
  PureMoments moments(const HermitianOperator& local) const override;

 private:
  std::size_t parties_;
};

std::shared_ptr<const MomentProvider> antisym_moments(std::size_t parties);

}  // namespace entwitness
