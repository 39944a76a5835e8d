#pragma once

// Local measurement families used by the separability criteria: complete
// sets of mutually unbiased measurements (MUMs) and general symmetric
// informationally complete measurements (GSICs), with numerical checks of
// their defining trace relations.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "entwitness/linalg.hpp"
#include "json.hpp"

namespace entwitness {

inline constexpr double kMeasurementTolerance = 1e-10;

// (d+1) groups of d operators M^(uv), each group a POVM. Construction checks
// only the shape; verify_mum() checks the MUM relations.
class MumSet {
 public:
  MumSet(std::size_t dim, std::vector<std::vector<HermitianOperator>> groups,
         std::optional<double> claimed_kappa = std::nullopt);

  std::size_t dim() const { return dim_; }
  const std::vector<std::vector<HermitianOperator>>& groups() const { return groups_; }
  // u and v are 1-based.
  const HermitianOperator& element(std::size_t u, std::size_t v) const;
  // All d(d+1) elements, u-major.
  std::vector<HermitianOperator> flattened() const;
  std::optional<double> claimed_kappa() const { return claimed_kappa_; }

 private:
  std::size_t dim_;
  std::vector<std::vector<HermitianOperator>> groups_;
  std::optional<double> claimed_kappa_;
};

// d^2 operators G^(u) forming a POVM.
class GsicSet {
 public:
  GsicSet(std::size_t dim, std::vector<HermitianOperator> elements,
          std::optional<double> claimed_eta = std::nullopt);

  std::size_t dim() const { return dim_; }
  const std::vector<HermitianOperator>& elements() const { return elements_; }
  std::optional<double> claimed_eta() const { return claimed_eta_; }

 private:
  std::size_t dim_;
  std::vector<HermitianOperator> elements_;
  std::optional<double> claimed_eta_;
};

using MeasurementSet = std::variant<MumSet, GsicSet>;

// One checked relation. Indices are 1-based labels (u, v[, u', v']) for MUMs
// and (u[, u']) for GSICs; global relations carry no indices.
struct ResidualEntry {
  std::string relation;
  std::vector<std::size_t> indices;
  double residual = 0.0;
};

struct VerificationReport {
  double max_residual = 0.0;
  double measured_parameter = 0.0;  // fitted kappa or eta
  double tolerance = 0.0;
  bool passed = false;
  std::vector<ResidualEntry> entries;

  const ResidualEntry& worst() const;
  std::map<std::string, double> max_by_relation() const;
  std::vector<ResidualEntry> failures() const;
};

// Dimensions with embedded complete MUB tables: 2, 3, 4, 5, 8, 9.
const std::vector<std::size_t>& supported_mub_dimensions();
const std::vector<std::size_t>& supported_gsic_dimensions();

// Rank-1 MUB projectors from the embedded tables with the known table
// errata applied. Throws UnsupportedDimensionError for other d, and
// InvariantError if the embedded data fail verification.
MumSet mub_set(std::size_t dim);

// Same tables without the errata, as originally tabulated. The d = 8 and
// d = 9 sets fail verify_mum().
MumSet printed_mub_set(std::size_t dim);

// Orthonormal basis vectors behind mub_set(dim): (d+1) groups of d vectors.
std::vector<std::vector<ComplexVector>> mub_vectors(std::size_t dim);

// The embedded GSICs for d = 2 (eta = 1/4) and d = 3 (eta = 1/9).
GsicSet gsic_set(std::size_t dim);

// Standard complete MUB for prime d: Pauli eigenbases for d = 2 and
// (1/sqrt d) sum_k w^(a k^2 + b k) |k> for odd primes.
MumSet standard_prime_mub_set(std::size_t prime);

// Largest mismatch between the sorted triple products Tr(M_a M_b M_c) of two
// rank-1 MUB families, taken over triples from three distinct bases (real
// parts and absolute imaginary parts compared separately). Zero is necessary
// for unitary or antiunitary equivalence of the two families.
double triple_product_distance(const MumSet& a, const MumSet& b);

// Checks unit traces, group completeness, the kappa-weighted pairwise trace
// relation with kappa fitted from the diagonal, sum of squares
// = kappa (d+1) 1, positivity, and 1/d < kappa <= 1. Failures are reported,
// not thrown; tol must be positive.
VerificationReport verify_mum(const MumSet& set, double tol);

// Checks completeness, Tr G^2 = eta, cross traces (1 - d eta)/(d(d^2-1)),
// sum of squares = d eta 1, positivity, and 1/d^3 < eta <= 1/d^2.
VerificationReport verify_gsic(const GsicSet& set, double tol);

struct MomentIdentity {
  double sum_of_squared_means = 0.0;
  double expected = 0.0;
};

// sum <psi|M|psi>^2 over all elements against 1 + kappa (MUM) or
// (eta d^2 + 1)/(d(d+1)) (GSIC), with kappa/eta measured from the set.
MomentIdentity pure_state_moment_identity(const MumSet& set, const PureState& psi);
MomentIdentity pure_state_moment_identity(const GsicSet& set, const PureState& psi);

nlohmann::ordered_json to_json(const VerificationReport& report);

// {"kind": "mum"|"gsic", "d": int, "elements": [[[re, im], ...], ...]} with
// each element flattened row-major.
nlohmann::ordered_json measurement_to_json(const MeasurementSet& set);
// Inverse of measurement_to_json; MUM elements are grouped d per measurement.
MeasurementSet measurement_from_json(const nlohmann::json& doc);

}  // namespace entwitness
