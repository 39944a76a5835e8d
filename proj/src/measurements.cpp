#include "entwitness/measurements.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "entwitness/errors.hpp"
#include "mub_tables.hpp"

namespace entwitness {
namespace {

// Exact for quarter turns so that +-1, +-i carry no rounding.
Complex root_power(unsigned order, unsigned exponent) {
  exponent %= order;
  if ((4 * exponent) % order == 0) {
    static constexpr std::array<Complex, 4> kQuarter = {Complex{1, 0}, Complex{0, 1},
                                                        Complex{-1, 0}, Complex{0, -1}};
    return kQuarter[(4 * exponent) / order];
  }
  const double angle = 2.0 * std::numbers::pi * exponent / order;
  return {std::cos(angle), std::sin(angle)};
}

double trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  // Tr(AB) for Hermitian A, B.
  return a.cwiseProduct(b.conjugate()).sum().real();
}

double min_eigenvalue(const HermitianOperator& h) { return hermitian_eigen(h).values(0); }

double range_violation(double value, double lower_exclusive, double upper_inclusive) {
  if (value <= lower_exclusive) return lower_exclusive - value;
  if (value > upper_inclusive) return value - upper_inclusive;
  return 0.0;
}

void finalize(VerificationReport& report) {
  report.max_residual = 0.0;
  for (const auto& entry : report.entries) {
    report.max_residual = std::max(report.max_residual, entry.residual);
  }
  report.passed = report.max_residual <= report.tolerance;
}

void require_positive_tolerance(double tol) {
  if (!(tol > 0.0)) throw ParameterError("verification tolerance must be positive");
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

std::vector<std::vector<ComplexVector>> table_vectors(std::size_t dim, bool apply_errata) {
  const auto table = detail::printed_mub_table(dim);
  if (!table) {
    throw UnsupportedDimensionError("no embedded MUB table for d = " + std::to_string(dim) +
                                    "; supported dimensions are 2, 3, 4, 5, 8, 9");
  }
  std::vector<std::uint8_t> exponents(table->exponents.begin(), table->exponents.end());
  if (apply_errata) {
    for (const auto& fix : detail::mub_errata()) {
      if (fix.dim != dim) continue;
      const std::size_t offset = ((fix.basis - 2) * dim + (fix.vector - 1)) * dim + fix.entry;
      if (exponents[offset] != fix.printed) {
        throw InvariantError("MUB erratum does not match the embedded table");
      }
      exponents[offset] = fix.corrected;
    }
  }

  const auto d = static_cast<Eigen::Index>(dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<std::vector<ComplexVector>> bases;
  bases.reserve(dim + 1);
  std::vector<ComplexVector> computational;
  for (Eigen::Index k = 0; k < d; ++k) computational.push_back(ComplexVector::Unit(d, k));
  bases.push_back(std::move(computational));
  for (std::size_t u = 0; u < dim; ++u) {
    std::vector<ComplexVector> basis;
    for (std::size_t v = 0; v < dim; ++v) {
      ComplexVector vec(d);
      for (std::size_t k = 0; k < dim; ++k) {
        vec(static_cast<Eigen::Index>(k)) =
            scale * root_power(table->root_order, exponents[(u * dim + v) * dim + k]);
      }
      basis.push_back(std::move(vec));
    }
    bases.push_back(std::move(basis));
  }
  return bases;
}

MumSet projectors_from(const std::vector<std::vector<ComplexVector>>& bases, std::size_t dim) {
  std::vector<std::vector<HermitianOperator>> groups;
  for (const auto& basis : bases) {
    std::vector<HermitianOperator> group;
    for (const auto& v : basis) group.push_back(HermitianOperator::projector(v));
    groups.push_back(std::move(group));
  }
  return MumSet(dim, std::move(groups), 1.0);
}

double fitted_kappa(const MumSet& set) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& group : set.groups()) {
    for (const auto& m : group) {
      sum += m.trace_of_square();
      ++count;
    }
  }
  return sum / static_cast<double>(count);
}

double fitted_eta(const GsicSet& set) {
  double sum = 0.0;
  for (const auto& g : set.elements()) sum += g.trace_of_square();
  return sum / static_cast<double>(set.elements().size());
}

std::vector<Complex> sorted_triples(const MumSet& set, bool imaginary) {
  std::vector<Complex> triples;
  const auto& groups = set.groups();
  for (std::size_t u1 = 0; u1 < groups.size(); ++u1) {
    for (std::size_t u2 = u1 + 1; u2 < groups.size(); ++u2) {
      for (std::size_t u3 = u2 + 1; u3 < groups.size(); ++u3) {
        for (const auto& a : groups[u1]) {
          for (const auto& b : groups[u2]) {
            const ComplexMatrix ab = a.matrix() * b.matrix();
            for (const auto& c : groups[u3]) {
              triples.push_back((ab * c.matrix()).trace());
            }
          }
        }
      }
    }
  }
  std::vector<Complex> keyed;
  keyed.reserve(triples.size());
  for (const auto& t : triples) keyed.emplace_back(imaginary ? std::abs(t.imag()) : t.real(), 0.0);
  std::sort(keyed.begin(), keyed.end(),
            [](const Complex& x, const Complex& y) { return x.real() < y.real(); });
  return keyed;
}

// GSIC for d = 2: entries (rational + sqrt3 * root3) + i * imag,
// over denominator * sqrt(3).
struct SurdEntry {
  int rational;
  int root3;
  int imag;
};
struct SurdMatrix {
  int denominator;
  std::array<SurdEntry, 4> entries;  // row-major 2x2
};
constexpr std::array<SurdMatrix, 4> kGsicDim2 = {{
    {12, {{{1, 3, 0}, {-5, 0, 1}, {-5, 0, -1}, {-1, 3, 0}}}},
    {12, {{{1, 3, 0}, {1, 0, -5}, {1, 0, 5}, {-1, 3, 0}}}},
    {12, {{{-5, 3, 0}, {1, 0, 1}, {1, 0, -1}, {5, 3, 0}}}},
    {4, {{{1, 1, 0}, {1, 0, 1}, {1, 0, -1}, {-1, 1, 0}}}},
}};

// GSIC for d = 3: G = (1/3)|phi><phi| with phi = (1/sqrt 2) sum
// sign_k b^(exp_k) |k>, b = exp(2 pi i / 3).
struct SignedRoot {
  int sign;
  unsigned exponent;
};
constexpr std::array<std::array<SignedRoot, 3>, 9> kGsicDim3 = {{
    {{{0, 0}, {1, 0}, {-1, 0}}},
    {{{0, 0}, {1, 1}, {-1, 2}}},
    {{{0, 0}, {1, 2}, {-1, 1}}},
    {{{1, 0}, {-1, 0}, {0, 0}}},
    {{{1, 1}, {-1, 2}, {0, 0}}},
    {{{1, 2}, {-1, 1}, {0, 0}}},
    {{{-1, 0}, {0, 0}, {1, 0}}},
    {{{-1, 2}, {0, 0}, {1, 1}}},
    {{{-1, 1}, {0, 0}, {1, 2}}},
}};

}  // namespace

MumSet::MumSet(std::size_t dim, std::vector<std::vector<HermitianOperator>> groups,
               std::optional<double> claimed_kappa)
    : dim_(dim), groups_(std::move(groups)), claimed_kappa_(claimed_kappa) {
  if (dim_ < 2) throw DimensionError("MUM dimension must be at least 2");
  if (groups_.size() != dim_ + 1) {
    throw DimensionError("a complete MUM set in d = " + std::to_string(dim_) + " needs " +
                         std::to_string(dim_ + 1) + " measurements, got " +
                         std::to_string(groups_.size()));
  }
  for (const auto& group : groups_) {
    if (group.size() != dim_) {
      throw DimensionError("each measurement needs " + std::to_string(dim_) + " elements");
    }
    for (const auto& m : group) {
      if (m.dim() != dim_) throw DimensionError("MUM element has the wrong dimension");
    }
  }
}

const HermitianOperator& MumSet::element(std::size_t u, std::size_t v) const {
  if (u < 1 || u > groups_.size() || v < 1 || v > dim_) {
    throw ParameterError("MUM index out of range");
  }
  return groups_[u - 1][v - 1];
}

std::vector<HermitianOperator> MumSet::flattened() const {
  std::vector<HermitianOperator> flat;
  flat.reserve(dim_ * (dim_ + 1));
  for (const auto& group : groups_) flat.insert(flat.end(), group.begin(), group.end());
  return flat;
}

GsicSet::GsicSet(std::size_t dim, std::vector<HermitianOperator> elements,
                 std::optional<double> claimed_eta)
    : dim_(dim), elements_(std::move(elements)), claimed_eta_(claimed_eta) {
  if (dim_ < 2) throw DimensionError("GSIC dimension must be at least 2");
  if (elements_.size() != dim_ * dim_) {
    throw DimensionError("a GSIC in d = " + std::to_string(dim_) + " needs " +
                         std::to_string(dim_ * dim_) + " elements, got " +
                         std::to_string(elements_.size()));
  }
  for (const auto& g : elements_) {
    if (g.dim() != dim_) throw DimensionError("GSIC element has the wrong dimension");
  }
}

const ResidualEntry& VerificationReport::worst() const {
  if (entries.empty()) throw InvariantError("verification report has no entries");
  return *std::max_element(entries.begin(), entries.end(),
                           [](const auto& a, const auto& b) { return a.residual < b.residual; });
}

std::map<std::string, double> VerificationReport::max_by_relation() const {
  std::map<std::string, double> out;
  for (const auto& entry : entries) {
    auto& slot = out[entry.relation];
    slot = std::max(slot, entry.residual);
  }
  return out;
}

std::vector<ResidualEntry> VerificationReport::failures() const {
  std::vector<ResidualEntry> out;
  for (const auto& entry : entries) {
    if (entry.residual > tolerance) out.push_back(entry);
  }
  return out;
}

const std::vector<std::size_t>& supported_mub_dimensions() {
  static const std::vector<std::size_t> kDims = {2, 3, 4, 5, 8, 9};
  return kDims;
}

const std::vector<std::size_t>& supported_gsic_dimensions() {
  static const std::vector<std::size_t> kDims = {2, 3};
  return kDims;
}

std::vector<std::vector<ComplexVector>> mub_vectors(std::size_t dim) {
  return table_vectors(dim, true);
}

MumSet printed_mub_set(std::size_t dim) { return projectors_from(table_vectors(dim, false), dim); }

MumSet mub_set(std::size_t dim) {
  MumSet set = projectors_from(table_vectors(dim, true), dim);
  const auto report = verify_mum(set, kMeasurementTolerance);
  if (!report.passed) {
    throw InvariantError("embedded MUB data for d = " + std::to_string(dim) +
                         " fails verification (max residual " +
                         std::to_string(report.max_residual) + ")");
  }
  if (is_prime(dim)) {
    const double distance = triple_product_distance(set, standard_prime_mub_set(dim));
    if (distance > kMeasurementTolerance) {
      throw InvariantError("embedded MUB data for d = " + std::to_string(dim) +
                           " is not equivalent to the standard construction");
    }
  }
  return set;
}

GsicSet gsic_set(std::size_t dim) {
  std::vector<HermitianOperator> elements;
  std::optional<double> eta;
  if (dim == 2) {
    const double root3 = std::sqrt(3.0);
    for (const auto& g : kGsicDim2) {
      ComplexMatrix m(2, 2);
      for (std::size_t k = 0; k < 4; ++k) {
        const auto& e = g.entries[k];
        m(static_cast<Eigen::Index>(k / 2), static_cast<Eigen::Index>(k % 2)) =
            Complex{e.rational + e.root3 * root3, static_cast<double>(e.imag)} /
            (g.denominator * root3);
      }
      elements.emplace_back(std::move(m));
    }
    eta = 0.25;
  } else if (dim == 3) {
    for (const auto& phi : kGsicDim3) {
      ComplexVector v(3);
      for (Eigen::Index k = 0; k < 3; ++k) {
        const auto& entry = phi[static_cast<std::size_t>(k)];
        v(k) = static_cast<double>(entry.sign) * root_power(3, entry.exponent) / std::sqrt(2.0);
      }
      elements.push_back(HermitianOperator::projector(v, 1.0 / 3.0));
    }
    eta = 1.0 / 9.0;
  } else {
    throw UnsupportedDimensionError("no embedded GSIC for d = " + std::to_string(dim) +
                                    "; supported dimensions are 2, 3");
  }
  return GsicSet(dim, std::move(elements), eta);
}

MumSet standard_prime_mub_set(std::size_t prime) {
  if (!is_prime(prime)) {
    throw UnsupportedDimensionError("standard MUB construction needs a prime dimension, got " +
                                    std::to_string(prime));
  }
  const auto d = static_cast<Eigen::Index>(prime);
  const double scale = 1.0 / std::sqrt(static_cast<double>(prime));
  std::vector<std::vector<ComplexVector>> bases;
  std::vector<ComplexVector> computational;
  for (Eigen::Index k = 0; k < d; ++k) computational.push_back(ComplexVector::Unit(d, k));
  bases.push_back(std::move(computational));
  if (prime == 2) {
    for (const Complex phase : {Complex{1, 0}, Complex{0, 1}}) {
      std::vector<ComplexVector> basis;
      for (const double sign : {1.0, -1.0}) {
        ComplexVector v(2);
        v << scale, sign * phase * scale;
        basis.push_back(std::move(v));
      }
      bases.push_back(std::move(basis));
    }
  } else {
    const auto p = static_cast<unsigned>(prime);
    for (unsigned a = 0; a < p; ++a) {
      std::vector<ComplexVector> basis;
      for (unsigned b = 0; b < p; ++b) {
        ComplexVector v(d);
        for (unsigned k = 0; k < p; ++k) v(k) = scale * root_power(p, (a * k * k + b * k) % p);
        basis.push_back(std::move(v));
      }
      bases.push_back(std::move(basis));
    }
  }
  return projectors_from(bases, prime);
}

double triple_product_distance(const MumSet& a, const MumSet& b) {
  if (a.dim() != b.dim()) return std::numeric_limits<double>::infinity();
  double distance = 0.0;
  for (const bool imaginary : {false, true}) {
    const auto ta = sorted_triples(a, imaginary);
    const auto tb = sorted_triples(b, imaginary);
    if (ta.size() != tb.size()) return std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < ta.size(); ++i) {
      distance = std::max(distance, std::abs(ta[i].real() - tb[i].real()));
    }
  }
  return distance;
}

VerificationReport verify_mum(const MumSet& set, double tol) {
  require_positive_tolerance(tol);
  VerificationReport report;
  report.tolerance = tol;
  const std::size_t d = set.dim();
  const double kappa = fitted_kappa(set);
  report.measured_parameter = kappa;
  const ComplexMatrix identity = ComplexMatrix::Identity(static_cast<Eigen::Index>(d),
                                                         static_cast<Eigen::Index>(d));
  const auto& groups = set.groups();

  for (std::size_t u = 0; u < groups.size(); ++u) {
    ComplexMatrix group_sum = ComplexMatrix::Zero(identity.rows(), identity.cols());
    for (std::size_t v = 0; v < d; ++v) {
      const auto& m = groups[u][v];
      group_sum += m.matrix();
      report.entries.push_back({"unit_trace", {u + 1, v + 1}, std::abs(m.trace() - 1.0)});
      report.entries.push_back({"positivity", {u + 1, v + 1}, std::max(0.0, -min_eigenvalue(m))});
    }
    report.entries.push_back({"completeness", {u + 1}, max_abs(group_sum - identity)});
  }

  const double same_measurement = (1.0 - kappa) / static_cast<double>(d - 1);
  const double across_measurements = 1.0 / static_cast<double>(d);
  for (std::size_t u = 0; u < groups.size(); ++u) {
    for (std::size_t v = 0; v < d; ++v) {
      for (std::size_t u2 = u; u2 < groups.size(); ++u2) {
        for (std::size_t v2 = (u2 == u ? v : 0); v2 < d; ++v2) {
          double expected = across_measurements;
          if (u == u2) expected = (v == v2) ? kappa : same_measurement;
          const double actual = trace_product(groups[u][v].matrix(), groups[u2][v2].matrix());
          report.entries.push_back(
              {"pair_trace", {u + 1, v + 1, u2 + 1, v2 + 1}, std::abs(actual - expected)});
        }
      }
    }
  }

  ComplexMatrix squares = ComplexMatrix::Zero(identity.rows(), identity.cols());
  for (const auto& group : groups) {
    for (const auto& m : group) squares += m.matrix() * m.matrix();
  }
  report.entries.push_back({"sum_of_squares", {},
                            max_abs(squares - kappa * static_cast<double>(d + 1) * identity)});
  report.entries.push_back(
      {"parameter_range", {}, range_violation(kappa, 1.0 / static_cast<double>(d), 1.0)});
  if (set.claimed_kappa()) {
    report.entries.push_back({"claimed_parameter", {}, std::abs(*set.claimed_kappa() - kappa)});
  }
  finalize(report);
  return report;
}

VerificationReport verify_gsic(const GsicSet& set, double tol) {
  require_positive_tolerance(tol);
  VerificationReport report;
  report.tolerance = tol;
  const std::size_t d = set.dim();
  const auto dd = static_cast<double>(d);
  const double eta = fitted_eta(set);
  report.measured_parameter = eta;
  const ComplexMatrix identity = ComplexMatrix::Identity(static_cast<Eigen::Index>(d),
                                                         static_cast<Eigen::Index>(d));
  const auto& elements = set.elements();

  ComplexMatrix sum = ComplexMatrix::Zero(identity.rows(), identity.cols());
  ComplexMatrix squares = ComplexMatrix::Zero(identity.rows(), identity.cols());
  for (std::size_t u = 0; u < elements.size(); ++u) {
    sum += elements[u].matrix();
    squares += elements[u].matrix() * elements[u].matrix();
    report.entries.push_back(
        {"positivity", {u + 1}, std::max(0.0, -min_eigenvalue(elements[u]))});
  }
  report.entries.push_back({"completeness", {}, max_abs(sum - identity)});

  const double cross = (1.0 - dd * eta) / (dd * (dd * dd - 1.0));
  for (std::size_t u = 0; u < elements.size(); ++u) {
    for (std::size_t u2 = u; u2 < elements.size(); ++u2) {
      const double actual = trace_product(elements[u].matrix(), elements[u2].matrix());
      if (u == u2) {
        report.entries.push_back({"purity", {u + 1}, std::abs(actual - eta)});
      } else {
        report.entries.push_back({"cross_trace", {u + 1, u2 + 1}, std::abs(actual - cross)});
      }
    }
  }
  report.entries.push_back({"sum_of_squares", {}, max_abs(squares - dd * eta * identity)});
  report.entries.push_back(
      {"parameter_range", {}, range_violation(eta, 1.0 / (dd * dd * dd), 1.0 / (dd * dd))});
  if (set.claimed_eta()) {
    report.entries.push_back({"claimed_parameter", {}, std::abs(*set.claimed_eta() - eta)});
  }
  finalize(report);
  return report;
}

MomentIdentity pure_state_moment_identity(const MumSet& set, const PureState& psi) {
  if (psi.dim() != set.dim()) {
    throw DimensionError("state dimension " + std::to_string(psi.dim()) +
                         " does not match measurement dimension " + std::to_string(set.dim()));
  }
  MomentIdentity out;
  for (const auto& group : set.groups()) {
    for (const auto& m : group) {
      const double mean = psi.amplitudes().dot(m.matrix() * psi.amplitudes()).real();
      out.sum_of_squared_means += mean * mean;
    }
  }
  out.expected = 1.0 + fitted_kappa(set);
  return out;
}

MomentIdentity pure_state_moment_identity(const GsicSet& set, const PureState& psi) {
  if (psi.dim() != set.dim()) {
    throw DimensionError("state dimension " + std::to_string(psi.dim()) +
                         " does not match measurement dimension " + std::to_string(set.dim()));
  }
  MomentIdentity out;
  for (const auto& g : set.elements()) {
    const double mean = psi.amplitudes().dot(g.matrix() * psi.amplitudes()).real();
    out.sum_of_squared_means += mean * mean;
  }
  const auto d = static_cast<double>(set.dim());
  out.expected = (fitted_eta(set) * d * d + 1.0) / (d * (d + 1.0));
  return out;
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
  constexpr std::size_t kMaxListedFailures = 50;
  nlohmann::ordered_json doc;
  doc["passed"] = report.passed;
  doc["tolerance"] = report.tolerance;
  doc["measured_parameter"] = report.measured_parameter;
  doc["max_residual"] = report.max_residual;
  auto& relations = doc["relations"] = nlohmann::ordered_json::object();
  for (const auto& [name, value] : report.max_by_relation()) relations[name] = value;
  if (!report.entries.empty()) {
    const auto& worst = report.worst();
    doc["worst"] = {{"relation", worst.relation},
                    {"indices", worst.indices},
                    {"residual", worst.residual}};
  }
  const auto failures = report.failures();
  doc["failure_count"] = failures.size();
  auto& listed = doc["failures"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < failures.size() && i < kMaxListedFailures; ++i) {
    listed.push_back({{"relation", failures[i].relation},
                      {"indices", failures[i].indices},
                      {"residual", failures[i].residual}});
  }
  return doc;
}

nlohmann::ordered_json measurement_to_json(const MeasurementSet& set) {
  auto element_json = [](const HermitianOperator& op) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    const auto& m = op.matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        entries.push_back({m(r, c).real(), m(r, c).imag()});
      }
    }
    return entries;
  };
  nlohmann::ordered_json doc;
  nlohmann::ordered_json elements = nlohmann::ordered_json::array();
  if (const auto* mum = std::get_if<MumSet>(&set)) {
    doc["kind"] = "mum";
    doc["d"] = mum->dim();
    for (const auto& m : mum->flattened()) elements.push_back(element_json(m));
  } else {
    const auto& gsic = std::get<GsicSet>(set);
    doc["kind"] = "gsic";
    doc["d"] = gsic.dim();
    for (const auto& g : gsic.elements()) elements.push_back(element_json(g));
  }
  doc["elements"] = std::move(elements);
  return doc;
}

MeasurementSet measurement_from_json(const nlohmann::json& doc) {
  try {
    const std::string kind = doc.at("kind").get<std::string>();
    const auto d = doc.at("d").get<std::size_t>();
    if (d < 2) throw DimensionError("measurement dimension must be at least 2");
    const auto& raw = doc.at("elements");
    std::vector<HermitianOperator> elements;
    for (const auto& element : raw) {
      if (element.size() != d * d) {
        throw DimensionError("each element needs " + std::to_string(d * d) + " entries");
      }
      ComplexMatrix m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
      for (std::size_t k = 0; k < d * d; ++k) {
        const auto& pair = element.at(k);
        m(static_cast<Eigen::Index>(k / d), static_cast<Eigen::Index>(k % d)) =
            Complex{pair.at(0).get<double>(), pair.at(1).get<double>()};
      }
      elements.emplace_back(std::move(m));
    }
    if (kind == "mum") {
      if (elements.size() != d * (d + 1)) {
        throw DimensionError("a complete MUM set needs d(d+1) elements");
      }
      std::vector<std::vector<HermitianOperator>> groups;
      for (std::size_t u = 0; u <= d; ++u) {
        groups.emplace_back(elements.begin() + static_cast<std::ptrdiff_t>(u * d),
                            elements.begin() + static_cast<std::ptrdiff_t>((u + 1) * d));
      }
      std::optional<double> kappa;
      if (doc.contains("kappa")) kappa = doc["kappa"].get<double>();
      return MumSet(d, std::move(groups), kappa);
    }
    if (kind == "gsic") {
      std::optional<double> eta;
      if (doc.contains("eta")) eta = doc["eta"].get<double>();
      return GsicSet(d, std::move(elements), eta);
    }
    throw ParameterError("unknown measurement kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("malformed measurement document: ") + e.what());
  }
}

}  // namespace entwitness
