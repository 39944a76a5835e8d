#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

namespace entwitness::detail {

struct MubTable {
  std::size_t dim;
  unsigned root_order;
  // (dim * dim * dim) exponents: bases u = 2..dim+1, vectors v, entries k.
  std::span<const std::uint8_t> exponents;
};

struct MubErratum {
  std::size_t dim;
  std::size_t basis;   // u, 1-based
  std::size_t vector;  // v, 1-based
  std::size_t entry;   // k, 0-based computational index
  std::uint8_t printed;
  std::uint8_t corrected;
};

std::optional<MubTable> printed_mub_table(std::size_t dim);
std::span<const MubErratum> mub_errata();

}  // namespace entwitness::detail
