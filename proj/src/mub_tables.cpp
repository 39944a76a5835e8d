// Exponent tables for the complete sets of mutually unbiased bases in
// d = 2, 3, 4, 5, 8, 9. Basis u = 1 is the computational basis and is not
// stored. For u = 2..d+1, entry k of vector v is root^e / sqrt(d) with
// root = exp(2 pi i / root_order) and e the stored exponent. Rows are in
// (u, v) order and are stored exactly as originally tabulated; the entries
// that were tabulated wrongly are corrected by kMubErrata at load time.

#include "mub_tables.hpp"

#include <array>

namespace entwitness::detail {
namespace {

// root_order 4
constexpr std::array<std::uint8_t, 8> kMubDim2 = {
    0, 0,  // (2,1)
    0, 2,  // (2,2)
    0, 1,  // (3,1)
    0, 3,  // (3,2)
};

// root_order 3
constexpr std::array<std::uint8_t, 27> kMubDim3 = {
    0, 0, 0,  // (2,1)
    0, 1, 2,  // (2,2)
    0, 2, 1,  // (2,3)
    0, 1, 1,  // (3,1)
    0, 2, 0,  // (3,2)
    0, 0, 2,  // (3,3)
    0, 2, 2,  // (4,1)
    0, 0, 1,  // (4,2)
    0, 1, 0,  // (4,3)
};

// root_order 4
constexpr std::array<std::uint8_t, 64> kMubDim4 = {
    0, 0, 0, 0,  // (2,1)
    0, 2, 0, 2,  // (2,2)
    0, 0, 2, 2,  // (2,3)
    0, 2, 2, 0,  // (2,4)
    0, 1, 1, 2,  // (3,1)
    0, 3, 1, 0,  // (3,2)
    0, 1, 3, 0,  // (3,3)
    0, 3, 3, 2,  // (3,4)
    0, 1, 0, 3,  // (4,1)
    0, 3, 0, 1,  // (4,2)
    0, 1, 2, 1,  // (4,3)
    0, 3, 2, 3,  // (4,4)
    0, 0, 1, 3,  // (5,1)
    0, 2, 1, 1,  // (5,2)
    0, 0, 3, 1,  // (5,3)
    0, 2, 3, 3,  // (5,4)
};

// root_order 5
constexpr std::array<std::uint8_t, 125> kMubDim5 = {
    0, 0, 0, 0, 0,  // (2,1)
    0, 1, 2, 3, 4,  // (2,2)
    0, 2, 4, 1, 3,  // (2,3)
    0, 3, 1, 4, 2,  // (2,4)
    0, 4, 3, 2, 1,  // (2,5)
    0, 1, 4, 4, 1,  // (3,1)
    0, 2, 1, 2, 0,  // (3,2)
    0, 3, 3, 0, 4,  // (3,3)
    0, 4, 0, 3, 3,  // (3,4)
    0, 0, 2, 1, 2,  // (3,5)
    0, 2, 3, 3, 2,  // (4,1)
    0, 3, 0, 1, 1,  // (4,2)
    0, 4, 2, 4, 0,  // (4,3)
    0, 0, 4, 2, 4,  // (4,4)
    0, 1, 1, 0, 3,  // (4,5)
    0, 3, 2, 2, 3,  // (5,1)
    0, 4, 4, 0, 2,  // (5,2)
    0, 0, 1, 3, 1,  // (5,3)
    0, 1, 3, 1, 0,  // (5,4)
    0, 2, 0, 4, 4,  // (5,5)
    0, 4, 1, 1, 4,  // (6,1)
    0, 0, 3, 4, 3,  // (6,2)
    0, 1, 0, 2, 2,  // (6,3)
    0, 2, 2, 0, 1,  // (6,4)
    0, 3, 4, 3, 0,  // (6,5)
};

// root_order 4
constexpr std::array<std::uint8_t, 512> kMubDim8 = {
    0, 1, 1, 2, 1, 2, 2, 3,  // (2,1)
    0, 3, 1, 0, 1, 0, 2, 1,  // (2,2)
    0, 0, 3, 0, 1, 2, 0, 1,  // (2,3)
    0, 3, 3, 2, 1, 0, 0, 3,  // (2,4)
    0, 1, 1, 2, 3, 0, 0, 1,  // (2,5)
    0, 3, 1, 0, 3, 2, 0, 3,  // (2,6)
    0, 1, 3, 0, 3, 0, 2, 3,  // (2,7)
    0, 3, 3, 2, 3, 2, 2, 1,  // (2,8)
    0, 0, 1, 3, 1, 1, 0, 2,  // (3,1)
    0, 2, 1, 1, 1, 3, 0, 0,  // (3,2)
    0, 0, 3, 1, 1, 1, 2, 0,  // (3,3)
    0, 2, 3, 3, 1, 3, 2, 2,  // (3,4)
    0, 0, 1, 3, 3, 3, 2, 0,  // (3,5)
    0, 2, 1, 1, 3, 1, 2, 2,  // (3,6)
    0, 0, 3, 1, 3, 3, 0, 2,  // (3,7)
    0, 2, 3, 3, 3, 1, 0, 0,  // (3,8)
    0, 1, 0, 3, 1, 0, 3, 2,  // (4,1)
    0, 3, 0, 1, 1, 2, 3, 0,  // (4,2)
    0, 1, 2, 1, 1, 0, 1, 0,  // (4,3)
    0, 3, 2, 3, 1, 2, 1, 2,  // (4,4)
    0, 1, 0, 3, 3, 2, 1, 0,  // (4,5)
    0, 3, 0, 1, 3, 0, 1, 2,  // (4,6)
    0, 1, 2, 1, 3, 2, 3, 2,  // (4,7)
    0, 3, 2, 3, 3, 0, 3, 0,  // (4,8)
    0, 0, 0, 2, 1, 3, 1, 1,  // (5,1)
    0, 2, 0, 0, 1, 1, 1, 3,  // (5,2)
    0, 0, 2, 0, 1, 3, 3, 3,  // (5,3)
    0, 2, 2, 2, 1, 1, 3, 1,  // (5,4)
    0, 0, 0, 2, 3, 1, 3, 3,  // (5,5)
    0, 2, 0, 0, 3, 3, 3, 1,  // (5,6)
    0, 0, 2, 0, 3, 1, 1, 1,  // (5,7)
    0, 2, 2, 2, 3, 3, 1, 3,  // (5,8)
    0, 1, 1, 0, 0, 3, 1, 2,  // (6,1)
    0, 3, 1, 2, 0, 1, 1, 0,  // (6,2)
    0, 1, 3, 2, 0, 3, 3, 0,  // (6,3)
    0, 3, 3, 0, 0, 1, 3, 2,  // (6,4)
    0, 1, 1, 0, 2, 1, 3, 0,  // (6,5)
    0, 3, 1, 2, 2, 3, 3, 2,  // (6,6)
    0, 1, 3, 2, 2, 1, 1, 2,  // (6,7)
    0, 3, 3, 0, 2, 3, 1, 0,  // (6,8)
    0, 0, 1, 1, 0, 2, 3, 1,  // (7,1)
    0, 2, 1, 3, 0, 0, 3, 3,  // (7,2)
    0, 0, 3, 3, 0, 2, 1, 3,  // (7,3)
    0, 2, 3, 1, 0, 0, 1, 1,  // (7,4)
    0, 0, 1, 1, 2, 0, 1, 3,  // (7,5)
    0, 2, 1, 3, 2, 2, 1, 1,  // (7,6)
    0, 0, 3, 3, 2, 0, 3, 1,  // (7,7)
    0, 2, 3, 1, 2, 2, 3, 3,  // (7,8)
    0, 1, 0, 3, 0, 3, 2, 1,  // (8,1)
    0, 3, 0, 1, 0, 1, 2, 3,  // (8,2)
    0, 1, 2, 1, 0, 3, 0, 3,  // (8,3)
    0, 3, 2, 3, 0, 1, 0, 1,  // (8,4)
    0, 1, 0, 3, 2, 1, 0, 3,  // (8,5)
    0, 3, 0, 1, 2, 3, 0, 1,  // (8,6)
    0, 1, 2, 1, 2, 1, 2, 1,  // (8,7)
    0, 3, 2, 3, 2, 3, 2, 3,  // (8,8)
    0, 0, 0, 0, 0, 0, 0, 2,  // (9,1)
    0, 2, 0, 2, 0, 2, 0, 0,  // (9,2)
    0, 0, 2, 2, 0, 0, 2, 0,  // (9,3)
    0, 2, 2, 0, 0, 2, 2, 2,  // (9,4)
    0, 0, 0, 0, 2, 2, 2, 0,  // (9,5)
    0, 2, 0, 2, 2, 0, 2, 2,  // (9,6)
    0, 0, 2, 2, 2, 2, 0, 2,  // (9,7)
    0, 2, 2, 0, 2, 0, 0, 0,  // (9,8)
};

// root_order 3
constexpr std::array<std::uint8_t, 729> kMubDim9 = {
    0, 0, 0, 0, 0, 0, 0, 0, 0,  // (2,1)
    0, 1, 2, 0, 1, 2, 0, 1, 2,  // (2,2)
    0, 2, 1, 0, 2, 1, 0, 2, 1,  // (2,3)
    0, 0, 0, 1, 1, 1, 2, 2, 2,  // (2,4)
    0, 1, 2, 1, 2, 0, 2, 0, 1,  // (2,5)
    0, 2, 1, 1, 0, 2, 2, 1, 0,  // (2,6)
    0, 0, 0, 2, 2, 2, 1, 1, 1,  // (2,7)
    0, 1, 2, 2, 0, 1, 1, 2, 0,  // (2,8)
    0, 2, 1, 2, 1, 0, 1, 0, 2,  // (2,9)
    0, 1, 1, 1, 2, 2, 1, 2, 2,  // (3,1)
    0, 2, 0, 1, 0, 1, 1, 0, 1,  // (3,2)
    0, 0, 2, 1, 1, 0, 1, 1, 0,  // (3,3)
    0, 1, 1, 2, 0, 0, 0, 1, 1,  // (3,4)
    0, 2, 0, 2, 1, 2, 0, 2, 0,  // (3,5)
    0, 0, 2, 2, 2, 1, 0, 0, 2,  // (3,6)
    0, 1, 1, 0, 1, 1, 2, 0, 0,  // (3,7)
    0, 2, 0, 0, 2, 0, 2, 1, 2,  // (3,8)
    0, 0, 2, 0, 0, 2, 2, 2, 1,  // (3,9)
    0, 2, 2, 2, 1, 1, 2, 1, 1,  // (4,1)
    0, 0, 1, 2, 2, 0, 2, 2, 0,  // (4,2)
    0, 1, 0, 2, 0, 2, 2, 0, 2,  // (4,3)
    0, 2, 2, 0, 2, 2, 1, 0, 0,  // (4,4)
    0, 0, 1, 0, 0, 1, 1, 1, 2,  // (4,5)
    0, 1, 0, 0, 1, 0, 1, 2, 1,  // (4,6)
    0, 2, 2, 1, 0, 0, 0, 2, 2,  // (4,7)
    0, 0, 1, 1, 1, 2, 0, 0, 1,  // (4,8)
    0, 1, 0, 1, 2, 1, 0, 1, 0,  // (4,9)
    0, 1, 1, 0, 0, 2, 0, 2, 0,  // (5,1)
    0, 2, 0, 0, 1, 1, 0, 0, 2,  // (5,2)
    0, 0, 2, 0, 2, 0, 0, 1, 1,  // (5,3)
    0, 1, 1, 1, 1, 0, 2, 1, 2,  // (5,4)
    0, 0, 2, 0, 2, 2, 2, 2, 1,  // (5,5)
    0, 0, 2, 1, 0, 1, 2, 0, 0,  // (5,6)
    0, 1, 1, 2, 2, 1, 1, 0, 1,  // (5,7)
    0, 2, 0, 2, 0, 0, 1, 1, 0,  // (5,8)
    0, 0, 2, 2, 1, 2, 1, 2, 2,  // (5,9)
    0, 2, 2, 0, 0, 1, 0, 1, 0,  // (6,1)
    0, 0, 1, 0, 1, 0, 0, 2, 2,  // (6,2)
    0, 1, 0, 0, 2, 2, 0, 0, 1,  // (6,3)
    0, 2, 2, 1, 1, 2, 2, 0, 2,  // (6,4)
    0, 0, 1, 1, 2, 1, 2, 1, 1,  // (6,5)
    0, 1, 0, 1, 0, 0, 2, 2, 0,  // (6,6)
    0, 2, 2, 2, 2, 0, 1, 2, 1,  // (6,7)
    0, 0, 1, 2, 0, 2, 1, 0, 0,  // (6,8)
    0, 1, 0, 2, 1, 1, 1, 1, 2,  // (6,9)
    0, 0, 0, 1, 2, 0, 1, 0, 2,  // (7,1)
    0, 1, 2, 1, 0, 2, 1, 1, 1,  // (7,2)
    0, 2, 1, 1, 1, 1, 1, 2, 0,  // (7,3)
    0, 0, 0, 2, 0, 1, 0, 2, 1,  // (7,4)
    0, 1, 2, 2, 1, 0, 0, 0, 0,  // (7,5)
    0, 2, 1, 2, 2, 2, 0, 1, 2,  // (7,6)
    0, 0, 0, 0, 1, 2, 2, 1, 0,  // (7,7)
    0, 1, 2, 0, 2, 1, 2, 2, 2,  // (7,8)
    0, 2, 1, 0, 0, 0, 2, 0, 1,  // (7,9)
    0, 2, 2, 1, 2, 1, 1, 1, 2,  // (8,1)
    0, 0, 1, 1, 0, 0, 1, 2, 1,  // (8,2)
    0, 1, 0, 1, 1, 2, 1, 0, 0,  // (8,3)
    0, 2, 2, 2, 0, 2, 0, 0, 1,  // (8,4)
    0, 0, 1, 2, 1, 1, 0, 1, 0,  // (8,5)
    0, 1, 0, 2, 2, 0, 0, 2, 2,  // (8,6)
    0, 2, 2, 0, 1, 0, 2, 2, 0,  // (8,7)
    0, 0, 1, 0, 2, 2, 2, 0, 2,  // (8,8)
    0, 1, 0, 0, 0, 1, 2, 1, 1,  // (8,9)
    0, 0, 0, 2, 1, 0, 2, 0, 1,  // (9,1)
    0, 1, 2, 2, 2, 2, 2, 1, 0,  // (9,2)
    0, 2, 1, 2, 0, 1, 2, 2, 2,  // (9,3)
    0, 0, 0, 0, 2, 1, 1, 2, 0,  // (9,4)
    0, 1, 2, 0, 0, 0, 1, 0, 2,  // (9,5)
    0, 2, 1, 0, 1, 2, 1, 1, 1,  // (9,6)
    0, 0, 0, 1, 0, 2, 0, 1, 2,  // (9,7)
    0, 1, 2, 1, 1, 1, 0, 2, 1,  // (9,8)
    0, 2, 1, 1, 2, 0, 0, 0, 0,  // (9,9)
    0, 1, 1, 2, 1, 2, 2, 2, 1,  // (10,1)
    0, 2, 0, 2, 2, 1, 2, 0, 0,  // (10,2)
    0, 0, 2, 2, 0, 0, 2, 1, 2,  // (10,3)
    0, 1, 1, 0, 2, 0, 1, 1, 0,  // (10,4)
    0, 2, 0, 0, 0, 2, 1, 2, 2,  // (10,5)
    0, 0, 2, 0, 1, 1, 1, 0, 1,  // (10,6)
    0, 1, 1, 1, 0, 1, 0, 0, 2,  // (10,7)
    0, 2, 0, 1, 1, 0, 0, 1, 1,  // (10,8)
    0, 0, 2, 1, 2, 2, 0, 2, 0,  // (10,9)
};

// Corrections to the printed tables. Each row is (d, u, v, entry, printed
// exponent, corrected exponent). With these applied every set satisfies the
// MUB relations exactly; the corrected vectors are the unique completions
// with entries in the same root-of-unity alphabet.
constexpr std::array<MubErratum, 28> kMubErrata = {{
    // d=8, phi(23): entry |1> is +i
    MubErratum{8, 2, 3, 1, 0, 1},
    // d=8, basis 4: column |3> printed with flipped sign
    MubErratum{8, 4, 1, 3, 3, 1},
    MubErratum{8, 4, 2, 3, 1, 3},
    MubErratum{8, 4, 3, 3, 1, 3},
    MubErratum{8, 4, 4, 3, 3, 1},
    MubErratum{8, 4, 5, 3, 3, 1},
    MubErratum{8, 4, 6, 3, 1, 3},
    MubErratum{8, 4, 7, 3, 1, 3},
    MubErratum{8, 4, 8, 3, 3, 1},
    // d=8, basis 8: column |5> printed with flipped sign
    MubErratum{8, 8, 1, 5, 3, 1},
    MubErratum{8, 8, 2, 5, 1, 3},
    MubErratum{8, 8, 3, 5, 3, 1},
    MubErratum{8, 8, 4, 5, 1, 3},
    MubErratum{8, 8, 5, 5, 1, 3},
    MubErratum{8, 8, 6, 5, 3, 1},
    MubErratum{8, 8, 7, 5, 1, 3},
    MubErratum{8, 8, 8, 5, 3, 1},
    // d=8, basis 9: column |7> printed with flipped sign
    MubErratum{8, 9, 1, 7, 2, 0},
    MubErratum{8, 9, 2, 7, 0, 2},
    MubErratum{8, 9, 3, 7, 0, 2},
    MubErratum{8, 9, 4, 7, 2, 0},
    MubErratum{8, 9, 5, 7, 0, 2},
    MubErratum{8, 9, 6, 7, 2, 0},
    MubErratum{8, 9, 7, 7, 2, 0},
    MubErratum{8, 9, 8, 7, 0, 2},
    // d=9, phi(55): entries |1>..|3> are (a^2, 1, a)
    MubErratum{9, 5, 5, 1, 0, 2},
    MubErratum{9, 5, 5, 2, 2, 0},
    MubErratum{9, 5, 5, 3, 0, 1},
}};

}  // namespace

std::optional<MubTable> printed_mub_table(std::size_t dim) {
  switch (dim) {
    case 2:
      return MubTable{2, 4, kMubDim2};
    case 3:
      return MubTable{3, 3, kMubDim3};
    case 4:
      return MubTable{4, 4, kMubDim4};
    case 5:
      return MubTable{5, 5, kMubDim5};
    case 8:
      return MubTable{8, 4, kMubDim8};
    case 9:
      return MubTable{9, 3, kMubDim9};
    default:
      return std::nullopt;
  }
}

std::span<const MubErratum> mub_errata() { return kMubErrata; }

}  // namespace entwitness::detail
