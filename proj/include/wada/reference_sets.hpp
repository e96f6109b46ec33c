#pragma once

#include <array>
#include <cstdint>

#include "wada/numeric.hpp"

// Published difference sets and space parameters used as fixtures.

namespace wada::reference {

/// (31, 15, 7) set of P^4(F_2) in its Frobenius-compatible order (p = 2, j = 1, k = 3).
inline constexpr std::array<Residue, 15> kP4F2Ordered = {1, 3, 15, 2, 6, 30, 4, 12, 29, 8, 24, 27, 16, 17, 23};
/// The same set shifted by -1, same order; not fixed by 2.
inline constexpr std::array<Residue, 15> kP4F2Shifted = {0, 2, 14, 1, 5, 29, 3, 11, 28, 7, 23, 26, 15, 16, 22};
/// The same set sorted ascending; Wada but not Frobenius compatible.
inline constexpr std::array<Residue, 15> kP4F2Sorted = {1, 2, 3, 4, 6, 8, 12, 15, 16, 17, 23, 24, 27, 29, 30};

/// (40, 13, 4) set of P^3(F_3), fixed by 3.
inline constexpr std::array<Residue, 13> kP3F3 = {21, 22, 23, 25, 26, 29, 34, 35, 38, 0, 5, 7, 15};
/// kP3F3 + 20 mod 40, the other member of its shift family.
inline constexpr std::array<Residue, 13> kP3F3Plus20 = {1, 2, 3, 5, 6, 9, 14, 15, 18, 20, 25, 27, 35};

/// (121, 40, 13) set of P^4(F_3) in a Frobenius (p = 3, j = 1, k = 8) and Wada compatible order.
inline constexpr std::array<Residue, 40> kP4F3Ordered = {1,   4,   7,  11, 13, 34,  25, 67, 3,  12, 21,  33, 39,  102,
                                                         75,  80,  9,  36, 63, 99,  117, 64, 104, 119, 27, 108, 68, 55,
                                                         109, 71,  70, 115, 81, 82, 83, 44, 85, 92,  89, 103};

struct TableRow {
  std::uint32_t m;
  std::uint32_t p;
  std::uint64_t q;
  std::uint64_t ell;
  std::uint64_t f;
};

/// Spaces with f = m + 1 prime, p != m + 1 and p != 1 mod (m + 1), whose
/// Frobenius group can act freely on a Wada dessin.
inline constexpr std::array<TableRow, 8> kPrimeCaseTable = {{
    {2, 5, 6, 31, 3},
    {4, 2, 15, 31, 5},
    {4, 3, 40, 121, 5},
    {4, 7, 400, 2801, 5},
    {6, 2, 63, 127, 7},
    {6, 3, 364, 1093, 7},
    {6, 5, 3906, 19531, 7},
    {10, 2, 1023, 2047, 11},
}};

}  // namespace wada::reference
