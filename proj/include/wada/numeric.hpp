#pragma once

#include <cstdint>
#include <vector>

// Small exact integer helpers shared by every module. Everything here works on
// non-negative 64-bit values; residues are always normalized into [0, v).

namespace wada {

using Residue = std::int64_t;

/// Normalize a into [0, v).
constexpr Residue mod(Residue a, Residue v) noexcept {
  Residue r = a % v;
  return r < 0 ? r + v : r;
}

/// a*b mod v without overflow for v < 2^63.
constexpr Residue mul_mod(Residue a, Residue b, Residue v) noexcept {
  __extension__ using U128 = unsigned __int128;
  return static_cast<Residue>(static_cast<U128>(mod(a, v)) * static_cast<U128>(mod(b, v)) % static_cast<U128>(v));
}

Residue pow_mod(Residue base, std::uint64_t exp, Residue v) noexcept;

bool is_prime(std::uint64_t n) noexcept;

/// Distinct prime factors in ascending order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Positive divisors in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Units of Z/vZ in ascending order. For v == 1 the single class {0} is returned.
std::vector<Residue> units_mod(Residue v);

/// Multiplicative order of a modulo v; requires gcd(a, v) == 1.
std::uint64_t multiplicative_order(Residue a, Residue v);

/// base^exp, throwing Error(Overflow) if the result leaves 64 bits.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

/// Inverse of a modulo v; requires gcd(a, v) == 1.
Residue inverse_mod(Residue a, Residue v);

}  // namespace wada
