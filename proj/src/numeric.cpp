#include "wada/numeric.hpp"

#include <numeric>
#include <string>

#include "wada/error.hpp"

namespace wada {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotADifferenceSet: return "NotADifferenceSet";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NotFrobeniusFixed: return "NotFrobeniusFixed";
    case ErrorKind::FNotDividingQ: return "FNotDividingQ";
    case ErrorKind::OrbitShape: return "OrbitShape";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::SizeGuard: return "SizeGuard";
    case ErrorKind::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

NotADifferenceSet::NotADifferenceSet(std::int64_t alpha, std::uint64_t count, std::uint64_t expected)
    : Error(ErrorKind::NotADifferenceSet, "not a difference set: residue " + std::to_string(alpha) + " occurs " +
                                              std::to_string(count) + " times, expected " + std::to_string(expected)),
      alpha_(alpha),
      count_(count),
      expected_(expected) {}

NotFrobeniusFixed::NotFrobeniusFixed(std::int64_t element, std::int64_t image)
    : Error(ErrorKind::NotFrobeniusFixed, "set is not fixed by the multiplier: " + std::to_string(element) + " maps to " +
                                              std::to_string(image) + ", which is not an element"),
      element_(element),
      image_(image) {}

BudgetExhausted::BudgetExhausted(std::uint64_t nodes)
    : Error(ErrorKind::BudgetExhausted,
            "search budget exhausted after " + std::to_string(nodes) + " nodes (inconclusive, not a nonexistence proof)"),
      nodes_(nodes) {}

Residue pow_mod(Residue base, std::uint64_t exp, Residue v) noexcept {
  if (v == 1) return 0;
  Residue result = 1;
  Residue b = mod(base, v);
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, b, v);
    b = mul_mod(b, b, v);
    exp >>= 1U;
  }
  return result;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<Residue> units_mod(Residue v) {
  if (v <= 1) return {0};
  std::vector<Residue> out;
  for (Residue t = 1; t < v; ++t)
    if (std::gcd(t, v) == 1) out.push_back(t);
  return out;
}

std::uint64_t multiplicative_order(Residue a, Residue v) {
  if (v == 1) return 1;
  if (std::gcd(mod(a, v), v) != 1) throw Error(ErrorKind::NotAUnit, std::to_string(a) + " is not a unit mod " + std::to_string(v));
  std::uint64_t order = 1;
  Residue x = mod(a, v);
  while (x != 1) {
    x = mul_mod(x, a, v);
    ++order;
  }
  return order;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(result, base, &result))
      throw Error(ErrorKind::Overflow, std::to_string(base) + "^" + std::to_string(exp) + " exceeds 64 bits");
  }
  return result;
}

Residue inverse_mod(Residue a, Residue v) {
  Residue old_r = mod(a, v), r = v, old_s = 1, s = 0;
  while (r != 0) {
    Residue quot = old_r / r;
    Residue tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw Error(ErrorKind::NotAUnit, std::to_string(a) + " is not a unit mod " + std::to_string(v));
  return mod(old_s, v);
}

}  // namespace wada
