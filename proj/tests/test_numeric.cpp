#include <numeric>

#include "doctest.h"
#include "wada/error.hpp"
#include "wada/numeric.hpp"

using namespace wada;

TEST_CASE("mod normalizes negatives") {
  CHECK(mod(-1, 31) == 30);
  CHECK(mod(62, 31) == 0);
  CHECK(mod(-62, 31) == 0);
}

TEST_CASE("mul_mod agrees with plain multiplication on small values") {
  for (Residue a = -20; a < 20; ++a)
    for (Residue b = 0; b < 40; ++b) CHECK(mul_mod(a, b, 97) == mod(a * b, 97));
  const Residue big = (Residue{1} << 61) - 1;
  CHECK(mul_mod(big - 1, big - 1, big) == 1);
}

TEST_CASE("pow_mod and inverse_mod") {
  CHECK(pow_mod(2, 5, 31) == 1);
  CHECK(pow_mod(3, 0, 40) == 1);
  CHECK(pow_mod(3, 4, 40) == 1);
  for (Residue a : {1, 3, 7, 9, 11, 13, 17, 19}) CHECK(mul_mod(a, inverse_mod(a, 40), 40) == 1);
  CHECK_THROWS_AS(inverse_mod(4, 40), Error);
}

TEST_CASE("primes, factors and divisors") {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = 0; n < 60; ++n)
    if (is_prime(n)) primes.push_back(n);
  CHECK(primes == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59});
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(2047));
  CHECK(prime_factors(2047) == std::vector<std::uint64_t>{23, 89});
  CHECK(prime_factors(1) == std::vector<std::uint64_t>{});
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("units and multiplicative order") {
  const auto u = units_mod(40);
  CHECK(u.size() == 16);
  for (auto x : u) CHECK(std::gcd(x, Residue{40}) == 1);
  CHECK(units_mod(1) == std::vector<Residue>{0});
  CHECK(multiplicative_order(2, 31) == 5);
  CHECK(multiplicative_order(3, 40) == 4);
  CHECK(multiplicative_order(2, 2047) == 11);
}

TEST_CASE("checked_pow overflows loudly") {
  CHECK(checked_pow(7, 11) == 1977326743u);
  CHECK(checked_pow(2, 63) == (std::uint64_t{1} << 63));
  CHECK_THROWS_AS(checked_pow(2, 64), Error);
  CHECK_THROWS_AS(checked_pow(10, 20), Error);
}
