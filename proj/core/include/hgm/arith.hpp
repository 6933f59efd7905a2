#pragma once

// Elementary integer number theory shared by every module.

#include <cstdint>
#include <numeric>
#include <vector>

namespace hgm {

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

// Inverse of a modulo m; requires gcd(a, m) = 1.
std::int64_t invmod(std::int64_t a, std::int64_t m);

bool is_prime(std::uint64_t n);

// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// Positive divisors in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

// Units of Z/dZ in increasing order; {0} when d = 1.
std::vector<std::int64_t> units_mod(std::int64_t d);

// Multiplicative order of a modulo m (gcd(a, m) = 1); 1 when m = 1.
std::int64_t multiplicative_order(std::int64_t a, std::int64_t m);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

// Representatives of (Z/dZ)^x / <p>: the smallest element of each orbit.
std::vector<std::int64_t> frobenius_orbit_reps(std::int64_t d, std::int64_t p);

}  // namespace hgm
