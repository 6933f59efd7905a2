#include "hgm/arith.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hgm {

std::int64_t invmod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = mod(a, m);
  while (a1 != 0) {
    std::int64_t quot = g / a1;
    std::int64_t t = g - quot * a1;
    g = a1;
    a1 = t;
    t = x - quot * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1) throw std::domain_error("invmod: not invertible");
  return mod(x, m);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // Deterministic Miller-Rabin witness set for 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> units_mod(std::int64_t d) {
  if (d == 1) return {0};
  std::vector<std::int64_t> out;
  for (std::int64_t k = 1; k < d; ++k) {
    if (std::gcd(k, d) == 1) out.push_back(k);
  }
  return out;
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t m) {
  if (m == 1) return 1;
  if (std::gcd(mod(a, m), m) != 1) throw std::domain_error("multiplicative_order: not a unit");
  std::int64_t x = mod(a, m), k = 1;
  while (x != 1) {
    x = static_cast<std::int64_t>(mulmod(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(mod(a, m)),
                                         static_cast<std::uint64_t>(m)));
    ++k;
  }
  return k;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::vector<std::int64_t> frobenius_orbit_reps(std::int64_t d, std::int64_t p) {
  std::vector<std::int64_t> reps;
  std::set<std::int64_t> seen;
  for (std::int64_t k : units_mod(d)) {
    if (seen.count(k) != 0) continue;
    reps.push_back(k);
    std::int64_t x = k;
    do {
      seen.insert(x);
      x = d == 1 ? 0 : mod(x * p, d);
    } while (seen.count(x) == 0);
  }
  return reps;
}

}  // namespace hgm
