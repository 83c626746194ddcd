#include "gl2deg/modarith.hpp"

#include <algorithm>
#include <stdexcept>

namespace gl2deg {

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 p = 3; p * p <= n; p += 2)
    if (n % p == 0) return false;
  return true;
}

bool is_odd_prime(u64 n) { return n > 2 && is_prime(n); }

u64 pow_mod(u64 a, u64 e, u64 m) {
  a %= m;
  u64 r = 1 % m;
  while (e > 0) {
    if (e & 1) r = (__uint128_t)r * a % m;
    a = (__uint128_t)a * a % m;
    e >>= 1;
  }
  return r;
}

u32 inv_mod(u64 a, u32 ell) {
  a %= ell;
  if (a == 0) throw std::invalid_argument("inv_mod: zero has no inverse");
  return (u32)pow_mod(a, ell - 2, ell);
}

int legendre(long long a, u32 ell) {
  if (!is_odd_prime(ell)) throw std::invalid_argument("legendre: modulus must be an odd prime");
  long long r = a % (long long)ell;
  if (r < 0) r += ell;
  if (r == 0) return 0;
  u64 e = pow_mod((u64)r, (ell - 1) / 2, ell);
  return e == 1 ? 1 : -1;
}

u32 nu2(u64 n) {
  if (n == 0) throw std::invalid_argument("nu2: argument must be positive");
  u32 k = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++k;
  }
  return k;
}

PrimeProfile prime_profile(u64 n) {
  if (n == 0) throw std::invalid_argument("prime_profile: argument must be positive");
  PrimeProfile out;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.all.push_back(p);
    if (p > 2) out.odd.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) {
    out.all.push_back(n);
    if (n > 2) out.odd.push_back(n);
  }
  return out;
}

std::vector<u64> divisors(u64 n) {
  if (n == 0) throw std::invalid_argument("divisors: argument must be positive");
  std::vector<u64> small, large;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

PrimeCtx make_ctx(u32 ell) {
  if (!is_odd_prime(ell)) throw std::invalid_argument("make_ctx: ell must be an odd prime");
  if (ell > kMaxPrime) throw std::invalid_argument("make_ctx: ell too large for 64-bit index sets");

  u32 eps = 0;
  for (u32 a = 2; a < ell; ++a) {
    if (legendre(a, ell) == -1) {
      eps = a;
      break;
    }
  }

  auto factors = prime_profile(ell - 1).all;
  u32 alpha = 0;
  for (u32 a = 2; a < ell; ++a) {
    bool primitive = true;
    for (u64 q : factors) {
      if (pow_mod(a, (ell - 1) / q, ell) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      alpha = a;
      break;
    }
  }
  return PrimeCtx{ell, eps, alpha};
}

}  // namespace gl2deg
