#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Exact arithmetic mod an odd prime l, plus the small number-theoretic
// helpers (Legendre symbol, 2-adic valuation, prime profiles, divisor
// lists) everything else is built on.  All functions are pure.

namespace gl2deg {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Largest prime we accept anywhere; keeps l*(l+1)*(l-1)^2 inside u64
// with room to spare.
inline constexpr u32 kMaxPrime = 10000;

bool is_prime(u64 n);
bool is_odd_prime(u64 n);

// a^e mod m (m >= 2)
u64 pow_mod(u64 a, u64 e, u64 m);
// inverse of a mod odd prime l
u32 inv_mod(u64 a, u32 ell);

// Legendre symbol (a/l): 0 if l | a, +1 for nonzero squares, -1 otherwise.
// Accepts negative a.  Throws std::invalid_argument unless l is an odd prime.
int legendre(long long a, u32 ell);

// 2-adic valuation of n >= 1
u32 nu2(u64 n);

// prime divisors of n, and the odd ones
struct PrimeProfile {
  std::vector<u64> all;
  std::vector<u64> odd;
};
PrimeProfile prime_profile(u64 n);

// all divisors of n >= 1, ascending
std::vector<u64> divisors(u64 n);

// Fixed arithmetic context for one prime: a quadratic nonresidue epsilon
// and a primitive root alpha, both chosen as the smallest positive
// representatives so every downstream construction is reproducible.
struct PrimeCtx {
  u32 ell;
  u32 epsilon;
  u32 alpha;
};

PrimeCtx make_ctx(u32 ell);

}  // namespace gl2deg
