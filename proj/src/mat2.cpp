#include "gl2deg/mat2.hpp"

#include <stdexcept>

namespace gl2deg {

Mat2 mat2(u32 ell, long long a, long long b, long long c, long long d) {
  if (ell < 2) throw std::invalid_argument("mat2: modulus must be >= 2");
  auto norm = [&](long long v) -> u32 {
    long long r = v % (long long)ell;
    if (r < 0) r += ell;
    return (u32)r;
  };
  Mat2 m{ell, norm(a), norm(b), norm(c), norm(d)};
  if (det(m) == 0) throw std::invalid_argument("mat2: singular matrix " + to_string(m));
  return m;
}

Mat2 identity(u32 ell) { return Mat2{ell, 1, 0, 0, 1}; }
Mat2 neg_identity(u32 ell) { return Mat2{ell, ell - 1, 0, 0, ell - 1}; }

Mat2 mul(const Mat2& x, const Mat2& y) {
  if (x.ell != y.ell) throw std::invalid_argument("mul: mixed moduli");
  u64 l = x.ell;
  return Mat2{x.ell,
              (u32)(((u64)x.a * y.a + (u64)x.b * y.c) % l),
              (u32)(((u64)x.a * y.b + (u64)x.b * y.d) % l),
              (u32)(((u64)x.c * y.a + (u64)x.d * y.c) % l),
              (u32)(((u64)x.c * y.b + (u64)x.d * y.d) % l)};
}

u32 det(const Mat2& x) {
  u64 l = x.ell;
  u64 ad = (u64)x.a * x.d % l;
  u64 bc = (u64)x.b * x.c % l;
  return (u32)((ad + l - bc) % l);
}

u32 trace(const Mat2& x) { return (u32)(((u64)x.a + x.d) % x.ell); }

bool is_scalar(const Mat2& x) { return x.b == 0 && x.c == 0 && x.a == x.d; }

Mat2 inverse(const Mat2& x) {
  u32 dv = det(x);
  u64 di = inv_mod(dv, x.ell);
  u64 l = x.ell;
  return Mat2{x.ell,
              (u32)(di * x.d % l),
              (u32)(di * (l - x.b) % l),
              (u32)(di * (l - x.c) % l),
              (u32)(di * x.a % l)};
}

Mat2 mat_pow(const Mat2& x, u64 e) {
  Mat2 r = identity(x.ell);
  Mat2 base = x;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

u64 element_order(const Mat2& x) {
  u64 l = x.ell;
  u64 exponent = l * (l * l - 1);  // multiple of every element order
  u64 n = exponent;
  for (u64 p : prime_profile(exponent).all) {
    while (n % p == 0 && mat_pow(x, n / p) == identity(x.ell)) n /= p;
  }
  return n;
}

SpectralProfile spectral_profile(const Mat2& x) {
  if (is_scalar(x)) return SpectralProfile::Scalar;
  u32 l = x.ell;
  // discriminant of the characteristic polynomial, tr^2 - 4 det
  u64 t = trace(x);
  u64 disc = (t * t % l + (u64)(l - 4 % l) * det(x)) % l;
  if (disc == 0) return SpectralProfile::Nonsemisimple;
  return legendre((long long)disc, l) == 1 ? SpectralProfile::SplitSemisimple
                                           : SpectralProfile::Irreducible;
}

MatKey mat_key(const Mat2& x) {
  u64 l = x.ell;
  return ((((u64)x.a * l + x.b) * l) + x.c) * l + x.d;
}

Mat2 mat_from_key(u32 ell, MatKey k) {
  u64 l = ell;
  u32 d = (u32)(k % l);
  k /= l;
  u32 c = (u32)(k % l);
  k /= l;
  u32 b = (u32)(k % l);
  k /= l;
  u32 a = (u32)(k % l);
  return Mat2{ell, a, b, c, d};
}

std::string to_string(const Mat2& x) {
  return "[" + std::to_string(x.a) + "," + std::to_string(x.b) + ";" + std::to_string(x.c) + "," +
         std::to_string(x.d) + "] mod " + std::to_string(x.ell);
}

}  // namespace gl2deg
