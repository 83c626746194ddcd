#pragma once

#include <cstdint>
#include <string>

#include "gl2deg/modarith.hpp"

namespace gl2deg {

// Invertible 2x2 matrix over Z/lZ, row-major, acting on column vectors
// from the left.  Construction rejects singular matrices.
struct Mat2 {
  u32 ell;
  u32 a, b, c, d;

  bool operator==(const Mat2&) const = default;
};

Mat2 mat2(u32 ell, long long a, long long b, long long c, long long d);

Mat2 identity(u32 ell);
Mat2 neg_identity(u32 ell);

Mat2 mul(const Mat2& x, const Mat2& y);
Mat2 inverse(const Mat2& x);
Mat2 mat_pow(const Mat2& x, u64 e);
u32 det(const Mat2& x);
u32 trace(const Mat2& x);
bool is_scalar(const Mat2& x);

// Least k >= 1 with x^k = I, computed against the exponent l*(l^2-1)
// by divisor refinement.
u64 element_order(const Mat2& x);

// Conjugation-invariant shape of the characteristic polynomial.
enum class SpectralProfile {
  Scalar,           // in Z(l)
  SplitSemisimple,  // two distinct eigenvalues in F_l
  Irreducible,      // no eigenvalue in F_l
  Nonsemisimple,    // repeated eigenvalue, not scalar
};
SpectralProfile spectral_profile(const Mat2& x);

// Dense encoding ((a*l+b)*l+c)*l+d; total order on elements of GL2(l).
using MatKey = u64;
MatKey mat_key(const Mat2& x);
Mat2 mat_from_key(u32 ell, MatKey k);

std::string to_string(const Mat2& x);

}  // namespace gl2deg
