#pragma once

#include <span>
#include <string>

#include "gl2deg/matgroup.hpp"

namespace gl2deg {

// The named subgroups of GL2(l).  The strict containments among the first
// five form two chains: Z < Cs < Ns and Z < Cns < Nns.
enum class StandardKind { Z, Cs, Cns, Ns, Nns, Cr, Borel, Full };

std::string to_string(StandardKind k);
StandardKind standard_kind_from_string(const std::string& s);

// One explicitly constructed copy of each named subgroup, plus the
// Borel-trio G, H1, H2 used for the class-number-one CM images.
struct CanonicalGroups {
  PrimeCtx ctx;
  MatGroup z;      // scalars, order l-1
  MatGroup cs;     // diagonal, order (l-1)^2
  MatGroup cns;    // {(x, eps*y; y, x)}, order l^2-1
  MatGroup ns;     // split normalizer, order 2(l-1)^2
  MatGroup nns;    // nonsplit normalizer, order 2(l^2-1)
  MatGroup cr;     // {(a, b; 0, a)}, order l(l-1)
  MatGroup borel;  // upper triangular, order l(l-1)^2
  MatGroup full;   // GL2(l), order l(l+1)(l-1)^2
  MatGroup g;      // {(a, b; 0, +-a)}, order 2l(l-1)
  MatGroup h1;     // {(a, b; 0, +-a) : a square}, order l(l-1)
  MatGroup h2;     // {(+-a, b; 0, a) : a square}, order l(l-1)

  const MatGroup& by_kind(StandardKind k) const;
};

CanonicalGroups build_canonical(const PrimeCtx& ctx);

// matrix families from the normalizer decompositions
Mat2 d_split(const PrimeCtx& c, u32 x, u32 y);    // (x 0; 0 y)
Mat2 a_split(const PrimeCtx& c, u32 x, u32 y);    // (0 x; y 0)
Mat2 d_nonsplit(const PrimeCtx& c, u32 x, u32 y); // (x eps*y; y x)
Mat2 a_nonsplit(const PrimeCtx& c, u32 x, u32 y); // (x -eps*y; y -x)

// True iff some GL2(l)-conjugate of H lies inside the canonical copy of
// `kind`.  Exact structural decision (no search):
//   Z:     every element scalar
//   Cs:    abelian with every element split-semisimple or scalar
//   Cns:   all scalar, or abelian containing an irreducible element
//   Cr:    every element has a repeated eigenvalue
//   Ns:    some unordered pair of distinct lines is stabilized
//   Nns:   contained in the normalizer of some nonsplit torus
//   Borel: some line is fixed
bool conj_into(const PrimeCtx& ctx, std::span<const MatKey> elems, StandardKind kind);

// Authoritative oracle: scan g over GL2(l) for g H g^-1 inside the
// canonical copy, with conjugation-invariant pruning.  Exponential-ish;
// used to validate the structural tests.
bool conj_into_search(const PrimeCtx& ctx, std::span<const MatKey> elems, StandardKind kind);

// H belongs to M when it is conjugate into M but into no kind strictly
// below M in the two-chain lattice.  Only Z, Cs, Cns, Ns, Nns qualify.
bool belongs_to(const PrimeCtx& ctx, std::span<const MatKey> elems, StandardKind kind);

// conjugate into Cr but not into Z
bool belongs_to_cr(const PrimeCtx& ctx, std::span<const MatKey> elems);

// Classification of a subgroup by its image in PGL2(l): groups with an
// order-l element are Borel-contained or contain SL2; the rest have
// cyclic, dihedral, or A4/S4/A5 image and are placed by the conjugacy
// tests rather than by abstract isomorphism type.
enum class DicksonClass {
  BorelWithEllElement,
  ContainsSL2,
  CartanCyclicImage,
  NormalizerDihedralImage,
  ExceptionalA4S4A5,
};
std::string to_string(DicksonClass c);
DicksonClass dickson_class(const PrimeCtx& ctx, std::span<const MatKey> elems);

// |H| / |H n Z|, the order of the image in PGL2(l)
u64 pgl2_image_order(u32 ell, std::span<const MatKey> elems);

}  // namespace gl2deg
