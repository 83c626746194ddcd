#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "gl2deg/mat2.hpp"

namespace gl2deg {

// Sorted vector of element encodings; the canonical form of a subgroup.
using KeyVec = std::vector<MatKey>;

inline constexpr u64 kDefaultBudget = 20000;

struct BudgetExceeded : std::runtime_error {
  u64 group_order;
  u64 budget;
  BudgetExceeded(u64 got, u64 lim)
      : std::runtime_error("subgroup enumeration budget exceeded: group order " +
                           std::to_string(got) + " > budget " + std::to_string(lim)),
        group_order(got),
        budget(lim) {}
};

// A finite subgroup of GL2(l) held as an explicit element set (sorted
// encodings) together with a generating set.
struct MatGroup {
  u32 ell = 0;
  KeyVec elements;            // sorted, closed under product and inverse
  std::vector<Mat2> generators;

  u64 order() const { return elements.size(); }
  bool contains(MatKey k) const;
  bool contains(const Mat2& m) const { return contains(mat_key(m)); }
};

// Breadth-first product closure of a nonempty generator list.
MatGroup closure(u32 ell, const std::vector<Mat2>& gens);

// Group on an explicit element set; derives a small generating set.
MatGroup group_from_elements(u32 ell, KeyVec elems);

struct Subgroup {
  u32 ell = 0;
  KeyVec elements;    // sorted
  KeyVec generators;  // some generating subset (unsorted)
  u64 index = 0;      // in the parent it was enumerated from

  u64 order() const { return elements.size(); }
  bool contains(MatKey k) const;
};

// Every subgroup of G, each exactly once (as element sets, not up to
// conjugacy).  Cyclic extension from the trivial group and the perfect
// subgroups; throws BudgetExceeded when |G| > budget.
std::vector<Subgroup> all_subgroups(const MatGroup& g, u64 budget = kDefaultBudget);

// Independent oracle: one-generator-at-a-time lattice walk.  Quadratic-ish;
// intended for small groups only.
std::vector<Subgroup> naive_subgroups(const MatGroup& g);

// {g h g^-1 : h in H}
Subgroup conjugate(const Mat2& g, const Subgroup& h);
KeyVec conjugate_keys(const Mat2& g, u32 ell, std::span<const MatKey> elems);

// True iff the intersection of the fixed spaces ker(h - I) over h in H
// is nonzero.  H is given by any generating subset (fixed vectors of the
// generators are fixed by the whole group).
bool fixes_nonzero_vector(u32 ell, std::span<const MatKey> gens);

// <G, -1> followed by the index-2 subgroups of <G, -1> not containing -I,
// de-duplicated by element set.
std::vector<MatGroup> twists(const MatGroup& g);

// All index-2 subgroups of a group given by its element set.
std::vector<KeyVec> index2_subgroups(u32 ell, const KeyVec& elems);

// glue used across modules
bool keys_contain(std::span<const MatKey> sorted, MatKey k);
std::vector<Mat2> reduce_generators(u32 ell, const KeyVec& elems);

}  // namespace gl2deg
