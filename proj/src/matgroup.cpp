#include "gl2deg/matgroup.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace gl2deg {

bool keys_contain(std::span<const MatKey> sorted, MatKey k) {
  return std::binary_search(sorted.begin(), sorted.end(), k);
}

bool MatGroup::contains(MatKey k) const { return keys_contain(elements, k); }
bool Subgroup::contains(MatKey k) const { return keys_contain(elements, k); }

MatGroup closure(u32 ell, const std::vector<Mat2>& gens) {
  if (gens.empty()) throw std::invalid_argument("closure: empty generator list");
  for (const Mat2& g : gens) {
    if (g.ell != ell) throw std::invalid_argument("closure: generator modulus mismatch");
    if (det(g) == 0) throw std::invalid_argument("closure: singular generator");
  }
  std::unordered_set<MatKey> seen;
  std::deque<Mat2> todo;
  seen.insert(mat_key(identity(ell)));
  todo.push_back(identity(ell));
  while (!todo.empty()) {
    Mat2 cur = todo.front();
    todo.pop_front();
    for (const Mat2& g : gens) {
      Mat2 p = mul(cur, g);
      if (seen.insert(mat_key(p)).second) todo.push_back(p);
    }
  }
  MatGroup out;
  out.ell = ell;
  out.elements.assign(seen.begin(), seen.end());
  std::sort(out.elements.begin(), out.elements.end());
  out.generators = gens;
  return out;
}

std::vector<Mat2> reduce_generators(u32 ell, const KeyVec& elems) {
  std::vector<Mat2> gens;
  KeyVec have{mat_key(identity(ell))};
  for (MatKey k : elems) {
    if (keys_contain(have, k)) continue;
    gens.push_back(mat_from_key(ell, k));
    have = closure(ell, gens).elements;
    if (have.size() == elems.size()) break;
  }
  if (gens.empty()) gens.push_back(identity(ell));
  return gens;
}

MatGroup group_from_elements(u32 ell, KeyVec elems) {
  std::sort(elems.begin(), elems.end());
  MatGroup out;
  out.ell = ell;
  out.generators = reduce_generators(ell, elems);
  out.elements = std::move(elems);
  return out;
}

Subgroup conjugate(const Mat2& g, const Subgroup& h) {
  Subgroup out;
  out.ell = h.ell;
  out.index = h.index;
  out.elements = conjugate_keys(g, h.ell, h.elements);
  return out;
}

KeyVec conjugate_keys(const Mat2& g, u32 ell, std::span<const MatKey> elems) {
  if (g.ell != ell) throw std::invalid_argument("conjugate: modulus mismatch");
  Mat2 gi = inverse(g);
  KeyVec out;
  out.reserve(elems.size());
  for (MatKey k : elems) out.push_back(mat_key(mul(mul(g, mat_from_key(ell, k)), gi)));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// fixed vectors

namespace {

// subspace of F_l^2: dim 2, a projective line (x:y), or 0
struct Subspace {
  int dim;  // 0, 1, 2
  u32 x = 0, y = 0;
};

Subspace fixed_space(const Mat2& m) {
  u32 l = m.ell;
  // kernel of m - I
  u32 r11 = (m.a + l - 1) % l, r12 = m.b;
  u32 r21 = m.c, r22 = (m.d + l - 1) % l;
  if (r11 == 0 && r12 == 0 && r21 == 0 && r22 == 0) return {2};
  u64 dt = ((u64)r11 * r22 % l + l - (u64)r12 * r21 % l) % l;
  if (dt != 0) return {0};
  // rank one: kernel of a nonzero row (r1 r2) is spanned by (r2, -r1)
  u32 r1 = r11, r2 = r12;
  if (r1 == 0 && r2 == 0) r1 = r21, r2 = r22;
  Subspace s{1, r2, (l - r1) % l};
  if (s.x != 0) {
    u64 i = inv_mod(s.x, l);
    s.y = (u32)(i * s.y % l);
    s.x = 1;
  } else {
    s.y = 1;
  }
  return s;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.dim == 2) return b;
  if (b.dim == 2) return a;
  if (a.dim == 0 || b.dim == 0) return {0};
  if (a.x == b.x && a.y == b.y) return a;
  return {0};
}

}  // namespace

bool fixes_nonzero_vector(u32 ell, std::span<const MatKey> gens) {
  Subspace s{2};
  for (MatKey k : gens) {
    s = intersect(s, fixed_space(mat_from_key(ell, k)));
    if (s.dim == 0) return false;
  }
  return s.dim > 0;
}

// ---------------------------------------------------------------------------
// twists and index-2 subgroups

namespace {

// local index of a modest element set, for subgroup-of-a-subgroup work
struct LocalIndex {
  u32 ell;
  KeyVec keys;  // sorted
  std::vector<Mat2> mats;

  LocalIndex(u32 l, KeyVec k) : ell(l), keys(std::move(k)) {
    mats.reserve(keys.size());
    for (MatKey key : keys) mats.push_back(mat_from_key(ell, key));
  }
  u32 size() const { return (u32)keys.size(); }
  u32 at(MatKey k) const {
    auto it = std::lower_bound(keys.begin(), keys.end(), k);
    return (u32)(it - keys.begin());
  }
  u32 mul_idx(u32 i, u32 j) const { return at(mat_key(mul(mats[i], mats[j]))); }
};

// subgroup of the indexed group spanned by the given element indices
std::vector<u32> span_indices(const LocalIndex& L, const std::vector<u32>& seed) {
  std::vector<char> in(L.size(), 0);
  std::vector<u32> members;
  u32 id = L.at(mat_key(identity(L.ell)));
  in[id] = 1;
  members.push_back(id);
  std::vector<u32> gens;
  for (u32 s : seed) {
    if (in[s]) continue;
    gens.push_back(s);
    std::deque<u32> todo(members.begin(), members.end());
    while (!todo.empty()) {
      u32 cur = todo.front();
      todo.pop_front();
      for (u32 g : gens) {
        u32 p = L.mul_idx(cur, g);
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
          todo.push_back(p);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

std::vector<KeyVec> index2_subgroups(u32 ell, const KeyVec& elems) {
  LocalIndex L(ell, elems);
  u32 n = L.size();

  // N := subgroup generated by all squares; G/N is elementary abelian 2
  std::vector<u32> squares;
  {
    std::vector<char> seen(n, 0);
    for (u32 i = 0; i < n; ++i) {
      u32 s = L.at(mat_key(mul(L.mats[i], L.mats[i])));
      if (!seen[s]) {
        seen[s] = 1;
        squares.push_back(s);
      }
    }
  }
  std::vector<u32> nsub = span_indices(L, squares);
  if (nsub.size() == elems.size()) return {};

  // coset decomposition by N
  std::vector<u32> coset_of(n, UINT32_MAX);
  std::vector<u32> reps;
  for (u32 i = 0; i < n; ++i) {
    if (coset_of[i] != UINT32_MAX) continue;
    u32 c = (u32)reps.size();
    reps.push_back(i);
    for (u32 m : nsub) coset_of[L.mul_idx(m, i)] = c;
  }
  u32 q = (u32)reps.size();

  // GF(2) coordinates of each coset
  std::vector<std::vector<u32>> coords(q);
  std::vector<char> done(q, 0);
  u32 idc = coset_of[L.at(mat_key(identity(ell)))];
  done[idc] = 1;
  std::vector<u32> spanned{idc};
  u32 rank = 0;
  for (u32 c = 0; c < q; ++c) {
    if (done[c]) continue;
    u32 bi = rank++;
    std::vector<u32> old = spanned;
    for (u32 s : old) {
      u32 t = coset_of[L.mul_idx(reps[s], reps[c])];
      if (!done[t]) {
        done[t] = 1;
        coords[t] = coords[s];
        coords[t].push_back(bi);
        spanned.push_back(t);
      }
    }
  }

  // kernels of the nontrivial characters
  std::vector<KeyVec> out;
  for (u32 chi = 1; chi < (1u << rank); ++chi) {
    KeyVec sub;
    sub.reserve(elems.size() / 2);
    for (u32 i = 0; i < n; ++i) {
      u32 par = 0;
      for (u32 b : coords[coset_of[i]]) par ^= (chi >> b) & 1;
      if (par == 0) sub.push_back(L.keys[i]);
    }
    std::sort(sub.begin(), sub.end());
    out.push_back(std::move(sub));
  }
  return out;
}

std::vector<MatGroup> twists(const MatGroup& g) {
  MatKey mi = mat_key(neg_identity(g.ell));
  // <G, -1> is G together with the coset (-I)G
  KeyVec hat = g.elements;
  if (!keys_contain(hat, mi)) {
    Mat2 m = neg_identity(g.ell);
    for (MatKey k : g.elements) hat.push_back(mat_key(mul(m, mat_from_key(g.ell, k))));
    std::sort(hat.begin(), hat.end());
  }
  std::vector<MatGroup> out;
  std::unordered_set<std::string> seen;
  auto push = [&](KeyVec elems) {
    std::string key((const char*)elems.data(), elems.size() * sizeof(MatKey));
    if (seen.insert(key).second) out.push_back(group_from_elements(g.ell, std::move(elems)));
  };
  push(hat);
  for (KeyVec& k : index2_subgroups(g.ell, hat))
    if (!keys_contain(k, mi)) push(std::move(k));
  return out;
}

// ---------------------------------------------------------------------------
// subgroup enumeration

namespace {

// parent-group indexing with O(1) element lookup
struct ParentIndex {
  static constexpr u32 npos = UINT32_MAX;

  u32 ell;
  const KeyVec& keys;
  std::vector<Mat2> mats;
  std::vector<u32> invs;
  bool flat = false;
  std::vector<u32> flat_lookup;  // key -> index+1
  std::unordered_map<MatKey, u32> map_lookup;

  explicit ParentIndex(const MatGroup& g) : ell(g.ell), keys(g.elements) {
    u32 n = (u32)keys.size();
    mats.reserve(n);
    for (MatKey k : keys) mats.push_back(mat_from_key(ell, k));
    u64 space = (u64)ell * ell * ell * ell;
    flat = space <= (u64{1} << 23);
    if (flat) {
      flat_lookup.assign(space, 0);
      for (u32 i = 0; i < n; ++i) flat_lookup[keys[i]] = i + 1;
    } else {
      map_lookup.reserve(n * 2);
      for (u32 i = 0; i < n; ++i) map_lookup.emplace(keys[i], i);
    }
    invs.resize(n);
    for (u32 i = 0; i < n; ++i) invs[i] = at(mat_key(inverse(mats[i])));
  }

  u32 at(MatKey k) const {
    if (flat) {
      u32 v = flat_lookup[k];
      return v == 0 ? npos : v - 1;
    }
    auto it = map_lookup.find(k);
    return it == map_lookup.end() ? npos : it->second;
  }
  u32 mul_idx(u32 i, u32 j) const { return at(mat_key(mul(mats[i], mats[j]))); }
  u32 conj_idx(u32 gi, u32 h) const {
    return at(mat_key(mul(mul(mats[gi], mats[h]), mats[invs[gi]])));
  }
};

struct VecHash {
  std::size_t operator()(const std::vector<u32>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (u32 x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct EnumState {
  std::unordered_set<std::vector<u32>, VecHash> seen;
  std::deque<std::pair<std::vector<u32>, std::vector<u32>>> frontier;  // (elements, gens)
  std::vector<std::pair<std::vector<u32>, std::vector<u32>>> found;

  void add(std::vector<u32> elems, std::vector<u32> gens) {
    if (seen.insert(elems).second) {
      found.emplace_back(elems, gens);
      frontier.emplace_back(std::move(elems), std::move(gens));
    }
  }
};

// Icosahedral (SL2(5)-isomorphic) subgroups contained in the det-1 part.
// All copies in GL2(l) are conjugate, so one found copy conjugated across
// GL2(l) and filtered to the parent yields the complete list.
void seed_icosahedral(const ParentIndex& P, const std::vector<u32>& det1, EnumState& st) {
  u32 l = P.ell;
  if (l < 11 || (l % 5 != 1 && l % 5 != 4) || det1.size() < 120) return;

  u32 n = (u32)P.keys.size();

  // bounded closure of <a, b>; empty result means "not order 120"
  auto try_pair = [&](u32 a, u32 b) -> std::vector<u32> {
    std::vector<char> in(n, 0);
    std::vector<u32> members{P.at(mat_key(identity(l)))};
    in[members[0]] = 1;
    std::deque<u32> todo{members[0]};
    u32 gens[2] = {a, b};
    while (!todo.empty()) {
      u32 cur = todo.front();
      todo.pop_front();
      for (u32 g : gens) {
        u32 p = P.mul_idx(cur, g);
        if (!in[p]) {
          if (members.size() >= 120) return {};
          in[p] = 1;
          members.push_back(p);
          todo.push_back(p);
        }
      }
    }
    if (members.size() != 120) return {};
    std::sort(members.begin(), members.end());
    return members;
  };

  // perfect <=> spanned by its own commutators
  auto is_perfect = [&](const std::vector<u32>& mem) {
    std::vector<char> seen_c(n, 0);
    std::vector<u32> comms;
    for (u32 i : mem)
      for (u32 j : mem) {
        Mat2 c = mul(mul(P.mats[i], P.mats[j]), inverse(mul(P.mats[j], P.mats[i])));
        u32 ci = P.at(mat_key(c));
        if (!seen_c[ci]) {
          seen_c[ci] = 1;
          comms.push_back(ci);
        }
      }
    if (comms.size() > mem.size()) return false;
    // span the commutators
    std::vector<char> in(n, 0);
    std::vector<u32> spanned{P.at(mat_key(identity(l)))};
    in[spanned[0]] = 1;
    for (std::size_t i = 0; i < spanned.size(); ++i)
      for (u32 c : comms) {
        u32 p = P.mul_idx(spanned[i], c);
        if (!in[p]) {
          in[p] = 1;
          spanned.push_back(p);
        }
      }
    return spanned.size() == mem.size();
  };

  std::vector<u32> tens, fours;
  for (u32 i : det1) {
    u64 o = element_order(P.mats[i]);
    if (o == 10)
      tens.push_back(i);
    else if (o == 4)
      fours.push_back(i);
  }
  std::vector<u32> copy;
  u32 copy_a = 0, copy_b = 0;
  for (u32 a : tens) {
    for (u32 b : fours) {
      auto mem = try_pair(a, b);
      if (!mem.empty() && is_perfect(mem)) {
        copy = mem;
        copy_a = a;
        copy_b = b;
        break;
      }
    }
    if (!copy.empty()) break;
  }
  if (copy.empty()) return;

  // saturate over GL2(l) conjugation, keeping copies inside the parent
  Mat2 ga = P.mats[copy_a], gb = P.mats[copy_b];
  u64 l64 = l;
  for (u64 a = 0; a < l64; ++a)
    for (u64 b = 0; b < l64; ++b)
      for (u64 c = 0; c < l64; ++c)
        for (u64 d = 0; d < l64; ++d) {
          if ((a * d % l64 + l64 - b * c % l64) % l64 == 0) continue;
          Mat2 t{l, (u32)a, (u32)b, (u32)c, (u32)d};
          Mat2 ti = inverse(t);
          u32 ca = P.at(mat_key(mul(mul(t, ga), ti)));
          u32 cb = P.at(mat_key(mul(mul(t, gb), ti)));
          if (ca == ParentIndex::npos || cb == ParentIndex::npos) continue;
          std::vector<u32> conj;
          conj.reserve(120);
          bool inside = true;
          for (u32 m : copy) {
            u32 cm = P.at(mat_key(mul(mul(t, P.mats[m]), ti)));
            if (cm == ParentIndex::npos) {
              inside = false;
              break;
            }
            conj.push_back(cm);
          }
          if (!inside) continue;
          std::sort(conj.begin(), conj.end());
          st.add(std::move(conj), {ca, cb});
        }
}

std::vector<Subgroup> package(const MatGroup& g, const std::vector<std::vector<u32>>& found) {
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& idxs : found) {
    Subgroup s;
    s.ell = g.ell;
    s.elements.reserve(idxs.size());
    for (u32 i : idxs) s.elements.push_back(g.elements[i]);
    s.index = g.order() / idxs.size();
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return out;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const MatGroup& g, u64 budget) {
  if (g.order() > budget) throw BudgetExceeded(g.order(), budget);
  ParentIndex P(g);
  u32 n = (u32)g.order();

  EnumState st;
  u32 id = P.at(mat_key(identity(g.ell)));
  st.add({id}, {});

  // perfect seeds: the full determinant-1 kernel when it is SL2(l), and
  // icosahedral copies when l = +-1 mod 5
  {
    std::vector<u32> det1;
    for (u32 i = 0; i < n; ++i)
      if (det(P.mats[i]) == 1) det1.push_back(i);
    u64 sl2_order = (u64)g.ell * ((u64)g.ell * g.ell - 1);
    if (g.ell >= 5 && det1.size() == sl2_order) {
      std::vector<u32> gens{P.at(mat_key(mat2(g.ell, 1, 1, 0, 1))),
                            P.at(mat_key(mat2(g.ell, 1, 0, 1, 1)))};
      st.add(det1, gens);
    }
    seed_icosahedral(P, det1, st);
  }

  std::vector<char> in_h(n, 0);

  while (!st.frontier.empty()) {
    auto [helems, hgens] = std::move(st.frontier.front());
    st.frontier.pop_front();

    for (u32 i : helems) in_h[i] = 1;

    // normalizer of H in G, tested on the generators of H
    std::vector<u32> nrm;
    for (u32 gi = 0; gi < n; ++gi) {
      bool ok = true;
      for (u32 h : hgens)
        if (!in_h[P.conj_idx(gi, h)]) {
          ok = false;
          break;
        }
      if (ok) nrm.push_back(gi);
    }

    u64 quot = nrm.size() / helems.size();
    if (quot > 1) {
      auto primes = prime_profile(quot).all;
      for (u32 gi : nrm) {
        if (in_h[gi]) continue;
        // H is normal in <H, gi>; gi extends H by a prime cyclic factor
        // iff its image in N(H)/H has prime order p, i.e. gi^p lands in H
        for (u64 p : primes) {
          if (!in_h[P.at(mat_key(mat_pow(P.mats[gi], p)))]) continue;
          std::vector<u32> kelems = helems;
          kelems.reserve(helems.size() * p);
          u32 cur = gi;
          for (u64 e = 1; e < p; ++e) {
            for (u32 h : helems) kelems.push_back(P.mul_idx(h, cur));
            cur = P.mul_idx(cur, gi);
          }
          std::sort(kelems.begin(), kelems.end());
          std::vector<u32> kgens = hgens;
          kgens.push_back(gi);
          st.add(std::move(kelems), std::move(kgens));
          break;  // the image order is a single prime; no other p matches
        }
      }
    }

    for (u32 i : helems) in_h[i] = 0;
  }

  return package(g, st.found);
}

std::vector<Subgroup> naive_subgroups(const MatGroup& g) {
  ParentIndex P(g);
  u32 n = (u32)g.order();
  u32 id = P.at(mat_key(identity(g.ell)));

  std::unordered_set<std::vector<u32>, VecHash> seen;
  std::deque<std::vector<u32>> todo;
  seen.insert({id});
  todo.push_back({id});

  std::vector<char> in(n, 0);
  std::vector<std::vector<u32>> found{{id}};
  while (!todo.empty()) {
    std::vector<u32> h = std::move(todo.front());
    todo.pop_front();
    for (u32 gi = 0; gi < n; ++gi) {
      if (std::binary_search(h.begin(), h.end(), gi)) continue;
      // worklist closure of h + gi: when an element is processed, every
      // earlier element is already present, so all pairs get both products
      std::vector<u32> k = h;
      for (u32 i : k) in[i] = 1;
      in[gi] = 1;
      k.push_back(gi);
      std::deque<u32> work(k.begin(), k.end());
      while (!work.empty()) {
        u32 z = work.front();
        work.pop_front();
        for (std::size_t j = 0; j < k.size(); ++j) {
          for (u32 p : {P.mul_idx(z, k[j]), P.mul_idx(k[j], z)}) {
            if (!in[p]) {
              in[p] = 1;
              k.push_back(p);
              work.push_back(p);
            }
          }
        }
      }
      for (u32 i : k) in[i] = 0;
      std::sort(k.begin(), k.end());
      if (seen.insert(k).second) {
        found.push_back(k);
        todo.push_back(k);
      }
    }
  }

  return package(g, found);
}

}  // namespace gl2deg
