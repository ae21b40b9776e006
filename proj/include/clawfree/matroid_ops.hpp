// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "clawfree/matroid.hpp"

namespace clawfree {

namespace detail {

inline void check_subset(Matroid const& m, GroundSubset const& s) {
  if (s.bits() & ~full_mask(m.size())) {
    throw InputError("subset has an element outside the matroid's ground set");
  }
}

inline void check_mask(Matroid const& m, Mask s) {
  if (s & ~full_mask(m.size())) {
    throw InputError("subset has an element outside the matroid's ground set");
  }
}

// Renumbers the bits of `s` that lie in `keep` to consecutive positions.
inline Mask compress(Mask s, Mask keep) {
  Mask out = 0;
  int k = 0;
  for_each_bit(keep, [&](int i) {
    if (contains(s, i)) out |= bit(k);
    ++k;
  });
  return out;
}

inline Mask expand(Mask s, Mask keep) {
  Mask out = 0;
  int k = 0;
  for_each_bit(keep, [&](int i) {
    if (contains(s, k)) out |= bit(i);
    ++k;
  });
  return out;
}

}  // namespace detail

inline int rank(Matroid const& m, GroundSubset const& s) {
  detail::check_subset(m, s);
  return m.rank(s.bits());
}

inline GroundSubset closure(Matroid const& m, GroundSubset const& s) {
  detail::check_subset(m, s);
  return GroundSubset(m.closure(s.bits()), m.size());
}

inline bool are_skew(Matroid const& m, GroundSubset const& x, GroundSubset const& y) {
  detail::check_subset(m, x);
  detail::check_subset(m, y);
  return m.rank(x.bits() | y.bits()) == m.rank(x.bits()) + m.rank(y.bits());
}

/// Basis family of a GF(2) representation: every full-rank column subset.
inline BasisMatroid to_basis_matroid(BinaryMatroid const& m, std::uint64_t max_subsets = 1U << 22) {
  int n = m.size(), r = m.rank();
  if (binomial(n, r) > max_subsets) {
    throw CapacityError("too many candidate bases to convert to a basis family");
  }
  std::vector<Mask> bases;
  for_each_k_subset(full_mask(n), r, [&](Mask s) {
    if (m.rank(s) == r) bases.push_back(s);
  });
  return BasisMatroid(n, r, std::move(bases));
}

inline BasisMatroid to_basis_matroid(Matroid const& m) {
  if (m.is_binary_backend()) return to_basis_matroid(m.binary());
  return m.bases();
}

/// Restriction M|keep, relabelled to 0..|keep|-1 in index order.
inline BasisMatroid restrict_bases(BasisMatroid const& m, Mask keep) {
  int rk = m.rank(keep);
  std::vector<Mask> out;
  for (Mask b : m.bases()) {
    if (popcount(b & keep) == rk) out.push_back(detail::compress(b & keep, keep));
  }
  return BasisMatroid(popcount(keep), rk, std::move(out));
}

/// Contraction M/c on the ground set E - c, relabelled in index order.
inline BasisMatroid contract_bases(BasisMatroid const& m, Mask c) {
  int rc = m.rank(c);
  Mask keep = full_mask(m.size()) & ~c;
  std::vector<Mask> out;
  for (Mask b : m.bases()) {
    if (popcount(b & c) == rc) out.push_back(detail::compress(b & keep, keep));
  }
  return BasisMatroid(popcount(keep), m.rank() - rc, std::move(out));
}

/// M / contract \ remove. The result's ground set is E - contract - remove,
/// with surviving elements keeping their relative order.
inline Matroid minor(Matroid const& m, GroundSubset const& contract, GroundSubset const& remove) {
  detail::check_subset(m, contract);
  detail::check_subset(m, remove);
  if (contract.bits() & remove.bits()) {
    throw InputError("contraction and deletion sets overlap");
  }
  if (m.is_binary_backend()) {
    return binary_minor(m.binary(), contract.bits(), remove.bits());
  }
  BasisMatroid c = contract_bases(m.bases(), contract.bits());
  Mask keep = full_mask(m.size()) & ~contract.bits();
  Mask del = detail::compress(remove.bits(), keep);
  return restrict_bases(c, full_mask(c.size()) & ~del);
}

struct Simplification {
  Matroid matroid;
  // representative[e]: smallest element parallel to e, or -1 when e is a loop.
  std::vector<int> representative;
  // kept[j]: original index of element j of the simplification.
  std::vector<int> kept;
};

template <RankOracle M>
std::vector<int> parallel_representatives(M const& m) {
  int n = m.size();
  std::vector<int> rep(n, -1);
  for (int e = 0; e < n; ++e) {
    if (m.rank(bit(e)) == 0) continue;
    rep[e] = e;
    for (int f = 0; f < e; ++f) {
      if (rep[f] == f && m.rank(bit(e) | bit(f)) == 1) {
        rep[e] = f;
        break;
      }
    }
  }
  return rep;
}

/// Deletes loops and all but the smallest element of every parallel class.
inline Simplification simplify(Matroid const& m) {
  Simplification out;
  if (m.is_binary_backend()) {
    auto const& b = m.binary();
    out.representative.assign(b.size(), -1);
    std::map<Gf2Vector, int> first;
    for (int e = 0; e < b.size(); ++e) {
      Gf2Vector v = b.column(e);
      if (v == 0) continue;
      auto [it, fresh] = first.emplace(v, e);
      out.representative[e] = it->second;
    }
  } else {
    out.representative = parallel_representatives(m.bases());
  }
  Mask keep = 0;
  for (int e = 0; e < m.size(); ++e) {
    if (out.representative[e] == e) {
      keep |= bit(e);
      out.kept.push_back(e);
    }
  }
  if (m.is_binary_backend()) {
    std::vector<Gf2Vector> cols;
    for (int e : out.kept) cols.push_back(m.binary().column(e));
    out.matroid = BinaryMatroid(m.binary().coordinates(), std::move(cols));
  } else {
    out.matroid = restrict_bases(m.bases(), keep);
  }
  return out;
}

inline int epsilon(Matroid const& m) { return simplify(m).matroid.size(); }

template <RankOracle M>
bool is_simple(M const& m) {
  int n = m.size();
  for (int e = 0; e < n; ++e) {
    if (m.rank(bit(e)) == 0) return false;
    for (int f = 0; f < e; ++f) {
      if (m.rank(bit(e) | bit(f)) < 2) return false;
    }
  }
  return true;
}

inline bool is_simple(Matroid const& m) {
  if (m.is_binary_backend()) return m.binary().is_simple();
  return is_simple(m.bases());
}

/// Direct sum with the second summand's elements placed after the first's.
/// Two binary summands stay binary, on disjoint coordinate blocks.
inline Matroid direct_sum(Matroid const& a, Matroid const& b) {
  int n = a.size() + b.size();
  check_ground_size(n);
  if (a.is_binary_backend() && b.is_binary_backend()) {
    auto const& x = a.binary();
    auto const& y = b.binary();
    int coords = x.coordinates() + y.coordinates();
    if (coords > kMaxCoordinates) throw CapacityError("direct sum exceeds 64 coordinates");
    std::vector<Gf2Vector> cols = x.columns();
    for (Gf2Vector v : y.columns()) cols.push_back(v << x.coordinates());
    return BinaryMatroid(coords, std::move(cols));
  }
  BasisMatroid x = to_basis_matroid(a), y = to_basis_matroid(b);
  std::vector<Mask> bases;
  bases.reserve(x.bases().size() * y.bases().size());
  for (Mask p : x.bases()) {
    for (Mask q : y.bases()) bases.push_back(p | (q << x.size()));
  }
  return BasisMatroid(n, x.rank() + y.rank(), std::move(bases));
}

/// Rank oracle for the restriction of `m` to `elements`, renumbered 0..k-1.
template <RankOracle M>
class Restriction {
 public:
  Restriction(M const& m, Mask elements) : m_(&m), elems_(to_indices(elements)) {}
  int size() const { return static_cast<int>(elems_.size()); }
  int rank(Mask s) const { return m_->rank(lift(s)); }
  Mask lift(Mask s) const {
    Mask out = 0;
    for_each_bit(s, [&](int i) { out |= bit(elems_[i]); });
    return out;
  }

 private:
  M const* m_;
  std::vector<int> elems_;
};

/// Connected components, from the fundamental circuits of one basis.
/// Loops are singleton components. Sorted by smallest element.
template <RankOracle M>
std::vector<Mask> connected_components(M const& m) {
  int n = m.size();
  Mask basis = 0;
  for (int e = 0; e < n; ++e)
    if (m.rank(basis | bit(e)) > popcount(basis)) basis |= bit(e);
  int r = popcount(basis);
  std::vector<int> parent(n);
  for (int e = 0; e < n; ++e) parent[e] = e;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < n; ++e) {
    if (contains(basis, e) || m.rank(bit(e)) == 0) continue;
    for_each_bit(basis, [&](int b) {
      if (m.rank((basis & ~bit(b)) | bit(e)) == r) parent[find(b)] = find(e);
    });
  }
  std::map<int, Mask> groups;
  for (int e = 0; e < n; ++e) groups[find(e)] |= bit(e);
  std::vector<Mask> out;
  for (auto const& [root, g] : groups) out.push_back(g);
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) { return lowest(a) < lowest(b); });
  return out;
}

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
};

inline ValidationReport validate(Matroid const& m) {
  ValidationReport rep;
  auto flag = [&](std::string msg) {
    rep.valid = false;
    rep.violations.push_back(std::move(msg));
  };
  if (m.is_binary_backend()) {
    auto const& b = m.binary();
    std::map<Gf2Vector, int> seen;
    for (int e = 0; e < b.size(); ++e) {
      Gf2Vector v = b.column(e);
      if (v == 0) flag("loop present: column " + std::to_string(e) + " is zero");
      auto [it, fresh] = seen.emplace(v, e);
      if (!fresh && v != 0) {
        flag("parallel pair: columns " + std::to_string(it->second) + " and " +
             std::to_string(e) + " are equal");
      }
    }
    if (b.rank() != b.coordinates()) {
      flag("declared rank " + std::to_string(b.coordinates()) + " but GF(2) rank is " +
           std::to_string(b.rank()));
    }
  } else {
    for (auto const& v : exchange_violations(m.bases())) {
      auto list = [](Mask s) {
        std::string out = "{";
        for (int i : to_indices(s)) out += (out.size() > 1 ? "," : "") + std::to_string(i);
        return out + "}";
      };
      flag("exchange violated: removing " + std::to_string(v.removed) + " from " + list(v.b1) +
           " admits no replacement from " + list(v.b2));
    }
  }
  return rep;
}

/// True when no minor is isomorphic to U_{2,4}. For every flat X and every
/// flat F covering X twice over (r(F) = r(X) + 2), counts the points of the
/// line F/X; four or more points is a U_{2,4} minor.
template <RankOracle M>
bool has_no_u24_minor(M const& m) {
  auto flats = flats_by_rank(m);
  int r = static_cast<int>(flats.size()) - 1;
  for (int k = 0; k + 2 <= r; ++k) {
    for (Mask x : flats[k]) {
      for (Mask f : flats[k + 2]) {
        if ((f & x) != x) continue;
        std::vector<Mask> points;
        for_each_bit(f & ~x, [&](int e) {
          Mask p = closure_of(m, x | bit(e));
          if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(p);
        });
        if (points.size() >= 4) return false;
      }
    }
  }
  return true;
}

inline constexpr int kMaxBinaryTestSize = 16;

inline bool is_binary_small(Matroid const& m) {
  if (m.size() > kMaxBinaryTestSize) {
    throw CapacityError("U_{2,4}-minor search limited to 16 elements");
  }
  return m.visit([](auto const& x) { return has_no_u24_minor(x); });
}

}  // namespace clawfree
