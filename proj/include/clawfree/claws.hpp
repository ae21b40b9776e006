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
#include <cstdint>
#include <map>
#include <vector>

#include "clawfree/constructions.hpp"
#include "clawfree/matroid_ops.hpp"

namespace clawfree {

/// A claw is a set that is both independent and a flat. Claws are closed
/// under taking subsets, so every claw search below grows claws one element
/// at a time and never extends a non-claw.
template <RankOracle M>
bool is_claw_mask(M const& m, Mask s) {
  return is_independent(m, s) && is_flat(m, s);
}

inline bool is_claw(Matroid const& m, GroundSubset const& s) {
  detail::check_subset(m, s);
  return is_claw_mask(m, s.bits());
}

inline constexpr std::size_t kWitnessLimit = 10000;

struct ClawReport {
  int max_claw_size = -1;  // -1: no claw at all (the matroid has a loop)
  std::vector<GroundSubset> witnesses;
  bool truncated = false;
  std::map<int, std::uint64_t> counts_by_size;
};

namespace detail {

// Depth-first over claws in lexicographic order. `visit(claw)` returns false
// to stop the search.
template <RankOracle M, typename Visit>
bool walk_claws(M const& m, Mask claw, int next, int max_size, Visit& visit) {
  if (!visit(claw)) return false;
  if (popcount(claw) == max_size) return true;
  for (int e = next; e < m.size(); ++e) {
    if (contains(claw, e)) continue;
    Mask grown = claw | bit(e);
    // claw is a flat and e is outside it, so grown is independent
    if (closure_of(m, grown) != grown) continue;
    if (!walk_claws(m, grown, e + 1, max_size, visit)) return false;
  }
  return true;
}

}  // namespace detail

/// Calls visit(mask) on every claw with at most `max_size` elements, in
/// lexicographic DFS order; stops early when visit returns false.
template <RankOracle M, typename Visit>
void for_each_claw(M const& m, Visit&& visit, int max_size = kMaxGround) {
  if (closure_of(m, 0) != 0) return;  // loops: no claws
  detail::walk_claws(m, Mask{0}, 0, max_size, visit);
}

template <RankOracle M>
std::vector<Mask> claws_of_size(M const& m, int k) {
  std::vector<Mask> out;
  for_each_claw(m, [&](Mask c) {
    if (popcount(c) == k) out.push_back(c);
    return true;
  }, k);
  return out;
}

/// Claws are downward closed, so a claw with more than t elements exists
/// iff one with exactly t + 1 does.
template <RankOracle M>
bool has_claw_of_size(M const& m, int k) {
  bool found = false;
  for_each_claw(m, [&](Mask c) {
    if (popcount(c) == k) found = true;
    return !found;
  }, k);
  return found;
}

template <RankOracle M>
ClawReport max_claw_report(M const& m) {
  ClawReport rep;
  if (closure_of(m, 0) != 0) return rep;
  int n = m.size();
  for_each_claw(m, [&](Mask c) {
    int k = popcount(c);
    ++rep.counts_by_size[k];
    if (k > rep.max_claw_size) {
      rep.max_claw_size = k;
      rep.witnesses.clear();
      rep.truncated = false;
    }
    if (k == rep.max_claw_size) {
      if (rep.witnesses.size() < kWitnessLimit) rep.witnesses.emplace_back(c, n);
      else rep.truncated = true;
    }
    return true;
  });
  std::sort(rep.witnesses.begin(), rep.witnesses.end(),
            [](GroundSubset const& a, GroundSubset const& b) { return lex_less(a.bits(), b.bits()); });
  return rep;
}

inline ClawReport max_claw(Matroid const& m) {
  return m.visit([](auto const& x) { return max_claw_report(x); });
}

/// k-claws of si(M/X), lifted to the representative (smallest) element of
/// each parallel class of M/X. Result sorted lexicographically.
inline std::vector<GroundSubset> pseudoclaws(Matroid const& m, GroundSubset const& x, int k) {
  detail::check_subset(m, x);
  Matroid con = minor(m, x, GroundSubset::empty(m.size()));
  Simplification si = simplify(con);
  Mask rest = full_mask(m.size()) & ~x.bits();
  std::vector<int> minor_to_orig = to_indices(rest);
  std::vector<GroundSubset> out;
  auto lifted = si.matroid.visit([&](auto const& s) { return claws_of_size(s, k); });
  for (Mask c : lifted) {
    Mask orig = 0;
    for_each_bit(c, [&](int j) { orig |= bit(minor_to_orig[si.kept[j]]); });
    out.emplace_back(orig, m.size());
  }
  std::sort(out.begin(), out.end(),
            [](GroundSubset const& a, GroundSubset const& b) { return lex_less(a.bits(), b.bits()); });
  return out;
}

struct LineProfile {
  std::map<int, std::uint64_t> counts;       // line size -> number of lines
  std::vector<int> triangles_through;        // per element: 3-point lines on it
  std::vector<Mask> lines;                   // all rank-2 flats, sorted

  bool triangle_free() const {
    return std::all_of(counts.begin(), counts.end(), [](auto const& kv) { return kv.first < 3 || kv.second == 0; });
  }
};

template <RankOracle M>
LineProfile line_profile_of(M const& m) {
  LineProfile lp;
  int n = m.size();
  lp.triangles_through.assign(n, 0);
  if (total_rank(m) >= 2) lp.lines = flats_by_rank(m, 2)[2];
  for (Mask l : lp.lines) {
    ++lp.counts[popcount(l)];
    if (popcount(l) == 3) for_each_bit(l, [&](int e) { ++lp.triangles_through[e]; });
  }
  return lp;
}

inline LineProfile line_profile(Matroid const& m) {
  if (!is_simple(m)) throw InputError("line profile expects a simple matroid");
  return m.visit([](auto const& x) { return line_profile_of(x); });
}

template <RankOracle M>
bool is_generic_claw_mask(M const& m, Mask s, int t, LineProfile const& lp) {
  if (popcount(s) != t || !is_claw_mask(m, s)) throw InputError("set is not a t-claw");
  std::int64_t triangles = 0;
  for (Mask l : lp.lines) {
    if (!(l & s)) continue;
    if (popcount(l) >= 4) return false;
    if (popcount(l) == 3) ++triangles;
  }
  return triangles == f_value(total_rank(m) - t, t);
}

/// A t-claw S is generic when no line with four or more points meets S and
/// exactly f(r - t, t) triangles meet S.
inline bool is_generic_claw(Matroid const& m, GroundSubset const& s, int t) {
  detail::check_subset(m, s);
  if (t < 1) throw InputError("t must be at least 1");
  LineProfile lp = m.visit([](auto const& x) { return line_profile_of(x); });
  return m.visit([&](auto const& x) { return is_generic_claw_mask(x, s.bits(), t, lp); });
}

}  // namespace clawfree
