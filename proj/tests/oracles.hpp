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

// Brute-force reference implementations used to check the library. They
// share only bit helpers with the code under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "clawfree/core.hpp"

namespace oracle {

using clawfree::Mask;
using RankFn = std::function<int(Mask)>;

inline int gf2_rank(std::vector<std::uint64_t> vs) {
  int rank = 0;
  for (int bitpos = 63; bitpos >= 0; --bitpos) {
    auto it = std::find_if(vs.begin(), vs.end(), [&](std::uint64_t v) { return (v >> bitpos) & 1; });
    if (it == vs.end()) continue;
    std::uint64_t pivot = *it;
    vs.erase(it);
    for (auto& v : vs)
      if ((v >> bitpos) & 1) v ^= pivot;
    ++rank;
  }
  return rank;
}

inline RankFn binary_rank(std::vector<std::uint64_t> cols) {
  return [cols](Mask s) {
    std::vector<std::uint64_t> pick;
    for (int i = 0; i < static_cast<int>(cols.size()); ++i)
      if ((s >> i) & 1) pick.push_back(cols[i]);
    return gf2_rank(pick);
  };
}

inline RankFn bases_rank(std::vector<Mask> bases) {
  return [bases](Mask s) {
    int best = 0;
    for (Mask b : bases) best = std::max(best, std::popcount(b & s));
    return best;
  };
}

inline std::vector<Mask> bases_of(RankFn const& rank, int n) {
  int r = rank((Mask{1} << n) - 1);
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s)
    if (std::popcount(s) == r && rank(s) == r) out.push_back(s);
  return out;
}

inline Mask closure(RankFn const& rank, int n, Mask s) {
  int rs = rank(s);
  Mask out = s;
  for (int e = 0; e < n; ++e)
    if (rank(s | (Mask{1} << e)) == rs) out |= Mask{1} << e;
  return out;
}

inline std::vector<Mask> claws(RankFn const& rank, int n) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s)
    if (rank(s) == std::popcount(s) && closure(rank, n, s) == s) out.push_back(s);
  return out;
}

inline int max_claw(RankFn const& rank, int n) {
  int best = -1;
  for (Mask c : claws(rank, n)) best = std::max(best, std::popcount(c));
  return best;
}

inline Mask permute(Mask s, std::vector<int> const& p) {
  Mask out = 0;
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if ((s >> i) & 1) out |= Mask{1} << p[i];
  return out;
}

// Lexicographically least relabelled basis list over all permutations.
inline std::vector<Mask> canon_bases(int n, std::vector<Mask> const& bases) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Mask> best;
  do {
    std::vector<Mask> img;
    for (Mask b : bases) img.push_back(permute(b, p));
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) best = img;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline bool exchange_closed(std::vector<Mask> const& bases) {
  std::set<Mask> all(bases.begin(), bases.end());
  for (Mask a : bases)
    for (Mask b : bases)
      for (Mask xs = a & ~b; xs; xs &= xs - 1) {
        Mask x = xs & -xs;
        bool ok = false;
        for (Mask ys = b & ~a; ys && !ok; ys &= ys - 1) ok = all.count((a & ~x) | (ys & -ys)) > 0;
        if (!ok) return false;
      }
  return true;
}

// Isomorphism classes of matroids on n elements of rank r, as canonical
// basis lists, by sweeping every family of r-subsets.
inline std::set<std::vector<Mask>> all_matroids(int n, int r) {
  std::vector<Mask> subsets;
  for (Mask s = 0; s < (Mask{1} << n); ++s)
    if (std::popcount(s) == r) subsets.push_back(s);
  std::set<std::vector<Mask>> out;
  std::uint64_t families = std::uint64_t{1} << subsets.size();
  for (std::uint64_t f = 1; f < families; ++f) {
    std::vector<Mask> bases;
    for (std::size_t i = 0; i < subsets.size(); ++i)
      if ((f >> i) & 1) bases.push_back(subsets[i]);
    if (exchange_closed(bases)) out.insert(canon_bases(n, bases));
  }
  return out;
}

// ---- graphs as adjacency rows

using Rows = std::vector<Mask>;

inline std::string graph_canon(Rows const& g) {
  int n = static_cast<int>(g.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  do {
    // p[i] = old vertex placed at position i
    std::string s;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += ((g[p[i]] >> p[j]) & 1) ? '1' : '0';
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::to_string(n) + ":" + best;
}

inline int edges_within(Rows const& g, Mask s) {
  int twice = 0;
  for (int v = 0; v < static_cast<int>(g.size()); ++v)
    if ((s >> v) & 1) twice += std::popcount(g[v] & s);
  return twice / 2;
}

inline int components_within(Rows const& g, Mask s) {
  int comps = 0;
  Mask left = s;
  while (left) {
    ++comps;
    Mask frontier = left & -left, seen = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      if ((seen >> v) & 1) continue;
      seen |= Mask{1} << v;
      frontier |= g[v] & s & ~seen;
    }
    left &= ~seen;
  }
  return comps;
}

inline bool induces_forest(Rows const& g, Mask s) {
  return edges_within(g, s) == std::popcount(s) - components_within(g, s);
}

inline bool has_induced_forest(Rows const& g, int k) {
  int n = static_cast<int>(g.size());
  for (Mask s = 0; s < (Mask{1} << n); ++s)
    if (std::popcount(s) == k && induces_forest(g, s)) return true;
  return false;
}

inline int max_stable(Rows const& g) {
  int n = static_cast<int>(g.size()), best = 0;
  for (Mask s = 0; s < (Mask{1} << n); ++s)
    if (edges_within(g, s) == 0) best = std::max(best, std::popcount(s));
  return best;
}

// ---- size functions straight from their definitions

inline std::int64_t mrt_size(int r, int t) {
  std::int64_t total = 0;
  for (int i = 0; i < t; ++i) {
    int k = r / t + (i < r % t ? 1 : 0);
    total += (std::int64_t{1} << k) - 1;
  }
  return total;
}

inline std::int64_t g_def(int n, int t) {
  if (n < 2 * t) return 0;
  if (n <= 4 * t) return 3 * (n - 2 * t);
  return g_def(n - 1, t) + (n + t - 1) / t - 1;
}

}  // namespace oracle
