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
#include <atomic>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "clawfree/canonical.hpp"
#include "clawfree/matroid_ops.hpp"
#include "clawfree/parallel.hpp"

namespace clawfree {

inline constexpr int kMaxCanonElements = 32;

struct MatroidCanon {
  std::string form;
  std::vector<int> element_order;  // element_order[p]: element at canonical position p
  std::vector<int> element_orbit;  // smallest element in each automorphism orbit
};

namespace detail {

inline std::string hex_mask(Mask m) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(m));
  return buf;
}

// Canonical form of an incidence structure: `points` vertices plus one
// vertex per block, points coloured by `point_keys`, blocks by size.
inline MatroidCanon canon_incidence(int points, std::vector<Mask> const& blocks,
                                    std::vector<std::vector<int>> const& point_keys,
                                    std::string const& prefix) {
  int nb = static_cast<int>(blocks.size());
  ColoredGraph g(points + nb);
  std::vector<std::vector<int>> keys(points + nb);
  for (int e = 0; e < points; ++e) {
    keys[e] = {0};
    keys[e].insert(keys[e].end(), point_keys[e].begin(), point_keys[e].end());
  }
  for (int b = 0; b < nb; ++b) {
    keys[points + b] = {1, popcount(blocks[b])};
    for_each_bit(blocks[b], [&](int e) { g.add_edge(e, points + b); });
  }
  std::vector<std::vector<int>> distinct = keys;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (int v = 0; v < points + nb; ++v) {
    g.color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), keys[v]) - distinct.begin());
  }
  Labeling lab = canonical_labeling(g);
  MatroidCanon out;
  std::vector<Mask> relabeled;
  for (Mask b : blocks) {
    Mask r = 0;
    for_each_bit(b, [&](int e) { r |= bit(lab.position[e]); });
    relabeled.push_back(r);
  }
  std::sort(relabeled.begin(), relabeled.end());
  out.form = prefix + ":";
  for (std::size_t i = 0; i < relabeled.size(); ++i) out.form += (i ? "." : "") + hex_mask(relabeled[i]);
  if (points + nb > 0) {
    out.element_order.assign(lab.order.begin(), lab.order.begin() + points);
    auto orb = lab.orbits();
    out.element_orbit.assign(orb.begin(), orb.begin() + points);
  }
  return out;
}

}  // namespace detail

/// Canonical form on the element/hyperplane incidence structure. Elements
/// are pre-coloured by (loop, size of their point, sizes of the lines
/// through them); the string lists the relabelled hyperplanes.
template <RankOracle M>
MatroidCanon canon_matroid_of(M const& m) {
  int n = m.size();
  if (n > kMaxCanonElements) throw CapacityError("canonical form limited to 32 elements");
  int r = total_rank(m);
  auto flats = flats_by_rank(m, std::max(r - 1, 0));
  std::vector<Mask> hyper = r == 0 ? std::vector<Mask>{} : flats[r - 1];
  std::vector<std::vector<int>> keys(n);
  for (int e = 0; e < n; ++e) {
    bool loop = m.rank(bit(e)) == 0;
    Mask point = closure_of(m, bit(e));
    keys[e] = {loop ? 1 : 0, popcount(point)};
    if (r >= 3) {
      std::vector<int> sizes;
      for (Mask l : flats[2])
        if (contains(l, e)) sizes.push_back(popcount(l));
      std::sort(sizes.begin(), sizes.end());
      keys[e].insert(keys[e].end(), sizes.begin(), sizes.end());
    }
  }
  return detail::canon_incidence(n, hyper, keys, "r" + std::to_string(r) + "n" + std::to_string(n));
}

inline MatroidCanon canon_matroid_full(Matroid const& m) {
  return m.visit([](auto const& x) { return canon_matroid_of(x); });
}

/// Equal strings exactly for isomorphic matroids.
inline std::string canon_matroid(Matroid const& m) { return canon_matroid_full(m).form; }

struct MatroidClass {
  Matroid matroid;
  std::string canon;
};

inline void sort_classes(std::vector<MatroidClass>& v) {
  std::sort(v.begin(), v.end(), [](MatroidClass const& a, MatroidClass const& b) { return a.canon < b.canon; });
}

// ---------------------------------------------------------------- binary

inline constexpr int kMaxBinaryEnumRank = 6;

/// Column sets of simple rank-r binary matroids with at most `size_bound`
/// elements that contain the standard basis e_1..e_r. Every simple spanning
/// column set is GL(r,2)-equivalent to such a set, and binary matroids are
/// uniquely representable, so this reaches every isomorphism class.
/// `keep` (hereditary on column sets) prunes; `visit` sees each labelled
/// candidate, columns ordered basis-first then increasing.
struct BinarySweepStats {
  long candidates = 0;
  bool complete = true;
};

inline BinarySweepStats sweep_binary_candidates(
    int r, int size_bound,
    std::function<bool(std::vector<Gf2Vector> const&)> const& keep,
    std::function<void(int shard, BinaryMatroid const&)> const& visit,
    RunControl const& ctl = RunControl()) {
  if (r < 1 || r > kMaxBinaryEnumRank) throw CapacityError("binary enumeration supports rank 1..6");
  int total = (1 << r) - 1;
  if (size_bound > total) size_bound = total;
  BinarySweepStats stats;
  if (size_bound < r) return stats;
  std::vector<Gf2Vector> basis;
  for (int i = 0; i < r; ++i) basis.push_back(Gf2Vector{1} << i);
  std::vector<Gf2Vector> extras;
  for (Gf2Vector v = 1; v <= static_cast<Gf2Vector>(total); ++v)
    if (std::popcount(v) > 1) extras.push_back(v);
  if (keep && !keep(basis)) return stats;

  int shards = ctl.shards();
  std::vector<long> counts(shards, 0);
  std::atomic<bool> aborted{false};
  // item 0: the basis alone; item i > 0: sets whose smallest extra is extras[i-1]
  parallel_shards(extras.size() + 1, shards, [&](int s, std::size_t item) {
    if (aborted || ctl.expired()) {
      aborted = true;
      return;
    }
    std::vector<Gf2Vector> cols = basis;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
      if (aborted) return;
      if ((counts[s] & 1023) == 0 && ctl.expired()) {
        aborted = true;
        return;
      }
      ++counts[s];
      visit(s, BinaryMatroid(r, cols));
      if (static_cast<int>(cols.size()) >= size_bound) return;
      for (std::size_t j = from; j < extras.size(); ++j) {
        cols.push_back(extras[j]);
        if (!keep || keep(cols)) grow(j + 1);
        cols.pop_back();
      }
    };
    if (item == 0) {
      ++counts[s];
      visit(s, BinaryMatroid(r, cols));
      return;
    }
    cols.push_back(extras[item - 1]);
    if (static_cast<int>(cols.size()) > size_bound) return;
    if (!keep || keep(cols)) grow(item);
  });
  for (long c : counts) stats.candidates += c;
  stats.complete = !aborted;
  return stats;
}

namespace detail {

// Which shard meets a class first depends on scheduling, so the class keeps
// its lexicographically smallest column list.
inline void keep_least(std::map<std::string, BinaryMatroid>& classes, std::string form, BinaryMatroid const& m) {
  auto [it, fresh] = classes.emplace(std::move(form), m);
  if (!fresh && m.columns() < it->second.columns()) it->second = m;
}

inline std::map<std::string, BinaryMatroid> merge_least(std::vector<std::map<std::string, BinaryMatroid>>& parts) {
  std::map<std::string, BinaryMatroid> merged;
  for (auto& part : parts)
    for (auto& [form, m] : part) keep_least(merged, form, m);
  return merged;
}

}  // namespace detail

/// One representative per isomorphism class of simple rank-r binary
/// matroids with at most size_bound elements, sorted by canonical form.
inline std::vector<MatroidClass> enumerate_binary_matroids(int r, int size_bound,
                                                           RunControl const& ctl = RunControl()) {
  int shards = ctl.shards();
  std::vector<std::map<std::string, BinaryMatroid>> found(shards);
  auto stats = sweep_binary_candidates(r, size_bound, nullptr, [&](int s, BinaryMatroid const& m) {
    detail::keep_least(found[s], canon_matroid_of(m).form, m);
  }, ctl);
  if (!stats.complete) throw CapacityError("binary enumeration ran out of budget");
  auto merged = detail::merge_least(found);
  std::vector<MatroidClass> out;
  for (auto& [form, m] : merged) out.push_back({Matroid(m), form});
  return out;
}

// ---------------------------------------------------------------- rank 3

/// Point set with its lines of three or more points; every pair of points
/// lies on at most one long line.
struct LinearSpace {
  int n = 0;
  std::vector<Mask> long_lines;

  // All lines, two-point lines included.
  std::vector<Mask> lines() const {
    std::vector<Mask> out = long_lines;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        Mask pair = bit(a) | bit(b);
        bool covered = std::any_of(long_lines.begin(), long_lines.end(),
                                   [&](Mask l) { return (l & pair) == pair; });
        if (!covered) out.push_back(pair);
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  int rank() const {
    if (n <= 2) return n;
    return std::any_of(long_lines.begin(), long_lines.end(), [&](Mask l) { return l == full_mask(n); }) ? 2 : 3;
  }

  BasisMatroid to_matroid() const {
    std::vector<Mask> bases;
    int r = rank();
    for_each_k_subset(full_mask(n), r, [&](Mask s) {
      bool collinear = r == 3 && std::any_of(long_lines.begin(), long_lines.end(),
                                             [&](Mask l) { return (l & s) == s; });
      if (!collinear) bases.push_back(s);
    });
    return BasisMatroid(n, r, std::move(bases));
  }
};

inline constexpr int kMaxRank3Points = 9;

struct Rank3EnumResult {
  std::vector<MatroidClass> matroids;
  long candidates = 0;
  bool complete = true;
};

/// Simple rank-3 matroids on n points as linear spaces, grown one point at
/// a time. A new point joins a set of pairwise disjoint existing lines; the
/// child is kept when the new point is in the orbit of the point labelled
/// last canonically.
inline Rank3EnumResult enumerate_rank3_ex(int n, RunControl const& ctl = RunControl()) {
  if (n < 0 || n > kMaxRank3Points) throw CapacityError("rank-3 enumeration limited to 9 points");
  Rank3EnumResult res;
  std::vector<LinearSpace> level{LinearSpace{}};
  auto canon_space = [](LinearSpace const& ls) {
    std::vector<std::vector<int>> keys(ls.n);
    return detail::canon_incidence(ls.n, ls.lines(), keys, "ls" + std::to_string(ls.n));
  };
  for (int k = 0; k < n; ++k) {
    int shards = ctl.shards();
    std::vector<std::vector<std::pair<std::string, LinearSpace>>> found(shards);
    std::vector<long> tried(shards, 0);
    std::atomic<bool> aborted{false};
    parallel_shards(level.size(), shards, [&](int s, std::size_t i) {
      if (aborted || ctl.expired()) {
        aborted = true;
        return;
      }
      LinearSpace const& parent = level[i];
      std::vector<Mask> lines = parent.lines();
      std::set<std::string> local;
      std::vector<int> chosen;
      std::function<void(std::size_t, Mask)> pick = [&](std::size_t from, Mask used) {
        ++tried[s];
        LinearSpace child{k + 1, {}};
        Mask picked = 0;
        for (int idx : chosen) picked |= bit(idx);
        for (std::size_t j = 0; j < lines.size(); ++j) {
          bool sel = contains(picked, static_cast<int>(j));
          if (sel) child.long_lines.push_back(lines[j] | bit(k));
          else if (popcount(lines[j]) >= 3) child.long_lines.push_back(lines[j]);
        }
        std::sort(child.long_lines.begin(), child.long_lines.end());
        auto c = canon_space(child);
        if (c.element_orbit[k] == c.element_orbit[c.element_order[k]] && local.insert(c.form).second) {
          found[s].emplace_back(c.form, std::move(child));
        }
        for (std::size_t j = from; j < lines.size(); ++j) {
          if (lines[j] & used) continue;
          chosen.push_back(static_cast<int>(j));
          pick(j + 1, used | lines[j]);
          chosen.pop_back();
        }
      };
      pick(0, 0);
    });
    for (long t : tried) res.candidates += t;
    if (aborted) {
      res.complete = false;
      return res;
    }
    std::vector<std::pair<std::string, LinearSpace>> all;
    for (auto& f : found)
      for (auto& x : f) all.push_back(std::move(x));
    std::sort(all.begin(), all.end(), [](auto const& a, auto const& b) { return a.first < b.first; });
    level.clear();
    for (auto& x : all) level.push_back(std::move(x.second));
  }
  for (auto const& ls : level) {
    if (ls.rank() != 3) continue;
    BasisMatroid m = ls.to_matroid();
    res.matroids.push_back({Matroid(m), canon_matroid_of(m).form});
  }
  sort_classes(res.matroids);
  return res;
}

inline std::vector<MatroidClass> enumerate_rank3_matroids(int n, RunControl const& ctl = RunControl()) {
  auto res = enumerate_rank3_ex(n, ctl);
  if (!res.complete) throw CapacityError("rank-3 enumeration ran out of budget");
  return std::move(res.matroids);
}

// ---------------------------------------------------------------- bases

inline constexpr int kMaxBasisEnumElements = 8;

namespace detail {

// Linear subclasses of the hyperplanes of a rank-rho matroid: sets closed
// under "H1, H2 inside with r(H1 ∩ H2) = rho - 2 forces every hyperplane
// containing H1 ∩ H2". They index the rank-preserving single-element
// extensions.
inline std::vector<Mask> linear_subclasses(RankTable const& t, std::vector<Mask> const& hyper, int rho) {
  int m = static_cast<int>(hyper.size());
  if (m > 64) throw CapacityError("too many hyperplanes for extension search");
  std::vector<std::vector<Mask>> forced(m, std::vector<Mask>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      Mask meet = hyper[a] & hyper[b];
      if (t.rank(meet) != rho - 2) continue;
      Mask f = 0;
      for (int c = 0; c < m; ++c)
        if ((hyper[c] & meet) == meet) f |= bit(c);
      forced[a][b] = forced[b][a] = f;
    }
  auto close = [&](Mask s) {
    Mask prev;
    do {
      prev = s;
      for_each_bit(s, [&](int a) {
        for_each_bit(s, [&](int b) {
          if (a < b) s |= forced[a][b];
        });
      });
    } while (s != prev);
    return s;
  };
  std::vector<Mask> out;
  std::function<void(int, Mask, Mask)> dfs = [&](int i, Mask in, Mask out_set) {
    if (i == m) {
      out.push_back(in);
      return;
    }
    if (contains(in, i)) {
      dfs(i + 1, in, out_set);
      return;
    }
    dfs(i + 1, in, out_set | bit(i));
    Mask grown = close(in | bit(i));
    if (!(grown & out_set)) dfs(i + 1, grown, out_set);
  };
  dfs(0, 0, 0);
  return out;
}

}  // namespace detail

struct BasisEnumResult {
  std::vector<MatroidClass> matroids;
  long candidates = 0;
  bool complete = true;
};

enum class BasisFilter { all, loopless, simple };

/// Matroids on n elements of rank r, grown by single-element extensions
/// (linear subclasses, plus coloop extensions from rank r-1). A child is
/// kept when its new element lies in the orbit of the element labelled last
/// canonically. Loopless and simple are closed under deletion, so the
/// filter also prunes the tree.
inline BasisEnumResult enumerate_basis_ex(int n, int r, BasisFilter filter, RunControl const& ctl = RunControl()) {
  if (n < 0 || n > kMaxBasisEnumElements || binomial(n, r) > 70) {
    throw CapacityError("basis enumeration needs n <= 8 and C(n,r) <= 70");
  }
  if (r < 0 || r > n) throw InputError("rank out of range");
  BasisEnumResult res;
  // level[rho]: classes on k elements with rank rho
  std::vector<std::vector<BasisMatroid>> level(r + 1);
  level[0].push_back(BasisMatroid());
  auto passes = [&](RankTable const& t) {
    int k = t.size();
    for (int e = 0; e < k; ++e) {
      if (filter != BasisFilter::all && t.rank(bit(e)) == 0) return false;
      if (filter == BasisFilter::simple)
        for (int f = 0; f < e; ++f)
          if (t.rank(bit(e) | bit(f)) < 2) return false;
    }
    return true;
  };
  for (int k = 0; k < n; ++k) {
    int rem = n - k - 1;  // elements still to add after this step
    struct Job {
      int rho;
      std::size_t idx;
      bool coloop;
    };
    std::vector<Job> jobs;
    for (int rho = 0; rho <= r; ++rho) {
      if (rho > k + 1 || r - rho > rem) continue;
      for (std::size_t i = 0; i < level[rho].size(); ++i) jobs.push_back({rho, i, false});
      if (rho >= 1)
        for (std::size_t i = 0; i < level[rho - 1].size(); ++i) jobs.push_back({rho, i, true});
    }
    int shards = ctl.shards();
    std::vector<std::vector<std::tuple<int, std::string, BasisMatroid>>> found(shards);
    std::vector<long> tried(shards, 0);
    std::atomic<bool> aborted{false};
    parallel_shards(jobs.size(), shards, [&](int s, std::size_t j) {
      if (aborted || ctl.expired()) {
        aborted = true;
        return;
      }
      Job const& job = jobs[j];
      std::set<std::string> local;
      auto consider = [&](std::vector<Mask> bases) {
        ++tried[s];
        BasisMatroid child(k + 1, job.rho, std::move(bases));
        RankTable t = RankTable::from_bases(k + 1, child.bases());
        if (!passes(t)) return;
        MatroidCanon c = canon_matroid_of(t);
        if (c.element_orbit[k] != c.element_orbit[c.element_order[k]]) return;
        if (local.insert(c.form).second) found[s].emplace_back(job.rho, c.form, std::move(child));
      };
      if (job.coloop) {
        BasisMatroid const& parent = level[job.rho - 1][job.idx];
        std::vector<Mask> bases;
        for (Mask b : parent.bases()) bases.push_back(b | bit(k));
        consider(std::move(bases));
        return;
      }
      BasisMatroid const& parent = level[job.rho][job.idx];
      RankTable t = RankTable::from_bases(k, parent.bases());
      int rho = job.rho;
      std::vector<Mask> hyper = rho == 0 ? std::vector<Mask>{} : flats_by_rank(t, rho - 1)[rho - 1];
      // independent (rho-1)-sets with the index of the hyperplane they span
      std::vector<std::pair<Mask, int>> spanning;
      if (rho >= 1) {
        for_each_k_subset(full_mask(k), rho - 1, [&](Mask i) {
          if (t.rank(i) != rho - 1) return;
          Mask h = t.closure(i);
          int idx = static_cast<int>(std::lower_bound(hyper.begin(), hyper.end(), h) - hyper.begin());
          spanning.emplace_back(i, idx);
        });
      }
      for (Mask cls : detail::linear_subclasses(t, hyper, rho)) {
        std::vector<Mask> bases = parent.bases();
        for (auto const& [i, h] : spanning)
          if (!contains(cls, h)) bases.push_back(i | bit(k));
        consider(std::move(bases));
      }
    });
    for (long c : tried) res.candidates += c;
    if (aborted) {
      res.complete = false;
      return res;
    }
    std::vector<std::vector<std::pair<std::string, BasisMatroid>>> next(r + 1);
    for (auto& f : found)
      for (auto& [rho, form, m] : f) next[rho].emplace_back(std::move(form), std::move(m));
    for (int rho = 0; rho <= r; ++rho) {
      std::sort(next[rho].begin(), next[rho].end(), [](auto const& a, auto const& b) { return a.first < b.first; });
      level[rho].clear();
      for (auto& x : next[rho]) level[rho].push_back(std::move(x.second));
    }
  }
  for (auto const& m : level[r]) res.matroids.push_back({Matroid(m), canon_matroid_of(m).form});
  sort_classes(res.matroids);
  return res;
}

inline std::vector<MatroidClass> enumerate_basis_matroids(int n, int r, bool loopless_only,
                                                          RunControl const& ctl = RunControl()) {
  auto res = enumerate_basis_ex(n, r, loopless_only ? BasisFilter::loopless : BasisFilter::all, ctl);
  if (!res.complete) throw CapacityError("basis enumeration ran out of budget");
  return std::move(res.matroids);
}

}  // namespace clawfree
