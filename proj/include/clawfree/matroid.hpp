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
#include <concepts>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "clawfree/basis_matroid.hpp"
#include "clawfree/binary_matroid.hpp"
#include "clawfree/core.hpp"

namespace clawfree {

/// Anything that answers rank queries on subsets of {0, ..., size()-1}.
template <typename M>
concept RankOracle = requires(M const& m, Mask s) {
  { m.size() } -> std::convertible_to<int>;
  { m.rank(s) } -> std::convertible_to<int>;
};

template <RankOracle M>
Mask closure_of(M const& m, Mask s) {
  if constexpr (requires { { m.closure(s) } -> std::convertible_to<Mask>; }) {
    return m.closure(s);
  } else {
    int rs = m.rank(s);
    Mask out = s;
    for (int e = 0; e < m.size(); ++e) {
      if (!contains(s, e) && m.rank(s | bit(e)) == rs) out |= bit(e);
    }
    return out;
  }
}

template <RankOracle M>
int total_rank(M const& m) {
  return m.rank(full_mask(m.size()));
}

template <RankOracle M>
bool is_independent(M const& m, Mask s) {
  return m.rank(s) == popcount(s);
}

template <RankOracle M>
bool is_flat(M const& m, Mask s) {
  return closure_of(m, s) == s;
}

template <RankOracle M>
Mask loops_of(M const& m) {
  return closure_of(m, 0);
}

/// Dense rank table for small ground sets; 2^n entries.
class RankTable {
 public:
  RankTable() = default;

  template <RankOracle M>
  explicit RankTable(M const& m) : n_(m.size()) {
    if (n_ > 20) throw CapacityError("rank table limited to 20 elements");
    ranks_.resize(std::size_t{1} << n_);
    for (Mask s = 0; s < ranks_.size(); ++s) ranks_[s] = static_cast<std::uint8_t>(m.rank(s));
  }

  static RankTable from_bases(int n, std::vector<Mask> const& bases) {
    RankTable t;
    t.n_ = n;
    std::size_t total = std::size_t{1} << n;
    std::vector<std::uint8_t> indep(total, 0);
    for (Mask b : bases) {
      // every subset of a basis is independent
      Mask sub = b;
      while (true) {
        indep[sub] = 1;
        if (sub == 0) break;
        sub = (sub - 1) & b;
      }
    }
    t.ranks_.assign(total, 0);
    for (Mask s = 1; s < total; ++s) {
      if (indep[s]) {
        t.ranks_[s] = static_cast<std::uint8_t>(popcount(s));
      } else {
        std::uint8_t best = 0;
        for_each_bit(s, [&](int e) { best = std::max(best, t.ranks_[s & ~bit(e)]); });
        t.ranks_[s] = best;
      }
    }
    return t;
  }

  int size() const { return n_; }
  int rank(Mask s) const { return ranks_[s]; }
  Mask closure(Mask s) const {
    int rs = ranks_[s];
    Mask out = s;
    for (int e = 0; e < n_; ++e) {
      if (!contains(s, e) && ranks_[s | bit(e)] == rs) out |= bit(e);
    }
    return out;
  }

 private:
  int n_ = 0;
  std::vector<std::uint8_t> ranks_;
};

/// All flats grouped by rank: result[k] holds the rank-k flats, sorted.
/// Built upward from cl(∅) by closing F ∪ {e}.
template <RankOracle M>
std::vector<std::vector<Mask>> flats_by_rank(M const& m, int max_rank = -1) {
  int r = total_rank(m);
  if (max_rank < 0 || max_rank > r) max_rank = r;
  std::vector<std::vector<Mask>> out(max_rank + 1);
  out[0].push_back(closure_of(m, 0));
  for (int k = 0; k < max_rank; ++k) {
    std::unordered_set<Mask> seen;
    for (Mask f : out[k]) {
      Mask rest = full_mask(m.size()) & ~f;
      while (rest) {
        int e = lowest(rest);
        Mask g = closure_of(m, f | bit(e));
        rest &= ~g;
        if (seen.insert(g).second) out[k + 1].push_back(g);
      }
    }
    std::sort(out[k + 1].begin(), out[k + 1].end());
  }
  return out;
}

template <RankOracle M>
std::vector<Mask> hyperplanes_of(M const& m) {
  int r = total_rank(m);
  if (r == 0) return {};
  return flats_by_rank(m, r - 1)[r - 1];
}

/// Matroid value backed by either a GF(2) representation or a basis family.
class Matroid {
 public:
  enum class Backend { binary, bases };

  Matroid() : rep_(BinaryMatroid()) {}
  Matroid(BinaryMatroid m) : rep_(std::move(m)) {}  // NOLINT(google-explicit-constructor)
  Matroid(BasisMatroid m) : rep_(std::move(m)) {}   // NOLINT(google-explicit-constructor)

  Backend backend() const { return rep_.index() == 0 ? Backend::binary : Backend::bases; }
  bool is_binary_backend() const { return rep_.index() == 0; }
  BinaryMatroid const& binary() const { return std::get<BinaryMatroid>(rep_); }
  BasisMatroid const& bases() const { return std::get<BasisMatroid>(rep_); }

  int size() const {
    return std::visit([](auto const& m) { return m.size(); }, rep_);
  }
  int rank(Mask s) const {
    return std::visit([s](auto const& m) { return m.rank(s); }, rep_);
  }
  int rank() const { return rank(full_mask(size())); }
  Mask closure(Mask s) const {
    return std::visit([s](auto const& m) { return m.closure(s); }, rep_);
  }

  template <typename F>
  decltype(auto) visit(F&& f) const {
    return std::visit(std::forward<F>(f), rep_);
  }

 private:
  std::variant<BinaryMatroid, BasisMatroid> rep_;
};

}  // namespace clawfree
