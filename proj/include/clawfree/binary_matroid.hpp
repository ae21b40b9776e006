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
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "clawfree/core.hpp"

namespace clawfree {

using Gf2Vector = std::uint64_t;

inline constexpr int kMaxCoordinates = 64;

/// Span of a set of GF(2) vectors, kept as an echelon basis indexed by the
/// highest set bit of each basis vector.
class Gf2Span {
 public:
  // Returns true when v was independent of the current span.
  bool insert(Gf2Vector v) {
    v = reduce(v);
    if (v == 0) return false;
    basis_[std::bit_width(v) - 1] = v;
    ++rank_;
    return true;
  }

  Gf2Vector reduce(Gf2Vector v) const {
    while (v) {
      int top = std::bit_width(v) - 1;
      if (basis_[top] == 0) return v;
      v ^= basis_[top];
    }
    return 0;
  }

  bool contains(Gf2Vector v) const { return reduce(v) == 0; }
  int rank() const { return rank_; }

 private:
  std::array<Gf2Vector, 64> basis_{};
  int rank_ = 0;
};

/// Matroid represented by an ordered list of GF(2) column vectors with
/// `coordinates` rows. Bit i of a column is coordinate i + 1; text output
/// prints the most significant coordinate first.
class BinaryMatroid {
 public:
  BinaryMatroid() = default;

  BinaryMatroid(int coordinates, std::vector<Gf2Vector> columns)
      : coords_(coordinates), cols_(std::move(columns)) {
    if (coords_ < 0 || coords_ > kMaxCoordinates) {
      throw CapacityError("binary matroid coordinate count out of range");
    }
    check_ground_size(static_cast<int>(cols_.size()));
    Gf2Vector allowed = coords_ >= 64 ? ~Gf2Vector{0} : (Gf2Vector{1} << coords_) - 1;
    for (Gf2Vector c : cols_) {
      if (c & ~allowed) throw InputError("column has a bit beyond the coordinate count");
    }
  }

  int size() const { return static_cast<int>(cols_.size()); }
  int coordinates() const { return coords_; }
  std::vector<Gf2Vector> const& columns() const { return cols_; }
  Gf2Vector column(int i) const { return cols_.at(i); }

  int rank(Mask s) const {
    Gf2Span span;
    for_each_bit(s, [&](int i) { span.insert(cols_[i]); });
    return span.rank();
  }

  int rank() const { return rank(full_mask(size())); }

  Mask closure(Mask s) const {
    Gf2Span span;
    for_each_bit(s, [&](int i) { span.insert(cols_[i]); });
    Mask out = 0;
    for (int i = 0; i < size(); ++i) {
      if (span.contains(cols_[i])) out |= bit(i);
    }
    return out;
  }

  // Over GF(2) two nonzero columns are parallel exactly when they are equal.
  bool is_simple() const {
    std::vector<Gf2Vector> sorted = cols_;
    std::sort(sorted.begin(), sorted.end());
    if (!sorted.empty() && sorted.front() == 0) return false;
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }

  friend bool operator==(BinaryMatroid const&, BinaryMatroid const&) = default;

 private:
  int coords_ = 0;
  std::vector<Gf2Vector> cols_;
};

namespace detail {

// Re-expresses the columns in a basis of their row space, so that the
// coordinate count equals the GF(2) rank. Leaves already full-rank
// representations untouched.
inline BinaryMatroid normalize_rows(int coords, std::vector<Gf2Vector> cols) {
  int n = static_cast<int>(cols.size());
  std::vector<Mask> rows(coords, 0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < coords; ++i) {
      if ((cols[j] >> i) & 1U) rows[i] |= bit(j);
    }
  }
  // Reduced echelon form on column positions, pivot = lowest column index.
  std::vector<Mask> basis;
  for (Mask row : rows) {
    for (Mask b : basis) {
      if (row & (b & -b)) row ^= b;
    }
    if (row == 0) continue;
    Mask piv = row & -row;
    for (Mask& b : basis) {
      if (b & piv) b ^= row;
    }
    basis.push_back(row);
  }
  if (static_cast<int>(basis.size()) == coords) return BinaryMatroid(coords, std::move(cols));
  std::sort(basis.begin(), basis.end(), [](Mask a, Mask b) { return (a & -a) < (b & -b); });
  std::vector<Gf2Vector> out(n, 0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for_each_bit(basis[i], [&](int j) { out[j] |= Gf2Vector{1} << i; });
  }
  return BinaryMatroid(static_cast<int>(basis.size()), std::move(out));
}

}  // namespace detail

/// Contracts `contract` and deletes `remove`; surviving columns keep their
/// relative order. Contraction eliminates on the lowest set bit of each
/// contracted column and drops that coordinate.
inline BinaryMatroid binary_minor(BinaryMatroid const& m, Mask contract, Mask remove) {
  std::vector<Gf2Vector> cols = m.columns();
  Gf2Vector dropped = 0;
  for_each_bit(contract, [&](int c) {
    Gf2Vector v = cols[c];
    if (v == 0) return;
    Gf2Vector piv = v & -v;
    for (Gf2Vector& w : cols) {
      if (w & piv) w ^= v;
    }
    dropped |= piv;
  });
  std::vector<Gf2Vector> kept;
  Mask gone = contract | remove;
  for (int j = 0; j < m.size(); ++j) {
    if (contains(gone, j)) continue;
    Gf2Vector v = cols[j], packed = 0;
    int k = 0;
    for (int i = 0; i < m.coordinates(); ++i) {
      if ((dropped >> i) & 1U) continue;
      if ((v >> i) & 1U) packed |= Gf2Vector{1} << k;
      ++k;
    }
    kept.push_back(packed);
  }
  return detail::normalize_rows(m.coordinates() - popcount(dropped), std::move(kept));
}

inline std::string column_string(Gf2Vector v, int coords) {
  std::string s(coords, '0');
  for (int i = 0; i < coords; ++i) {
    if ((v >> i) & 1U) s[coords - 1 - i] = '1';
  }
  return s;
}

}  // namespace clawfree
