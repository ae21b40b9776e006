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

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace clawfree {

using Mask = std::uint64_t;

inline constexpr int kMaxGround = 64;

// Malformed arguments: overlapping minors, out-of-range indices, bad files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request that exceeds a fixed implementation limit (word width, search caps).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr Mask bit(int i) { return Mask{1} << i; }

inline constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline constexpr int popcount(Mask m) { return std::popcount(m); }

inline constexpr int lowest(Mask m) { return std::countr_zero(m); }

inline constexpr bool contains(Mask m, int i) { return (m >> i) & 1U; }

// Visit set bits in increasing order.
template <typename F>
inline void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(lowest(m));
    m &= m - 1;
  }
}

inline std::vector<int> to_indices(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  for_each_bit(m, [&](int i) { out.push_back(i); });
  return out;
}

inline Mask from_indices(const std::vector<int>& idx) {
  Mask m = 0;
  for (int i : idx) m |= bit(i);
  return m;
}

inline void check_ground_size(int n) {
  if (n < 0 || n > kMaxGround) {
    throw CapacityError("ground set of size " + std::to_string(n) +
                        " exceeds the 64-element word capacity");
  }
}

/// A subset of the ground set {0, ..., n-1} stored as a bit mask.
class GroundSubset {
 public:
  GroundSubset() = default;
  GroundSubset(Mask bits, int n) : bits_(bits), n_(n) {
    check_ground_size(n);
    if (bits & ~full_mask(n)) {
      throw InputError("subset has an element outside the ground set");
    }
  }

  static GroundSubset of(std::vector<int> const& idx, int n) {
    for (int i : idx) {
      if (i < 0 || i >= n) throw InputError("element index out of range");
    }
    return GroundSubset(from_indices(idx), n);
  }
  static GroundSubset empty(int n) { return GroundSubset(0, n); }
  static GroundSubset all(int n) { return GroundSubset(full_mask(n), n); }

  Mask bits() const { return bits_; }
  int ground_size() const { return n_; }
  int size() const { return popcount(bits_); }
  bool has(int i) const { return i >= 0 && i < n_ && contains(bits_, i); }
  std::vector<int> elements() const { return to_indices(bits_); }

  friend bool operator==(GroundSubset const&, GroundSubset const&) = default;
  friend auto operator<=>(GroundSubset const& a, GroundSubset const& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  Mask bits_ = 0;
  int n_ = 0;
};

// Lexicographic order on sorted index lists; used for deterministic output.
inline bool lex_less(Mask a, Mask b) {
  while (a && b) {
    int x = lowest(a), y = lowest(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

// Calls f(mask) for every k-subset of `universe`, in colex order of the
// universe's bit positions.
template <typename F>
inline void for_each_k_subset(Mask universe, int k, F&& f) {
  std::vector<int> pos = to_indices(universe);
  int m = static_cast<int>(pos.size());
  if (k < 0 || k > m) return;
  if (k == 0) {
    f(Mask{0});
    return;
  }
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    Mask s = 0;
    for (int i : c) s |= bit(pos[i]);
    f(s);
    int i = k - 1;
    while (i >= 0 && c[i] == m - k + i) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace clawfree
