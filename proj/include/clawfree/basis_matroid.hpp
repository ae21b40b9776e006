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
#include <string>
#include <vector>

#include "clawfree/core.hpp"

namespace clawfree {

/// Matroid given by its family of bases. Ranks are answered as
/// max over bases B of |B ∩ S|; nothing is cached.
class BasisMatroid {
 public:
  BasisMatroid() : bases_{0} {}

  // Bases are sorted and deduplicated. Cardinalities are checked here; the
  // exchange axiom is checked by validate().
  BasisMatroid(int n, int r, std::vector<Mask> bases) : n_(n), r_(r), bases_(std::move(bases)) {
    check_ground_size(n);
    if (r < 0 || r > n) throw InputError("rank out of range for ground set");
    if (bases_.empty()) throw InputError("a matroid needs at least one basis");
    for (Mask b : bases_) {
      if (b & ~full_mask(n)) throw InputError("basis has an element outside the ground set");
      if (popcount(b) != r) throw InputError("basis cardinality differs from rank");
    }
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  }

  int size() const { return n_; }
  int rank() const { return r_; }
  std::vector<Mask> const& bases() const { return bases_; }

  int rank(Mask s) const {
    int cap = std::min(popcount(s), r_);
    int best = 0;
    for (Mask b : bases_) {
      best = std::max(best, popcount(b & s));
      if (best == cap) break;
    }
    return best;
  }

  Mask closure(Mask s) const {
    int rs = rank(s);
    Mask out = s;
    for (int e = 0; e < n_; ++e) {
      if (!contains(s, e) && rank(s | bit(e)) == rs) out |= bit(e);
    }
    return out;
  }

  bool is_basis(Mask s) const { return std::binary_search(bases_.begin(), bases_.end(), s); }

  friend bool operator==(BasisMatroid const&, BasisMatroid const&) = default;

 private:
  int n_ = 0;
  int r_ = 0;
  std::vector<Mask> bases_;
};

// Lists every basis-exchange failure: pairs (B1, B2) and x in B1 - B2 such
// that no y in B2 - B1 makes B1 - x + y a basis.
struct ExchangeViolation {
  Mask b1, b2;
  int removed;
};

inline std::vector<ExchangeViolation> exchange_violations(BasisMatroid const& m,
                                                          std::size_t limit = 16) {
  std::vector<ExchangeViolation> out;
  for (Mask b1 : m.bases()) {
    for (Mask b2 : m.bases()) {
      Mask only1 = b1 & ~b2, only2 = b2 & ~b1;
      bool ok = true;
      int bad = -1;
      for_each_bit(only1, [&](int x) {
        if (!ok) return;
        bool found = false;
        for_each_bit(only2, [&](int y) {
          if (!found && m.is_basis((b1 & ~bit(x)) | bit(y))) found = true;
        });
        if (!found) {
          ok = false;
          bad = x;
        }
      });
      if (!ok) {
        out.push_back({b1, b2, bad});
        if (out.size() >= limit) return out;
      }
    }
  }
  return out;
}

}  // namespace clawfree
