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

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "clawfree/graph.hpp"
#include "clawfree/matroid_ops.hpp"

namespace clawfree {

enum class GeometryKind { projective, affine };

/// PG(r-1,2): all nonzero vectors of GF(2)^r in increasing order.
/// AG(r-1,2): the vectors with coordinate 1 (bit 0) set, i.e. the
/// complement of the hyperplane x1 = 0.
inline BinaryMatroid geometry(GeometryKind kind, int r) {
  if (r < 1) throw InputError("geometry rank must be at least 1");
  std::uint64_t count = kind == GeometryKind::projective ? (std::uint64_t{1} << r) - 1
                                                          : std::uint64_t{1} << (r - 1);
  if (r > 7 || count > static_cast<std::uint64_t>(kMaxGround)) {
    throw CapacityError("geometry exceeds the 64-element ground set");
  }
  std::vector<Gf2Vector> cols;
  for (Gf2Vector v = 1; v < (Gf2Vector{1} << r); ++v) {
    if (kind == GeometryKind::affine && !(v & 1U)) continue;
    cols.push_back(v);
  }
  return BinaryMatroid(r, std::move(cols));
}

inline BinaryMatroid projective_geometry(int r) { return geometry(GeometryKind::projective, r); }
inline BinaryMatroid affine_geometry(int r) { return geometry(GeometryKind::affine, r); }

inline BinaryMatroid free_binary(int n) {
  std::vector<Gf2Vector> cols;
  for (int i = 0; i < n; ++i) cols.push_back(Gf2Vector{1} << i);
  return BinaryMatroid(n, std::move(cols));
}

/// Ranks of the projective-geometry summands of M_{r,t}: t - a copies of
/// floor(r/t) followed by a copies of ceil(r/t), a = r mod t. Zero ranks
/// stand for empty summands.
inline std::vector<int> mrt_summand_ranks(int r, int t) {
  if (r < 0 || t < 1) throw InputError("M_{r,t} needs r >= 0 and t >= 1");
  int a = r % t, q = r / t;
  std::vector<int> ranks(t - a, q);
  ranks.insert(ranks.end(), a, q + 1);
  return ranks;
}

inline BinaryMatroid m_rt(int r, int t) {
  Matroid sum = BinaryMatroid();
  for (int k : mrt_summand_ranks(r, t)) {
    if (k > 0) sum = direct_sum(sum, Matroid(projective_geometry(k)));
  }
  return sum.binary();
}

/// U_{k-1,k}: the k-element circuit.
inline BasisMatroid circuit_matroid(int k) {
  if (k < 1) throw InputError("circuit size must be positive");
  std::vector<Mask> bases;
  for (int i = 0; i < k; ++i) bases.push_back(full_mask(k) & ~bit(i));
  return BasisMatroid(k, k - 1, std::move(bases));
}

inline BasisMatroid uniform_matroid(int r, int n) {
  if (r < 0 || r > n) throw InputError("uniform matroid needs 0 <= r <= n");
  check_ground_size(n);
  std::vector<Mask> bases;
  for_each_k_subset(full_mask(n), r, [&](Mask s) { bases.push_back(s); });
  return BasisMatroid(n, r, std::move(bases));
}

/// Direct sum of the circuits U_{k-1,k} (k in `sizes`) followed by
/// `coloops` coloops.
inline BasisMatroid circuits_coloops(std::vector<int> const& sizes, int coloops) {
  if (coloops < 0) throw InputError("coloop count must be non-negative");
  int n = coloops;
  for (int k : sizes) {
    if (k < 2) throw InputError("circuit sizes must be at least 2");
    n += k;
  }
  check_ground_size(n);
  Matroid sum = BasisMatroid();
  for (int k : sizes) sum = direct_sum(sum, Matroid(circuit_matroid(k)));
  if (coloops > 0) sum = direct_sum(sum, Matroid(uniform_matroid(coloops, coloops)));
  return to_basis_matroid(sum);
}

namespace detail {

inline std::int64_t checked_pow2(int e) {
  if (e < 0 || e > 62) throw CapacityError("size function overflows 64 bits");
  return std::int64_t{1} << e;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw CapacityError("size function overflows 64 bits");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw CapacityError("size function overflows 64 bits");
  return out;
}

}  // namespace detail

/// |M_{r,t}| summed over the projective summands.
inline std::int64_t f_closed_form(int r, int t) {
  if (r < 0 || t < 1) throw InputError("f(r,t) needs r >= 0 and t >= 1");
  int a = r % t;
  std::int64_t lo = detail::checked_pow2(r / t);
  std::int64_t hi = detail::checked_pow2((r + t - 1) / t);
  std::int64_t v = detail::checked_add(detail::checked_mul(t - a, lo), detail::checked_mul(a, hi));
  return v - t;
}

/// f(r,t) = r for r <= t, else 2 f(r-t,t) + t.
inline std::int64_t f_recurrence(int r, int t) {
  if (r < 0 || t < 1) throw InputError("f(r,t) needs r >= 0 and t >= 1");
  if (r <= t) return r;
  return detail::checked_add(detail::checked_mul(2, f_recurrence(r - t, t)), t);
}

inline std::int64_t f_value(int r, int t) {
  std::int64_t rec = f_recurrence(r, t);
  if (rec != f_closed_form(r, t)) {
    throw std::logic_error("closed form and recurrence for f disagree");
  }
  return rec;
}

/// g(n,t): 0 below 2t, 3(n-2t) up to 4t, then g(n-1,t) + ceil(n/t) - 1.
inline std::int64_t g_value(int n, int t) {
  if (n < 0 || t < 1) throw InputError("g(n,t) needs n >= 0 and t >= 1");
  if (n < 2 * t) return 0;
  if (n <= 4 * t) return 3 * static_cast<std::int64_t>(n - 2 * t);
  std::int64_t g = 3 * static_cast<std::int64_t>(2 * t);
  for (int m = 4 * t + 1; m <= n; ++m) g += (m + t - 1) / t - 1;
  return g;
}

/// Clique sizes of G_{n,t}: t - (n mod t) of floor(n/t), then n mod t of
/// ceil(n/t). Zero-size cliques are omitted.
inline std::vector<int> turan_union_parts(int n, int t) {
  if (n < 0 || t < 1) throw InputError("G_{n,t} needs n >= 0 and t >= 1");
  std::vector<int> parts;
  int a = n % t, q = n / t;
  for (int i = 0; i < t - a; ++i)
    if (q > 0) parts.push_back(q);
  for (int i = 0; i < a; ++i) parts.push_back(q + 1);
  return parts;
}

inline SimpleGraph turan_union_graph(int n, int t) { return clique_union(turan_union_parts(n, t)); }

inline std::int64_t turan_union_edges(int n, int t) {
  std::int64_t e = 0;
  for (int s : turan_union_parts(n, t)) e += static_cast<std::int64_t>(s) * (s - 1) / 2;
  return e;
}

// ---- family specs: pg:4, ag:3, mrt:5,2, free:3, circuit:4, cc:3,3+1, gnt:9,2

enum class FamilyKind { pg, ag, mrt, free, circuit, circuits_coloops, turan_union };

struct FamilySpec {
  FamilyKind kind;
  std::vector<int> params;
  int coloops = 0;  // circuits_coloops only
};

namespace detail {

inline std::vector<int> parse_int_list(std::string const& s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) throw InputError("empty parameter in family spec");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (std::exception const&) {
      throw InputError("non-integer parameter '" + tok + "' in family spec");
    }
    if (used != tok.size()) throw InputError("non-integer parameter '" + tok + "' in family spec");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace detail

inline FamilySpec parse_family(std::string const& text) {
  std::size_t colon = text.find(':');
  if (colon == std::string::npos) throw InputError("family spec must look like kind:params");
  std::string kind = text.substr(0, colon), rest = text.substr(colon + 1);
  static const std::map<std::string, FamilyKind> kinds = {
      {"pg", FamilyKind::pg},        {"ag", FamilyKind::ag},
      {"mrt", FamilyKind::mrt},      {"free", FamilyKind::free},
      {"circuit", FamilyKind::circuit}, {"cc", FamilyKind::circuits_coloops},
      {"gnt", FamilyKind::turan_union}};
  auto it = kinds.find(kind);
  if (it == kinds.end()) throw InputError("unknown family kind '" + kind + "'");
  FamilySpec spec{it->second, {}, 0};
  if (spec.kind == FamilyKind::circuits_coloops) {
    std::size_t plus = rest.find('+');
    if (plus != std::string::npos) {
      auto c = detail::parse_int_list(rest.substr(plus + 1));
      if (c.size() != 1) throw InputError("cc spec takes one coloop count after '+'");
      spec.coloops = c[0];
      rest = rest.substr(0, plus);
    }
  }
  spec.params = detail::parse_int_list(rest);
  std::size_t want = 0;
  switch (spec.kind) {
    case FamilyKind::pg:
    case FamilyKind::ag:
    case FamilyKind::free:
    case FamilyKind::circuit: want = 1; break;
    case FamilyKind::mrt:
    case FamilyKind::turan_union: want = 2; break;
    case FamilyKind::circuits_coloops: want = 0; break;
  }
  if (want && spec.params.size() != want) {
    throw InputError("family '" + kind + "' takes " + std::to_string(want) + " parameter(s)");
  }
  for (int v : spec.params) {
    if (v < 0) throw InputError("family parameters must be non-negative");
  }
  if ((spec.kind == FamilyKind::mrt || spec.kind == FamilyKind::turan_union) && spec.params[1] < 1) {
    throw InputError("t must be at least 1");
  }
  return spec;
}

using Construction = std::variant<Matroid, SimpleGraph>;

inline Construction build_family(FamilySpec const& spec) {
  auto const& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::pg: return Matroid(projective_geometry(p[0]));
    case FamilyKind::ag: return Matroid(affine_geometry(p[0]));
    case FamilyKind::mrt: return Matroid(m_rt(p[0], p[1]));
    case FamilyKind::free: return Matroid(free_binary(p[0]));
    case FamilyKind::circuit: return Matroid(circuit_matroid(p[0]));
    case FamilyKind::circuits_coloops: return Matroid(circuits_coloops(p, spec.coloops));
    case FamilyKind::turan_union: return turan_union_graph(p[0], p[1]);
  }
  throw InputError("unhandled family");
}

}  // namespace clawfree
