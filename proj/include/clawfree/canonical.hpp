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
#include <climits>
#include <cstdint>
#include <numeric>
#include <vector>

namespace clawfree {

/// Undirected vertex-coloured graph handed to the canonical labeller.
/// Initial colours are compared as integers; their order is part of the
/// canonical form.
struct ColoredGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::vector<int> color;

  explicit ColoredGraph(int vertices = 0) : n(vertices), adj(vertices), color(vertices, 0) {}

  void add_edge(int u, int v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
};

struct Labeling {
  std::vector<int> order;     // order[p] = vertex placed at canonical position p
  std::vector<int> position;  // inverse of order
  std::vector<std::vector<int>> generators;
  std::vector<std::uint64_t> certificate;
  long leaves = 0;

  // Smallest vertex in the orbit of each vertex under the generators.
  std::vector<int> orbits() const {
    int n = static_cast<int>(order.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto const& g : generators) {
      for (int v = 0; v < n; ++v) {
        int a = find(v), b = find(g[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::vector<int> out(n);
    for (int v = 0; v < n; ++v) out[v] = find(v);
    return out;
  }
};

namespace detail {

class CanonSearch {
 public:
  explicit CanonSearch(ColoredGraph const& g) : g_(g), words_((g.n + 63) / 64) {}

  Labeling run() {
    std::vector<int> col = compress(g_.color);
    std::vector<int> path;
    search(col, path);
    Labeling out;
    out.order = best_order_;
    out.position.assign(g_.n, 0);
    for (int p = 0; p < g_.n; ++p) out.position[out.order[p]] = p;
    out.generators = std::move(gens_);
    out.certificate = std::move(best_cert_);
    out.leaves = leaves_;
    return out;
  }

 private:
  static constexpr int kNoJump = INT_MAX;

  static std::vector<int> compress(std::vector<int> const& raw) {
    std::vector<int> vals = raw;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    std::vector<int> out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      out[i] = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), raw[i]) - vals.begin());
    }
    return out;
  }

  static int cell_count(std::vector<int> const& col) {
    return col.empty() ? 0 : *std::max_element(col.begin(), col.end()) + 1;
  }

  // Colour refinement to the coarsest equitable partition finer than `col`.
  // New colours are ranks of (old colour, sorted neighbour colours), so the
  // cell order is preserved and the procedure commutes with isomorphisms.
  void refine(std::vector<int>& col) const {
    int n = g_.n;
    int cells = cell_count(col);
    std::vector<std::vector<int>> sig(n);
    std::vector<int> idx(n);
    while (cells < n) {
      for (int v = 0; v < n; ++v) {
        sig[v].clear();
        for (int u : g_.adj[v]) sig[v].push_back(col[u]);
        std::sort(sig[v].begin(), sig[v].end());
      }
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (col[a] != col[b]) return col[a] < col[b];
        return sig[a] < sig[b];
      });
      std::vector<int> next(n);
      int c = 0;
      for (int i = 0; i < n; ++i) {
        if (i > 0 && (col[idx[i]] != col[idx[i - 1]] || sig[idx[i]] != sig[idx[i - 1]])) ++c;
        next[idx[i]] = c;
      }
      int fresh = n == 0 ? 0 : c + 1;
      col.swap(next);
      if (fresh == cells) break;
      cells = fresh;
    }
  }

  std::vector<std::uint64_t> certificate(std::vector<int> const& pos) const {
    std::vector<std::uint64_t> cert(static_cast<std::size_t>(g_.n) * words_, 0);
    for (int v = 0; v < g_.n; ++v) {
      std::size_t row = static_cast<std::size_t>(pos[v]) * words_;
      for (int u : g_.adj[v]) cert[row + pos[u] / 64] |= std::uint64_t{1} << (pos[u] % 64);
    }
    return cert;
  }

  static int common_prefix(std::vector<int> const& a, std::vector<int> const& b) {
    int k = 0;
    while (k < static_cast<int>(a.size()) && k < static_cast<int>(b.size()) && a[k] == b[k]) ++k;
    return k;
  }

  // Automorphism sending the vertex at each position of `pos` to the vertex
  // at the same position of the stored leaf.
  void record_automorphism(std::vector<int> const& pos, std::vector<int> const& target_order) {
    std::vector<int> gamma(g_.n);
    bool identity = true;
    for (int v = 0; v < g_.n; ++v) {
      gamma[v] = target_order[pos[v]];
      identity = identity && gamma[v] == v;
    }
    if (!identity) gens_.push_back(std::move(gamma));
  }

  int leaf(std::vector<int> const& pos, std::vector<int> const& path) {
    ++leaves_;
    std::vector<int> order(g_.n);
    for (int v = 0; v < g_.n; ++v) order[pos[v]] = v;
    auto cert = certificate(pos);
    if (!have_first_) {
      have_first_ = true;
      first_cert_ = best_cert_ = std::move(cert);
      first_order_ = best_order_ = order;
      first_path_ = best_path_ = path;
      return kNoJump;
    }
    if (cert == first_cert_) {
      record_automorphism(pos, first_order_);
      return common_prefix(path, first_path_);
    }
    if (cert == best_cert_) {
      record_automorphism(pos, best_order_);
      return common_prefix(path, best_path_);
    }
    if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_order_ = std::move(order);
      best_path_ = path;
    }
    return kNoJump;
  }

  // Returns the tree level to resume at; kNoJump when the caller continues.
  int search(std::vector<int> col, std::vector<int>& path) {
    refine(col);
    int n = g_.n;
    int level = static_cast<int>(path.size());
    int cells = cell_count(col);
    if (cells == n) return leaf(col, path);

    std::vector<int> size(cells, 0);
    for (int c : col) ++size[c];
    int target = -1;
    for (int c = 0; c < cells; ++c) {
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
    }
    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
      if (col[v] == target) members.push_back(v);
    }

    std::vector<int> explored;
    std::size_t seen_gens = 0;
    std::vector<int> orbit(n);
    std::iota(orbit.begin(), orbit.end(), 0);
    for (int w : members) {
      if (gens_.size() != seen_gens) {
        seen_gens = gens_.size();
        orbit = stabilizer_orbits(path);
      }
      bool redundant = std::any_of(explored.begin(), explored.end(),
                                   [&](int u) { return orbit[u] == orbit[w]; });
      if (redundant) continue;
      explored.push_back(w);

      std::vector<int> child(n);
      for (int v = 0; v < n; ++v) child[v] = 2 * col[v] + 1;
      child[w] = 2 * col[w];
      path.push_back(w);
      int jump = search(compress(child), path);
      path.pop_back();
      if (jump < level) return jump;
    }
    return kNoJump;
  }

  // Orbits of the subgroup generated by the known automorphisms that fix
  // every vertex on `path`.
  std::vector<int> stabilizer_orbits(std::vector<int> const& path) const {
    int n = g_.n;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto const& g : gens_) {
      bool fixes = std::all_of(path.begin(), path.end(), [&](int v) { return g[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n; ++v) {
        int a = find(v), b = find(g[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::vector<int> out(n);
    for (int v = 0; v < n; ++v) out[v] = find(v);
    return out;
  }

  ColoredGraph const& g_;
  std::size_t words_;
  bool have_first_ = false;
  std::vector<std::uint64_t> first_cert_, best_cert_;
  std::vector<int> first_order_, best_order_, first_path_, best_path_;
  std::vector<std::vector<int>> gens_;
  long leaves_ = 0;
};

}  // namespace detail

/// Canonical labelling by individualisation-refinement with automorphism
/// pruning. Two graphs receive equal certificates iff they are isomorphic
/// by a colour-preserving map; the generators found generate the
/// automorphism group.
inline Labeling canonical_labeling(ColoredGraph const& g) {
  if (g.n == 0) return Labeling{};
  return detail::CanonSearch(g).run();
}

}  // namespace clawfree
