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
#include <functional>
#include <istream>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "clawfree/canonical.hpp"
#include "clawfree/core.hpp"
#include "clawfree/parallel.hpp"

namespace clawfree {

inline constexpr int kMaxGraphVertices = 32;

/// Simple undirected graph on at most 32 vertices; row v is the
/// neighbourhood of v.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n = 0) : adj_(n, 0) {
    if (n < 0 || n > kMaxGraphVertices) throw CapacityError("graphs are limited to 32 vertices");
  }

  int order() const { return static_cast<int>(adj_.size()); }
  Mask neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const { return contains(adj_[u], v); }
  int degree(int v) const { return popcount(adj_[v]); }

  void add_edge(int u, int v) {
    if (u == v) throw InputError("self-loops are not allowed");
    if (u < 0 || v < 0 || u >= order() || v >= order()) throw InputError("vertex out of range");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }

  int edge_count() const {
    int e = 0;
    for (Mask row : adj_) e += popcount(row);
    return e / 2;
  }

  // New vertex n adjacent to `nbrs`.
  SimpleGraph with_vertex(Mask nbrs) const {
    SimpleGraph g(order() + 1);
    g.adj_.assign(adj_.begin(), adj_.end());
    g.adj_.push_back(nbrs);
    for_each_bit(nbrs, [&](int u) { g.adj_[u] |= bit(order()); });
    return g;
  }

  SimpleGraph complement() const {
    SimpleGraph g(order());
    for (int v = 0; v < order(); ++v) g.adj_[v] = full_mask(order()) & ~adj_[v] & ~bit(v);
    return g;
  }

  // Vertex sets of the connected components, ordered by smallest vertex.
  std::vector<Mask> components() const {
    std::vector<Mask> out;
    Mask left = full_mask(order());
    while (left) {
      Mask comp = bit(lowest(left)), frontier = comp;
      while (frontier) {
        int v = lowest(frontier);
        frontier &= frontier - 1;
        Mask fresh = adj_[v] & ~comp;
        comp |= fresh;
        frontier |= fresh;
      }
      out.push_back(comp);
      left &= ~comp;
    }
    return out;
  }

  friend bool operator==(SimpleGraph const&, SimpleGraph const&) = default;

 private:
  std::vector<Mask> adj_;
};

inline SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline SimpleGraph cycle_graph(int n) {
  SimpleGraph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

// Disjoint union of cliques of the given sizes, numbered consecutively.
inline SimpleGraph clique_union(std::vector<int> const& sizes) {
  int n = 0;
  for (int s : sizes) n += s;
  SimpleGraph g(n);
  int base = 0;
  for (int s : sizes) {
    for (int u = 0; u < s; ++u)
      for (int v = u + 1; v < s; ++v) g.add_edge(base + u, base + v);
    base += s;
  }
  return g;
}

/// Lexicographically first k-subset inducing a forest, if any. Vertices are
/// added in increasing order; a union-find per branch rejects any vertex
/// closing a cycle, so no branch ever contains one.
inline std::optional<Mask> find_induced_forest(SimpleGraph const& g, int k) {
  int n = g.order();
  if (k < 0 || k > n) return std::nullopt;
  std::array<int, kMaxGraphVertices> parent{};
  std::optional<Mask> found;

  auto find = [&](std::array<int, kMaxGraphVertices>& p, int x) {
    while (p[x] != x) x = p[x];
    return x;
  };
  std::function<bool(int, Mask, std::array<int, kMaxGraphVertices>&)> dfs =
      [&](int next, Mask chosen, std::array<int, kMaxGraphVertices>& p) -> bool {
    int have = popcount(chosen);
    if (have == k) {
      found = chosen;
      return true;
    }
    for (int v = next; v < n && n - v >= k - have; ++v) {
      std::array<int, kMaxGraphVertices> q = p;
      q[v] = v;
      bool cycle = false;
      Mask nb = g.neighbors(v) & chosen;
      while (nb && !cycle) {
        int u = lowest(nb);
        nb &= nb - 1;
        int a = find(q, u), b = find(q, v);
        if (a == b) cycle = true;
        else q[a] = b;
      }
      if (!cycle && dfs(v + 1, chosen | bit(v), q)) return true;
    }
    return false;
  };
  for (int v = 0; v < n; ++v) parent[v] = v;
  dfs(0, 0, parent);
  return found;
}

inline bool has_induced_forest(SimpleGraph const& g, int k) {
  return find_induced_forest(g, k).has_value();
}

namespace detail {

inline int max_stable(SimpleGraph const& g, Mask live) {
  if (!live) return 0;
  int pick = -1, pick_deg = -1, low = -1, low_deg = 64;
  for_each_bit(live, [&](int v) {
    int d = popcount(g.neighbors(v) & live);
    if (d > pick_deg) pick = v, pick_deg = d;
    if (d < low_deg) low = v, low_deg = d;
  });
  if (low_deg <= 1) {
    // a vertex of degree <= 1 is in some maximum stable set
    return 1 + max_stable(g, live & ~g.neighbors(low) & ~bit(low));
  }
  int without = max_stable(g, live & ~bit(pick));
  if (without >= popcount(live & ~g.neighbors(pick)) ) return without;
  int with = 1 + max_stable(g, live & ~g.neighbors(pick) & ~bit(pick));
  return std::max(with, without);
}

}  // namespace detail

/// Exact independence number by branching on a maximum-degree vertex.
inline int max_stable_set(SimpleGraph const& g) {
  return detail::max_stable(g, full_mask(g.order()));
}

inline int max_clique(SimpleGraph const& g) { return max_stable_set(g.complement()); }

inline ColoredGraph to_colored(SimpleGraph const& g) {
  ColoredGraph cg(g.order());
  for (int v = 0; v < g.order(); ++v) {
    for_each_bit(g.neighbors(v) & ~full_mask(v + 1), [&](int u) { cg.add_edge(v, u); });
  }
  return cg;
}

// Upper-triangle row-major bit string of g with vertex p := order[p].
inline std::string adjacency_bits(SimpleGraph const& g, std::vector<int> const& order) {
  int n = g.order();
  std::string s;
  s.reserve(n * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s.push_back(g.has_edge(order[i], order[j]) ? '1' : '0');
  return s;
}

inline std::vector<int> identity_order(int n) {
  std::vector<int> o(n);
  for (int i = 0; i < n; ++i) o[i] = i;
  return o;
}

struct GraphCanon {
  std::string form;
  Labeling labeling;
};

inline constexpr int kMaxCanonGraph = 32;

inline GraphCanon canon_graph_full(SimpleGraph const& g) {
  if (g.order() > kMaxCanonGraph) throw CapacityError("canonical form limited to 32 vertices");
  GraphCanon out;
  out.labeling = canonical_labeling(to_colored(g));
  out.form = std::to_string(g.order()) + ":" + adjacency_bits(g, out.labeling.order);
  return out;
}

/// Equal strings exactly for isomorphic graphs.
inline std::string canon_graph(SimpleGraph const& g) { return canon_graph_full(g).form; }

inline SimpleGraph relabel(SimpleGraph const& g, std::vector<int> const& perm) {
  SimpleGraph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.has_edge(u, v)) h.add_edge(perm[u], perm[v]);
  return h;
}

// ---- text format: "GRAPH n" then one line of C(n,2) upper-triangle bits

inline std::string serialize_graph(SimpleGraph const& g) {
  return "GRAPH " + std::to_string(g.order()) + "\n" +
         adjacency_bits(g, identity_order(g.order())) + "\n";
}

inline SimpleGraph parse_graph(std::istream& in) {
  std::string tag;
  int n = -1;
  if (!(in >> tag >> n) || tag != "GRAPH" || n < 0) throw InputError("expected header 'GRAPH n'");
  std::string line;
  std::getline(in, line);
  std::string bits;
  std::getline(in, bits);
  SimpleGraph g(n);
  std::size_t want = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  if (bits.size() != want) throw InputError("graph bit string has wrong length");
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if (bits[k] == '1') g.add_edge(i, j);
      else if (bits[k] != '0') throw InputError("graph bit string must be 0/1");
    }
  }
  return g;
}

inline SimpleGraph parse_graph(std::string const& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

// ---- isomorph-free generation

struct GraphClass {
  SimpleGraph graph;
  std::string canon;
};

struct GraphEnumOptions {
  std::optional<int> max_edges;
  // Must be hereditary (closed under vertex deletion); it prunes the tree.
  std::function<bool(SimpleGraph const&)> keep;
};

struct GraphEnumResult {
  std::vector<GraphClass> graphs;  // sorted by canonical form
  long candidates = 0;             // augmentations examined
  bool complete = true;
};

/// One graph per isomorphism class on n vertices, by canonical augmentation:
/// a child made by adding vertex k is kept only if k lies in the automorphism
/// orbit of the vertex labelled last by canon_graph.
inline GraphEnumResult enumerate_graphs_ex(int n, GraphEnumOptions const& opt,
                                           RunControl const& ctl = RunControl()) {
  if (n < 0 || n > 10) throw CapacityError("graph enumeration limited to 10 vertices");
  if (n == 10 && !opt.max_edges) throw CapacityError("n = 10 requires an edge bound");
  GraphEnumResult res;
  std::vector<GraphClass> level{{SimpleGraph(0), canon_graph(SimpleGraph(0))}};
  for (int k = 0; k < n; ++k) {
    int shards = ctl.shards();
    std::vector<std::vector<GraphClass>> found(shards);
    std::vector<long> tried(shards, 0);
    std::atomic<bool> aborted{false};
    parallel_shards(level.size(), shards, [&](int s, std::size_t i) {
      if (aborted || ctl.expired()) {
        aborted = true;
        return;
      }
      SimpleGraph const& parent = level[i].graph;
      int room = opt.max_edges ? *opt.max_edges - parent.edge_count() : k;
      std::set<std::string> local;
      for (Mask nb = 0; nb < (Mask{1} << k); ++nb) {
        if (popcount(nb) > room) continue;
        ++tried[s];
        SimpleGraph child = parent.with_vertex(nb);
        if (opt.keep && !opt.keep(child)) continue;
        GraphCanon c = canon_graph_full(child);
        auto orbit = c.labeling.orbits();
        if (orbit[k] != orbit[c.labeling.order[k]]) continue;
        if (local.insert(c.form).second) found[s].push_back({std::move(child), std::move(c.form)});
      }
    });
    for (long t : tried) res.candidates += t;
    if (aborted) {
      res.complete = false;
      return res;
    }
    level.clear();
    for (auto& f : found)
      for (auto& gc : f) level.push_back(std::move(gc));
    std::sort(level.begin(), level.end(),
              [](GraphClass const& a, GraphClass const& b) { return a.canon < b.canon; });
  }
  res.graphs = std::move(level);
  return res;
}

inline std::vector<SimpleGraph> enumerate_graphs(int n, std::optional<int> max_edges = std::nullopt) {
  GraphEnumOptions opt;
  opt.max_edges = max_edges;
  std::vector<SimpleGraph> out;
  for (auto& gc : enumerate_graphs_ex(n, opt).graphs) out.push_back(std::move(gc.graph));
  return out;
}

}  // namespace clawfree
