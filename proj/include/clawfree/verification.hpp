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

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "clawfree/constructions.hpp"
#include "clawfree/enumeration.hpp"
#include "clawfree/graph.hpp"
#include "clawfree/matroid_io.hpp"
#include "clawfree/report_json.hpp"

namespace clawfree {

// ---------------------------------------------------------------- classes

enum class EnumClass { binary, rank3, bases };

inline std::string class_name(EnumClass c) {
  switch (c) {
    case EnumClass::binary: return "binary";
    case EnumClass::rank3: return "rank3";
    case EnumClass::bases: return "bases";
  }
  return "?";
}

inline EnumClass parse_enum_class(std::string const& s) {
  if (s == "binary") return EnumClass::binary;
  if (s == "rank3") return EnumClass::rank3;
  if (s == "bases") return EnumClass::bases;
  throw InputError("unknown matroid class '" + s + "' (binary, rank3, bases)");
}

/// What a matroid campaign scans: one class, one rank, ground sets up to
/// size_bound. Non-simple bases-class scans are restricted to loopless
/// matroids.
struct EnumSpec {
  EnumClass cls = EnumClass::binary;
  int rank = 3;
  std::optional<int> size_bound;
  bool require_simple = true;
};

inline int class_capacity(EnumClass c, int r) {
  switch (c) {
    case EnumClass::binary:
      if (r < 1 || r > kMaxBinaryEnumRank) throw CapacityError("binary class supports rank 1..6");
      return (1 << r) - 1;
    case EnumClass::rank3:
      if (r != 3) throw InputError("rank3 class requires rank 3");
      return kMaxRank3Points;
    case EnumClass::bases:
      if (r < 0 || r > kMaxBasisEnumElements) throw CapacityError("bases class supports rank 0..8");
      return kMaxBasisEnumElements;
  }
  return 0;
}

// ---------------------------------------------------------------- reports

struct Artifact {
  std::string label;
  std::string text;  // matroid or graph file contents
};

struct TightClass {
  std::string label;
  std::string canon;
  int size = 0;
  std::string object;
};

struct ExtremalReport {
  std::string campaign;
  Json params = Json::object();
  std::int64_t threshold = 0;
  std::optional<std::int64_t> observed_min;
  std::vector<TightClass> tight_classes;
  bool matched_prediction = false;
  std::string verdict;
  bool complete = true;
  long counts_scanned = 0;
  long hypothesis_classes = 0;
  std::vector<std::string> notes;
  std::vector<std::string> failures;
  std::vector<Artifact> counterexamples;
  Json diagnostics = Json::array();
  Json extra = Json::object();
  double runtime_seconds = 0;
};

/// 0 matched, 2 mismatch, 3 incomplete coverage.
inline int exit_code(ExtremalReport const& rep) {
  if (!rep.failures.empty()) return 2;
  if (!rep.complete) return 3;
  return 0;
}

inline Json to_json(ExtremalReport const& rep, bool timing = false) {
  Json j;
  j["campaign"] = rep.campaign;
  j["params"] = rep.params;
  j["threshold"] = rep.threshold;
  j["observed_min"] = rep.observed_min ? Json(*rep.observed_min) : Json(nullptr);
  Json tight = Json::array();
  for (auto const& tc : rep.tight_classes) {
    tight.push_back(Json{{"label", tc.label}, {"size", tc.size}, {"canon", tc.canon}, {"object", tc.object}});
  }
  j["tight_classes"] = tight;
  j["matched_prediction"] = rep.matched_prediction;
  j["verdict"] = rep.verdict;
  j["complete"] = rep.complete;
  j["counts_scanned"] = rep.counts_scanned;
  j["hypothesis_classes"] = rep.hypothesis_classes;
  j["notes"] = rep.notes;
  j["failures"] = rep.failures;
  Json ce = Json::array();
  for (auto const& a : rep.counterexamples) ce.push_back(Json{{"label", a.label}, {"object", a.text}});
  j["counterexamples"] = ce;
  j["diagnostics"] = rep.diagnostics;
  j["extra"] = rep.extra;
  if (timing) j["runtime_seconds"] = rep.runtime_seconds;
  return j;
}

namespace detail {

inline void finish(ExtremalReport& rep, std::chrono::steady_clock::time_point start) {
  rep.matched_prediction = rep.failures.empty() && rep.complete;
  if (rep.verdict.empty()) rep.verdict = !rep.failures.empty() ? "mismatch" : rep.complete ? "matched" : "incomplete";
  rep.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename F>
decltype(auto) with_oracle(Matroid const& m, F&& f) {
  if (m.is_binary_backend()) return f(m.binary());
  return f(RankTable::from_bases(m.size(), m.bases().bases()));
}

using MatroidPredicate = std::function<bool(Matroid const&)>;
using ColumnFilter = std::function<bool(std::vector<Gf2Vector> const&)>;

struct ScanOutcome {
  std::vector<MatroidClass> hits;  // classes meeting the hypothesis, sorted by canon
  long candidates = 0;
  bool complete = true;
};

inline ScanOutcome scan_matroids(EnumSpec const& spec, int lo, int hi, MatroidPredicate const& hypothesis,
                                 ColumnFilter const& binary_keep, RunControl const& ctl) {
  ScanOutcome out;
  int r = spec.rank;
  switch (spec.cls) {
    case EnumClass::binary: {
      std::vector<std::map<std::string, BinaryMatroid>> found(ctl.shards());
      auto stats = sweep_binary_candidates(r, hi, binary_keep, [&](int s, BinaryMatroid const& m) {
        if (m.size() < lo) return;
        if (!hypothesis(Matroid(m))) return;
        detail::keep_least(found[s], canon_matroid_of(m).form, m);
      }, ctl);
      out.candidates = stats.candidates;
      out.complete = stats.complete;
      for (auto& [form, m] : detail::merge_least(found)) out.hits.push_back({Matroid(m), form});
      break;
    }
    case EnumClass::rank3:
      for (int n = std::max(lo, 3); n <= hi && out.complete; ++n) {
        auto res = enumerate_rank3_ex(n, ctl);
        out.candidates += res.candidates;
        out.complete = res.complete;
        for (auto& mc : res.matroids)
          if (hypothesis(mc.matroid)) out.hits.push_back(std::move(mc));
      }
      break;
    case EnumClass::bases:
      for (int n = std::max(lo, r); n <= hi && out.complete; ++n) {
        auto res = enumerate_basis_ex(n, r, spec.require_simple ? BasisFilter::simple : BasisFilter::loopless, ctl);
        out.candidates += res.candidates;
        out.complete = res.complete;
        for (auto& mc : res.matroids)
          if (hypothesis(mc.matroid)) out.hits.push_back(std::move(mc));
      }
      break;
  }
  sort_classes(out.hits);
  return out;
}

struct ComponentSummary {
  std::vector<int> circuit_sizes;  // descending
  int coloops = 0;
  bool circuits_and_coloops = true;
  std::vector<Mask> components;
};

template <RankOracle M>
ComponentSummary summarize_components(M const& m) {
  ComponentSummary cs;
  cs.components = connected_components(m);
  for (Mask c : cs.components) {
    int k = popcount(c), rk = m.rank(c);
    if (k == 1 && rk == 1) {
      ++cs.coloops;
      continue;
    }
    bool circuit = k >= 2 && rk == k - 1;
    for_each_bit(c, [&](int e) {
      if (m.rank(c & ~bit(e)) != k - 1) circuit = false;
    });
    if (circuit) cs.circuit_sizes.push_back(k);
    else cs.circuits_and_coloops = false;
  }
  std::sort(cs.circuit_sizes.rbegin(), cs.circuit_sizes.rend());
  return cs;
}

inline std::string join_ints(std::vector<int> const& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return s;
}

inline std::string circuits_label(ComponentSummary const& cs) {
  if (cs.circuit_sizes.empty()) return "free:" + std::to_string(cs.coloops);
  std::string s = "cc:" + join_ints(cs.circuit_sizes, ',');
  if (cs.coloops) s += "+" + std::to_string(cs.coloops);
  return s;
}

// Ranks of the affine-geometry summands, or nullopt when some component is
// not an affine geometry. A single point is AG(0,2).
template <RankOracle M>
std::optional<std::vector<int>> affine_summands(M const& m, ComponentSummary const& cs) {
  std::vector<int> ranks;
  for (Mask c : cs.components) {
    int k = m.rank(c), size = popcount(c);
    if (k == 1 && size == 1) {
      ranks.push_back(1);
      continue;
    }
    if (k < 3 || k > 7 || size != (1 << (k - 1))) return std::nullopt;
    Restriction<M> part(m, c);
    if (canon_matroid_of(part).form != canon_matroid_of(affine_geometry(k)).form) return std::nullopt;
    ranks.push_back(k);
  }
  std::sort(ranks.rbegin(), ranks.rend());
  return ranks;
}

inline std::string affine_label(std::vector<int> const& ranks) {
  std::string s;
  for (std::size_t i = 0; i < ranks.size(); ++i) s += (i ? "+" : "") + ("ag:" + std::to_string(ranks[i]));
  return s;
}

inline TightClass tight_entry(MatroidClass const& mc, std::string label) {
  return {std::move(label), mc.canon, mc.matroid.size(), serialize_matroid(mc.matroid)};
}

// Observed minimum, bound violations and tight classes; returns the tight hits.
inline std::vector<MatroidClass const*> split_hits(ExtremalReport& rep, std::vector<MatroidClass> const& hits,
                                                   std::function<std::string(MatroidClass const&)> const& label,
                                                   std::string const& violation) {
  std::vector<MatroidClass const*> tight;
  for (auto const& mc : hits) {
    std::int64_t size = mc.matroid.size();
    if (!rep.observed_min || size < *rep.observed_min) rep.observed_min = size;
    if (size < rep.threshold) {
      std::string l = label(mc);
      rep.failures.push_back(violation + ": " + l + " with " + std::to_string(size) + " elements");
      rep.counterexamples.push_back({l, serialize_matroid(mc.matroid)});
    } else if (size == rep.threshold) {
      tight.push_back(&mc);
    }
  }
  return tight;
}

inline bool triangle_free_simple(Matroid const& m) {
  return with_oracle(m, [](auto const& x) {
    int n = x.size();
    for (int e = 0; e < n; ++e)
      for (int f = e + 1; f < n; ++f)
        if (popcount(closure_of(x, bit(e) | bit(f))) > 2) return false;
    return true;
  });
}

// Sweep filter for the binary class: only the newest column can close a
// triangle, since every prefix already passed.
inline bool newest_column_triangle_free(std::vector<Gf2Vector> const& cols) {
  Mask present = 0;
  for (std::size_t i = 0; i + 1 < cols.size(); ++i) present |= bit(static_cast<int>(cols[i]));
  Gf2Vector v = cols.back();
  for (std::size_t i = 0; i + 1 < cols.size(); ++i)
    if (contains(present, static_cast<int>(v ^ cols[i]))) return false;
  return true;
}

inline int scan_ceiling(EnumSpec const& spec, std::int64_t wanted) {
  int cap = class_capacity(spec.cls, spec.rank);
  if (spec.size_bound) {
    if (*spec.size_bound > cap) {
      throw CapacityError(class_name(spec.cls) + " class scans at most " + std::to_string(cap) + " elements");
    }
    return *spec.size_bound;
  }
  return static_cast<int>(std::min<std::int64_t>(wanted, cap));
}

inline Json spec_json(EnumSpec const& spec, int ceiling) {
  return Json{{"class", class_name(spec.cls)}, {"r", spec.rank}, {"size_bound", ceiling}};
}

}  // namespace detail

// ---------------------------------------------------------------- campaigns

/// Minimum size of a simple rank-r matroid in the class with no (t+1)-claw,
/// checked against f(r,t), with the tight examples classified against the
/// equality characterisation.
inline ExtremalReport verify_matroid_bound(EnumSpec const& spec, int t, RunControl const& ctl = RunControl()) {
  auto start = std::chrono::steady_clock::now();
  int r = spec.rank;
  if (t < 1 || r < 1) throw InputError("bound campaign needs r >= 1 and t >= 1");
  ExtremalReport rep;
  rep.campaign = "bound";
  rep.threshold = f_value(r, t);
  EnumSpec s = spec;
  s.require_simple = true;
  int ceiling = detail::scan_ceiling(s, rep.threshold);
  rep.params = detail::spec_json(s, ceiling);
  rep.params["t"] = t;

  auto scan = detail::scan_matroids(s, r, ceiling, [&](Matroid const& m) {
    return detail::with_oracle(m, [&](auto const& x) { return !has_claw_of_size(x, t + 1); });
  }, nullptr, ctl);
  rep.counts_scanned = scan.candidates;
  rep.hypothesis_classes = static_cast<long>(scan.hits.size());
  rep.complete = scan.complete;
  if (ceiling < rep.threshold) {
    rep.complete = false;
    rep.notes.push_back("scan stops below the threshold size");
  }

  std::string extremal_canon = canon_matroid_of(m_rt(r, t)).form;
  std::string extremal_label = t == 1 ? "pg:" + std::to_string(r) : "mrt:" + std::to_string(r) + "," + std::to_string(t);
  auto label = [&](MatroidClass const& mc) {
    if (mc.canon == extremal_canon) return extremal_label;
    auto cs = detail::with_oracle(mc.matroid, [](auto const& x) { return detail::summarize_components(x); });
    return cs.circuits_and_coloops ? detail::circuits_label(cs) : std::string("other");
  };
  auto tight = detail::split_hits(rep, scan.hits, label, "bound violated");

  bool extremal_seen = false;
  for (auto const* mc : tight) {
    std::string l = label(*mc);
    rep.tight_classes.push_back(detail::tight_entry(*mc, l));
    auto cs = detail::with_oracle(mc->matroid, [](auto const& x) { return detail::summarize_components(x); });
    bool first_bullet = mc->canon == extremal_canon;
    bool all_triangles = std::all_of(cs.circuit_sizes.begin(), cs.circuit_sizes.end(), [](int k) { return k == 3; });
    bool second_bullet = t < r && r < 2 * t && cs.circuits_and_coloops &&
                         static_cast<int>(cs.circuit_sizes.size()) == r - t && !all_triangles;
    extremal_seen = extremal_seen || first_bullet;
    if (!first_bullet && !second_bullet) {
      rep.failures.push_back("tight example outside the equality cases: " + l);
      rep.counterexamples.push_back({l, serialize_matroid(mc->matroid)});
    }

    // Every tight example has a t-claw S, and each M/S has all parallel
    // classes of size 2 with f(r-t,t) points.
    auto claws = detail::with_oracle(mc->matroid, [&](auto const& x) { return claws_of_size(x, t); });
    bool pairs = true, points = true;
    for (Mask c : claws) {
      Simplification si = simplify(minor(mc->matroid, GroundSubset(c, mc->matroid.size()),
                                         GroundSubset::empty(mc->matroid.size())));
      std::map<int, int> class_size;
      for (int rep_e : si.representative)
        if (rep_e >= 0) ++class_size[rep_e];
      for (auto const& [e, k] : class_size) pairs = pairs && k == 2;
      points = points && si.matroid.size() == f_value(r - t, t);
    }
    rep.diagnostics.push_back(Json{{"label", l},
                                   {"t_claws", claws.size()},
                                   {"contractions_all_parallel_pairs", pairs},
                                   {"contractions_have_f_points", points}});
    if (claws.empty()) rep.failures.push_back("tight example without a t-claw: " + l);
    if (!pairs || !points) rep.failures.push_back("contraction by a t-claw breaks the pair structure: " + l);
  }
  if (rep.complete) {
    if (!rep.observed_min || *rep.observed_min != rep.threshold) {
      rep.failures.push_back("minimum size differs from the threshold");
    }
    if (!extremal_seen) {
      rep.failures.push_back("extremal example " + extremal_label + " not found among tight classes");
    }
  }
  detail::finish(rep, start);
  return rep;
}

/// Loopless rank-r matroids with no (t+1)-claw have at least 2r - t
/// elements, and the tight ones are r - t circuits plus coloops.
inline ExtremalReport verify_lowrank(int r, int t, int n_max, RunControl const& ctl = RunControl()) {
  auto start = std::chrono::steady_clock::now();
  if (t < 1 || r < t) throw InputError("lowrank campaign needs r >= t >= 1");
  ExtremalReport rep;
  rep.campaign = "lowrank";
  rep.threshold = 2 * r - t;
  EnumSpec s{EnumClass::bases, r, n_max, false};
  int ceiling = detail::scan_ceiling(s, n_max);
  rep.params = Json{{"class", "bases"}, {"r", r}, {"t", t}, {"n_max", ceiling}, {"loopless", true}};

  auto scan = detail::scan_matroids(s, r, ceiling, [&](Matroid const& m) {
    return detail::with_oracle(m, [&](auto const& x) { return !has_claw_of_size(x, t + 1); });
  }, nullptr, ctl);
  rep.counts_scanned = scan.candidates;
  rep.hypothesis_classes = static_cast<long>(scan.hits.size());
  rep.complete = scan.complete;
  if (ceiling < rep.threshold) {
    rep.complete = false;
    rep.notes.push_back("scan stops below the threshold size");
  }

  auto summary = [](MatroidClass const& mc) {
    return detail::with_oracle(mc.matroid, [](auto const& x) { return detail::summarize_components(x); });
  };
  auto label = [&](MatroidClass const& mc) {
    auto cs = summary(mc);
    return cs.circuits_and_coloops ? detail::circuits_label(cs) : std::string("other");
  };
  auto tight = detail::split_hits(rep, scan.hits, label, "bound violated");

  std::string pairs_label = detail::circuits_label({std::vector<int>(r - t, 2), t, true, {}});
  bool only_pairs = !tight.empty();
  for (auto const* mc : tight) {
    auto cs = summary(*mc);
    std::string l = label(*mc);
    rep.tight_classes.push_back(detail::tight_entry(*mc, l));
    if (!cs.circuits_and_coloops || static_cast<int>(cs.circuit_sizes.size()) != r - t) {
      rep.failures.push_back("tight example is not r - t circuits plus coloops: " + l);
      rep.counterexamples.push_back({l, serialize_matroid(mc->matroid)});
    }
    if (l != pairs_label) only_pairs = false;
  }
  if (rep.complete && (!rep.observed_min || *rep.observed_min != rep.threshold)) {
    rep.failures.push_back("minimum size differs from the threshold");
  }
  rep.extra["parallel_pairs_unique"] = only_pairs;
  if (!tight.empty() && !only_pairs) {
    rep.notes.push_back("uniqueness remark does not hold: " + pairs_label +
                        " is not the only smallest loopless example");
  }
  detail::finish(rep, start);
  return rep;
}

/// Triangle-free simple rank-r matroids. For t = 1 the hypothesis is "no
/// 3-claw", the threshold 2^(r-1) and the tight class must be AG(r-1,2)
/// alone. For t >= 2 ("no (2t+1)-claw", threshold t*2^(r/t-1)) the scan is a
/// counterexample search and never reports more than consistency.
inline ExtremalReport verify_triangle_free(EnumSpec const& spec, int t, RunControl const& ctl = RunControl()) {
  auto start = std::chrono::steady_clock::now();
  int r = spec.rank;
  if (t < 1 || r < 1) throw InputError("trianglefree campaign needs r >= 1 and t >= 1");
  if (r % t != 0) throw InputError("trianglefree campaign needs t to divide r");
  ExtremalReport rep;
  rep.campaign = "trianglefree";
  rep.threshold = t * (std::int64_t{1} << (r / t - 1));
  EnumSpec s = spec;
  s.require_simple = true;
  int ceiling = detail::scan_ceiling(s, rep.threshold);
  rep.params = detail::spec_json(s, ceiling);
  rep.params["t"] = t;
  int forbidden = t == 1 ? 3 : 2 * t + 1;

  auto scan = detail::scan_matroids(s, r, ceiling, [&](Matroid const& m) {
    return detail::triangle_free_simple(m) &&
           detail::with_oracle(m, [&](auto const& x) { return !has_claw_of_size(x, forbidden); });
  }, detail::newest_column_triangle_free, ctl);
  rep.counts_scanned = scan.candidates;
  rep.hypothesis_classes = static_cast<long>(scan.hits.size());
  rep.complete = scan.complete;

  auto label = [&](MatroidClass const& mc) {
    return detail::with_oracle(mc.matroid, [](auto const& x) {
      auto cs = detail::summarize_components(x);
      if (auto ag = detail::affine_summands(x, cs)) return detail::affine_label(*ag);
      return cs.circuits_and_coloops ? detail::circuits_label(cs) : std::string("other");
    });
  };
  auto tight = detail::split_hits(rep, scan.hits, label, t == 1 ? "bound violated" : "conjecture counterexample");
  for (auto const* mc : tight) rep.tight_classes.push_back(detail::tight_entry(*mc, label(*mc)));

  if (t == 1) {
    if (ceiling < rep.threshold) {
      rep.complete = false;
      rep.notes.push_back("scan stops below the threshold size");
    }
    std::string ag = canon_matroid_of(affine_geometry(r)).form;
    for (auto const* mc : tight) {
      if (mc->canon != ag) {
        rep.failures.push_back("tight example other than the affine geometry: " + label(*mc));
        rep.counterexamples.push_back({label(*mc), serialize_matroid(mc->matroid)});
      }
    }
    if (rep.complete && tight.empty()) rep.failures.push_back("affine geometry not found at the threshold size");
    detail::finish(rep, start);
    return rep;
  }

  rep.notes.push_back("open conjecture: a clean scan is consistency at this scale, not a proof");
  if (!rep.counterexamples.empty()) rep.verdict = "counterexample-found";
  else if (!rep.complete) rep.verdict = "incomplete";
  else rep.verdict = "consistent-at-scale";
  detail::finish(rep, start);
  return rep;
}

namespace detail {

inline std::string graph_label(SimpleGraph const& g, int n, int t) {
  std::vector<int> sizes;
  bool cliques = true;
  for (Mask c : g.components()) {
    int k = popcount(c);
    int edges = 0;
    for_each_bit(c, [&](int v) { edges += popcount(g.neighbors(v) & c); });
    if (edges != k * (k - 1)) cliques = false;
    sizes.push_back(k);
  }
  if (!cliques) return "other";
  std::sort(sizes.rbegin(), sizes.rend());
  std::string s;
  for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? "+" : "") + ("K" + std::to_string(sizes[i]));
  if (canon_graph(g) == canon_graph(turan_union_graph(n, t))) s += " (gnt:" + std::to_string(n) + "," + std::to_string(t) + ")";
  return s;
}

inline bool cliques_of_sizes_1_3_4(SimpleGraph const& g) {
  for (Mask c : g.components()) {
    int k = popcount(c);
    if (k != 1 && k != 3 && k != 4) return false;
    bool complete = true;
    for_each_bit(c, [&](int v) { complete = complete && popcount(g.neighbors(v) & c) == k - 1; });
    if (!complete) return false;
  }
  return true;
}

}  // namespace detail

/// Graphs on n vertices with no induced forest on 2t+1 vertices have at
/// least g(n,t) edges; tight graphs are unions of K1, K3, K4 when n < 4t and
/// exactly G_{n,t} when n >= 4t. For n >= 3t also cross-checks that stable
/// sets of size at most t force |E(G_{n,t})| edges.
inline ExtremalReport verify_graph_theorem(int n, int t, RunControl const& ctl = RunControl()) {
  auto start = std::chrono::steady_clock::now();
  if (t < 1 || n < 0) throw InputError("graph campaign needs n >= 0 and t >= 1");
  ExtremalReport rep;
  rep.campaign = "graph";
  rep.threshold = g_value(n, t);
  rep.params = Json{{"n", n}, {"t", t}};

  GraphEnumOptions opt;
  opt.max_edges = static_cast<int>(rep.threshold);
  opt.keep = [t](SimpleGraph const& g) { return !has_induced_forest(g, 2 * t + 1); };
  auto res = enumerate_graphs_ex(n, opt, ctl);
  rep.counts_scanned = res.candidates;
  rep.hypothesis_classes = static_cast<long>(res.graphs.size());
  rep.complete = res.complete;
  std::string extremal = canon_graph(turan_union_graph(n, t));

  std::vector<GraphClass const*> tight;
  for (auto const& gc : res.graphs) {
    std::int64_t e = gc.graph.edge_count();
    if (!rep.observed_min || e < *rep.observed_min) rep.observed_min = e;
    if (e < rep.threshold) {
      std::string l = detail::graph_label(gc.graph, n, t);
      rep.failures.push_back("bound violated: " + l + " with " + std::to_string(e) + " edges");
      rep.counterexamples.push_back({l, serialize_graph(gc.graph)});
    } else if (e == rep.threshold) {
      tight.push_back(&gc);
    }
  }
  for (auto const* gc : tight) {
    std::string l = detail::graph_label(gc->graph, n, t);
    rep.tight_classes.push_back({l, gc->canon, static_cast<int>(gc->graph.edge_count()), serialize_graph(gc->graph)});
    bool ok = n < 4 * t ? detail::cliques_of_sizes_1_3_4(gc->graph) : gc->canon == extremal;
    if (!ok) {
      rep.failures.push_back("tight graph outside the equality case: " + l);
      rep.counterexamples.push_back({l, serialize_graph(gc->graph)});
    }
  }
  if (rep.complete && (!rep.observed_min || *rep.observed_min != rep.threshold)) {
    rep.failures.push_back("minimum edge count differs from the threshold");
  }
  if (rep.complete && n >= 4 * t && tight.size() == 1 && tight[0]->canon != extremal) {
    rep.failures.push_back("unique tight graph is not the clique union");
  }

  if (n >= 3 * t) {
    std::int64_t bound = turan_union_edges(n, t);
    GraphEnumOptions topt;
    topt.max_edges = static_cast<int>(bound);
    topt.keep = [t](SimpleGraph const& g) { return max_stable_set(g) <= t; };
    auto tres = enumerate_graphs_ex(n, topt, ctl);
    std::optional<std::int64_t> tmin;
    Json ttight = Json::array();
    for (auto const& gc : tres.graphs) {
      std::int64_t e = gc.graph.edge_count();
      if (!tmin || e < *tmin) tmin = e;
      if (e < bound) {
        rep.failures.push_back("stable-set cross-check violated with " + std::to_string(e) + " edges");
        rep.counterexamples.push_back({detail::graph_label(gc.graph, n, t), serialize_graph(gc.graph)});
      } else if (e == bound) {
        ttight.push_back(detail::graph_label(gc.graph, n, t));
      }
    }
    if (!tres.complete) rep.complete = false;
    if (tres.complete && (!tmin || *tmin != bound)) rep.failures.push_back("stable-set cross-check minimum differs");
    rep.counts_scanned += tres.candidates;
    rep.extra["stable_set_check"] = Json{{"applicable", true},
                                         {"threshold", bound},
                                         {"observed_min", tmin ? Json(*tmin) : Json(nullptr)},
                                         {"tight", ttight},
                                         {"complete", tres.complete}};
  } else {
    rep.extra["stable_set_check"] = Json{{"applicable", false}};
  }
  detail::finish(rep, start);
  return rep;
}

// ---------------------------------------------------------------- contraction property

struct PropertyReport {
  std::string property = "contract";
  std::uint64_t seed = 0;
  long trials = 0;
  long exhaustive_matroids = 0;
  long pairs_checked = 0;
  long pseudoclaws_checked = 0;
  std::vector<Json> failures;
  bool complete = true;
  double runtime_seconds = 0;
};

inline int exit_code(PropertyReport const& rep) {
  if (!rep.failures.empty()) return 2;
  return rep.complete ? 0 : 3;
}

inline Json to_json(PropertyReport const& rep, bool timing = false) {
  Json j;
  j["property"] = rep.property;
  j["seed"] = rep.seed;
  j["trials"] = rep.trials;
  j["exhaustive_matroids"] = rep.exhaustive_matroids;
  j["pairs_checked"] = rep.pairs_checked;
  j["pseudoclaws_checked"] = rep.pseudoclaws_checked;
  j["violations"] = rep.failures.size();
  j["failures"] = rep.failures;
  j["complete"] = rep.complete;
  j["verdict"] = !rep.failures.empty() ? "mismatch" : rep.complete ? "matched" : "incomplete";
  if (timing) j["runtime_seconds"] = rep.runtime_seconds;
  return j;
}

namespace detail {

// Every claw of si(M/X), lifted to M; returns (lifted set, size) pairs that
// fail to be claws of M of that size, and counts the checks.
inline std::vector<std::pair<Mask, int>> pseudoclaw_violations(Matroid const& m, Mask x, long& checked) {
  int n = m.size();
  Simplification si = simplify(minor(m, GroundSubset(x, n), GroundSubset::empty(n)));
  std::vector<int> to_orig = to_indices(full_mask(n) & ~x);
  std::vector<Mask> lifted;
  with_oracle(si.matroid, [&](auto const& s) {
    for_each_claw(s, [&](Mask c) {
      Mask orig = 0;
      for_each_bit(c, [&](int j) { orig |= bit(to_orig[si.kept[j]]); });
      lifted.push_back(orig);
      return true;
    });
    return 0;
  });
  std::vector<std::pair<Mask, int>> bad;
  with_oracle(m, [&](auto const& o) {
    for (Mask c : lifted) {
      ++checked;
      if (!is_claw_mask(o, c)) bad.emplace_back(c, popcount(c));
    }
    return 0;
  });
  return bad;
}

}  // namespace detail

/// Lifted claws of si(M/X) are claws of M: random simple binary matroids of
/// rank at most 6 with random X, then every simple matroid on at most
/// `exhaustive_n` elements with every X.
inline PropertyReport contract_lemma_property(long trials, std::uint64_t seed, int exhaustive_n = 7,
                                              RunControl const& ctl = RunControl()) {
  auto start = std::chrono::steady_clock::now();
  if (trials < 0) throw InputError("trials must be non-negative");
  PropertyReport rep;
  rep.seed = seed;
  rep.trials = trials;

  struct Case {
    Matroid m;
    Mask x;
    Json origin;
  };
  std::vector<Case> cases;
  std::mt19937_64 rng(seed);
  for (long i = 0; i < trials; ++i) {
    int r = 1 + static_cast<int>(rng() % 6);
    int avail = (1 << r) - 1;
    int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(15, avail)));
    std::vector<Gf2Vector> pool;
    for (int v = 1; v <= avail; ++v) pool.push_back(static_cast<Gf2Vector>(v));
    for (int j = 0; j < n; ++j) std::swap(pool[j], pool[j + rng() % (pool.size() - j)]);
    pool.resize(n);
    Mask x = rng() & full_mask(n);
    cases.push_back({Matroid(BinaryMatroid(r, pool)), x, Json{{"source", "random"}, {"trial", i}}});
  }
  for (int n = 0; n <= exhaustive_n; ++n) {
    for (int r = 0; r <= n; ++r) {
      auto res = enumerate_basis_ex(n, r, BasisFilter::simple, ctl);
      if (!res.complete) {
        rep.complete = false;
        break;
      }
      for (auto const& mc : res.matroids) {
        ++rep.exhaustive_matroids;
        for (Mask x = 0; x <= full_mask(n); ++x) {
          cases.push_back({mc.matroid, x, Json{{"source", "exhaustive"}}});
        }
      }
    }
  }

  int shards = ctl.shards();
  std::vector<long> checked(shards, 0);
  std::vector<std::vector<std::pair<std::size_t, Json>>> bad(shards);
  std::atomic<bool> aborted{false};
  parallel_shards(cases.size(), shards, [&](int s, std::size_t i) {
    if (aborted || ((i & 255) == 0 && ctl.expired())) {
      aborted = true;
      return;
    }
    auto const& c = cases[i];
    for (auto const& [set, k] : detail::pseudoclaw_violations(c.m, c.x, checked[s])) {
      Json f = c.origin;
      f["seed"] = seed;
      f["matroid"] = serialize_matroid(c.m);
      f["X"] = subset_json(c.x);
      f["k"] = k;
      f["lifted"] = subset_json(set);
      bad[s].emplace_back(i, std::move(f));
    }
  });
  std::vector<std::pair<std::size_t, Json>> all;
  for (auto& b : bad)
    for (auto& f : b) all.push_back(std::move(f));
  std::sort(all.begin(), all.end(), [](auto const& a, auto const& b) { return a.first < b.first; });
  for (auto& f : all) rep.failures.push_back(std::move(f.second));
  for (long c : checked) rep.pseudoclaws_checked += c;
  rep.pairs_checked = static_cast<long>(cases.size());
  if (aborted) rep.complete = false;
  rep.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace clawfree
