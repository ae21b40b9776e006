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


// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "clawfree/verification.hpp"

using namespace clawfree;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, std::string const& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::set<std::string> labels(ExtremalReport const& rep) {
  std::set<std::string> out;
  for (auto const& tc : rep.tight_classes) out.insert(tc.label);
  return out;
}

std::string show(std::set<std::string> const& s) {
  std::string out = "{";
  for (auto const& x : s) out += (out.size() > 1 ? ", " : "") + x;
  return out + "}";
}

EnumSpec spec(EnumClass cls, int r, std::optional<int> bound = std::nullopt) {
  EnumSpec s;
  s.cls = cls;
  s.rank = r;
  s.size_bound = bound;
  return s;
}

std::string min_text(ExtremalReport const& rep) {
  return rep.observed_min ? std::to_string(*rep.observed_min) : "none";
}

// Common checks for a campaign expected to match outright.
void require_matched(Outcome& o, ExtremalReport const& rep, std::string const& name) {
  o.require(rep.complete, name + " incomplete");
  o.require(rep.failures.empty(), name + " failures: " + (rep.failures.empty() ? "" : rep.failures.front()));
  o.require(rep.matched_prediction, name + " not matched");
  o.require(exit_code(rep) == 0, name + " exit " + std::to_string(exit_code(rep)));
}

int circuits_in(std::string const& label) {
  // "cc:a,b,c" or "cc:a,b+k"
  if (label.rfind("cc:", 0) != 0) return -1;
  std::string body = label.substr(3, label.find('+') == std::string::npos ? std::string::npos : label.find('+') - 3);
  if (body.empty()) return 0;
  return 1 + static_cast<int>(std::count(body.begin(), body.end(), ','));
}

Outcome size_functions() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  for (int r = 0; r <= 60; ++r)
    for (int t = 1; t <= 16; ++t)
      if (f_closed_form(r, t) != f_recurrence(r, t)) o.require(false, "f differs at " + std::to_string(r) + "," + std::to_string(t));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 1.0, "f check took " + std::to_string(secs) + " s");
  for (int t = 1; t <= 8; ++t)
    for (int n = 3 * t; n <= 40; ++n)
      if (turan_union_edges(n, t) != g_value(n, t))
        o.require(false, "edges differ from g at n=" + std::to_string(n) + " t=" + std::to_string(t));
  std::string witnesses;
  for (int t = 2; t <= 8; ++t) {
    int w = -1;
    for (int n = 0; n < 3 * t && w < 0; ++n)
      if (turan_union_edges(n, t) != g_value(n, t)) w = n;
    o.require(w >= 0, "no witness below 3t for t=" + std::to_string(t));
    if (w >= 0)
      witnesses += " t=" + std::to_string(t) + ":n=" + std::to_string(w) + "(" + std::to_string(turan_union_edges(w, t)) +
                   "!=" + std::to_string(g_value(w, t)) + ")";
  }
  if (o.pass) o.detail = "f forms agree on 0..60 x 1..16; edges = g on 3t..40; witnesses" + witnesses;
  return o;
}

Outcome one_claw_base() {
  Outcome o;
  auto plane = verify_matroid_bound(spec(EnumClass::rank3, 3, 9), 1);
  require_matched(o, plane, "rank3");
  o.require(plane.observed_min == 7, "rank3 min " + min_text(plane));
  o.require(labels(plane) == std::set<std::string>{"pg:3"}, "rank3 tight " + show(labels(plane)));
  auto space = verify_matroid_bound(spec(EnumClass::binary, 4), 1);
  require_matched(o, space, "binary r=4");
  o.require(space.observed_min == 15, "binary min " + min_text(space));
  o.require(labels(space) == std::set<std::string>{"pg:4"}, "binary tight " + show(labels(space)));
  if (o.pass) o.detail = "rank3 n<=9: min 7 unique pg:3; binary r=4: min 15 unique pg:4";
  return o;
}

Outcome maintech_binary() {
  Outcome o;
  std::string summary;
  for (auto [r, t] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {4, 3}, {5, 2}}) {
    std::string name = "(" + std::to_string(r) + "," + std::to_string(t) + ")";
    auto rep = verify_matroid_bound(spec(EnumClass::binary, r), t);
    require_matched(o, rep, name);
    o.require(rep.observed_min == f_value(r, t), name + " min " + min_text(rep));
    auto got = labels(rep);
    std::string mrt = "mrt:" + std::to_string(r) + "," + std::to_string(t);
    o.require(got.count(mrt) == 1, name + " lacks " + mrt);
    if (r >= 2 * t) {
      o.require(got == std::set<std::string>{mrt}, name + " tight " + show(got));
    } else {
      for (auto const& l : got) {
        if (l == mrt) continue;
        o.require(circuits_in(l) == r - t, name + " tight " + l + " is not r-t circuits plus coloops");
      }
    }
    summary += " " + name + "=" + show(got);
  }
  if (o.pass) o.detail = "min = f(r,t);" + summary;
  return o;
}

Outcome maintech_rank3() {
  Outcome o;
  auto rep = verify_matroid_bound(spec(EnumClass::rank3, 3, 9), 2);
  require_matched(o, rep, "rank3 t=2");
  o.require(rep.observed_min == 4, "min " + min_text(rep));
  o.require(labels(rep) == std::set<std::string>{"cc:4", "mrt:3,2"}, "tight " + show(labels(rep)));
  if (o.pass) o.detail = "tight set " + show(labels(rep)) + " (cc:4 = U_{3,4})";
  return o;
}

Outcome lowrank() {
  Outcome o;
  std::string summary;
  bool discrepancy = false;
  for (auto [r, t] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {4, 3}}) {
    std::string name = "(" + std::to_string(r) + "," + std::to_string(t) + ")";
    auto rep = verify_lowrank(r, t, kMaxBasisEnumElements);
    require_matched(o, rep, name);
    o.require(rep.observed_min == 2 * r - t, name + " min " + min_text(rep));
    for (auto const& l : labels(rep)) o.require(circuits_in(l) == r - t, name + " tight " + l);
    if (rep.extra.value("parallel_pairs_unique", true) == false) discrepancy = true;
    summary += " " + name + "=" + show(labels(rep));
  }
  o.require(discrepancy, "uniqueness remark discrepancy not reported");
  if (o.pass) o.detail = "bound 2r-t exact;" + summary + "; parallel-pairs uniqueness remark flagged as not holding";
  return o;
}

Outcome contract() {
  Outcome o;
  auto rep = contract_lemma_property(10000, 1, 7);
  o.require(rep.complete, "incomplete");
  o.require(rep.failures.empty(), std::to_string(rep.failures.size()) + " violations");
  o.require(rep.trials == 10000, "trials " + std::to_string(rep.trials));
  if (o.pass)
    o.detail = "10^4 random trials + " + std::to_string(rep.exhaustive_matroids) + " simple matroids (n<=7) over all X; " +
               std::to_string(rep.pseudoclaws_checked) + " pseudoclaws, 0 violations";
  return o;
}

Outcome affine() {
  Outcome o;
  std::string summary;
  std::vector<std::pair<EnumClass, int>> runs = {{EnumClass::rank3, 3}, {EnumClass::binary, 4}, {EnumClass::binary, 5}};
  for (auto [cls, r] : runs) {
    std::string name = class_name(cls) + " r=" + std::to_string(r);
    auto rep = verify_triangle_free(spec(cls, r, cls == EnumClass::rank3 ? std::optional<int>(9) : std::nullopt), 1);
    require_matched(o, rep, name);
    o.require(rep.observed_min == (1 << (r - 1)), name + " min " + min_text(rep));
    std::string ag = "ag:" + std::to_string(r);
    o.require(labels(rep) == std::set<std::string>{ag}, name + " tight " + show(labels(rep)));
    summary += " " + name + ": min " + min_text(rep) + " unique " + ag + ";";
  }
  if (o.pass) o.detail = summary.substr(1);
  return o;
}

Outcome conjecture() {
  Outcome o;
  std::string summary;
  std::vector<std::pair<int, std::optional<int>>> runs = {{4, std::nullopt}, {6, 7}};
  for (auto [r, cap] : runs) {
    std::string name = "(" + std::to_string(r) + ",2)";
    auto rep = verify_triangle_free(spec(EnumClass::binary, r, cap), 2);
    o.require(rep.complete, name + " incomplete");
    bool consistent = rep.verdict == "consistent-at-scale" && rep.failures.empty();
    bool loud = rep.verdict == "counterexample-found" && !rep.counterexamples.empty() && exit_code(rep) == 2;
    o.require(consistent || loud, name + " verdict " + rep.verdict);
    if (loud) std::printf("  !! conjecture counterexample at %s: %s\n", name.c_str(), rep.failures.front().c_str());
    summary += " " + name + " " + rep.verdict + " (" + std::to_string(rep.counts_scanned) + " candidates, " +
               std::to_string(rep.hypothesis_classes) + " hypothesis classes);";
  }
  if (o.pass) o.detail = summary.substr(1);
  return o;
}

Outcome graphs() {
  Outcome o;
  int runs = 0;
  for (int t = 1; t <= 3; ++t) {
    for (int n = 2 * t + 1; n <= 8; ++n) {
      std::string name = "(" + std::to_string(n) + "," + std::to_string(t) + ")";
      auto rep = verify_graph_theorem(n, t);
      ++runs;
      require_matched(o, rep, name);
      o.require(rep.observed_min == g_value(n, t), name + " min " + min_text(rep));
      std::string gnt = " (gnt:" + std::to_string(n) + "," + std::to_string(t) + ")";
      if (n >= 4 * t) {
        auto got = labels(rep);
        o.require(got.size() == 1 && got.begin()->find(gnt) != std::string::npos, name + " tight " + show(got));
      }
      if (n >= 3 * t) {
        auto const& s = rep.extra["stable_set_check"];
        o.require(s.value("observed_min", Json()) == s.value("threshold", Json()), name + " stable-set check");
      }
      if (n == 6 && t == 2)
        o.require(labels(rep) == std::set<std::string>{"K3+K3 (gnt:6,2)", "K4+K1+K1"}, "(6,2) tight " + show(labels(rep)));
    }
  }
  auto big = verify_graph_theorem(9, 2);
  ++runs;
  require_matched(o, big, "(9,2)");
  o.require(big.observed_min == 16, "(9,2) min " + min_text(big));
  o.require(labels(big) == std::set<std::string>{"K5+K4 (gnt:9,2)"}, "(9,2) tight " + show(labels(big)));
  if (o.pass) o.detail = std::to_string(runs) + " campaigns matched; (6,2) {K3+K3, K4+K1+K1}; (9,2) min 16 unique K5+K4";
  return o;
}

Outcome determinism() {
  Outcome o;
  using Campaign = std::function<std::string(RunControl const&)>;
  std::vector<std::pair<std::string, Campaign>> campaigns = {
      {"bound binary (5,2)", [](RunControl const& c) { return to_json(verify_matroid_bound(spec(EnumClass::binary, 5), 2, c)).dump(); }},
      {"bound binary (4,3)", [](RunControl const& c) { return to_json(verify_matroid_bound(spec(EnumClass::binary, 4), 3, c)).dump(); }},
      {"bound rank3 (3,2)", [](RunControl const& c) { return to_json(verify_matroid_bound(spec(EnumClass::rank3, 3, 8), 2, c)).dump(); }},
      {"bound bases (3,2)", [](RunControl const& c) { return to_json(verify_matroid_bound(spec(EnumClass::bases, 3, 7), 2, c)).dump(); }},
      {"lowrank (3,2)", [](RunControl const& c) { return to_json(verify_lowrank(3, 2, 7, c)).dump(); }},
      {"trianglefree (5,1)", [](RunControl const& c) { return to_json(verify_triangle_free(spec(EnumClass::binary, 5), 1, c)).dump(); }},
      {"trianglefree (4,2)", [](RunControl const& c) { return to_json(verify_triangle_free(spec(EnumClass::binary, 4), 2, c)).dump(); }},
      {"graph (8,2)", [](RunControl const& c) { return to_json(verify_graph_theorem(8, 2, c)).dump(); }},
      {"contract", [](RunControl const& c) { return to_json(contract_lemma_property(2000, 7, 6, c)).dump(); }},
  };
  for (auto const& [name, run] : campaigns) {
    std::string reference = run(RunControl(1));
    for (int shards : {2, 4}) o.require(run(RunControl(shards)) == reference, name + " differs with " + std::to_string(shards) + " shards");
    o.require(run(RunControl(1)) == reference, name + " differs on re-run");
  }
  if (o.pass) o.detail = std::to_string(campaigns.size()) + " campaigns byte-identical across re-runs and 1/2/4 shards";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<Outcome()> check;
  };
  std::vector<Criterion> criteria = {
      {1, "size functions", 60, size_functions},
      {2, "no 2-claw base case", 60, one_claw_base},
      {3, "equality structure, binary class", 600, maintech_binary},
      {4, "equality structure, all rank-3 matroids", 60, maintech_rank3},
      {5, "loopless low-rank bound", 300, lowrank},
      {6, "contraction lifts pseudoclaws to claws", 120, contract},
      {7, "triangle-free bound and affine uniqueness", 600, affine},
      {8, "triangle-free conjecture search", 600, conjecture},
      {9, "induced-forest edge bound", 900, graphs},
      {10, "determinism across shards", 600, determinism},
  };
  int failed = 0;
  for (auto const& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (std::exception const& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) o.require(false, "over time limit of " + std::to_string(c.limit_seconds) + " s");
    if (!o.pass) ++failed;
    std::printf("%s criterion %d (%s) [%.2f s]: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
