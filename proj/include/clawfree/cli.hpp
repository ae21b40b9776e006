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
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "clawfree/spool.hpp"
#include "clawfree/verification.hpp"

namespace clawfree::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitIncomplete = 3;
inline constexpr int kExitUsage = 64;

// ---------------------------------------------------------------- logging

enum class LogLevel { error = 0, warn = 1, info = 2, debug = 3 };

inline LogLevel log_level_from_env() {
  const char* v = std::getenv("CLAW_LOG");
  if (!v) return LogLevel::warn;
  std::string s(v);
  if (s == "error" || s == "0") return LogLevel::error;
  if (s == "info" || s == "2") return LogLevel::info;
  if (s == "debug" || s == "3") return LogLevel::debug;
  return LogLevel::warn;
}

class Logger {
 public:
  Logger(std::ostream& sink, LogLevel level) : sink_(&sink), level_(level) {}
  void log(LogLevel at, std::string const& msg) const {
    static const char* names[] = {"error", "warn", "info", "debug"};
    if (at <= level_) *sink_ << "[" << names[static_cast<int>(at)] << "] " << msg << "\n";
  }

 private:
  std::ostream* sink_;
  LogLevel level_;
};

// ---------------------------------------------------------------- formatting

enum class Format { json, table, csv };

inline std::string csv_field(std::string const& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline std::string scalar_text(Json const& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

inline std::string params_text(Json const& params) {
  std::string s;
  for (auto it = params.begin(); it != params.end(); ++it) {
    s += (s.empty() ? "" : " ") + it.key() + "=" + scalar_text(it.value());
  }
  return s;
}

// Aligned "key  value" lines for the scalar members of an object.
inline std::string key_value_table(std::vector<std::pair<std::string, std::string>> const& rows) {
  std::size_t width = 0;
  for (auto const& r : rows) width = std::max(width, r.first.size());
  std::ostringstream out;
  for (auto const& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
  return out.str();
}

inline std::string report_table(ExtremalReport const& rep, bool timing) {
  std::vector<std::pair<std::string, std::string>> rows = {
      {"campaign", rep.campaign},
      {"params", params_text(rep.params)},
      {"threshold", std::to_string(rep.threshold)},
      {"observed_min", rep.observed_min ? std::to_string(*rep.observed_min) : "none"},
      {"matched_prediction", rep.matched_prediction ? "true" : "false"},
      {"verdict", rep.verdict},
      {"complete", rep.complete ? "true" : "false"},
      {"counts_scanned", std::to_string(rep.counts_scanned)},
      {"hypothesis_classes", std::to_string(rep.hypothesis_classes)}};
  if (timing) {
    std::ostringstream t;
    t << std::fixed << std::setprecision(3) << rep.runtime_seconds;
    rows.emplace_back("runtime_seconds", t.str());
  }
  std::string out = key_value_table(rows);
  out += "tight classes (" + std::to_string(rep.tight_classes.size()) + "):\n";
  for (auto const& tc : rep.tight_classes) out += "  " + tc.label + "  size " + std::to_string(tc.size) + "\n";
  for (auto const& n : rep.notes) out += "note: " + n + "\n";
  for (auto const& f : rep.failures) out += "FAILURE: " + f + "\n";
  if (rep.extra.contains("stable_set_check") && rep.extra["stable_set_check"]["applicable"].get<bool>()) {
    auto const& s = rep.extra["stable_set_check"];
    out += "stable-set check: threshold " + s["threshold"].dump() + ", observed_min " + s["observed_min"].dump() + "\n";
  }
  return out;
}

inline std::string report_csv(ExtremalReport const& rep, bool timing) {
  std::string labels;
  for (auto const& tc : rep.tight_classes) labels += (labels.empty() ? "" : ";") + tc.label;
  std::string head = "campaign,params,threshold,observed_min,matched_prediction,verdict,complete,counts_scanned,tight_classes";
  std::string row = csv_field(rep.campaign) + "," + csv_field(params_text(rep.params)) + "," +
                    std::to_string(rep.threshold) + "," +
                    (rep.observed_min ? std::to_string(*rep.observed_min) : "") + "," +
                    (rep.matched_prediction ? "true" : "false") + "," + rep.verdict + "," +
                    (rep.complete ? "true" : "false") + "," + std::to_string(rep.counts_scanned) + "," +
                    csv_field(labels);
  if (timing) {
    head += ",runtime_seconds";
    row += "," + std::to_string(rep.runtime_seconds);
  }
  return head + "\n" + row + "\n";
}

inline std::string render(ExtremalReport const& rep, Format f, bool timing) {
  switch (f) {
    case Format::json: return to_json(rep, timing).dump(2) + "\n";
    case Format::table: return report_table(rep, timing);
    case Format::csv: return report_csv(rep, timing);
  }
  return "";
}

inline std::string render(PropertyReport const& rep, Format f, bool timing) {
  Json j = to_json(rep, timing);
  if (f == Format::json) return j.dump(2) + "\n";
  if (f == Format::csv) {
    return "property,seed,trials,exhaustive_matroids,pairs_checked,pseudoclaws_checked,violations,verdict\n" +
           rep.property + "," + std::to_string(rep.seed) + "," + std::to_string(rep.trials) + "," +
           std::to_string(rep.exhaustive_matroids) + "," + std::to_string(rep.pairs_checked) + "," +
           std::to_string(rep.pseudoclaws_checked) + "," + std::to_string(rep.failures.size()) + "," +
           j["verdict"].get<std::string>() + "\n";
  }
  std::vector<std::pair<std::string, std::string>> rows;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() != "failures") rows.emplace_back(it.key(), scalar_text(it.value()));
  }
  std::string out = key_value_table(rows);
  for (auto const& f2 : rep.failures) out += "FAILURE: " + f2.dump() + "\n";
  return out;
}

// ---------------------------------------------------------------- commands

struct Common {
  std::string format = "json";
  std::string out;
  std::string artifact_dir = "artifacts";
  int shards = 0;
  std::optional<double> budget_seconds;
  bool timing = false;

  Format fmt() const { return format == "table" ? Format::table : format == "csv" ? Format::csv : Format::json; }
  RunControl control() const { return RunControl(shards, budget_seconds); }
};

// Writes to --out when given, else to the stream.
inline void emit_text(Common const& common, std::ostream& out, Logger const& log, std::string const& text) {
  if (common.out.empty()) {
    out << text;
  } else {
    write_text_file(common.out, text);
    log.log(LogLevel::info, "wrote " + common.out);
  }
}

// <artifact_dir>/<campaign>-counterexample-<i>.txt, one file per counterexample.
inline std::vector<std::string> write_artifacts(Common const& common, Logger const& log, std::string const& campaign,
                                                std::vector<Artifact> const& arts) {
  std::vector<std::string> paths;
  if (arts.empty()) return paths;
  std::filesystem::create_directories(common.artifact_dir);
  for (std::size_t i = 0; i < arts.size(); ++i) {
    auto path = std::filesystem::path(common.artifact_dir) /
                (campaign + "-counterexample-" + std::to_string(i + 1) + ".txt");
    write_text_file(path.string(), arts[i].text);
    log.log(LogLevel::error, "counterexample (" + arts[i].label + ") written to " + path.string());
    paths.push_back(path.string());
  }
  return paths;
}

/// Renders the report, writes its counterexample files, logs failures and
/// notes, and returns the process exit code.
inline int publish(ExtremalReport const& rep, Common const& common, std::ostream& out, Logger const& log) {
  emit_text(common, out, log, render(rep, common.fmt(), common.timing));
  write_artifacts(common, log, rep.campaign, rep.counterexamples);
  for (auto const& f : rep.failures) log.log(LogLevel::error, f);
  for (auto const& n : rep.notes) log.log(LogLevel::warn, n);
  if (!rep.complete) log.log(LogLevel::warn, "coverage incomplete");
  log.log(LogLevel::info, rep.campaign + " finished in " + std::to_string(rep.runtime_seconds) + " s");
  return exit_code(rep);
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err), log_(err, log_level_from_env()) {}

  int run(std::vector<std::string> args);

 private:
  void emit(std::string const& text) { emit_text(common_, out_, log_, text); }

  int finish(ExtremalReport const& rep) { return publish(rep, common_, out_, log_); }

  int construct();
  int analyze();
  int tables(std::string const& which);
  int enumerate();

  std::ostream& out_;
  std::ostream& err_;
  Logger log_;
  Common common_;

  // construct / analyze
  std::string family_, in_;
  bool claws_ = false, lines_ = false;
  // campaigns
  std::string cls_;
  int r_ = 0, t_ = 0, n_ = 0;
  std::optional<int> size_bound_;
  int n_max_ = 8;
  long trials_ = 10000;
  std::uint64_t seed_ = 1;
  int exhaustive_n_ = 7;
  // tables
  int r_max_ = 10, t_max_ = 4;
  // enumerate
  bool loopless_ = false;
  std::optional<int> edges_;
  std::string out_dir_ = ".";
};

inline void add_common(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "Report format")
      ->check(CLI::IsMember({"json", "table", "csv"}))
      ->capture_default_str();
  app->add_option("--out", c.out, "Write the output to this file instead of stdout");
  app->add_option("--artifact-dir", c.artifact_dir, "Directory for counterexample files")->capture_default_str();
  app->add_option("--shards", c.shards, "Worker threads (0 = available parallelism)")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--budget-seconds", c.budget_seconds, "Stop after this long and report incomplete coverage")
      ->check(CLI::PositiveNumber);
  app->add_flag("--timing", c.timing, "Include wall-clock runtime in reports");
}

inline int Runner::construct() {
  Construction obj = build_family(parse_family(family_));
  std::string text = std::visit([](auto const& x) { return serialize_object(ParsedObject(x)); }, obj);
  emit(text);
  return kExitOk;
}

inline int Runner::analyze() {
  ParsedObject obj = read_object_file(in_);
  bool want_claws = claws_ || !lines_;
  bool want_lines = lines_ || !claws_;
  Json j;
  if (auto const* g = std::get_if<SimpleGraph>(&obj)) {
    j["kind"] = "graph";
    j["n"] = g->order();
    j["edges"] = g->edge_count();
    j["max_stable_set"] = max_stable_set(*g);
    int forest = 0;
    while (forest < g->order() && has_induced_forest(*g, forest + 1)) ++forest;
    j["largest_induced_forest"] = forest;
    j["canon"] = canon_graph(*g);
  } else {
    Matroid const& m = std::get<Matroid>(obj);
    j["kind"] = "matroid";
    j["backend"] = m.is_binary_backend() ? "binary" : "bases";
    j["n"] = m.size();
    j["rank"] = m.rank();
    bool simple = is_simple(m);
    j["simple"] = simple;
    auto v = validate(m);
    j["valid"] = v.valid;
    j["violations"] = v.violations;
    if (want_claws) j["claws"] = to_json(max_claw(m));
    if (want_lines) j["lines"] = simple ? to_json(line_profile(m)) : Json(nullptr);
  }
  switch (common_.fmt()) {
    case Format::json: emit(j.dump(2) + "\n"); break;
    case Format::csv: {
      std::string head, row;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (it->is_structured()) continue;
        head += (head.empty() ? "" : ",") + it.key();
        row += (row.empty() ? "" : ",") + csv_field(scalar_text(it.value()));
      }
      if (j.contains("claws")) {
        head += ",max_claw_size";
        row += "," + j["claws"]["max_claw_size"].dump();
      }
      emit(head + "\n" + row + "\n");
      break;
    }
    case Format::table: {
      std::vector<std::pair<std::string, std::string>> rows;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (it->is_structured()) continue;
        rows.emplace_back(it.key(), scalar_text(it.value()));
      }
      if (j.contains("claws")) {
        rows.emplace_back("max_claw_size", j["claws"]["max_claw_size"].dump());
        rows.emplace_back("claw_counts", j["claws"]["counts_by_size"].dump());
        rows.emplace_back("claw_witnesses", std::to_string(j["claws"]["witnesses"].size()));
      }
      if (j.contains("lines") && !j["lines"].is_null()) {
        rows.emplace_back("line_counts", j["lines"]["counts"].dump());
        rows.emplace_back("triangle_free", j["lines"]["triangle_free"].dump());
      }
      emit(key_value_table(rows));
      break;
    }
  }
  return kExitOk;
}

inline int Runner::tables(std::string const& which) {
  bool is_f = which == "f";
  if (r_max_ < 0 || t_max_ < 1) throw InputError("table ranges need max >= 0 and t-max >= 1");
  std::string row_name = is_f ? "r" : "n";
  Json j;
  j["function"] = which;
  j[row_name + "_max"] = r_max_;
  j["t_max"] = t_max_;
  Json values = Json::array();
  std::vector<std::vector<std::int64_t>> grid(r_max_ + 1);
  for (int a = 0; a <= r_max_; ++a) {
    for (int t = 1; t <= t_max_; ++t) {
      std::int64_t v = is_f ? f_value(a, t) : g_value(a, t);
      grid[a].push_back(v);
      values.push_back(Json{{row_name, a}, {"t", t}, {"value", v}});
    }
  }
  j["values"] = values;
  switch (common_.fmt()) {
    case Format::json: emit(j.dump(2) + "\n"); break;
    case Format::csv: {
      std::string s = row_name + ",t,value\n";
      for (int a = 0; a <= r_max_; ++a)
        for (int t = 1; t <= t_max_; ++t) s += std::to_string(a) + "," + std::to_string(t) + "," + std::to_string(grid[a][t - 1]) + "\n";
      emit(s);
      break;
    }
    case Format::table: {
      std::size_t w = 3;
      for (auto const& row : grid)
        for (auto v : row) w = std::max(w, std::to_string(v).size() + 1);
      std::ostringstream s;
      s << std::setw(4) << (row_name + "\\t");
      for (int t = 1; t <= t_max_; ++t) s << std::setw(static_cast<int>(w) + 1) << t;
      s << "\n";
      for (int a = 0; a <= r_max_; ++a) {
        s << std::setw(4) << a;
        for (auto v : grid[a]) s << std::setw(static_cast<int>(w) + 1) << v;
        s << "\n";
      }
      emit(s.str());
      break;
    }
  }
  return kExitOk;
}

inline int Runner::enumerate() {
  RunControl ctl = common_.control();
  std::vector<ParsedObject> objects;
  std::vector<std::string> canons;
  Json manifest;
  manifest["class"] = cls_;
  bool complete = true;
  std::string stem;
  if (cls_ == "graph") {
    GraphEnumOptions opt;
    opt.max_edges = edges_;
    auto res = enumerate_graphs_ex(n_, opt, ctl);
    complete = res.complete;
    for (auto& gc : res.graphs) objects.emplace_back(gc.graph);
    manifest["n"] = n_;
    manifest["max_edges"] = edges_ ? Json(*edges_) : Json(nullptr);
    stem = "graphs-n" + std::to_string(n_);
  } else {
    EnumClass c = parse_enum_class(cls_);
    std::vector<MatroidClass> found;
    manifest["r"] = r_;
    if (c == EnumClass::binary) {
      int bound = size_bound_.value_or((1 << std::min(r_, kMaxBinaryEnumRank)) - 1);
      try {
        found = enumerate_binary_matroids(r_, bound, ctl);
      } catch (CapacityError const&) {
        if (!ctl.expired()) throw;
        complete = false;
      }
      manifest["size_bound"] = bound;
      stem = "binary-r" + std::to_string(r_);
    } else if (c == EnumClass::rank3) {
      auto res = enumerate_rank3_ex(n_, ctl);
      complete = res.complete;
      found = std::move(res.matroids);
      manifest["r"] = 3;
      manifest["n"] = n_;
      stem = "rank3-n" + std::to_string(n_);
    } else {
      auto res = enumerate_basis_ex(n_, r_, loopless_ ? BasisFilter::loopless : BasisFilter::all, ctl);
      complete = res.complete;
      found = std::move(res.matroids);
      manifest["n"] = n_;
      manifest["loopless_only"] = loopless_;
      stem = "bases-n" + std::to_string(n_) + "-r" + std::to_string(r_);
    }
    for (auto& mc : found) objects.emplace_back(mc.matroid);
  }
  manifest["complete"] = complete;
  auto paths = write_spool(out_dir_, stem, objects, manifest);
  Json summary = Json{{"records", paths.records}, {"manifest", paths.manifest}, {"count", objects.size()},
                      {"complete", complete}};
  if (common_.fmt() == Format::json) emit(summary.dump(2) + "\n");
  else emit(key_value_table({{"records", paths.records}, {"manifest", paths.manifest},
                             {"count", std::to_string(objects.size())}, {"complete", complete ? "true" : "false"}}));
  return complete ? kExitOk : kExitIncomplete;
}

inline int Runner::run(std::vector<std::string> args) {
  CLI::App app{"Claw-free matroid and graph toolkit"};
  app.name("clawfree");
  app.require_subcommand(1);
  app.fallthrough();

  auto* construct = app.add_subcommand("construct", "Build a named matroid or graph and write it in text form");
  construct->add_option("--family", family_, "pg:R, ag:R, mrt:R,T, free:N, circuit:K, cc:K1,K2+C, gnt:N,T")->required();
  add_common(construct, common_);

  auto* analyze = app.add_subcommand("analyze", "Report claws and lines of a matroid file, or graph statistics");
  analyze->add_option("--in", in_, "Input file")->required();
  analyze->add_flag("--claws", claws_, "Claw report");
  analyze->add_flag("--lines", lines_, "Line profile");
  add_common(analyze, common_);

  auto* verify = app.add_subcommand("verify", "Run an extremal verification campaign");
  verify->require_subcommand(1);
  auto* bound = verify->add_subcommand("bound", "Minimum size with no (t+1)-claw against f(r,t)");
  bound->add_option("--class", cls_, "binary, rank3 or bases")->required();
  bound->add_option("--r", r_, "Rank")->required();
  bound->add_option("--t", t_, "Claw parameter")->required();
  bound->add_option("--size-bound,--n-max", size_bound_, "Largest ground set scanned");
  add_common(bound, common_);
  auto* lowrank = verify->add_subcommand("lowrank", "Loopless minimum against 2r - t");
  lowrank->add_option("--r", r_, "Rank")->required();
  lowrank->add_option("--t", t_, "Claw parameter")->required();
  lowrank->add_option("--n-max", n_max_, "Largest ground set scanned")->capture_default_str();
  add_common(lowrank, common_);
  auto* graph = verify->add_subcommand("graph", "Induced-forest-free edge minimum against g(n,t)");
  graph->add_option("--n", n_, "Vertices")->required();
  graph->add_option("--t", t_, "Forest parameter")->required();
  add_common(graph, common_);
  auto* tri = verify->add_subcommand("trianglefree", "Triangle-free minimum (t = 1) or counterexample search (t >= 2)");
  tri->add_option("--r", r_, "Rank")->required();
  tri->add_option("--t", t_, "Claw parameter")->required();
  tri->add_option("--class", cls_, "binary, rank3 or bases (default rank3 for r = 3, binary otherwise)");
  tri->add_option("--size-bound,--size-cap", size_bound_, "Largest ground set scanned");
  add_common(tri, common_);

  auto* property = app.add_subcommand("property", "Randomised and exhaustive property checks");
  property->require_subcommand(1);
  auto* contract = property->add_subcommand("contract", "Lifted claws of si(M/X) are claws of M");
  contract->add_option("--trials", trials_, "Random trials")->capture_default_str()->check(CLI::NonNegativeNumber);
  contract->add_option("--seed", seed_, "Random seed")->capture_default_str();
  contract->add_option("--exhaustive-n", exhaustive_n_, "Exhaustive sweep up to this many elements")
      ->capture_default_str()
      ->check(CLI::Range(0, kMaxBasisEnumElements));
  add_common(contract, common_);

  auto* tables = app.add_subcommand("tables", "Print f(r,t) or g(n,t)");
  tables->require_subcommand(1);
  auto* tf = tables->add_subcommand("f", "f(r,t)");
  tf->add_option("--r-max", r_max_, "Largest r")->capture_default_str();
  tf->add_option("--t-max", t_max_, "Largest t")->capture_default_str();
  add_common(tf, common_);
  auto* tg = tables->add_subcommand("g", "g(n,t)");
  tg->add_option("--n-max,--r-max", r_max_, "Largest n")->capture_default_str();
  tg->add_option("--t-max", t_max_, "Largest t")->capture_default_str();
  add_common(tg, common_);

  auto* en = app.add_subcommand("enumerate", "Spool one isomorphism class representative per record");
  en->add_option("--class", cls_, "binary, rank3, bases or graph")
      ->required()
      ->check(CLI::IsMember({"binary", "rank3", "bases", "graph"}));
  en->add_option("--r", r_, "Rank (binary, bases)");
  en->add_option("--n", n_, "Ground set or vertex count (rank3, bases, graph)");
  en->add_option("--size-bound", size_bound_, "Largest ground set (binary)");
  en->add_option("--max-edges", edges_, "Edge bound (graph)");
  en->add_flag("--loopless", loopless_, "Loopless matroids only (bases)");
  en->add_option("--out-dir", out_dir_, "Directory for the spool and manifest")->capture_default_str();
  add_common(en, common_);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (CLI::ParseError const& e) {
    if (e.get_exit_code() == 0) {
      out_ << app.help();
      return kExitOk;
    }
    err_ << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*construct) return this->construct();
    if (*analyze) return this->analyze();
    if (*bound) {
      EnumSpec spec{parse_enum_class(cls_), r_, size_bound_, true};
      log_.log(LogLevel::info, "bound campaign: class " + cls_ + " r=" + std::to_string(r_) + " t=" + std::to_string(t_));
      return finish(verify_matroid_bound(spec, t_, common_.control()));
    }
    if (*lowrank) return finish(verify_lowrank(r_, t_, n_max_, common_.control()));
    if (*graph) return finish(verify_graph_theorem(n_, t_, common_.control()));
    if (*tri) {
      EnumClass c = cls_.empty() ? (r_ == 3 ? EnumClass::rank3 : EnumClass::binary) : parse_enum_class(cls_);
      return finish(verify_triangle_free(EnumSpec{c, r_, size_bound_, true}, t_, common_.control()));
    }
    if (*contract) {
      auto rep = contract_lemma_property(trials_, seed_, exhaustive_n_, common_.control());
      emit(render(rep, common_.fmt(), common_.timing));
      for (auto const& f : rep.failures) log_.log(LogLevel::error, "violation: " + f.dump());
      return exit_code(rep);
    }
    if (*tf) return this->tables("f");
    if (*tg) return this->tables("g");
    if (*en) return this->enumerate();
  } catch (CapacityError const& e) {
    err_ << "capacity: " << e.what() << "\n";
    return kExitIncomplete;
  } catch (InputError const& e) {
    err_ << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (std::exception const& e) {
    err_ << "error: " << e.what() << "\n";
    return 1;
  }
  err_ << app.help();
  return kExitUsage;
}

inline int run(std::vector<std::string> args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  Runner r(out, err);
  return r.run(std::move(args));
}

inline int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(std::move(args));
}

}  // namespace clawfree::cli
