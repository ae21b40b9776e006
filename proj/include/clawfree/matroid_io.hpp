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
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "clawfree/graph.hpp"
#include "clawfree/matroid.hpp"

namespace clawfree {

// BMATROID r n, then n lines of r bits (most significant coordinate first).
inline std::string serialize_binary(BinaryMatroid const& m) {
  std::string out = "BMATROID " + std::to_string(m.coordinates()) + " " + std::to_string(m.size()) + "\n";
  for (Gf2Vector v : m.columns()) out += column_string(v, m.coordinates()) + "\n";
  return out;
}

// BASES n r, then one line per basis with its sorted element indices.
inline std::string serialize_bases(BasisMatroid const& m) {
  std::string out = "BASES " + std::to_string(m.size()) + " " + std::to_string(m.rank()) + "\n";
  std::vector<Mask> order = m.bases();
  std::sort(order.begin(), order.end(), lex_less);
  for (Mask b : order) {
    std::string line;
    for (int i : to_indices(b)) line += (line.empty() ? "" : " ") + std::to_string(i);
    out += line + "\n";
  }
  return out;
}

inline std::string serialize_matroid(Matroid const& m) {
  return m.is_binary_backend() ? serialize_binary(m.binary()) : serialize_bases(m.bases());
}

namespace detail {

inline std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

inline BinaryMatroid parse_binary_body(int r, int n, std::vector<std::string> const& lines, std::size_t from) {
  if (r < 0 || r > kMaxCoordinates) throw CapacityError("coordinate count out of range");
  check_ground_size(n);
  if (lines.size() < from + n) throw InputError("BMATROID file has fewer columns than declared");
  std::vector<Gf2Vector> cols;
  for (int j = 0; j < n; ++j) {
    std::string const& s = lines[from + j];
    if (static_cast<int>(s.size()) != r) throw InputError("column string length differs from r");
    Gf2Vector v = 0;
    for (int i = 0; i < r; ++i) {
      char c = s[r - 1 - i];
      if (c == '1') v |= Gf2Vector{1} << i;
      else if (c != '0') throw InputError("column strings must be 0/1");
    }
    cols.push_back(v);
  }
  for (std::size_t k = from + n; k < lines.size(); ++k) {
    if (!lines[k].empty()) throw InputError("trailing content after BMATROID columns");
  }
  return BinaryMatroid(r, std::move(cols));
}

inline BasisMatroid parse_bases_body(int n, int r, std::vector<std::string> const& lines, std::size_t from) {
  check_ground_size(n);
  std::vector<Mask> bases;
  std::size_t end = lines.size();
  if (r > 0) {
    while (end > from && lines[end - 1].empty()) --end;
  } else if (end > from + 1) {
    end = from + 1;
  }
  for (std::size_t k = from; k < end; ++k) {
    std::istringstream ls(lines[k]);
    Mask b = 0;
    int e;
    while (ls >> e) {
      if (e < 0 || e >= n) throw InputError("basis element index out of range");
      b |= bit(e);
    }
    if (!ls.eof()) throw InputError("basis lines must hold integers");
    bases.push_back(b);
  }
  if (r == 0 && bases.empty()) bases.push_back(0);
  return BasisMatroid(n, r, std::move(bases));
}

}  // namespace detail

using ParsedObject = std::variant<Matroid, SimpleGraph>;

/// Reads any of the three text formats, dispatching on the header word.
inline ParsedObject parse_object(std::istream& in) {
  auto lines = detail::read_lines(in);
  if (lines.empty()) throw InputError("empty input");
  std::istringstream head(lines[0]);
  std::string tag;
  head >> tag;
  if (tag == "BMATROID") {
    int r = -1, n = -1;
    if (!(head >> r >> n)) throw InputError("expected header 'BMATROID r n'");
    return Matroid(detail::parse_binary_body(r, n, lines, 1));
  }
  if (tag == "BASES") {
    int n = -1, r = -1;
    if (!(head >> n >> r)) throw InputError("expected header 'BASES n r'");
    return Matroid(detail::parse_bases_body(n, r, lines, 1));
  }
  if (tag == "GRAPH") {
    std::string text;
    for (auto const& l : lines) text += l + "\n";
    return parse_graph(text);
  }
  throw InputError("unknown file header '" + tag + "'");
}

inline ParsedObject parse_object(std::string const& text) {
  std::istringstream in(text);
  return parse_object(in);
}

inline Matroid parse_matroid(std::string const& text) {
  auto obj = parse_object(text);
  if (!std::holds_alternative<Matroid>(obj)) throw InputError("expected a matroid file");
  return std::get<Matroid>(obj);
}

inline std::string serialize_object(ParsedObject const& obj) {
  if (auto m = std::get_if<Matroid>(&obj)) return serialize_matroid(*m);
  return serialize_graph(std::get<SimpleGraph>(obj));
}

inline ParsedObject read_object_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_object(in);
}

inline void write_text_file(std::string const& path, std::string const& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

}  // namespace clawfree
