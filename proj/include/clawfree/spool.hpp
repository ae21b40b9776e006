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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "clawfree/matroid_io.hpp"
#include "clawfree/report_json.hpp"

namespace clawfree {

inline constexpr const char* kGeneratorVersion = "clawfree-enum 1";

/// Records separated by blank lines, each in its own file format, next to
/// `<stem>.manifest.json`.
struct SpoolPaths {
  std::string records;
  std::string manifest;
};

inline SpoolPaths write_spool(std::string const& dir, std::string const& stem,
                              std::vector<ParsedObject> const& objects, Json manifest) {
  std::filesystem::create_directories(dir);
  SpoolPaths paths{(std::filesystem::path(dir) / (stem + ".txt")).string(),
                   (std::filesystem::path(dir) / (stem + ".manifest.json")).string()};
  std::string body;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (i) body += "\n";
    body += serialize_object(objects[i]);
  }
  write_text_file(paths.records, body);
  manifest["count"] = objects.size();
  manifest["generator"] = kGeneratorVersion;
  manifest["records"] = std::filesystem::path(paths.records).filename().string();
  write_text_file(paths.manifest, manifest.dump(2) + "\n");
  return paths;
}

// Records start at a header line. Blank lines can belong to a record (a
// rank-0 basis, a zero-coordinate column, a graph on at most one vertex), so
// each parser sees its trailing separator and ignores it.
inline std::vector<ParsedObject> read_spool(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::vector<ParsedObject> out;
  std::string line, block;
  auto is_header = [](std::string const& l) {
    return l.rfind("BMATROID ", 0) == 0 || l.rfind("BASES ", 0) == 0 || l.rfind("GRAPH ", 0) == 0;
  };
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_header(line) && !block.empty()) {
      out.push_back(parse_object(block));
      block.clear();
    }
    if (block.empty() && !is_header(line)) {
      if (line.empty()) continue;
      throw InputError("spool record does not start with a header");
    }
    block += line + "\n";
  }
  if (!block.empty()) out.push_back(parse_object(block));
  return out;
}

}  // namespace clawfree
