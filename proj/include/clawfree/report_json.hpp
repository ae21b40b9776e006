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

#include <string>
#include <vector>

#include "clawfree/claws.hpp"
#include "json.hpp"

namespace clawfree {

using Json = nlohmann::ordered_json;

inline Json subset_json(Mask s) {
  Json a = Json::array();
  for (int e : to_indices(s)) a.push_back(e);
  return a;
}

inline Json to_json(ClawReport const& rep) {
  Json j;
  j["max_claw_size"] = rep.max_claw_size;
  Json counts = Json::object();
  for (auto const& [k, c] : rep.counts_by_size) counts[std::to_string(k)] = c;
  j["counts_by_size"] = counts;
  Json w = Json::array();
  for (auto const& s : rep.witnesses) w.push_back(subset_json(s.bits()));
  j["witnesses"] = w;
  j["truncated"] = rep.truncated;
  return j;
}

inline Json to_json(LineProfile const& lp) {
  Json j;
  Json counts = Json::object();
  for (auto const& [k, c] : lp.counts) counts[std::to_string(k)] = c;
  j["counts"] = counts;
  j["triangles_through"] = lp.triangles_through;
  j["triangle_free"] = lp.triangle_free();
  return j;
}

}  // namespace clawfree
