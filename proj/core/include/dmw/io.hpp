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

#ifndef DMW_IO_HPP_
#define DMW_IO_HPP_

// JSON file formats:
//   matroid        {"ground": [labels], "bases": [[labels], ...]}
//   delta-matroid  {"ground": [labels], "feasibles": [[labels], ...]}
//   graph          {"vertices": [labels],
//                   "edges": [{"id": label, "ends": [v1, v2]}, ...]}
// Writers emit members in ascending mask order and labels in ground order,
// so output is byte-stable and re-reads to the same value.

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "dmw/delta.hpp"
#include "dmw/graph.hpp"
#include "dmw/matroid.hpp"
#include "dmw/sets.hpp"

namespace dmw {

using Json = nlohmann::ordered_json;

Json subset_to_json(const GroundSet& ground, Subset s);
Json family_to_json(const SetFamily& family, const char* key);
Json matroid_to_json(const Matroid& m);
Json delta_to_json(const DeltaMatroid& d);
Json graph_to_json(const Multigraph& g);
Json violation_to_json(const GroundSet& ground, const ExchangeViolation& v);
Json pairability_to_json(const GroundSet& ground, const PairabilityReport& r);

// Parsing only; throws InputError on malformed input.
GroundSet ground_from_json(const Json& labels);
SetFamily family_from_json(const Json& j, const char* key);
Multigraph graph_from_json(const Json& j);

// Parse and certify; non-(MB)/(ΔF) input throws CertificationError.
Matroid matroid_from_json(const Json& j);
DeltaMatroid delta_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
// Two-space indentation with a trailing newline.
std::string dump(const Json& j);

}  // namespace dmw

#endif  // DMW_IO_HPP_
