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

#include "dmw/io.hpp"

#include <fstream>
#include <sstream>

namespace dmw {

namespace {

std::string label_from_json(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InputError("labels must be strings or integers, got " + j.dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

Subset subset_from_json(const GroundSet& ground, const Json& j) {
  if (!j.is_array()) throw InputError("a set must be a JSON array, got " + j.dump());
  std::vector<std::string> labels;
  for (const auto& l : j) labels.push_back(label_from_json(l));
  return ground.subset(labels);
}

}  // namespace

Json subset_to_json(const GroundSet& ground, Subset s) {
  Json out = Json::array();
  for (auto& l : ground.labels_of(s)) out.push_back(std::move(l));
  return out;
}

Json family_to_json(const SetFamily& family, const char* key) {
  Json members = Json::array();
  for (Subset s : family) members.push_back(subset_to_json(family.ground(), s));
  Json out = Json::object();
  out["ground"] = Json(std::vector<std::string>(family.ground().labels().begin(),
                                                family.ground().labels().end()));
  out[key] = std::move(members);
  return out;
}

Json matroid_to_json(const Matroid& m) { return family_to_json(m.bases(), "bases"); }

Json delta_to_json(const DeltaMatroid& d) {
  return family_to_json(d.feasibles(), "feasibles");
}

Json graph_to_json(const Multigraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    Json edge = Json::object();
    edge["id"] = e.id;
    edge["ends"] = Json::array({g.vertices()[e.u], g.vertices()[e.v]});
    edges.push_back(std::move(edge));
  }
  Json out = Json::object();
  out["vertices"] =
      Json(std::vector<std::string>(g.vertices().begin(), g.vertices().end()));
  out["edges"] = std::move(edges);
  return out;
}

Json violation_to_json(const GroundSet& ground, const ExchangeViolation& v) {
  Json out = Json::object();
  out["axiom"] = v.axiom == Axiom::kBasisExchange ? "MB" : "DF";
  out["first"] = subset_to_json(ground, v.first);
  out["second"] = subset_to_json(ground, v.second);
  out["pivot"] = ground.label(v.pivot);
  return out;
}

Json pairability_to_json(const GroundSet& ground, const PairabilityReport& r) {
  Json out = Json::object();
  out["pairable"] = r.pairable;
  out["offending_circuit"] =
      r.offending_circuit ? subset_to_json(ground, *r.offending_circuit) : Json();
  return out;
}

GroundSet ground_from_json(const Json& labels) {
  if (!labels.is_array()) throw InputError("'ground' must be an array");
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back(label_from_json(l));
  return GroundSet(std::move(out));
}

SetFamily family_from_json(const Json& j, const char* key) {
  GroundSet ground = ground_from_json(field(j, "ground"));
  const Json& members = field(j, key);
  if (!members.is_array()) throw InputError(std::string("'") + key + "' must be an array");
  std::vector<Subset> subsets;
  for (const auto& m : members) subsets.push_back(subset_from_json(ground, m));
  return SetFamily(std::move(ground), std::move(subsets));
}

Multigraph graph_from_json(const Json& j) {
  const Json& vs = field(j, "vertices");
  if (!vs.is_array()) throw InputError("'vertices' must be an array");
  std::vector<std::string> vertices;
  for (const auto& v : vs) vertices.push_back(label_from_json(v));
  const Json& es = field(j, "edges");
  if (!es.is_array()) throw InputError("'edges' must be an array");
  std::vector<std::array<std::string, 3>> edges;
  for (const auto& e : es) {
    const Json& ends = field(e, "ends");
    if (!ends.is_array() || ends.size() != 2) {
      throw InputError("edge 'ends' must list exactly two vertices");
    }
    edges.push_back({label_from_json(field(e, "id")), label_from_json(ends[0]),
                     label_from_json(ends[1])});
  }
  return Multigraph::from_labels(std::move(vertices), edges);
}

Matroid matroid_from_json(const Json& j) {
  return certify_matroid(family_from_json(j, "bases"));
}

DeltaMatroid delta_from_json(const Json& j) {
  return certify_delta(family_from_json(j, "feasibles"));
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace dmw
