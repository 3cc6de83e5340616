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

#include "dmw/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

namespace dmw {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // False if a and b were already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::vector<std::string> edge_ids(const std::vector<Edge>& edges) {
  std::vector<std::string> ids;
  ids.reserve(edges.size());
  for (const auto& e : edges) ids.push_back(e.id);
  return ids;
}

std::string unused_label(std::string base,
                         const std::unordered_set<std::string>& taken) {
  while (taken.count(base)) base += '\'';
  return base;
}

}  // namespace

Multigraph::Multigraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      ground_(edge_ids(edges_)) {
  if (vertex_count() > kMaxVertices) {
    throw InputError("graphs are limited to " + std::to_string(kMaxVertices) +
                     " vertices");
  }
  std::unordered_set<std::string> seen;
  for (const auto& v : vertices_) {
    if (v.empty()) throw InputError("vertex label must be nonempty");
    if (!seen.insert(v).second) throw InputError("duplicate vertex '" + v + "'");
  }
  for (const auto& e : edges_) {
    if (e.u < 0 || e.u >= vertex_count() || e.v < 0 || e.v >= vertex_count()) {
      throw InputError("edge '" + e.id + "' has an endpoint outside the graph");
    }
  }
}

Multigraph Multigraph::from_labels(
    std::vector<std::string> vertices,
    const std::vector<std::array<std::string, 3>>& edges) {
  auto index = [&](const std::string& label) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i] == label) return static_cast<int>(i);
    }
    throw InputError("edge endpoint '" + label + "' is not a vertex");
  };
  std::vector<Edge> out;
  for (const auto& [id, a, b] : edges) out.push_back(Edge{id, index(a), index(b)});
  return Multigraph(std::move(vertices), std::move(out));
}

bool Multigraph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.u == e.v; });
}

std::uint64_t Multigraph::vertex_support(Subset f) const {
  std::uint64_t support = 0;
  for_each_element(f, [&](int i) {
    support |= (std::uint64_t{1} << edges_[i].u) | (std::uint64_t{1} << edges_[i].v);
  });
  return support;
}

int Multigraph::component_count(Subset f) const {
  DisjointSets sets(vertex_count());
  int components = vertex_count();
  for_each_element(f, [&](int i) {
    if (sets.unite(edges_[i].u, edges_[i].v)) --components;
  });
  return components;
}

bool Multigraph::is_forest(Subset f) const {
  DisjointSets sets(vertex_count());
  bool acyclic = true;
  for_each_element(f, [&](int i) {
    if (!sets.unite(edges_[i].u, edges_[i].v)) acyclic = false;
  });
  return acyclic;
}

Matroid cycle_matroid(const Multigraph& g) {
  const GroundSet& ground = g.edge_ground();
  SubsetBitmap forests(ground.size());
  for (std::uint32_t m = 0; m < ground.subset_count(); ++m) {
    if (g.is_forest(Subset(m))) forests.set(Subset(m));
  }
  return matroid_from_independents(ground, forests);
}

bool is_sparse_23(const Multigraph& g, Subset f) {
  g.edge_ground().require(f);
  // Enumerate the nonempty submasks of f.
  for (std::uint32_t sub = f.mask(); sub != 0; sub = (sub - 1) & f.mask()) {
    const int vertices = std::popcount(g.vertex_support(Subset(sub)));
    if (std::popcount(sub) > 2 * vertices - 3) return false;
  }
  return true;
}

SubsetBitmap sparse_23_bitmap(const Multigraph& g) {
  const GroundSet& ground = g.edge_ground();
  SubsetBitmap sparse(ground.size());
  sparse.set(Subset());
  for (std::uint32_t m = 1; m < ground.subset_count(); ++m) {
    const Subset s(m);
    const int vertices = std::popcount(g.vertex_support(s));
    if (s.size() > 2 * vertices - 3) continue;
    bool closed = true;
    for_each_element(s, [&](int e) {
      if (!sparse.test(s.without(e))) closed = false;
    });
    if (closed) sparse.set(s);
  }
  return sparse;
}

Matroid rigidity_matroid(const Multigraph& g) {
  return matroid_from_independents(g.edge_ground(), sparse_23_bitmap(g));
}

SetFamily rigidity_feasible_family(const Multigraph& g) {
  if (g.has_loops()) throw InputError("rigidity family needs a loopless graph");
  if (!g.is_connected()) throw InputError("rigidity family needs a connected graph");
  const GroundSet& ground = g.edge_ground();
  const SubsetBitmap sparse = sparse_23_bitmap(g);
  std::vector<Subset> members;
  for (std::uint32_t m = 0; m < ground.subset_count(); ++m) {
    const Subset s(m);
    if (sparse.test(s) && g.connects_all(s)) members.push_back(s);
  }
  return SetFamily(ground, std::move(members));
}

ConeResult cone(const Multigraph& g) {
  std::unordered_set<std::string> vertex_labels(g.vertices().begin(),
                                                g.vertices().end());
  std::unordered_set<std::string> edge_labels;
  for (const auto& e : g.edges()) edge_labels.insert(e.id);

  std::vector<std::string> vertices(g.vertices().begin(), g.vertices().end());
  const std::string apex = unused_label("x0", vertex_labels);
  const int apex_index = static_cast<int>(vertices.size());
  vertices.push_back(apex);

  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  Subset cone_edges;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::string id = unused_label(apex + "-" + g.vertices()[v], edge_labels);
    edge_labels.insert(id);
    cone_edges = cone_edges.with(static_cast<int>(edges.size()));
    edges.push_back(Edge{std::move(id), v, apex_index});
  }
  return ConeResult{Multigraph(std::move(vertices), std::move(edges)), cone_edges};
}

ConeQuotientReport verify_cone_quotient(const Multigraph& g) {
  if (!g.is_connected()) throw InputError("cone check needs a connected graph");
  const ConeResult c = cone(g);
  const Matroid coned = rigidity_matroid(c.cone_graph);
  ConeQuotientReport report;
  report.deletion_identity = deletion(coned, c.cone_edges) == rigidity_matroid(g);
  report.contraction_identity =
      contraction(coned, c.cone_edges) == cycle_matroid(g);
  return report;
}

std::vector<std::pair<std::string, Multigraph>> rigidity_corpus() {
  using M = Multigraph;
  return {
      {"triangle", M::from_labels({"1", "2", "3"},
                                  {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "1", "3"}})},
      {"path-p3", M::from_labels({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}})},
      {"k4", M::from_labels({"1", "2", "3", "4"},
                            {{"a", "1", "2"}, {"b", "1", "3"}, {"c", "1", "4"},
                             {"d", "2", "3"}, {"e", "2", "4"}, {"f", "3", "4"}})},
      {"k4-minus-edge",
       M::from_labels({"1", "2", "3", "4"},
                      {{"a", "1", "2"}, {"b", "1", "3"}, {"c", "1", "4"},
                       {"d", "2", "3"}, {"e", "2", "4"}})},
      {"bowtie", M::from_labels({"0", "1", "2", "3", "4"},
                                {{"a", "0", "1"}, {"b", "0", "2"}, {"c", "1", "2"},
                                 {"d", "0", "3"}, {"e", "0", "4"}, {"f", "3", "4"}})},
      {"c5", M::from_labels({"1", "2", "3", "4", "5"},
                            {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "4"},
                             {"d", "4", "5"}, {"e", "5", "1"}})},
      {"square-with-chord",
       M::from_labels({"1", "2", "3", "4"},
                      {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "4"},
                       {"d", "4", "1"}, {"e", "1", "3"}})},
  };
}

}  // namespace dmw
