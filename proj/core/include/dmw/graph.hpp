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

#ifndef DMW_GRAPH_HPP_
#define DMW_GRAPH_HPP_

// Graphic matroids, 2D generic rigidity via (2,3)-sparsity counts, the
// rigidity Δ-matroid and the cone construction.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dmw/delta.hpp"
#include "dmw/matroid.hpp"
#include "dmw/sets.hpp"

namespace dmw {

inline constexpr int kMaxVertices = 64;

struct Edge {
  std::string id;
  int u = 0;
  int v = 0;
};

// Labeled vertices and labeled edges; loops and parallel edges allowed. The
// edge ids, in order, form the ground set of the graph's matroids.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(std::vector<std::string> vertices, std::vector<Edge> edges);

  // Edges given as {id, endpoint label, endpoint label}.
  static Multigraph from_labels(
      std::vector<std::string> vertices,
      const std::vector<std::array<std::string, 3>>& edges);

  std::span<const std::string> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const GroundSet& edge_ground() const { return ground_; }

  bool has_loops() const;
  // Bit mask of the endpoints of the edges in f.
  std::uint64_t vertex_support(Subset f) const;
  // Components of (V, f), isolated vertices included.
  int component_count(Subset f) const;
  // True iff (V, f) is connected and spans every vertex.
  bool connects_all(Subset f) const { return component_count(f) <= 1; }
  bool is_connected() const { return connects_all(ground_.full()); }
  bool is_forest(Subset f) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  GroundSet ground_;
};

// Forests are independent.
Matroid cycle_matroid(const Multigraph& g);

// |F'| <= 2|V(F')| - 3 for every nonempty F' within f, checked over all
// subsets of f.
bool is_sparse_23(const Multigraph& g, Subset f);
// The same predicate for every edge subset at once.
SubsetBitmap sparse_23_bitmap(const Multigraph& g);

// 2D generic rigidity matroid: (2,3)-sparse edge sets are independent.
Matroid rigidity_matroid(const Multigraph& g);

// Edge sets that contain a spanning tree and are not overbraced. Requires a
// connected, loopless graph (InputError otherwise).
SetFamily rigidity_feasible_family(const Multigraph& g);

struct ConeResult {
  Multigraph cone_graph;
  // The new edges; they follow the original edges in the ground order.
  Subset cone_edges;
};

// Adds an apex vertex joined to every vertex. The apex is labeled "x0" and
// its edges "x0-<v>", primed as needed to avoid clashes.
ConeResult cone(const Multigraph& g);

struct ConeQuotientReport {
  bool deletion_identity = false;     // M_r(G) = M_r(G_c) \ X
  bool contraction_identity = false;  // M_c(G) = M_r(G_c) / X
  bool holds() const { return deletion_identity && contraction_identity; }
};

// Requires a connected graph (InputError otherwise).
ConeQuotientReport verify_cone_quotient(const Multigraph& g);

// Fixed graphs used by the rigidity suites, each with at most 8 edges.
std::vector<std::pair<std::string, Multigraph>> rigidity_corpus();

}  // namespace dmw

#endif  // DMW_GRAPH_HPP_
