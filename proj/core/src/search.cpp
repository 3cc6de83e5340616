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

#include "dmw/search.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

#include "dmw/parallel.hpp"

namespace dmw {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::array<std::string_view, 8> kPropertyIds = {
    "mb-equicardinal",         "independents-are-delta",
    "spanning-are-delta",      "uplow",
    "necessity-circuit-union", "sufficiency-sandwich",
    "dual-exchange",           "fmax-maximal",
};

void require_size(int n, int max, const char* what) {
  if (n < 0 || n > max) {
    throw InputError(std::string(what) + " supports ground sets of 0.." +
                     std::to_string(max) + " elements, got " + std::to_string(n));
  }
}

Json failure(const char* key, Json structure, std::string reason) {
  Json out = Json::object();
  out[key] = std::move(structure);
  out["reason"] = std::move(reason);
  return out;
}

// Flattens per-chunk witness lists, keeping the first kMaxWitnesses.
std::size_t merge_witnesses(std::vector<std::vector<Json>>& chunks,
                            std::vector<Json>& out) {
  std::size_t total = 0;
  for (auto& chunk : chunks) {
    total += chunk.size();
    for (auto& w : chunk) {
      if (out.size() < kMaxWitnesses) out.push_back(std::move(w));
    }
  }
  return total;
}

template <typename Item, typename Check>
void run_universal(SearchReport& report, const std::vector<Item>& items,
                   unsigned workers, Check check) {
  auto chunks = parallel_chunks(
      0, items.size(), workers, [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<Json> failures;
        for (std::uint64_t i = lo; i < hi; ++i) {
          if (auto w = check(items[i])) failures.push_back(std::move(*w));
        }
        return failures;
      });
  report.universe_size = items.size();
  report.holds = merge_witnesses(chunks, report.witnesses) == 0;
}

// Basis family of a matroid in code form with its closures and circuits.
struct CodedMatroid {
  FamilyCode bases = 0;
  FamilyCode independent = 0;
  FamilyCode spanning = 0;
  std::vector<std::uint32_t> circuits;
};

CodedMatroid code_matroid(FamilyCode bases, int n) {
  CodedMatroid m;
  m.bases = bases;
  m.independent = code_down_closure(bases, n);
  m.spanning = code_up_closure(bases, n);
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    if (code_has(m.independent, s)) continue;
    bool minimal = true;
    for (std::uint32_t es = s; es != 0 && minimal; es &= es - 1) {
      minimal = code_has(m.independent, s ^ (es & -es));
    }
    if (minimal) m.circuits.push_back(s);
  }
  return m;
}

// Smallest upper circuit (ties by mask) that is not a union of lower circuits.
std::optional<std::uint32_t> coded_offending(const CodedMatroid& upper,
                                             const CodedMatroid& lower) {
  std::optional<std::uint32_t> best;
  for (std::uint32_t c : upper.circuits) {
    std::uint32_t covered = 0;
    for (std::uint32_t d : lower.circuits) {
      if ((d & ~c) == 0) covered |= d;
    }
    if (covered == c) continue;
    if (!best || std::popcount(c) < std::popcount(*best)) best = c;
  }
  return best;
}

std::vector<Subset> members_of(FamilyCode fam) {
  std::vector<Subset> out;
  for (FamilyCode m = fam; m != 0; m &= m - 1) {
    out.emplace_back(static_cast<std::uint32_t>(std::countr_zero(m)));
  }
  return out;
}

template <typename InPool>
std::optional<ExchangeViolation> forced_failure(std::span<const Subset> upper_bases,
                                                std::span<const Subset> lower_bases,
                                                InPool in_pool) {
  const std::array<std::pair<std::span<const Subset>, std::span<const Subset>>, 4>
      orders = {{{upper_bases, lower_bases},
                 {lower_bases, upper_bases},
                 {upper_bases, upper_bases},
                 {lower_bases, lower_bases}}};
  for (const auto& [firsts, seconds] : orders) {
    for (Subset first : firsts) {
      for (Subset second : seconds) {
        const Subset diff = first ^ second;
        for (int x = 0; x < 32; ++x) {
          if (!diff.contains(x)) continue;
          bool escapes = true;
          for_each_element(diff, [&](int y) {
            const Subset moved = y == x ? first ^ Subset::singleton(x)
                                        : first ^ Subset::pair(x, y);
            if (in_pool(moved)) escapes = false;
          });
          if (escapes) {
            return ExchangeViolation{Axiom::kSymmetricExchange, first, second, x};
          }
        }
      }
    }
  }
  return std::nullopt;
}

RealizationSearch exhaust_coded(FamilyCode upper_bases, FamilyCode lower_bases,
                                FamilyCode sandwich, int n) {
  const FamilyCode forced = upper_bases | lower_bases;
  const FamilyCode free = sandwich & ~forced;
  RealizationSearch result;
  for (FamilyCode sub = free;; sub = (sub - 1) & free) {
    const FamilyCode fam = forced | sub;
    ++result.candidates;
    if (code_max_cardinality(fam, n) == upper_bases &&
        code_min_cardinality(fam, n) == lower_bases &&
        code_symmetric_exchange(fam, n)) {
      result.realization = fam;
      break;
    }
    if (sub == 0) break;
  }
  return result;
}

// --- universal properties --------------------------------------------------

void check_mb_equicardinal(SearchReport& report, int n, unsigned workers) {
  const GroundSet ground = GroundSet::letters(n);
  auto chunks = parallel_chunks(
      1, nonempty_family_count(n) + 1, workers,
      [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<Json> failures;
        for (FamilyCode fam = lo; fam < hi; ++fam) {
          const bool fast = code_basis_exchange(fam, n);
          const SetFamily family = from_code(ground, fam);
          const bool certified =
              std::holds_alternative<Matroid>(check_basis_axiom(family));
          if (fast != certified) {
            failures.push_back(failure("family", family_to_json(family, "bases"),
                                       "bitmask and certifying (MB) checks disagree"));
          } else if (certified &&
                     family.min_cardinality() != family.max_cardinality()) {
            failures.push_back(failure("family", family_to_json(family, "bases"),
                                       "(MB) holds but bases differ in size"));
          }
        }
        return failures;
      });
  report.universe_size = nonempty_family_count(n);
  report.holds = merge_witnesses(chunks, report.witnesses) == 0;
}

std::optional<Json> check_independents(const Matroid& m) {
  auto result = check_symmetric_exchange(independents(m));
  if (auto* v = std::get_if<ExchangeViolation>(&result)) {
    return failure("matroid", matroid_to_json(m),
                   "independent sets fail: " + describe(m.ground(), *v));
  }
  const auto& d = std::get<DeltaMatroid>(result);
  if (!(d.upper() == m)) {
    return failure("matroid", matroid_to_json(m), "upper matroid is not m");
  }
  if (d.lower().rank() != 0) {
    return failure("matroid", matroid_to_json(m), "lower matroid has nonzero rank");
  }
  return std::nullopt;
}

std::optional<Json> check_spanning(const Matroid& m) {
  auto result = check_symmetric_exchange(spanning_sets(m));
  if (auto* v = std::get_if<ExchangeViolation>(&result)) {
    return failure("matroid", matroid_to_json(m),
                   "spanning sets fail: " + describe(m.ground(), *v));
  }
  const auto& d = std::get<DeltaMatroid>(result);
  if (!(d.lower() == m)) {
    return failure("matroid", matroid_to_json(m), "lower matroid is not m");
  }
  if (d.upper().rank() != m.ground().size()) {
    return failure("matroid", matroid_to_json(m), "upper matroid rank is not |E|");
  }
  return std::nullopt;
}

std::optional<Json> check_uplow(const DeltaMatroid& d) {
  for (Subset f : d.feasibles()) {
    if (!d.lower().is_spanning(f) || !d.upper().is_independent(f)) {
      return failure("delta", delta_to_json(d),
                     "feasible " + d.ground().format(f) +
                         " is not lower spanning and upper independent");
    }
  }
  return std::nullopt;
}

std::optional<Json> check_necessity(const DeltaMatroid& d) {
  const auto report = is_pairable(d.upper(), d.lower());
  if (report.pairable) return std::nullopt;
  return failure("delta", delta_to_json(d),
                 "upper circuit " + d.ground().format(*report.offending_circuit) +
                     " is not a union of lower circuits");
}

std::optional<Json> check_dual_exchange(const DeltaMatroid& d) {
  const DeltaMatroid star = complement_dual(d);
  if (!(star.upper() == dual(d.lower()))) {
    return failure("delta", delta_to_json(d), "upper of D* differs from dual of lower");
  }
  if (!(star.lower() == dual(d.upper()))) {
    return failure("delta", delta_to_json(d), "lower of D* differs from dual of upper");
  }
  return std::nullopt;
}

std::optional<Json> check_fmax(const DeltaMatroid& d) {
  const std::array<std::pair<FmaxVariant, bool>, 2> variants = {{
      {FmaxVariant::kUniformUpper, is_uniform(d.upper())},
      {FmaxVariant::kUniformLower, is_uniform(d.lower())},
  }};
  for (const auto& [variant, applies] : variants) {
    if (!applies) continue;
    const char* name =
        variant == FmaxVariant::kUniformUpper ? "uniform-upper" : "uniform-lower";
    const SetFamily fmax = fmax_family(d, variant);
    for (Subset f : d.feasibles()) {
      if (!fmax.contains(f)) {
        return failure("delta", delta_to_json(d),
                       std::string(name) + " F_max misses feasible " +
                           d.ground().format(f));
      }
    }
    auto result = check_symmetric_exchange(fmax);
    const auto* cert = std::get_if<DeltaMatroid>(&result);
    if (cert == nullptr) {
      return failure("delta", delta_to_json(d),
                     std::string(name) + " F_max fails (DF): " +
                         describe(d.ground(), std::get<ExchangeViolation>(result)));
    }
    if (!(cert->upper() == d.upper()) || !(cert->lower() == d.lower())) {
      return failure("delta", delta_to_json(d),
                     std::string(name) + " F_max changes the upper or lower matroid");
    }
    if (auto extra = find_augmentation(fmax, d.upper(), d.lower())) {
      return failure("delta", delta_to_json(d),
                     std::string(name) + " F_max is not maximal: " +
                         d.ground().format(*extra) + " can be added");
    }
  }
  return std::nullopt;
}

void check_sufficiency(SearchReport& report, int n, unsigned workers) {
  const auto matroids = enumerate_matroids(n, workers);
  const std::uint64_t count = matroids.size();
  struct Chunk {
    std::vector<Json> failures;
    std::uint64_t pairable = 0;
    std::uint64_t exhausted = 0;
  };
  auto chunks = parallel_chunks(
      0, count * count, workers, [&](std::uint64_t lo, std::uint64_t hi) {
        Chunk out;
        for (std::uint64_t i = lo; i < hi; ++i) {
          const Matroid& upper = matroids[i / count];
          const Matroid& lower = matroids[i % count];
          auto pair_json = [&] {
            Json j = Json::object();
            j["upper"] = matroid_to_json(upper);
            j["lower"] = matroid_to_json(lower);
            return j;
          };
          const auto pairing = is_pairable(upper, lower);
          if (pairing.pairable) {
            ++out.pairable;
            auto result = check_symmetric_exchange(construct_sandwich(upper, lower));
            const auto* d = std::get_if<DeltaMatroid>(&result);
            if (d == nullptr) {
              out.failures.push_back(
                  failure("pair", pair_json(), "sandwich family fails (DF)"));
            } else if (!(d->upper() == upper) || !(d->lower() == lower)) {
              out.failures.push_back(failure(
                  "pair", pair_json(), "sandwich does not reproduce upper/lower"));
            } else if (!basis_conditions_hold(upper, lower)) {
              out.failures.push_back(failure(
                  "pair", pair_json(), "pairable but basis-level conditions fail"));
            }
          } else {
            ++out.exhausted;
            if (auto found = exhaust_realizations(upper, lower).realization) {
              out.failures.push_back(failure(
                  "pair", pair_json(),
                  "unpairable pair is realized by " +
                      family_to_json(from_code(upper.ground(), *found), "feasibles")
                          .dump()));
            }
          }
        }
        return out;
      });
  std::vector<std::vector<Json>> failures;
  std::uint64_t pairable = 0;
  std::uint64_t exhausted = 0;
  for (auto& c : chunks) {
    pairable += c.pairable;
    exhausted += c.exhausted;
    failures.push_back(std::move(c.failures));
  }
  report.universe_size = count * count;
  report.holds = merge_witnesses(failures, report.witnesses) == 0;
  report.summary = Json::object();
  report.summary["matroids"] = count;
  report.summary["pairable_pairs"] = pairable;
  report.summary["unpairable_pairs_exhausted"] = exhausted;
}

// --- unpairable pair search -------------------------------------------------

struct Pool {
  std::vector<CodedMatroid> matroids;
  std::vector<std::optional<Multigraph>> graphs;
};

void enumerate_graphs(int n, int edge, int vertices,
                      std::vector<std::pair<int, int>>& edges,
                      std::map<FamilyCode, std::vector<std::pair<int, int>>>& seen) {
  if (edge == n) {
    const std::uint32_t count = std::uint32_t{1} << n;
    FamilyCode forests = 0;
    std::vector<int> parent(2 * n + 1);
    for (std::uint32_t s = 0; s < count; ++s) {
      for (int v = 0; v < vertices; ++v) parent[v] = v;
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      bool acyclic = true;
      for (int e = 0; e < n && acyclic; ++e) {
        if (!((s >> e) & 1u)) continue;
        const int a = find(edges[e].first);
        const int b = find(edges[e].second);
        if (a == b) acyclic = false;
        parent[a] = b;
      }
      if (acyclic) forests |= FamilyCode{1} << s;
    }
    seen.try_emplace(code_max_cardinality(forests, n), edges);
    return;
  }
  // Endpoints are numbered in order of first appearance.
  for (int u = 0; u <= vertices; ++u) {
    const int after_u = std::max(vertices, u + 1);
    for (int v = u; v <= after_u; ++v) {
      edges.emplace_back(u, v);
      enumerate_graphs(n, edge + 1, std::max(after_u, v + 1), edges, seen);
      edges.pop_back();
    }
  }
}

Pool graphic_pool(int n) {
  std::map<FamilyCode, std::vector<std::pair<int, int>>> seen;
  std::vector<std::pair<int, int>> edges;
  enumerate_graphs(n, 0, 0, edges, seen);
  const GroundSet ground = GroundSet::letters(n);
  Pool pool;
  for (const auto& [bases, graph_edges] : seen) {
    pool.matroids.push_back(code_matroid(bases, n));
    int vertex_count = 0;
    for (const auto& [u, v] : graph_edges) vertex_count = std::max({vertex_count, u + 1, v + 1});
    std::vector<std::string> vertices;
    for (int v = 0; v < vertex_count; ++v) vertices.push_back("v" + std::to_string(v));
    std::vector<Edge> es;
    for (int e = 0; e < n; ++e) {
      es.push_back(Edge{ground.label(e), graph_edges[e].first, graph_edges[e].second});
    }
    pool.graphs.emplace_back(Multigraph(std::move(vertices), std::move(es)));
  }
  return pool;
}

Pool matroid_pool(int n, unsigned workers) {
  Pool pool;
  for (const auto& m : enumerate_matroids(n, workers)) {
    pool.matroids.push_back(code_matroid(to_code(m.bases()), n));
    pool.graphs.emplace_back(std::nullopt);
  }
  return pool;
}

inline constexpr int kNoCandidate = 5;

struct Candidate {
  int tier = kNoCandidate;  // 0 best
  std::uint64_t index = 0;
};

Candidate better(Candidate a, Candidate b) {
  if (a.tier != b.tier) return a.tier < b.tier ? a : b;
  return a.index <= b.index ? a : b;
}

Candidate search_pool(const Pool& pool, int n, unsigned workers) {
  const std::uint64_t count = pool.matroids.size();
  auto chunks = parallel_chunks(
      0, count * count, workers, [&](std::uint64_t lo, std::uint64_t hi) {
        Candidate best;
        for (std::uint64_t i = lo; i < hi && best.tier > 0; ++i) {
          const CodedMatroid& up = pool.matroids[i / count];
          const CodedMatroid& low = pool.matroids[i % count];
          if ((low.bases & ~up.independent) != 0) continue;
          if ((up.bases & ~low.spanning) != 0) continue;
          const auto offending = coded_offending(up, low);
          if (!offending) continue;
          int tier = 4;
          if (std::popcount(*offending) == 2) {
            const FamilyCode sandwich = up.independent & low.spanning;
            const auto ub = members_of(up.bases);
            const auto lb = members_of(low.bases);
            const bool forced = forced_failure(ub, lb, [&](Subset s) {
                                  return code_has(sandwich, s.mask());
                                }).has_value();
            const bool loopless = code_has(up.independent, 0) &&
                                  std::all_of(up.circuits.begin(), up.circuits.end(),
                                              [](std::uint32_t c) {
                                                return std::popcount(c) > 1;
                                              });
            // A rank gap of two or more lets the failing pair sit at
            // different distances from the lower bases.
            const int gap = std::popcount(ub.front().mask()) - std::popcount(lb.front().mask());
            tier = !forced ? 3 : !loopless ? 2 : gap >= 2 ? 0 : 1;
          }
          best = better(best, Candidate{tier, i});
        }
        return best;
      });
  (void)n;
  Candidate best;
  for (const auto& c : chunks) best = better(best, c);
  return best;
}

Json witness_for(const Pool& pool, std::uint64_t index, int n, const char* source,
                 bool& confirmed) {
  const std::uint64_t count = pool.matroids.size();
  const GroundSet ground = GroundSet::letters(n);
  const std::uint64_t ui = index / count;
  const std::uint64_t li = index % count;
  const Matroid upper = certify_matroid(from_code(ground, pool.matroids[ui].bases));
  const Matroid lower = certify_matroid(from_code(ground, pool.matroids[li].bases));
  const auto pairing = is_pairable(upper, lower);
  const auto exhaust = exhaust_realizations(upper, lower);
  const auto forced = forced_exchange_failure(upper, lower);
  confirmed = !pairing.pairable && !exhaust.realization.has_value();

  Json w = Json::object();
  w["source"] = source;
  w["upper"] = matroid_to_json(upper);
  w["lower"] = matroid_to_json(lower);
  if (pool.graphs[ui]) w["upper_graph"] = graph_to_json(*pool.graphs[ui]);
  if (pool.graphs[li]) w["lower_graph"] = graph_to_json(*pool.graphs[li]);
  w["basis_conditions"] = basis_conditions_hold(upper, lower);
  w["pairability"] = pairability_to_json(ground, pairing);
  w["exchange_failure"] = forced ? violation_to_json(ground, *forced) : Json();
  w["sandwich"] = family_to_json(construct_sandwich(upper, lower), "feasibles");
  Json ex = Json::object();
  ex["candidates"] = exhaust.candidates;
  ex["realization"] =
      exhaust.realization
          ? family_to_json(from_code(ground, *exhaust.realization), "feasibles")
          : Json();
  w["realization_exhaust"] = std::move(ex);
  return w;
}

}  // namespace

Json report_to_json(const SearchReport& report, bool include_timing) {
  Json out = Json::object();
  out["property_id"] = report.property_id;
  out["universe_size"] = report.universe_size;
  out["holds"] = report.holds;
  out["witnesses"] = Json(report.witnesses);
  if (!report.summary.is_null()) out["summary"] = report.summary;
  if (include_timing) {
    out["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(report.elapsed).count();
  }
  return out;
}

std::vector<Matroid> enumerate_matroids(int n, unsigned workers) {
  require_size(n, kMaxExhaustiveGround, "matroid enumeration");
  const auto chunks = parallel_chunks(
      1, nonempty_family_count(n) + 1, workers,
      [n](std::uint64_t lo, std::uint64_t hi) {
        std::vector<FamilyCode> hits;
        for (FamilyCode fam = lo; fam < hi; ++fam) {
          if (code_basis_exchange(fam, n)) hits.push_back(fam);
        }
        return hits;
      });
  const GroundSet ground = GroundSet::letters(n);
  std::vector<Matroid> out;
  for (const auto& chunk : chunks) {
    for (FamilyCode fam : chunk) out.push_back(certify_matroid(from_code(ground, fam)));
  }
  return out;
}

std::span<const std::string_view> property_ids() { return kPropertyIds; }

SearchReport verify_property(std::string_view property_id, int n,
                             unsigned workers) {
  if (std::find(kPropertyIds.begin(), kPropertyIds.end(), property_id) ==
      kPropertyIds.end()) {
    throw InputError("unknown property '" + std::string(property_id) + "'");
  }
  require_size(n, kMaxExhaustiveGround, "property verification");
  const auto start = Clock::now();
  SearchReport report;
  report.property_id = std::string(property_id);

  if (property_id == "mb-equicardinal") {
    check_mb_equicardinal(report, n, workers);
  } else if (property_id == "independents-are-delta") {
    run_universal(report, enumerate_matroids(n, workers), workers, check_independents);
  } else if (property_id == "spanning-are-delta") {
    run_universal(report, enumerate_matroids(n, workers), workers, check_spanning);
  } else if (property_id == "sufficiency-sandwich") {
    check_sufficiency(report, n, workers);
  } else {
    const auto deltas = enumerate_delta_matroids(n, workers);
    if (property_id == "uplow") {
      run_universal(report, deltas, workers, check_uplow);
    } else if (property_id == "necessity-circuit-union") {
      run_universal(report, deltas, workers, check_necessity);
    } else if (property_id == "dual-exchange") {
      run_universal(report, deltas, workers, check_dual_exchange);
    } else {
      run_universal(report, deltas, workers, check_fmax);
    }
  }
  report.elapsed = Clock::now() - start;
  return report;
}

RealizationSearch exhaust_realizations(const Matroid& upper, const Matroid& lower) {
  require_same_ground(upper.ground(), lower.ground());
  require_size(upper.ground().size(), 5, "realization exhaust");
  return exhaust_coded(to_code(upper.bases()), to_code(lower.bases()),
                       to_code(construct_sandwich(upper, lower)),
                       upper.ground().size());
}

std::optional<ExchangeViolation> forced_exchange_failure(const Matroid& upper,
                                                         const Matroid& lower) {
  require_same_ground(upper.ground(), lower.ground());
  const std::vector<Subset> ub(upper.bases().begin(), upper.bases().end());
  const std::vector<Subset> lb(lower.bases().begin(), lower.bases().end());
  return forced_failure(ub, lb, [&](Subset s) {
    return upper.is_independent(s) && lower.is_spanning(s);
  });
}

SearchReport find_unpairable_pair(int n, unsigned workers) {
  require_size(n, 5, "unpairable pair search");
  const auto start = Clock::now();
  SearchReport report;
  report.property_id = "unpairable-pair";

  const Pool graphic = graphic_pool(n);
  Candidate best = search_pool(graphic, n, workers);
  report.universe_size = graphic.matroids.size() * graphic.matroids.size();
  const Pool* source = &graphic;
  const char* source_name = "graphic";
  Pool raw;
  if (best.tier == kNoCandidate && n <= kMaxExhaustiveGround) {
    raw = matroid_pool(n, workers);
    best = search_pool(raw, n, workers);
    report.universe_size += raw.matroids.size() * raw.matroids.size();
    source = &raw;
    source_name = "matroid";
  }
  if (best.tier != kNoCandidate) {
    bool confirmed = false;
    report.witnesses.push_back(witness_for(*source, best.index, n, source_name, confirmed));
    report.holds = confirmed;
  }
  report.elapsed = Clock::now() - start;
  return report;
}

SearchReport study_verbatim_minors(int n, unsigned workers) {
  require_size(n, kMaxExhaustiveGround, "minor study");
  const auto start = Clock::now();
  const auto deltas = enumerate_delta_matroids(n, workers);
  struct Chunk {
    std::uint64_t delete_cases = 0, delete_kept = 0;
    std::uint64_t contract_cases = 0, contract_kept = 0;
    std::vector<Json> failures;
  };
  auto chunks = parallel_chunks(
      0, deltas.size(), workers, [&](std::uint64_t lo, std::uint64_t hi) {
        Chunk out;
        for (std::uint64_t i = lo; i < hi; ++i) {
          const DeltaMatroid& d = deltas[i];
          const DeltaMatroid star = complement_dual(d);
          for (std::uint32_t m = 1; m < d.ground().subset_count(); ++m) {
            const Subset x(m);
            auto record = [&](const char* op, const DeltaMatroid& host,
                              std::uint64_t& cases, std::uint64_t& kept,
                              auto minor) {
              const auto& fs = host.feasibles();
              if (std::none_of(fs.begin(), fs.end(),
                               [&](Subset f) { return x.is_subset_of(f); })) {
                return;
              }
              ++cases;
              auto result = minor(d, x, Strictness::kLenient);
              if (std::holds_alternative<DeltaMatroid>(result)) {
                ++kept;
                return;
              }
              Json w = Json::object();
              w["operation"] = op;
              w["delta"] = delta_to_json(d);
              w["x"] = subset_to_json(d.ground(), x);
              w["violation"] = violation_to_json(
                  d.ground().without(x), std::get<ExchangeViolation>(result));
              out.failures.push_back(std::move(w));
            };
            record("delete", d, out.delete_cases, out.delete_kept, delta_delete);
            record("contract", star, out.contract_cases, out.contract_kept,
                   delta_contract);
          }
        }
        return out;
      });
  SearchReport report;
  report.property_id = "verbatim-minors";
  report.universe_size = deltas.size();
  Json del = {{"cases", 0}, {"preserved", 0}};
  Json con = {{"cases", 0}, {"preserved", 0}};
  std::vector<std::vector<Json>> failures;
  for (auto& c : chunks) {
    del["cases"] = del["cases"].get<std::uint64_t>() + c.delete_cases;
    del["preserved"] = del["preserved"].get<std::uint64_t>() + c.delete_kept;
    con["cases"] = con["cases"].get<std::uint64_t>() + c.contract_cases;
    con["preserved"] = con["preserved"].get<std::uint64_t>() + c.contract_kept;
    failures.push_back(std::move(c.failures));
  }
  report.holds = merge_witnesses(failures, report.witnesses) == 0;
  report.summary = Json::object();
  report.summary["deletion"] = std::move(del);
  report.summary["contraction"] = std::move(con);
  report.elapsed = Clock::now() - start;
  return report;
}

SearchReport study_restriction_readings(int n, unsigned workers) {
  require_size(n, kMaxExhaustiveGround, "restriction study");
  const auto start = Clock::now();
  const auto deltas = enumerate_delta_matroids(n, workers);

  constexpr std::array<const char*, 2> kReadings = {"containment", "deletion"};
  constexpr std::array<const char*, 6> kCounters = {
      "cases", "defined", "certified", "upper_is_circuit",
      "lower_circuits_inherited", "step_valid"};
  using Counts = std::array<std::array<std::uint64_t, 6>, 2>;
  struct Chunk {
    Counts counts{};
    std::array<std::vector<Json>, 2> failures;
  };

  auto chunks = parallel_chunks(
      0, deltas.size(), workers, [&](std::uint64_t lo, std::uint64_t hi) {
        Chunk out;
        for (std::uint64_t i = lo; i < hi; ++i) {
          const DeltaMatroid& d = deltas[i];
          for (Subset c : d.upper().circuits()) {
            const Subset outside = d.ground().full() - c;
            for (std::size_t r = 0; r < kReadings.size(); ++r) {
              auto& k = out.counts[r];
              ++k[0];
              std::optional<SetFamily> family;
              try {
                family = r == 0 ? restriction_by_containment(d, c)
                                : restriction_by_deletion(d, c);
              } catch (const InputError&) {
              }
              bool valid = false;
              std::string reason = "undefined";
              if (family && !family->empty()) {
                ++k[1];
                reason = "fails (DF)";
                auto result = check_symmetric_exchange(*family);
                if (const auto* rd = std::get_if<DeltaMatroid>(&result)) {
                  ++k[2];
                  const bool single_circuit =
                      rd->upper() == uniform(c.size() - 1, rd->ground());
                  const auto& lc = rd->lower().circuits();
                  const bool inherited =
                      std::all_of(lc.begin(), lc.end(), [&](Subset s) {
                        return d.lower().circuits().contains(expand(s, outside));
                      });
                  k[3] += single_circuit;
                  k[4] += inherited;
                  valid = single_circuit && inherited;
                  reason = !single_circuit ? "upper matroid is not the circuit"
                                           : "lower circuits not inherited";
                }
              }
              if (valid) {
                ++k[5];
              } else if (out.failures[r].size() < kMaxWitnesses) {
                Json w = Json::object();
                w["reading"] = kReadings[r];
                w["delta"] = delta_to_json(d);
                w["circuit"] = subset_to_json(d.ground(), c);
                w["reason"] = reason;
                out.failures[r].push_back(std::move(w));
              }
            }
          }
        }
        return out;
      });

  SearchReport report;
  report.property_id = "restriction-readings";
  report.universe_size = deltas.size();
  Counts total{};
  std::array<std::vector<Json>, 2> failures;
  for (auto& c : chunks) {
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t j = 0; j < kCounters.size(); ++j) total[r][j] += c.counts[r][j];
      for (auto& w : c.failures[r]) {
        if (failures[r].size() < kMaxWitnesses / 2) failures[r].push_back(std::move(w));
      }
    }
  }
  report.summary = Json::object();
  for (std::size_t r = 0; r < 2; ++r) {
    Json counts = Json::object();
    for (std::size_t j = 0; j < kCounters.size(); ++j) counts[kCounters[j]] = total[r][j];
    counts["validates_step"] = total[r][5] == total[r][0];
    report.summary[kReadings[r]] = std::move(counts);
    report.holds = report.holds || total[r][5] == total[r][0];
    for (auto& w : failures[r]) report.witnesses.push_back(std::move(w));
  }
  report.elapsed = Clock::now() - start;
  return report;
}

}  // namespace dmw
