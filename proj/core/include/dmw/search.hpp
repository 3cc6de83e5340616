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

#ifndef DMW_SEARCH_HPP_
#define DMW_SEARCH_HPP_

// Exhaustive checks over every small matroid / Δ-matroid, and the search for
// matroid pairs that meet the basis-level conditions yet are not the upper
// and lower matroids of any Δ-matroid.
//
// All searches split fixed candidate ranges across workers and merge results
// in candidate order, so reports do not depend on the worker count.

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dmw/delta.hpp"
#include "dmw/graph.hpp"
#include "dmw/io.hpp"
#include "dmw/matroid.hpp"
#include "dmw/small_family.hpp"

namespace dmw {

inline constexpr std::size_t kMaxWitnesses = 8;

struct SearchReport {
  std::string property_id;
  std::uint64_t universe_size = 0;
  bool holds = false;
  std::vector<Json> witnesses;
  // Aggregate counts for studies; null for plain property checks.
  Json summary;
  std::chrono::nanoseconds elapsed{0};
};

// Timing is left out unless asked for, so reports of identical runs compare
// byte for byte.
Json report_to_json(const SearchReport& report, bool include_timing = false);

// Every matroid on letters(n), n <= 4, ordered by basis-family code.
std::vector<Matroid> enumerate_matroids(int n, unsigned workers);

// mb-equicardinal, independents-are-delta, spanning-are-delta, uplow,
// necessity-circuit-union, sufficiency-sandwich, dual-exchange, fmax-maximal.
std::span<const std::string_view> property_ids();

// Runs a registered universal property over the full universe at size n
// (n <= 4). Unknown ids throw InputError. holds == false comes with
// witnesses, each a JSON object naming the failing structure.
SearchReport verify_property(std::string_view property_id, int n,
                             unsigned workers);

struct RealizationSearch {
  std::uint64_t candidates = 0;
  // A family realizing (upper, lower), if one exists.
  std::optional<FamilyCode> realization;
};

// Tries every family that contains all bases of both matroids and otherwise
// only sandwich sets (ground of at most 5 elements), looking for a Δ-matroid
// whose upper and lower matroids are exactly `upper` and `lower`.
RealizationSearch exhaust_realizations(const Matroid& upper, const Matroid& lower);

// An exchange failure among the bases of both matroids in which every
// candidate move leaves the sandwich family. Such a failure rules out every
// realization at once. Pairs with first an upper basis and second a lower
// basis are tried first.
std::optional<ExchangeViolation> forced_exchange_failure(const Matroid& upper,
                                                         const Matroid& lower);

// Looks for (upper, lower) on n <= 5 elements with the basis-level
// conditions but no Δ-matroid realization. Graphic matroids of multigraphs
// are searched first, then (n <= 4) all matroids. Preference: a 2-element
// offending circuit with a forced exchange failure, a loopless upper matroid
// and ranks at least two apart; then the same with any rank gap; then
// without looplessness; then a 2-element offending circuit; then anything. holds == true iff a pair was found and
// the exhaust confirmed it; holds == false with no witnesses means none
// exists in the searched space.
SearchReport find_unpairable_pair(int n, unsigned workers);

// Is (ΔF) kept by {F \ X : F feasible} and its contraction counterpart, for
// every Δ-matroid on n <= 4 elements and every admissible X?
SearchReport study_verbatim_minors(int n, unsigned workers);

// For every Δ-matroid on n <= 4 elements and every circuit C of its upper
// matroid, which reading of "restriction to C" yields a Δ-matroid whose upper
// matroid is the single circuit C and whose lower circuits are circuits of
// the original lower matroid.
SearchReport study_restriction_readings(int n, unsigned workers);

}  // namespace dmw

#endif  // DMW_SEARCH_HPP_
