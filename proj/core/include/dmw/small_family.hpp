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

#ifndef DMW_SMALL_FAMILY_HPP_
#define DMW_SMALL_FAMILY_HPP_

// Families over ground sets of at most six elements packed into one word:
// bit S of a FamilyCode is set iff subset S is a member. The exhaustive
// searches run on these; results are turned into certified objects only when
// they are reported.

#include <bit>
#include <cstdint>

#include "dmw/sets.hpp"

namespace dmw {

using FamilyCode = std::uint64_t;

inline constexpr int kMaxCodedGround = 6;

constexpr bool code_has(FamilyCode fam, std::uint32_t s) {
  return (fam >> s) & 1u;
}

// Members of the given cardinality.
FamilyCode code_of_cardinality(FamilyCode fam, int n, int k);
FamilyCode code_max_cardinality(FamilyCode fam, int n);
FamilyCode code_min_cardinality(FamilyCode fam, int n);
FamilyCode code_complemented(FamilyCode fam, int n);

bool code_basis_exchange(FamilyCode fam, int n);
bool code_symmetric_exchange(FamilyCode fam, int n);

// Downward / upward closures.
FamilyCode code_down_closure(FamilyCode fam, int n);
FamilyCode code_up_closure(FamilyCode fam, int n);

FamilyCode to_code(const SetFamily& family);
SetFamily from_code(const GroundSet& ground, FamilyCode fam);

// Number of nonempty families over an n-element ground (2^(2^n) - 1).
std::uint64_t nonempty_family_count(int n);

}  // namespace dmw

#endif  // DMW_SMALL_FAMILY_HPP_
