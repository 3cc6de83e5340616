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

#ifndef DMW_DELTA_HPP_
#define DMW_DELTA_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "dmw/matroid.hpp"
#include "dmw/sets.hpp"

namespace dmw {

// A feasible family certified to satisfy the symmetric exchange axiom, with
// its upper matroid (maximum-cardinality feasibles) and lower matroid
// (minimum-cardinality feasibles).
class DeltaMatroid {
 public:
  const GroundSet& ground() const { return state_->feasibles.ground(); }
  const SetFamily& feasibles() const { return state_->feasibles; }
  const Matroid& upper() const { return state_->upper; }
  const Matroid& lower() const { return state_->lower; }
  bool is_feasible(Subset s) const { return state_->feasibles.contains(s); }

  friend bool operator==(const DeltaMatroid& a, const DeltaMatroid& b) {
    return a.feasibles() == b.feasibles();
  }

 private:
  struct State {
    SetFamily feasibles;
    Matroid upper;
    Matroid lower;
  };
  explicit DeltaMatroid(std::shared_ptr<const State> state)
      : state_(std::move(state)) {}

  friend std::variant<DeltaMatroid, ExchangeViolation> check_symmetric_exchange(
      const SetFamily& family);

  std::shared_ptr<const State> state_;
};

using DeltaCertification = std::variant<DeltaMatroid, ExchangeViolation>;

// Certifies (ΔF); the first violation in canonical order (second, first,
// pivot ascending) is returned otherwise. Throws InputError on an empty
// family.
DeltaCertification check_symmetric_exchange(const SetFamily& family);
// Throws CertificationError on failure.
DeltaMatroid certify_delta(const SetFamily& family);

const Matroid& upper_matroid(const DeltaMatroid& d);
const Matroid& lower_matroid(const DeltaMatroid& d);

// Feasibles replaced by their complements.
DeltaMatroid complement_dual(const DeltaMatroid& d);

// Whether a minor whose family fails (ΔF) throws or hands back the witness.
enum class Strictness { kStrict, kLenient };

// {F \ X : F feasible} on ground E \ X, taken over every feasible F. Requires
// X to lie inside some feasible set (InputError otherwise).
SetFamily deleted_family(const DeltaMatroid& d, Subset x_set);
// Certified deleted_family. kStrict throws CertificationError on failure;
// kLenient returns the violation.
DeltaCertification delta_delete(const DeltaMatroid& d, Subset x_set,
                                 Strictness strictness = Strictness::kStrict);
// (D* \ X)*; the containment precondition therefore applies in D*.
DeltaCertification delta_contract(const DeltaMatroid& d, Subset x_set,
                                  Strictness strictness = Strictness::kStrict);

// Two readings of "the restriction of D to C", both on ground C:
// feasibles contained in C (may be empty), and D \ (E \ C).
SetFamily restriction_by_containment(const DeltaMatroid& d, Subset c);
SetFamily restriction_by_deletion(const DeltaMatroid& d, Subset c);

// Every subset independent in `upper` and spanning in `lower`.
SetFamily construct_sandwich(const Matroid& upper, const Matroid& lower);

struct PairabilityReport {
  bool pairable = true;
  // A circuit of the upper matroid that is not a union of lower circuits:
  // the smallest such, ties broken by mask.
  std::optional<Subset> offending_circuit;
};

PairabilityReport is_pairable(const Matroid& upper, const Matroid& lower);

// True iff every lower basis is upper independent and every upper basis is
// lower spanning.
bool basis_conditions_hold(const Matroid& upper, const Matroid& lower);

struct BouchetTriple {
  DeltaMatroid from_bases;
  DeltaMatroid from_independents;
  DeltaMatroid from_spanning;
};

BouchetTriple bouchet_triple(const Matroid& m);

enum class FmaxVariant {
  kUniformUpper,  // lower bases plus lower-spanning sets up to the upper rank
  kUniformLower,  // lower bases, upper-independent sets, upper bases
};

// The largest feasible family with the same upper and lower matroid as d.
// Throws InputError when the variant's uniformity hypothesis fails.
SetFamily fmax_family(const DeltaMatroid& d, FmaxVariant variant);

// First subset outside `family` whose addition keeps (ΔF) and leaves the
// upper and lower matroids unchanged; nullopt means `family` is maximal.
std::optional<Subset> find_augmentation(const SetFamily& family,
                                        const Matroid& upper,
                                        const Matroid& lower);

inline constexpr int kMaxExhaustiveGround = 4;

// Every Δ-matroid on letters(n), n <= 4, ordered by family code (bit S set
// iff S is feasible). Candidate ranges are split across `workers`.
std::vector<DeltaMatroid> enumerate_delta_matroids(int n, unsigned workers);
// Sequential stream in the same order.
void for_each_delta_matroid(int n,
                            const std::function<void(const DeltaMatroid&)>& fn);

}  // namespace dmw

#endif  // DMW_DELTA_HPP_
