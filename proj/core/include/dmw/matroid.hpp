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

#ifndef DMW_MATROID_HPP_
#define DMW_MATROID_HPP_

#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "dmw/sets.hpp"

namespace dmw {

enum class Axiom {
  kBasisExchange,      // (MB)
  kSymmetricExchange,  // (ΔF)
};

// A point at which an exchange axiom fails: with `first` and `second` in the
// family and `pivot` in their (symmetric) difference, no admissible partner y
// puts first Δ {pivot, y} back into the family.
struct ExchangeViolation {
  Axiom axiom = Axiom::kBasisExchange;
  Subset first;
  Subset second;
  int pivot = -1;

  friend bool operator==(const ExchangeViolation&,
                         const ExchangeViolation&) = default;
};

std::string describe(const GroundSet& ground, const ExchangeViolation& v);

// Re-checks a violation against `family`; true iff no partner exists.
bool replays(const SetFamily& family, const ExchangeViolation& v);

// Raised when a family that had to certify did not.
class CertificationError : public std::runtime_error {
 public:
  CertificationError(const GroundSet& ground, ExchangeViolation violation);
  const ExchangeViolation& violation() const { return violation_; }

 private:
  ExchangeViolation violation_;
};

// A basis family certified to satisfy the basis exchange axiom. Instances only
// come out of check_basis_axiom and the constructions below, so every Matroid
// in the program is valid. Immutable and cheap to copy.
class Matroid {
 public:
  const GroundSet& ground() const { return state_->bases.ground(); }
  const SetFamily& bases() const { return state_->bases; }
  int rank() const { return state_->rank; }

  bool is_basis(Subset s) const { return state_->bases.contains(s); }
  bool is_independent(Subset s) const { return state_->independent.test(s); }
  bool is_spanning(Subset s) const { return state_->spanning.test(s); }
  int rank_of(Subset s) const;

  // Minimal dependent sets, computed on first use.
  const SetFamily& circuits() const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.bases() == b.bases();
  }

 private:
  struct State {
    SetFamily bases;
    int rank = 0;
    SubsetBitmap independent;
    SubsetBitmap spanning;
    mutable std::once_flag circuits_once;
    mutable std::optional<SetFamily> circuits;
  };
  explicit Matroid(std::shared_ptr<const State> state)
      : state_(std::move(state)) {}

  friend std::variant<Matroid, ExchangeViolation> check_basis_axiom(
      const SetFamily& family);

  std::shared_ptr<const State> state_;
};

// Certifies (MB). The first violation in canonical order is returned: target
// basis `second` ascending, then `first` ascending, then pivot ascending.
// Throws InputError on an empty family.
std::variant<Matroid, ExchangeViolation> check_basis_axiom(
    const SetFamily& family);
// As above but throws CertificationError on failure.
Matroid certify_matroid(const SetFamily& family);

// Matroid whose bases are the maximum-cardinality sets of a downward closed
// independence bitmap over `ground`. Throws CertificationError if they are
// not the bases of a matroid.
Matroid matroid_from_independents(const GroundSet& ground,
                                  const SubsetBitmap& independent);

Matroid uniform(int k, const GroundSet& ground);
// Ground is m1's labels followed by m2's; throws on overlapping labels.
Matroid direct_sum(const Matroid& m1, const Matroid& m2);

SetFamily independents(const Matroid& m);
SetFamily spanning_sets(const Matroid& m);
const SetFamily& circuits(const Matroid& m);
Matroid dual(const Matroid& m);

// Deletion and contraction of x_set; the result lives on ground \ x_set.
Matroid deletion(const Matroid& m, Subset x_set);
Matroid contraction(const Matroid& m, Subset x_set);

bool is_uniform(const Matroid& m);

// True iff s is the union of the circuits of m it contains.
bool is_union_of_circuits(Subset s, const Matroid& m);
// True iff every circuit of m is a union of circuits of q.
bool is_quotient(const Matroid& q, const Matroid& m);

}  // namespace dmw

#endif  // DMW_MATROID_HPP_
