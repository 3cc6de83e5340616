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

#include "dmw/matroid.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <optional>

namespace dmw {

namespace {

// Partners admissible for the exchange at (first, second, pivot).
Subset partner_range(const ExchangeViolation& v) {
  return v.axiom == Axiom::kBasisExchange ? v.second - v.first
                                          : v.first ^ v.second;
}

bool has_partner(const SetFamily& family, Subset first, int pivot,
                 Subset range) {
  bool found = false;
  for_each_element(range, [&](int y) {
    if (!found && family.contains(first ^ Subset::singleton(pivot) ^
                                  (y == pivot ? Subset() : Subset::singleton(y)))) {
      found = true;
    }
  });
  return found;
}

}  // namespace

std::string describe(const GroundSet& ground, const ExchangeViolation& v) {
  const bool mb = v.axiom == Axiom::kBasisExchange;
  return std::string(mb ? "basis exchange (MB)" : "symmetric exchange (DF)") +
         " fails at first=" + ground.format(v.first) +
         " second=" + ground.format(v.second) + " pivot=" +
         (v.pivot >= 0 && v.pivot < ground.size() ? ground.label(v.pivot)
                                                   : std::string("?")) +
         ": no exchange partner";
}

bool replays(const SetFamily& family, const ExchangeViolation& v) {
  if (!family.contains(v.first) || !family.contains(v.second)) return false;
  const Subset diff = v.axiom == Axiom::kBasisExchange ? v.first - v.second
                                                       : v.first ^ v.second;
  if (v.pivot < 0 || !diff.contains(v.pivot)) return false;
  return !has_partner(family, v.first, v.pivot, partner_range(v));
}

CertificationError::CertificationError(const GroundSet& ground,
                                       ExchangeViolation violation)
    : std::runtime_error(describe(ground, violation)),
      violation_(violation) {}

std::variant<Matroid, ExchangeViolation> check_basis_axiom(
    const SetFamily& family) {
  if (family.empty()) throw InputError("a matroid needs at least one basis");
  for (Subset second : family) {
    for (Subset first : family) {
      const Subset range = second - first;
      for (int x = 0; x < family.ground().size(); ++x) {
        if (!first.contains(x) || second.contains(x)) continue;
        if (!has_partner(family, first, x, range)) {
          return ExchangeViolation{Axiom::kBasisExchange, first, second, x};
        }
      }
    }
  }

  const GroundSet& ground = family.ground();
  auto state = std::make_shared<Matroid::State>();
  state->bases = family;
  state->rank = family.members().front().size();
  assert(family.min_cardinality() == family.max_cardinality());

  const int n = ground.size();
  const std::uint32_t count = ground.subset_count();
  state->independent = SubsetBitmap(n);
  state->spanning = SubsetBitmap(n);
  for (Subset b : family) {
    state->independent.set(b);
    state->spanning.set(b);
  }
  for (std::uint32_t m = count; m-- > 0;) {
    const Subset s(m);
    if (s.size() >= state->rank || state->independent.test(s)) continue;
    for (int e = 0; e < n; ++e) {
      if (!s.contains(e) && state->independent.test(s.with(e))) {
        state->independent.set(s);
        break;
      }
    }
  }
  for (std::uint32_t m = 0; m < count; ++m) {
    const Subset s(m);
    if (s.size() <= state->rank || state->spanning.test(s)) continue;
    for_each_element(s, [&](int e) {
      if (state->spanning.test(s.without(e))) state->spanning.set(s);
    });
  }
  return Matroid(std::move(state));
}

Matroid certify_matroid(const SetFamily& family) {
  auto result = check_basis_axiom(family);
  if (auto* v = std::get_if<ExchangeViolation>(&result)) {
    throw CertificationError(family.ground(), *v);
  }
  return std::get<Matroid>(std::move(result));
}

int Matroid::rank_of(Subset s) const {
  int best = 0;
  for (Subset b : bases()) best = std::max(best, (b & s).size());
  return best;
}

const SetFamily& Matroid::circuits() const {
  std::call_once(state_->circuits_once, [this] {
    std::vector<Subset> out;
    for (std::uint32_t m = 0; m < ground().subset_count(); ++m) {
      const Subset s(m);
      if (is_independent(s)) continue;
      bool minimal = true;
      for_each_element(s, [&](int e) {
        if (!is_independent(s.without(e))) minimal = false;
      });
      if (minimal) out.push_back(s);
    }
    state_->circuits.emplace(ground(), std::move(out));
  });
  return *state_->circuits;
}

Matroid matroid_from_independents(const GroundSet& ground,
                                  const SubsetBitmap& independent) {
  int rank = -1;
  std::vector<Subset> bases;
  for (std::uint32_t m = 0; m < ground.subset_count(); ++m) {
    const Subset s(m);
    if (!independent.test(s)) continue;
    if (s.size() > rank) {
      rank = s.size();
      bases.clear();
    }
    if (s.size() == rank) bases.push_back(s);
  }
  if (bases.empty()) throw InputError("independence system has no members");
  return certify_matroid(SetFamily(ground, std::move(bases)));
}

Matroid uniform(int k, const GroundSet& ground) {
  if (k < 0 || k > ground.size()) {
    throw InputError("uniform matroid rank " + std::to_string(k) +
                     " out of range for " + std::to_string(ground.size()) +
                     " elements");
  }
  return certify_matroid(SetFamily(ground, subsets_of_size(ground, k)));
}

Matroid direct_sum(const Matroid& m1, const Matroid& m2) {
  std::vector<std::string> labels(m1.ground().labels().begin(),
                                  m1.ground().labels().end());
  for (const auto& l : m2.ground().labels()) {
    if (m1.ground().index_of(l)) {
      throw InputError("direct sum needs disjoint ground sets; '" + l +
                       "' is shared");
    }
    labels.push_back(l);
  }
  GroundSet ground(std::move(labels));
  const int shift = m1.ground().size();
  std::vector<Subset> bases;
  for (Subset b1 : m1.bases()) {
    for (Subset b2 : m2.bases()) {
      bases.push_back(b1 | Subset(b2.mask() << shift));
    }
  }
  return certify_matroid(SetFamily(std::move(ground), std::move(bases)));
}

SetFamily independents(const Matroid& m) {
  std::vector<Subset> out;
  for (std::uint32_t s = 0; s < m.ground().subset_count(); ++s) {
    if (m.is_independent(Subset(s))) out.emplace_back(s);
  }
  return SetFamily(m.ground(), std::move(out));
}

SetFamily spanning_sets(const Matroid& m) {
  std::vector<Subset> out;
  for (std::uint32_t s = 0; s < m.ground().subset_count(); ++s) {
    if (m.is_spanning(Subset(s))) out.emplace_back(s);
  }
  return SetFamily(m.ground(), std::move(out));
}

const SetFamily& circuits(const Matroid& m) { return m.circuits(); }

Matroid dual(const Matroid& m) {
  return certify_matroid(m.bases().complemented());
}

Matroid deletion(const Matroid& m, Subset x_set) {
  m.ground().require(x_set);
  GroundSet ground = m.ground().without(x_set);
  SubsetBitmap independent(ground.size());
  for (std::uint32_t s = 0; s < ground.subset_count(); ++s) {
    if (m.is_independent(expand(Subset(s), x_set))) independent.set(Subset(s));
  }
  return matroid_from_independents(ground, independent);
}

Matroid contraction(const Matroid& m, Subset x_set) {
  m.ground().require(x_set);
  return dual(deletion(dual(m), x_set));
}

bool is_uniform(const Matroid& m) {
  return m.bases().size() == subsets_of_size(m.ground(), m.rank()).size();
}

bool is_union_of_circuits(Subset s, const Matroid& m) {
  m.ground().require(s);
  Subset covered;
  for (Subset c : m.circuits()) {
    if (c.is_subset_of(s)) covered = covered | c;
  }
  return covered == s;
}

bool is_quotient(const Matroid& q, const Matroid& m) {
  require_same_ground(q.ground(), m.ground());
  const auto& cs = m.circuits();
  return std::all_of(cs.begin(), cs.end(),
                     [&](Subset c) { return is_union_of_circuits(c, q); });
}

}  // namespace dmw
