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

#include "dmw/delta.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dmw/parallel.hpp"
#include "dmw/small_family.hpp"

namespace dmw {

namespace {

Matroid extreme_matroid(const SetFamily& layer, const char* which) {
  auto result = check_basis_axiom(layer);
  if (auto* v = std::get_if<ExchangeViolation>(&result)) {
    throw std::logic_error(std::string(which) +
                           " matroid of a certified delta-matroid failed (MB): " +
                           describe(layer.ground(), *v));
  }
  return std::get<Matroid>(std::move(result));
}

DeltaCertification finish(DeltaCertification result, const GroundSet& ground,
                          Strictness strictness) {
  if (strictness == Strictness::kStrict) {
    if (auto* v = std::get_if<ExchangeViolation>(&result)) {
      throw CertificationError(ground, *v);
    }
  }
  return result;
}

void require_exhaustive_size(int n) {
  if (n < 0 || n > kMaxExhaustiveGround) {
    throw InputError("exhaustive enumeration supports ground sets of at most " +
                     std::to_string(kMaxExhaustiveGround) + " elements, got " +
                     std::to_string(n));
  }
}

}  // namespace

DeltaCertification check_symmetric_exchange(const SetFamily& family) {
  if (family.empty()) {
    throw InputError("a delta-matroid needs at least one feasible set");
  }
  for (Subset second : family) {
    for (Subset first : family) {
      const Subset diff = first ^ second;
      for (int x = 0; x < family.ground().size(); ++x) {
        if (!diff.contains(x)) continue;
        bool ok = false;
        for_each_element(diff, [&](int y) {
          if (ok) return;
          const Subset moved = y == x ? first ^ Subset::singleton(x)
                                      : first ^ Subset::pair(x, y);
          ok = family.contains(moved);
        });
        if (!ok) {
          return ExchangeViolation{Axiom::kSymmetricExchange, first, second, x};
        }
      }
    }
  }
  auto upper = extreme_matroid(family.with_cardinality(family.max_cardinality()),
                               "upper");
  auto lower = extreme_matroid(family.with_cardinality(family.min_cardinality()),
                               "lower");
  return DeltaMatroid(std::make_shared<const DeltaMatroid::State>(
      DeltaMatroid::State{family, std::move(upper), std::move(lower)}));
}

DeltaMatroid certify_delta(const SetFamily& family) {
  auto result = check_symmetric_exchange(family);
  if (auto* v = std::get_if<ExchangeViolation>(&result)) {
    throw CertificationError(family.ground(), *v);
  }
  return std::get<DeltaMatroid>(std::move(result));
}

const Matroid& upper_matroid(const DeltaMatroid& d) { return d.upper(); }
const Matroid& lower_matroid(const DeltaMatroid& d) { return d.lower(); }

DeltaMatroid complement_dual(const DeltaMatroid& d) {
  return certify_delta(d.feasibles().complemented());
}

SetFamily deleted_family(const DeltaMatroid& d, Subset x_set) {
  d.ground().require(x_set);
  const auto& fs = d.feasibles();
  if (std::none_of(fs.begin(), fs.end(),
                   [&](Subset f) { return x_set.is_subset_of(f); })) {
    throw InputError("deleted set " + d.ground().format(x_set) +
                     " is contained in no feasible set");
  }
  std::vector<Subset> members;
  for (Subset f : fs) members.push_back(compress(f - x_set, x_set));
  return SetFamily(d.ground().without(x_set), std::move(members));
}

DeltaCertification delta_delete(const DeltaMatroid& d, Subset x_set,
                                 Strictness strictness) {
  SetFamily family = deleted_family(d, x_set);
  return finish(check_symmetric_exchange(family), family.ground(), strictness);
}

DeltaCertification delta_contract(const DeltaMatroid& d, Subset x_set,
                                  Strictness strictness) {
  SetFamily family = deleted_family(complement_dual(d), x_set).complemented();
  return finish(check_symmetric_exchange(family), family.ground(), strictness);
}

SetFamily restriction_by_containment(const DeltaMatroid& d, Subset c) {
  d.ground().require(c);
  const Subset outside = d.ground().full() - c;
  std::vector<Subset> members;
  for (Subset f : d.feasibles()) {
    if (f.is_subset_of(c)) members.push_back(compress(f, outside));
  }
  return SetFamily(d.ground().without(outside), std::move(members));
}

SetFamily restriction_by_deletion(const DeltaMatroid& d, Subset c) {
  d.ground().require(c);
  return deleted_family(d, d.ground().full() - c);
}

SetFamily construct_sandwich(const Matroid& upper, const Matroid& lower) {
  require_same_ground(upper.ground(), lower.ground());
  std::vector<Subset> members;
  for (std::uint32_t m = 0; m < upper.ground().subset_count(); ++m) {
    const Subset s(m);
    if (upper.is_independent(s) && lower.is_spanning(s)) members.push_back(s);
  }
  return SetFamily(upper.ground(), std::move(members));
}

PairabilityReport is_pairable(const Matroid& upper, const Matroid& lower) {
  require_same_ground(upper.ground(), lower.ground());
  PairabilityReport report;
  for (Subset c : upper.circuits()) {
    if (is_union_of_circuits(c, lower)) continue;
    if (!report.offending_circuit || c.size() < report.offending_circuit->size()) {
      report.offending_circuit = c;
    }
  }
  report.pairable = !report.offending_circuit.has_value();
  return report;
}

bool basis_conditions_hold(const Matroid& upper, const Matroid& lower) {
  require_same_ground(upper.ground(), lower.ground());
  const auto& bl = lower.bases();
  const auto& bu = upper.bases();
  return std::all_of(bl.begin(), bl.end(),
                     [&](Subset b) { return upper.is_independent(b); }) &&
         std::all_of(bu.begin(), bu.end(),
                     [&](Subset b) { return lower.is_spanning(b); });
}

BouchetTriple bouchet_triple(const Matroid& m) {
  return BouchetTriple{certify_delta(m.bases()), certify_delta(independents(m)),
                       certify_delta(spanning_sets(m))};
}

SetFamily fmax_family(const DeltaMatroid& d, FmaxVariant variant) {
  const Matroid& up = d.upper();
  const Matroid& low = d.lower();
  const int rk_u = up.rank();
  const int rk_l = low.rank();
  std::vector<Subset> members(low.bases().begin(), low.bases().end());

  if (variant == FmaxVariant::kUniformUpper) {
    if (!is_uniform(up)) throw InputError("upper matroid is not uniform");
    for (std::uint32_t m = 0; m < d.ground().subset_count(); ++m) {
      const Subset a(m);
      if (a.size() > rk_l && a.size() <= rk_u && low.is_spanning(a)) {
        members.push_back(a);
      }
    }
  } else {
    if (!is_uniform(low)) throw InputError("lower matroid is not uniform");
    for (std::uint32_t m = 0; m < d.ground().subset_count(); ++m) {
      const Subset a(m);
      if (a.size() >= rk_l && a.size() < rk_u && up.is_independent(a)) {
        members.push_back(a);
      }
    }
    members.insert(members.end(), up.bases().begin(), up.bases().end());
  }
  return SetFamily(d.ground(), std::move(members));
}

std::optional<Subset> find_augmentation(const SetFamily& family,
                                        const Matroid& upper,
                                        const Matroid& lower) {
  for (std::uint32_t m = 0; m < family.ground().subset_count(); ++m) {
    const Subset s(m);
    if (family.contains(s)) continue;
    auto result = check_symmetric_exchange(family.with(s));
    const auto* d = std::get_if<DeltaMatroid>(&result);
    if (d && d->upper() == upper && d->lower() == lower) return s;
  }
  return std::nullopt;
}

std::vector<DeltaMatroid> enumerate_delta_matroids(int n, unsigned workers) {
  require_exhaustive_size(n);
  const auto chunks = parallel_chunks(
      1, nonempty_family_count(n) + 1, workers,
      [n](std::uint64_t lo, std::uint64_t hi) {
        std::vector<FamilyCode> hits;
        for (FamilyCode fam = lo; fam < hi; ++fam) {
          if (code_symmetric_exchange(fam, n)) hits.push_back(fam);
        }
        return hits;
      });
  const GroundSet ground = GroundSet::letters(n);
  std::vector<DeltaMatroid> out;
  for (const auto& chunk : chunks) {
    for (FamilyCode fam : chunk) out.push_back(certify_delta(from_code(ground, fam)));
  }
  return out;
}

void for_each_delta_matroid(int n,
                            const std::function<void(const DeltaMatroid&)>& fn) {
  require_exhaustive_size(n);
  const GroundSet ground = GroundSet::letters(n);
  const std::uint64_t count = nonempty_family_count(n);
  for (FamilyCode fam = 1; fam <= count; ++fam) {
    if (code_symmetric_exchange(fam, n)) fn(certify_delta(from_code(ground, fam)));
  }
}

}  // namespace dmw
