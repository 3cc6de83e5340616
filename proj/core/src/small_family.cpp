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

#include "dmw/small_family.hpp"

#include <string>

namespace dmw {

namespace {

constexpr FamilyCode all_subsets(int n) {
  const std::uint32_t count = std::uint32_t{1} << n;
  return count == 64 ? ~FamilyCode{0} : (FamilyCode{1} << count) - 1;
}

}  // namespace

FamilyCode code_of_cardinality(FamilyCode fam, int n, int k) {
  FamilyCode out = 0;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    if (code_has(fam, s) && std::popcount(s) == k) out |= FamilyCode{1} << s;
  }
  return out;
}

FamilyCode code_max_cardinality(FamilyCode fam, int n) {
  for (int k = n; k >= 0; --k) {
    if (FamilyCode layer = code_of_cardinality(fam, n, k)) return layer;
  }
  return 0;
}

FamilyCode code_min_cardinality(FamilyCode fam, int n) {
  for (int k = 0; k <= n; ++k) {
    if (FamilyCode layer = code_of_cardinality(fam, n, k)) return layer;
  }
  return 0;
}

FamilyCode code_complemented(FamilyCode fam, int n) {
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  FamilyCode out = 0;
  for (FamilyCode m = fam; m != 0; m &= m - 1) {
    out |= FamilyCode{1} << (full ^ static_cast<std::uint32_t>(std::countr_zero(m)));
  }
  return out;
}

bool code_basis_exchange(FamilyCode fam, int n) {
  (void)n;
  for (FamilyCode a = fam; a != 0; a &= a - 1) {
    const std::uint32_t b1 = std::countr_zero(a);
    for (FamilyCode b = fam; b != 0; b &= b - 1) {
      const std::uint32_t b2 = std::countr_zero(b);
      for (std::uint32_t xs = b1 & ~b2; xs != 0; xs &= xs - 1) {
        const std::uint32_t x = xs & -xs;
        bool ok = false;
        for (std::uint32_t ys = b2 & ~b1; ys != 0 && !ok; ys &= ys - 1) {
          ok = code_has(fam, b1 ^ x ^ (ys & -ys));
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

bool code_symmetric_exchange(FamilyCode fam, int n) {
  (void)n;
  for (FamilyCode a = fam; a != 0; a &= a - 1) {
    const std::uint32_t f1 = std::countr_zero(a);
    for (FamilyCode b = fam; b != 0; b &= b - 1) {
      const std::uint32_t f2 = std::countr_zero(b);
      const std::uint32_t diff = f1 ^ f2;
      for (std::uint32_t xs = diff; xs != 0; xs &= xs - 1) {
        const std::uint32_t x = xs & -xs;
        if (code_has(fam, f1 ^ x)) continue;  // y = x
        bool ok = false;
        for (std::uint32_t ys = diff & ~x; ys != 0 && !ok; ys &= ys - 1) {
          ok = code_has(fam, f1 ^ x ^ (ys & -ys));
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

FamilyCode code_down_closure(FamilyCode fam, int n) {
  FamilyCode out = fam;
  for (std::uint32_t s = std::uint32_t{1} << n; s-- > 0;) {
    if (!code_has(out, s)) continue;
    for (std::uint32_t es = s; es != 0; es &= es - 1) {
      out |= FamilyCode{1} << (s ^ (es & -es));
    }
  }
  return out;
}

FamilyCode code_up_closure(FamilyCode fam, int n) {
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  FamilyCode out = fam;
  for (std::uint32_t s = 0; s <= full; ++s) {
    if (!code_has(out, s)) continue;
    for (std::uint32_t es = full & ~s; es != 0; es &= es - 1) {
      out |= FamilyCode{1} << (s | (es & -es));
    }
  }
  return out;
}

FamilyCode to_code(const SetFamily& family) {
  if (family.ground().size() > kMaxCodedGround) {
    throw InputError("family code needs a ground set of at most " +
                     std::to_string(kMaxCodedGround) + " elements");
  }
  FamilyCode out = 0;
  for (Subset s : family) out |= FamilyCode{1} << s.mask();
  return out;
}

SetFamily from_code(const GroundSet& ground, FamilyCode fam) {
  if (ground.size() > kMaxCodedGround) {
    throw InputError("family code needs a ground set of at most " +
                     std::to_string(kMaxCodedGround) + " elements");
  }
  if ((fam & ~all_subsets(ground.size())) != 0) {
    throw InputError("family code has members outside the ground set");
  }
  std::vector<Subset> members;
  for (FamilyCode m = fam; m != 0; m &= m - 1) {
    members.emplace_back(static_cast<std::uint32_t>(std::countr_zero(m)));
  }
  return SetFamily(ground, std::move(members));
}

std::uint64_t nonempty_family_count(int n) {
  if (n < 0 || n > 5) throw InputError("family count overflows beyond n = 5");
  return all_subsets(n);
}

}  // namespace dmw
