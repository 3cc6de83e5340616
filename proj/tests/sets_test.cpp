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

#include "dmw/sets.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_util.hpp"

namespace dmw {
namespace {

using testing::family;
using testing::labels;

TEST(GroundSet, RejectsDuplicatesAndOversize) {
  EXPECT_THROW(labels({"a", "b", "a"}), InputError);
  EXPECT_THROW(GroundSet::letters(kMaxGroundSize + 1), InputError);
  EXPECT_EQ(GroundSet::letters(kMaxGroundSize).size(), kMaxGroundSize);
  EXPECT_EQ(GroundSet::letters(0).full(), Subset());
}

TEST(GroundSet, LabelIndexBijection) {
  const GroundSet g = labels({"1", "2", "3", "a", "b", "c"});
  for (int i = 0; i < g.size(); ++i) EXPECT_EQ(g.index_of(g.label(i)), i);
  EXPECT_FALSE(g.index_of("z").has_value());
  EXPECT_EQ(g.format(g.subset({"c", "1"})), "{1,c}");
  EXPECT_THROW(g.subset({"z"}), InputError);
}

TEST(GroundSet, WithoutKeepsOrder) {
  const GroundSet g = GroundSet::letters(5);
  const GroundSet h = g.without(g.subset({"b", "d"}));
  EXPECT_EQ(h, labels({"a", "c", "e"}));
  EXPECT_EQ(compress(g.subset({"a", "e"}), g.subset({"b", "d"})), h.subset({"a", "e"}));
  EXPECT_EQ(expand(h.subset({"c", "e"}), g.subset({"b", "d"})), g.subset({"c", "e"}));
}

TEST(SymDiff, Examples) {
  const GroundSet g = GroundSet::letters(5);
  EXPECT_EQ(sym_diff(g, g.subset({"a", "b"}), g.subset({"b", "c"})), g.subset({"a", "c"}));
  const Subset x = g.subset({"a", "c", "e"});
  EXPECT_EQ(sym_diff(g, x, x), Subset());
  EXPECT_EQ(sym_diff(g, g.subset({"a", "d", "e"}), g.subset({"b"})),
            g.subset({"a", "b", "d", "e"}));
}

TEST(SymDiff, MismatchedGroundIsInputError) {
  const GroundSet g = GroundSet::letters(2);
  EXPECT_THROW(sym_diff(g, Subset(0b1), Subset(0b100)), InputError);
}

// Commutative, associative, identity ∅, self-inverse; exhaustive for n <= 4.
TEST(SymDiff, GroupLawsExhaustive) {
  for (int n = 0; n <= 4; ++n) {
    const GroundSet g = GroundSet::letters(n);
    const std::uint32_t count = g.subset_count();
    for (std::uint32_t a = 0; a < count; ++a) {
      const Subset sa(a);
      EXPECT_EQ(sym_diff(g, sa, Subset()), sa);
      EXPECT_EQ(sym_diff(g, sa, sa), Subset());
      for (std::uint32_t b = 0; b < count; ++b) {
        const Subset sb(b);
        EXPECT_EQ(sym_diff(g, sa, sb), sym_diff(g, sb, sa));
        EXPECT_EQ(oracle::to_set(sym_diff(g, sa, sb)),
                  oracle::sym_diff(oracle::to_set(sa), oracle::to_set(sb)));
        for (std::uint32_t c = 0; c < count; ++c) {
          const Subset sc(c);
          EXPECT_EQ(sym_diff(g, sym_diff(g, sa, sb), sc),
                    sym_diff(g, sa, sym_diff(g, sb, sc)));
        }
      }
    }
  }
}

TEST(SetFamily, CanonicalOrderAndDedup) {
  const GroundSet g = GroundSet::letters(3);
  const SetFamily f = family(g, {{"c"}, {"a"}, {"c"}, {"a", "b"}});
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f.members()[0], g.subset({"a"}));
  EXPECT_EQ(f.members()[1], g.subset({"a", "b"}));
  EXPECT_EQ(f.members()[2], g.subset({"c"}));
  EXPECT_TRUE(f.contains(g.subset({"a", "b"})));
  EXPECT_FALSE(f.contains(g.subset({"b"})));
  EXPECT_THROW(SetFamily(g, {Subset(0b1000)}), InputError);
}

TEST(MinimalMembers, Examples) {
  const GroundSet g = GroundSet::letters(3);
  EXPECT_EQ(minimal_members(family(g, {{"a"}, {"a", "b"}, {"c"}})), family(g, {{"a"}, {"c"}}));
  EXPECT_EQ(minimal_members(SetFamily(g)), SetFamily(g));
}

TEST(MinimalMembers, DependentsOfU23) {
  // Subsets of {1,2,3} of size <= 2 are independent in U_{2,3}.
  const GroundSet g = labels({"1", "2", "3"});
  std::vector<Subset> dependent;
  for (std::uint32_t m = 0; m < g.subset_count(); ++m) {
    if (Subset(m).size() > 2) dependent.emplace_back(m);
  }
  EXPECT_EQ(minimal_members(SetFamily(g, dependent)), family(g, {{"1", "2", "3"}}));
}

TEST(MaximalMembers, Examples) {
  const GroundSet g = GroundSet::letters(3);
  EXPECT_EQ(maximal_members(family(g, {{"a"}, {"a", "b"}, {"c"}})),
            family(g, {{"a", "b"}, {"c"}}));
  const SetFamily single = family(g, {{"b", "c"}});
  EXPECT_EQ(maximal_members(single), single);
}

TEST(MaximalMembers, SizesKPlusMinusOne) {
  const GroundSet g = GroundSet::letters(4);
  EXPECT_EQ(maximal_members(testing::all_of_sizes(g, {1, 3})),
            testing::all_of_sizes(g, {3}));
}

// minimal ⊆ fam and every member contains a minimal member, over every family
// on three elements.
TEST(MinimalMembers, PropertiesExhaustive) {
  const GroundSet g = GroundSet::letters(3);
  for (std::uint32_t code = 0; code < 256; ++code) {
    std::vector<Subset> ms;
    for (std::uint32_t s = 0; s < 8; ++s) {
      if ((code >> s) & 1u) ms.emplace_back(s);
    }
    const SetFamily f(g, ms);
    const SetFamily mins = minimal_members(f);
    EXPECT_EQ(oracle::to_family(mins), oracle::minimal(oracle::to_family(f)));
    for (Subset s : mins) EXPECT_TRUE(f.contains(s));
    for (Subset s : f) {
      EXPECT_TRUE(std::any_of(mins.begin(), mins.end(),
                              [&](Subset m) { return m.is_subset_of(s); }));
    }
  }
}

}  // namespace
}  // namespace dmw
