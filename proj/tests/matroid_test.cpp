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

#include <gtest/gtest.h>

#include <thread>

#include "dmw/graph.hpp"
#include "dmw/small_family.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace dmw {
namespace {

using testing::family;
using testing::labels;

Matroid u23(const char* a, const char* b, const char* c) {
  return uniform(2, labels({a, b, c}));
}

TEST(CheckBasisAxiom, U12) {
  const GroundSet g = GroundSet::letters(2);
  auto r = check_basis_axiom(family(g, {{"a"}, {"b"}}));
  ASSERT_TRUE(std::holds_alternative<Matroid>(r));
  EXPECT_EQ(std::get<Matroid>(r), uniform(1, g));
}

TEST(CheckBasisAxiom, WitnessIsFirstInCanonicalOrder) {
  const GroundSet g = GroundSet::letters(3);
  const SetFamily f = family(g, {{"a"}, {"b", "c"}});
  auto r = check_basis_axiom(f);
  ASSERT_TRUE(std::holds_alternative<ExchangeViolation>(r));
  const auto& v = std::get<ExchangeViolation>(r);
  EXPECT_EQ(v.axiom, Axiom::kBasisExchange);
  EXPECT_EQ(v.first, g.subset({"b", "c"}));
  EXPECT_EQ(v.second, g.subset({"a"}));
  EXPECT_EQ(v.pivot, *g.index_of("b"));
  EXPECT_TRUE(replays(f, v));
  EXPECT_FALSE(oracle::basis_exchange(oracle::to_family(f)));
}

TEST(CheckBasisAxiom, EmptyFamilyIsInputError) {
  EXPECT_THROW(check_basis_axiom(SetFamily(GroundSet::letters(2))), InputError);
}

TEST(CheckBasisAxiom, U23) {
  const GroundSet g = labels({"1", "2", "3"});
  auto r = check_basis_axiom(family(g, {{"1", "2"}, {"1", "3"}, {"2", "3"}}));
  ASSERT_TRUE(std::holds_alternative<Matroid>(r));
  EXPECT_EQ(std::get<Matroid>(r).rank(), 2);
}

TEST(Uniform, Examples) {
  EXPECT_EQ(uniform(0, GroundSet::letters(3)).bases().size(), 1u);
  EXPECT_EQ(uniform(0, GroundSet::letters(3)).bases().members()[0], Subset());
  EXPECT_EQ(uniform(5, labels({"1", "2", "3", "a", "b", "c"})).bases().size(), 6u);
  EXPECT_EQ(u23("1", "2", "3").bases().size(), 3u);
  EXPECT_THROW(uniform(4, GroundSet::letters(3)), InputError);
  EXPECT_THROW(uniform(-1, GroundSet::letters(3)), InputError);
}

TEST(DirectSum, U23PlusU23) {
  const Matroid m = direct_sum(u23("1", "2", "3"), u23("a", "b", "c"));
  EXPECT_EQ(m.ground(), labels({"1", "2", "3", "a", "b", "c"}));
  EXPECT_EQ(m.bases().size(), 9u);
  EXPECT_EQ(m.rank(), 4);
  EXPECT_EQ(oracle::to_family(m.circuits()), oracle::circuits(oracle::to_family(m.bases()), 6));
  EXPECT_EQ(m.circuits(), family(m.ground(), {{"1", "2", "3"}, {"a", "b", "c"}}));
}

TEST(DirectSum, RankZeroSummandAddsLoops) {
  const Matroid m = u23("a", "b", "c");
  const Matroid s = direct_sum(m, uniform(0, labels({"x", "y"})));
  EXPECT_EQ(s.rank(), m.rank());
  EXPECT_EQ(s.bases().size(), m.bases().size());
  for (Subset b : m.bases()) EXPECT_TRUE(s.is_basis(b));
  EXPECT_THROW(direct_sum(m, m), InputError);
}

TEST(Independents, Examples) {
  const GroundSet g = GroundSet::letters(2);
  EXPECT_EQ(independents(uniform(1, g)), family(g, {{}, {"a"}, {"b"}}));
  EXPECT_EQ(independents(u23("1", "2", "3")).size(), 7u);
  const Matroid m = u23("1", "2", "3");
  for (Subset b : m.bases()) EXPECT_TRUE(independents(m).contains(b));
}

TEST(SpanningSets, Examples) {
  const GroundSet g = GroundSet::letters(3);
  EXPECT_EQ(spanning_sets(uniform(0, g)).size(), 8u);
  EXPECT_EQ(spanning_sets(u23("1", "2", "3")).size(), 4u);
  EXPECT_TRUE(spanning_sets(uniform(2, g)).contains(g.full()));
}

TEST(Circuits, Examples) {
  const Matroid m = u23("1", "2", "3");
  EXPECT_EQ(circuits(m), SetFamily(m.ground(), {m.ground().full()}));
  EXPECT_TRUE(circuits(uniform(3, GroundSet::letters(3))).empty());
  const GroundSet six = labels({"1", "2", "3", "a", "b", "c"});
  EXPECT_EQ(circuits(uniform(5, six)), SetFamily(six, {six.full()}));
}

TEST(Dual, Examples) {
  const GroundSet g = GroundSet::letters(6);
  EXPECT_EQ(dual(uniform(5, g)), uniform(1, g));
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(dual(uniform(k, g)), uniform(6 - k, g));
}

TEST(DeleteContract, EmptySetIsIdentity) {
  const Matroid m = direct_sum(u23("1", "2", "3"), uniform(1, labels({"x", "y"})));
  EXPECT_EQ(deletion(m, Subset()), m);
  EXPECT_EQ(contraction(m, Subset()), m);
  EXPECT_THROW(deletion(m, Subset(1u << 7)), InputError);
}

TEST(DeleteContract, ConeOfTriangle) {
  const auto corpus = rigidity_corpus();
  const Multigraph& triangle = corpus[0].second;
  const ConeResult c = cone(triangle);
  EXPECT_EQ(contraction(rigidity_matroid(c.cone_graph), c.cone_edges),
            cycle_matroid(triangle));
}

TEST(UnionOfCircuits, Examples) {
  const Matroid m = u23("a", "b", "c");
  EXPECT_TRUE(is_union_of_circuits(Subset(), m));
  const Matroid sum = direct_sum(u23("1", "2", "3"), u23("a", "b", "c"));
  EXPECT_TRUE(is_union_of_circuits(sum.ground().full(), sum));
  EXPECT_FALSE(is_union_of_circuits(sum.ground().subset({"1", "2", "3", "a"}), sum));
}

TEST(UnionOfCircuits, LoopPlusNonLoopIsNot) {
  // Rank 1 on {a,b,c,d,e}: a, b, c parallel; d and e are loops.
  const GroundSet g = GroundSet::letters(5);
  const Matroid lower = certify_matroid(family(g, {{"a"}, {"b"}, {"c"}}));
  EXPECT_FALSE(is_union_of_circuits(g.subset({"d", "b"}), lower));
  EXPECT_TRUE(is_union_of_circuits(g.subset({"d", "e"}), lower));
}

TEST(Quotient, Examples) {
  const Matroid m = u23("a", "b", "c");
  EXPECT_TRUE(is_quotient(m, m));
  const Matroid sum = direct_sum(u23("1", "2", "3"), u23("a", "b", "c"));
  EXPECT_TRUE(is_quotient(sum, uniform(5, sum.ground())));
  EXPECT_FALSE(is_quotient(uniform(5, sum.ground()), sum));
  EXPECT_THROW(is_quotient(m, uniform(1, labels({"x", "y", "z"}))), InputError);
}

TEST(Circuits, ConcurrentFirstUseIsConsistent) {
  const Matroid m = direct_sum(u23("1", "2", "3"), uniform(2, labels({"a", "b", "c", "d"})));
  std::vector<SetFamily> seen(8);
  {
    std::vector<std::jthread> threads;
    for (std::size_t i = 0; i < seen.size(); ++i) {
      threads.emplace_back([&, i] { seen[i] = m.circuits(); });
    }
  }
  for (const auto& s : seen) EXPECT_EQ(s, seen.front());
}

// Every family on n <= 4 elements against the naive oracles.
class MatroidExhaustive : public ::testing::TestWithParam<int> {};

TEST_P(MatroidExhaustive, AgreesWithOracles) {
  const int n = GetParam();
  const GroundSet g = GroundSet::letters(n);
  int matroids = 0;
  for (FamilyCode code = 1; code <= nonempty_family_count(n); ++code) {
    const SetFamily f = from_code(g, code);
    const oracle::Family of = oracle::to_family(f);
    auto r = check_basis_axiom(f);
    ASSERT_EQ(std::holds_alternative<Matroid>(r), oracle::basis_exchange(of));
    ASSERT_EQ(code_basis_exchange(code, n), oracle::basis_exchange(of));
    if (auto* v = std::get_if<ExchangeViolation>(&r)) {
      EXPECT_TRUE(replays(f, *v));
      continue;
    }
    ++matroids;
    const Matroid& m = std::get<Matroid>(r);
    // Equicardinality.
    EXPECT_EQ(f.min_cardinality(), f.max_cardinality());
    EXPECT_EQ(m.rank(), f.min_cardinality());
    // Independents, spanning sets and circuits.
    EXPECT_EQ(oracle::to_family(independents(m)), oracle::independents(of, n));
    EXPECT_EQ(oracle::to_family(spanning_sets(m)), oracle::spanning(of, n));
    EXPECT_EQ(oracle::to_family(m.circuits()), oracle::circuits(of, n));
    // Independent iff contains no circuit.
    for (std::uint32_t s = 0; s < g.subset_count(); ++s) {
      const bool has_circuit = std::any_of(
          m.circuits().begin(), m.circuits().end(),
          [&](Subset c) { return c.is_subset_of(Subset(s)); });
      EXPECT_EQ(m.is_independent(Subset(s)), !has_circuit);
    }
    // Duality.
    const Matroid d = dual(m);
    for (Subset b : m.bases()) EXPECT_TRUE(d.is_basis(g.full() - b));
    EXPECT_EQ(d.bases().size(), m.bases().size());
    EXPECT_EQ(dual(d), m);
    EXPECT_TRUE(is_quotient(m, m));
  }
  const int expected[] = {1, 2, 5, 16, 68};
  EXPECT_EQ(matroids, expected[n]);
}

TEST_P(MatroidExhaustive, MinorsAgreeWithRankOracle) {
  const int n = GetParam();
  const GroundSet g = GroundSet::letters(n);
  for (FamilyCode code = 1; code <= nonempty_family_count(n); ++code) {
    if (!code_basis_exchange(code, n)) continue;
    const Matroid m = certify_matroid(from_code(g, code));
    const oracle::Family ind = oracle::independents(oracle::to_family(m.bases()), n);
    auto rank = [&](const oracle::Set& a) {
      std::size_t r = 0;
      for (const auto& i : ind) {
        if (oracle::subset_of(i, a)) r = std::max(r, i.size());
      }
      return r;
    };
    for (std::uint32_t x = 0; x < g.subset_count(); ++x) {
      const Subset xs(x);
      const oracle::Set xo = oracle::to_set(xs);
      const Matroid del = deletion(m, xs);
      const Matroid con = contraction(m, xs);
      for (std::uint32_t s = 0; s < del.ground().subset_count(); ++s) {
        const oracle::Set i = oracle::to_set(expand(Subset(s), xs));
        oracle::Set with_x = i;
        with_x.insert(xo.begin(), xo.end());
        EXPECT_EQ(del.is_independent(Subset(s)), ind.count(i) == 1);
        EXPECT_EQ(con.is_independent(Subset(s)), rank(with_x) - rank(xo) == i.size());
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallGrounds, MatroidExhaustive, ::testing::Values(0, 1, 2, 3, 4));

}  // namespace
}  // namespace dmw
