/*
   Copyright 2026 The ssc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include "naive.hpp"
#include "ssc/access.hpp"
#include "ssc/corpus.hpp"
#include "ssc/probe.hpp"

using namespace ssc;

namespace {

using Family = std::vector<SupportSet>;

Vec v(std::initializer_list<std::uint32_t> xs) {
    Vec out;
    for (auto x : xs) out.push_back(Elem{x});
    return out;
}

/// Random monotone structure: the closure of a few random nonempty sets.
AccessStructure random_structure(std::size_t n, SplitMix64& rng) {
    Family fam;
    const std::size_t count = 1 + rng.below(4);
    for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t m = 0;
        while (m == 0) m = rng.below(std::uint64_t{1} << n);
        fam.emplace_back(m);
    }
    return AccessStructure::from_supports(n, fam);
}

/// Dual from the definition: A qualifies iff its complement does not.
bool naive_dual_qualified(const AccessStructure& g, std::uint64_t a) {
    return !g.is_qualified(SupportSet(SupportSet::full(g.participants()).mask() & ~a));
}

const Field& gf2() {
    static const Field f = field_make(2, 1);
    return f;
}

}  // namespace

TEST(Support, LexOrderAndPrinting) {
    const SupportSet a{1, 3}, b{1, 2, 3}, c{2};
    EXPECT_TRUE(lex_less(b, a));
    EXPECT_TRUE(lex_less(a, c));
    EXPECT_EQ(a.to_string(), "{1,3}");
    EXPECT_EQ(a.indices(), (std::vector<std::size_t>{1, 3}));
    EXPECT_THROW(SupportSet({0}), InvalidInput);
    EXPECT_THROW(SupportSet({65}), InvalidInput);
}

TEST(Structure, ClosureDiscardsSupersets) {
    EXPECT_EQ(AccessStructure::from_supports(3, {{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}}).minimal(), (Family{{1, 2}, {1, 3}, {2, 3}}));
    EXPECT_EQ(AccessStructure::from_supports(3, {{1}, {1, 2}}).minimal(), (Family{{1}}));
    EXPECT_EQ(AccessStructure::from_supports(4, {{1, 3}, {2, 4}}).minimal(), (Family{{1, 3}, {2, 4}}));
}

TEST(Structure, RejectsInvalidFamilies) {
    EXPECT_THROW(AccessStructure::from_supports(3, {}), InvalidInput);
    EXPECT_THROW(AccessStructure::from_supports(3, {SupportSet{}}), InvalidInput);
    EXPECT_THROW(AccessStructure::from_supports(2, {{1, 3}}), InvalidInput);
    EXPECT_THROW(AccessStructure::from_supports(65, {{1}}), BoundExceeded);
}

TEST(Structure, OfCode) {
    const LinearCode even = code_from_parity(Matrix::from_rows(gf2(), 3, {v({1, 1, 1})}), 3);
    EXPECT_EQ(structure_of_code(even), threshold(2, 3));
    EXPECT_EQ(structure_of_code(LinearCode(Matrix::from_rows(gf2(), 3, {v({1, 1, 1})}))), threshold(3, 3));
    EXPECT_EQ(structure_of_code(reed_solomon(3, 2, field_make(2, 2))), threshold(2, 3));
}

TEST(Structure, Thresholds) {
    EXPECT_EQ(threshold(1, 2).minimal(), (Family{{1}, {2}}));
    EXPECT_EQ(threshold(2, 3).minimal(), (Family{{1, 2}, {1, 3}, {2, 3}}));
    EXPECT_EQ(threshold(3, 3).minimal(), (Family{{1, 2, 3}}));
    EXPECT_THROW(threshold(0, 3), InvalidInput);
    EXPECT_THROW(threshold(4, 3), InvalidInput);
}

TEST(Structure, Qualification) {
    EXPECT_TRUE(is_qualified(threshold(2, 3), {1, 3}));
    EXPECT_FALSE(is_qualified(threshold(2, 3), {2}));
    EXPECT_TRUE(is_qualified(AccessStructure::from_supports(4, {{1, 3}, {2, 4}}), {1, 2, 3}));
    EXPECT_THROW(is_qualified(threshold(2, 3), {4}), InvalidInput);
}

TEST(Structure, QualificationIsMonotone) {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng.below(6);
        const auto g = random_structure(n, rng);
        EXPECT_TRUE(is_antichain(g.minimal()));
        const std::uint64_t full = SupportSet::full(n).mask();
        for (std::uint64_t a = 0; a <= full; ++a)
            for (std::uint64_t b = a; b <= full; ++b)
                if ((a & ~b) == 0 && g.is_qualified(SupportSet(a))) {
                    ASSERT_TRUE(g.is_qualified(SupportSet(b)));
                }
    }
}

TEST(Dual, Examples) {
    EXPECT_EQ(dual_structure(threshold(2, 3)), threshold(2, 3));
    EXPECT_EQ(dual_structure(threshold(1, 2)), threshold(2, 2));
    const auto g = AccessStructure::from_supports(4, {{1, 3}, {2, 4}});
    EXPECT_EQ(dual_structure(dual_structure(g)), g);
}

TEST(Dual, ThresholdDuality) {
    for (std::size_t n = 1; n <= 7; ++n)
        for (std::size_t t = 1; t <= n; ++t) EXPECT_EQ(dual_structure(threshold(t, n)), threshold(n - t + 1, n));
}

TEST(Dual, MatchesDefinitionAndIsInvolution) {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng.below(10);
        const auto g = random_structure(n, rng);
        const auto d = dual_structure(g);
        EXPECT_TRUE(is_antichain(d.minimal()));
        for (std::uint64_t a = 0; a <= SupportSet::full(n).mask(); ++a) ASSERT_EQ(d.is_qualified(SupportSet(a)), naive_dual_qualified(g, a));
        EXPECT_EQ(dual_structure(d), g);
    }
}

TEST(Dual, RespectsScanLimit) {
    EXPECT_THROW(dual_structure(threshold(2, 21)), BoundExceeded);
    EXPECT_THROW(dual_structure(threshold(2, 5), ScanLimits{16}), BoundExceeded);
}

TEST(Partition, RestrictAndLift) {
    const BlockPartition p({2, 1, 3});
    EXPECT_EQ(p.total(), 6u);
    EXPECT_EQ(p.restrict(SupportSet{2, 3, 6}, 0), (SupportSet{2}));
    EXPECT_EQ(p.restrict(SupportSet{2, 3, 6}, 1), (SupportSet{1}));
    EXPECT_EQ(p.restrict(SupportSet{2, 3, 6}, 2), (SupportSet{3}));
    EXPECT_EQ(p.lift(SupportSet{1, 3}, 2), (SupportSet{4, 6}));
    EXPECT_THROW(BlockPartition({2, 0}), InvalidInput);
}

TEST(Compose, Examples) {
    const BlockPartition p({2, 1});
    EXPECT_EQ(compose(threshold(2, 2), {threshold(1, 2), threshold(1, 1)}, p).minimal(), (Family{{1, 3}, {2, 3}}));
    EXPECT_EQ(compose(threshold(1, 2), {threshold(1, 2), threshold(1, 1)}, p).minimal(), (Family{{1}, {2}, {3}}));
    const auto g = AccessStructure::from_supports(4, {{1, 3}, {2, 4}});
    EXPECT_EQ(compose(threshold(1, 1), {g}, BlockPartition({4})), g);
}

TEST(Compose, RejectsMismatches) {
    EXPECT_THROW(compose(threshold(2, 2), {threshold(1, 2)}, BlockPartition({2})), InvalidInput);
    EXPECT_THROW(compose(threshold(1, 2), {threshold(1, 2), threshold(1, 1)}, BlockPartition({2, 2})), InvalidInput);
}

TEST(Compose, AgreesWithDefiningUnion) {
    for (const auto& inst : corpus::random_composites(20, 77)) {
        const auto g = compose(inst.outer, inst.parts(), inst.partition);
        const auto parts = inst.parts();
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << inst.partition.total()); ++a) {
            // some qualified block set each of whose blocks qualifies locally
            bool expected = false;
            for (std::uint64_t b = 0; b < (std::uint64_t{1} << parts.size()) && !expected; ++b) {
                if (!inst.outer.is_qualified(SupportSet(b))) continue;
                bool all = true;
                for (std::size_t i = 0; i < parts.size(); ++i)
                    if ((b >> i) & 1) all = all && parts[i].is_qualified(inst.partition.restrict(SupportSet(a), i));
                expected = all;
            }
            ASSERT_EQ(g.is_qualified(SupportSet(a)), expected);
        }
    }
}

TEST(Probe, EvenWeightSingleBlock) {
    const LinearCode even = code_from_parity(Matrix::from_rows(gf2(), 3, {v({1, 1, 1})}), 3);
    const auto r = probe_propositions(threshold(1, 1), {even}, BlockPartition({3}));
    EXPECT_TRUE(r.minimal_sets.equal);
    EXPECT_EQ(r.composite, threshold(2, 3));
    EXPECT_EQ(r.dual_of_composite, threshold(2, 3));
    EXPECT_EQ(r.composite_of_duals, threshold(3, 3));
    EXPECT_FALSE(r.duality.equal);
    EXPECT_EQ(r.duality.counterexample, (SupportSet{1, 2}));
    const auto orc = oracle::duality_oracle(threshold(1, 1), {even}, BlockPartition({3}));
    EXPECT_FALSE(orc.equal);
    EXPECT_EQ(orc.counterexample, (SupportSet{1, 2}));
}

TEST(Probe, TwoRepetitionBlocks) {
    const LinearCode rep(Matrix::from_rows(gf2(), 2, {v({1, 1})}));
    const auto r = probe_propositions(threshold(2, 2), {rep, rep}, BlockPartition({2, 2}));
    EXPECT_TRUE(r.minimal_sets.equal);
    EXPECT_EQ(r.composite.minimal(), (Family{{1, 2, 3, 4}}));
}

TEST(Probe, FullCodeHasEmptyDualStructure) {
    const LinearCode full(Matrix::identity(gf2(), 1));
    const auto r = probe_propositions(threshold(1, 1), {full}, BlockPartition({1}));
    EXPECT_TRUE(r.composite_of_duals.is_empty());
    EXPECT_FALSE(r.duality.equal);
    EXPECT_EQ(r.duality.counterexample, (SupportSet{1}));
}

TEST(Probe, RejectsMixedCharacteristic) {
    const LinearCode a(Matrix::identity(gf2(), 1)), b(Matrix::identity(field_make(3, 1), 1));
    EXPECT_THROW(probe_propositions(threshold(1, 2), {a, b}, BlockPartition({1, 1})), InvalidInput);
}
