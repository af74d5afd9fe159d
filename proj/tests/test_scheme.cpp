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
#include "ssc/corpus.hpp"
#include "ssc/scheme.hpp"

using namespace ssc;

namespace {

Vec v(std::initializer_list<std::uint32_t> xs) {
    Vec out;
    for (auto x : xs) out.push_back(Elem{x});
    return out;
}

const Field& gf4() {
    static const Field f = field_make(2, 2);
    return f;
}

/// Φ = {(1,ω²),(1,ω),(1,1)} over GF(4), the code construction of the even-weight [3,2] code.
VectorSpaceConstruction phi23() { return {gf4(), 2, {v({1, 3}), v({1, 2}), v({1, 1})}}; }

}  // namespace

TEST(SplitMix, ReferenceVector) {
    SplitMix64 rng(1234567);
    EXPECT_EQ(rng.next(), 6457827717110365317ull);
    EXPECT_EQ(rng.next(), 3203168211198807973ull);
    EXPECT_EQ(rng.next(), 9817491932198370423ull);
}

TEST(Deal, ExplicitDealerVector) {
    // a = (ω, 1): s1 = ω + ω² = 1, s2 = ω + ω = 0, s3 = ω + 1 = ω²
    const auto b = deal_with_dealer(phi23(), v({2, 1}));
    EXPECT_EQ(b.shares, v({1, 0, 3}));
}

TEST(Deal, ZeroDealerGivesZeroShares) { EXPECT_EQ(deal_with_dealer(phi23(), v({0, 0})).shares, v({0, 0, 0})); }

TEST(Deal, OneDimensionalShareIsSecret) {
    const auto phi = trivial_construction(gf4());
    for (std::uint32_t s = 0; s < 4; ++s) EXPECT_EQ(deal(phi, Elem{s}, 99).shares, v({s}));
}

TEST(Deal, SeededDealerMatchesGenerator) {
    const auto b = deal(phi23(), Elem{2}, 7, "", true);
    ASSERT_TRUE(b.dealer_vector);
    SplitMix64 rng(7);
    EXPECT_EQ(*b.dealer_vector, v({2, static_cast<std::uint32_t>(rng.next() % 4)}));
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(b.shares[j], inner_product(gf4(), *b.dealer_vector, phi23()[j]));
    EXPECT_FALSE(deal(phi23(), Elem{2}, 7).dealer_vector);
    EXPECT_EQ(deal(phi23(), Elem{2}, 7).shares, b.shares);
}

TEST(Deal, RejectsForeignSecret) { EXPECT_THROW(deal(phi23(), Elem{4}, 1), InvalidInput); }

TEST(Reconstruct, Examples) {
    const Vec shares = v({1, 0, 3});
    EXPECT_EQ(reconstruct(phi23(), {1, 2}, shares), Elem{2});
    EXPECT_THROW(reconstruct(phi23(), {2}, shares), UnqualifiedSet);
    EXPECT_EQ(reconstruct(phi23(), {1, 2, 3}, shares), Elem{2});
}

TEST(Reconstruct, InconsistentSharesDetected) { EXPECT_THROW(reconstruct(phi23(), {1, 2, 3}, v({1, 0, 0})), InconsistentShares); }

TEST(Reconstruct, RoundTripOverEveryQualifiedSet) {
    for (const auto& [phi, gamma] : corpus::scheme_constructions()) {
        const std::uint32_t q = phi.field().order();
        for (std::uint64_t seed = 10; seed < 13; ++seed) {
            const Elem secret{static_cast<std::uint32_t>(seed % q)};
            const auto b = deal(phi, secret, seed);
            for (std::uint64_t a = 1; a < (std::uint64_t{1} << phi.participants()); ++a) {
                if (gamma.is_qualified(SupportSet(a))) {
                    ASSERT_EQ(reconstruct(phi, SupportSet(a), b.shares), secret);
                } else {
                    ASSERT_THROW(reconstruct(phi, SupportSet(a), b.shares), UnqualifiedSet);
                }
            }
        }
    }
}

TEST(Audit, Examples) {
    const auto single = perfectness_audit(phi23(), {2});
    EXPECT_EQ(single.verdict, AuditVerdict::Perfect);
    EXPECT_EQ(single.dealings, 16u);
    EXPECT_EQ(single.buckets.size(), 4u);
    for (const auto& [key, counts] : single.buckets) EXPECT_EQ(counts, (std::vector<std::uint64_t>{1, 1, 1, 1}));
    EXPECT_EQ(perfectness_audit(phi23(), {1, 2}).verdict, AuditVerdict::Determined);
    const auto none = perfectness_audit(phi23(), SupportSet{});
    EXPECT_EQ(none.verdict, AuditVerdict::Perfect);
    EXPECT_EQ(none.buckets.size(), 1u);
}

TEST(Audit, VerdictFollowsSpanMembership) {
    SplitMix64 rng(21);
    const Field f3 = field_make(3, 1);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng.below(4), d = 1 + rng.below(3);
        std::vector<Vec> table(n, Vec(d));
        for (auto& x : table)
            for (auto& e : x) e = Elem{static_cast<std::uint32_t>(rng.below(3))};
        const VectorSpaceConstruction phi(f3, d, table);
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
            const bool reach = naive::span_contains(f3, phi.vectors_of(SupportSet(a)), phi.target());
            ASSERT_EQ(perfectness_audit(phi, SupportSet(a)).verdict, reach ? AuditVerdict::Determined : AuditVerdict::Perfect);
        }
    }
}

TEST(Audit, BoundEnforced) {
    const VectorSpaceConstruction phi(field_make(2, 4), 5, {v({1, 0, 0, 0, 0})});
    EXPECT_THROW(perfectness_audit(phi, {1}), BoundExceeded);
}
