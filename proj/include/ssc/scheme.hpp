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

#ifndef SSC_SCHEME_HPP
#define SSC_SCHEME_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "construction.hpp"

namespace ssc {

/**
 * SplitMix64. State advances by 0x9E3779B97F4A7C15 per draw; the output is
 * the standard two-round xor-shift-multiply finalizer of the new state.
 */
class SplitMix64 {
   public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// next() reduced modulo `bound`.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

   private:
    std::uint64_t state_;
};

/// Shares of one dealing; share j belongs to participant j+1.
struct ShareBundle {
    std::string construction_digest;
    Vec shares;
    std::optional<Vec> dealer_vector;
};

inline Elem inner_product(const Field& f, const Vec& a, const Vec& b) {
    Elem s;
    for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

/// share_j = <a, Φ(P_j)> for an explicit dealer vector a (a_1 is the secret).
inline ShareBundle deal_with_dealer(const VectorSpaceConstruction& phi, const Vec& dealer, std::string digest = {}) {
    if (dealer.size() != phi.dim()) throw InvalidInput("dealer vector length does not match the construction dimension");
    for (auto x : dealer)
        if (!phi.field().contains(x)) throw InvalidInput("dealer vector entry outside the construction field");
    ShareBundle b{std::move(digest), Vec(phi.participants()), dealer};
    for (std::size_t j = 0; j < phi.participants(); ++j) b.shares[j] = inner_product(phi.field(), dealer, phi[j]);
    return b;
}

/**
 * Dealer vector (secret, r_2, ..., r_D) with r_i = next() mod q drawn in
 * order from SplitMix64(seed). The dealer vector is kept only if asked for.
 */
inline ShareBundle deal(const VectorSpaceConstruction& phi, Elem secret, std::uint64_t seed, std::string digest = {}, bool keep_dealer = false) {
    if (!phi.field().contains(secret)) throw InvalidInput("secret encoding " + std::to_string(secret.v) + " is not an element of " + phi.field().name());
    SplitMix64 rng(seed);
    Vec a(phi.dim());
    a[0] = secret;
    for (std::size_t i = 1; i < a.size(); ++i) a[i] = Elem{static_cast<std::uint32_t>(rng.below(phi.field().order()))};
    auto b = deal_with_dealer(phi, a, std::move(digest));
    if (!keep_dealer) b.dealer_vector.reset();
    return b;
}

/**
 * Recovers the secret from the shares of coalition A. `shares` is indexed by
 * participant (entry j for participant j+1); only entries in A are read.
 */
inline Elem reconstruct(const VectorSpaceConstruction& phi, SupportSet a, const Vec& shares) {
    const Field& f = phi.field();
    if (a.max_index() > phi.participants()) throw InvalidInput("coalition " + a.to_string() + " exceeds participant count");
    if (shares.size() < a.max_index()) throw InvalidInput("missing shares for coalition " + a.to_string());
    const auto vs = phi.vectors_of(a);
    const auto idx = a.indices();
    auto lambda = solve_membership(f, vs, phi.target());
    if (!lambda) throw UnqualifiedSet("coalition " + a.to_string() + " is not qualified");

    // Overdetermined coalitions: the shares must satisfy M a = s for some a.
    Matrix aug(f, idx.size(), phi.dim() + 1);
    for (std::size_t r = 0; r < idx.size(); ++r) {
        for (std::size_t c = 0; c < phi.dim(); ++c) aug(r, c) = vs[r][c];
        aug(r, phi.dim()) = shares[idx[r] - 1];
    }
    const auto red = rref(std::move(aug));
    if (red.rank > 0 && red.pivots.back() == phi.dim()) throw InconsistentShares("shares of " + a.to_string() + " are not consistent with any dealing");

    Elem secret;
    for (std::size_t r = 0; r < idx.size(); ++r) secret = f.add(secret, f.mul((*lambda)[r], shares[idx[r] - 1]));
    return secret;
}

enum class AuditVerdict { Perfect, Determined, Leaky };

inline const char* to_string(AuditVerdict v) {
    switch (v) {
        case AuditVerdict::Perfect: return "PERFECT";
        case AuditVerdict::Determined: return "DETERMINED";
        default: return "LEAKY";
    }
}

/// One bucket per observed share tuple of A: how often each secret occurs.
struct AuditReport {
    AuditVerdict verdict = AuditVerdict::Leaky;
    std::uint64_t dealings = 0;
    std::map<Vec, std::vector<std::uint64_t>> buckets;
};

/// Cap on q^D for an exhaustive audit.
inline constexpr std::uint64_t kMaxAuditDealings = 1ull << 16;

/**
 * Enumerates every dealer vector and buckets the dealings by the shares A
 * sees. PERFECT: within each bucket every secret occurs equally often.
 * DETERMINED: each bucket holds a single secret.
 */
inline AuditReport perfectness_audit(const VectorSpaceConstruction& phi, SupportSet a) {
    const Field& f = phi.field();
    const std::uint64_t q = f.order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < phi.dim(); ++i) {
        total *= q;
        if (total > kMaxAuditDealings) throw BoundExceeded("audit needs q^D <= 2^16 dealer vectors");
    }
    const auto vs = phi.vectors_of(a);

    AuditReport rep;
    rep.dealings = total;
    Vec dealer(phi.dim());
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t x = code;
        for (auto& d : dealer) {
            d = Elem{static_cast<std::uint32_t>(x % q)};
            x /= q;
        }
        Vec seen(vs.size());
        for (std::size_t r = 0; r < vs.size(); ++r) seen[r] = inner_product(f, dealer, vs[r]);
        auto& counts = rep.buckets[seen];
        if (counts.empty()) counts.assign(q, 0);
        ++counts[dealer[0].v];
    }

    bool uniform = true, single = true;
    for (const auto& [key, counts] : rep.buckets) {
        std::size_t distinct = 0;
        for (auto c : counts) {
            if (c != counts[0]) uniform = false;
            if (c) ++distinct;
        }
        if (distinct != 1) single = false;
    }
    rep.verdict = uniform ? AuditVerdict::Perfect : single ? AuditVerdict::Determined : AuditVerdict::Leaky;
    return rep;
}

}  // namespace ssc

#endif  // SSC_SCHEME_HPP
