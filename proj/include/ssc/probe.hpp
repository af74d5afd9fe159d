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

#ifndef SSC_PROBE_HPP
#define SSC_PROBE_HPP

#include <optional>
#include <string>
#include <vector>

#include "access.hpp"
#include "codes.hpp"

namespace ssc {

struct IdentityVerdict {
    bool equal = true;
    std::optional<SupportSet> counterexample;
};

/**
 * Empirical check of two identities for composites over codes:
 *
 *   (a) minimal sets of Γ0[Γ_C1..Γ_Cr] equal the unions ∪_{i∈B} S_i over
 *       B in Γ0^m and S_i a minimal support of C_i;
 *   (b) the dual of Γ0[Γ_C1..Γ_Cr] equals Γ0*[Γ_{C1⊥}..Γ_{Cr⊥}].
 *
 * Neither identity is assumed; each verdict carries the lexicographically
 * first subset on which the two sides disagree. For (a) that is a member of
 * exactly one family; for (b) a coalition qualified on exactly one side.
 */
struct PropositionReport {
    IdentityVerdict minimal_sets;
    IdentityVerdict duality;
    AccessStructure composite;
    AccessStructure dual_of_composite;
    AccessStructure composite_of_duals;
};

namespace detail {

inline std::optional<SupportSet> first_difference(const std::vector<SupportSet>& a, const std::vector<SupportSet>& b) {
    std::optional<SupportSet> best;
    auto consider = [&](SupportSet s) {
        if (!best || lex_less(s, *best)) best = s;
    };
    for (auto s : a)
        if (std::find(b.begin(), b.end(), s) == b.end()) consider(s);
    for (auto s : b)
        if (std::find(a.begin(), a.end(), s) == a.end()) consider(s);
    return best;
}

inline std::optional<SupportSet> first_disagreement(const AccessStructure& x, const AccessStructure& y) {
    std::optional<SupportSet> best;
    const std::uint64_t count = std::uint64_t{1} << x.participants();
    for (std::uint64_t a = 0; a < count; ++a) {
        const SupportSet s(a);
        if (x.is_qualified(s) != y.is_qualified(s) && (!best || lex_less(s, *best))) best = s;
    }
    return best;
}

}  // namespace detail

/// Γ_C⊥, or the empty structure when C is the full code (its dual is zero).
inline AccessStructure structure_of_dual(const LinearCode& c) {
    if (c.dimension() == c.length()) return AccessStructure::empty(c.length());
    return structure_of_code(dual_code(c));
}

inline PropositionReport probe_propositions(const AccessStructure& g0, const std::vector<LinearCode>& codes, const BlockPartition& partition,
                                            const ScanLimits& lim = {}) {
    if (!codes.empty()) {
        const auto p = codes.front().field().characteristic();
        for (const auto& c : codes)
            if (c.field().characteristic() != p) throw InvalidInput("probe codes must share one characteristic");
    }
    std::vector<AccessStructure> parts, dual_parts;
    std::vector<std::vector<SupportSet>> mins;
    for (const auto& c : codes) {
        mins.push_back(minimal_supports(c));
        parts.push_back(AccessStructure::from_supports(c.length(), mins.back()));
        dual_parts.push_back(structure_of_dual(c));
    }
    auto composite = compose(g0, parts, partition, lim);

    // (a): unions of minimal supports over minimal block sets
    std::vector<SupportSet> unions;
    for (auto b : g0.minimal()) {
        std::vector<SupportSet> acc{SupportSet{}};
        for (auto i1 : b.indices()) {
            const std::size_t i = i1 - 1;
            std::vector<SupportSet> next;
            for (auto u : acc)
                for (auto s : mins[i]) next.emplace_back(u.mask() | partition.lift(s, i).mask());
            acc = std::move(next);
        }
        unions.insert(unions.end(), acc.begin(), acc.end());
    }
    sort_lex(unions);
    IdentityVerdict va;
    va.counterexample = detail::first_difference(composite.minimal(), unions);
    va.equal = !va.counterexample;

    // (b)
    auto lhs = dual_structure(composite, lim);
    auto rhs = compose(dual_structure(g0, lim), dual_parts, partition, lim);
    IdentityVerdict vb;
    vb.counterexample = detail::first_disagreement(lhs, rhs);
    vb.equal = !vb.counterexample;

    return {va, vb, std::move(composite), std::move(lhs), std::move(rhs)};
}

}  // namespace ssc

#endif  // SSC_PROBE_HPP
