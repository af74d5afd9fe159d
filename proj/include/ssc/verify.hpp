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

#ifndef SSC_VERIFY_HPP
#define SSC_VERIFY_HPP

// Brute-force oracles. Everything here works directly from definitions
// (raw codeword lists, explicit subset predicates) and deliberately avoids
// the RREF, kernel and antichain machinery it is used to check.

#include <set>
#include <string>
#include <vector>

#include "access.hpp"
#include "codes.hpp"
#include "construction.hpp"

namespace ssc::oracle {

/// Every codeword m·G, each computed from scratch.
inline std::vector<Vec> codewords(const LinearCode& c) {
    if (c.codeword_count() > kMaxCodewords) throw BoundExceeded("oracle enumeration bound exceeded");
    const Field& f = c.field();
    const std::size_t k = c.dimension(), n = c.length();
    const std::uint64_t total = c.codeword_count();
    std::vector<Vec> out;
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Vec w(n);
        std::uint64_t x = idx;
        for (std::size_t i = 0; i < k; ++i) {
            const Elem coef{static_cast<std::uint32_t>(x % f.order())};
            x /= f.order();
            for (std::size_t j = 0; j < n; ++j) w[j] = f.add(w[j], f.mul(coef, c.generator()(i, j)));
        }
        out.push_back(std::move(w));
    }
    return out;
}

/// All x in F^n orthogonal to every generator row: the dual code, by exhaustion over F^n.
inline std::vector<Vec> dual_codewords(const LinearCode& c) {
    const Field& f = c.field();
    const std::size_t n = c.length();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= f.order();
        if (total > kMaxCodewords) throw BoundExceeded("oracle enumeration bound exceeded");
    }
    std::vector<Vec> out;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Vec x(n);
        std::uint64_t t = idx;
        for (auto& e : x) {
            e = Elem{static_cast<std::uint32_t>(t % f.order())};
            t /= f.order();
        }
        bool orthogonal = true;
        for (std::size_t r = 0; r < c.dimension() && orthogonal; ++r) {
            Elem s;
            for (std::size_t j = 0; j < n; ++j) s = f.add(s, f.mul(c.generator()(r, j), x[j]));
            orthogonal = s.is_zero();
        }
        if (orthogonal) out.push_back(std::move(x));
    }
    return out;
}

inline std::set<std::uint64_t> nonzero_supports(const std::vector<Vec>& words) {
    std::set<std::uint64_t> s;
    for (const auto& w : words) {
        std::uint64_t m = 0;
        for (std::size_t j = 0; j < w.size(); ++j)
            if (!w[j].is_zero()) m |= 1ull << j;
        if (m) s.insert(m);
    }
    return s;
}

/// Supports not strictly containing another support.
inline std::set<std::uint64_t> minimal_of(const std::set<std::uint64_t>& supports) {
    std::set<std::uint64_t> out;
    for (auto a : supports) {
        bool minimal = true;
        for (auto b : supports)
            if (b != a && (b & ~a) == 0) {
                minimal = false;
                break;
            }
        if (minimal) out.insert(a);
    }
    return out;
}

inline bool contains_some(const std::set<std::uint64_t>& supports, std::uint64_t a) {
    for (auto s : supports)
        if ((s & ~a) == 0) return true;
    return false;
}

/// Result of checking a sum-normalization against its input code.
struct LemmaCheck {
    bool same_structure = false;
    bool witnesses_exist = false;
    bool table_valid = false;
    std::string failure;

    bool ok() const { return same_structure && witnesses_exist && table_valid; }
};

/**
 * Checks, by enumerating every codeword of both codes: (1) the original and
 * normalized codes have the same minimal supports; (2) every minimal support
 * of the normalized code is the exact support of a codeword with nonzero
 * coordinate sum. Also checks the returned witness table entry by entry.
 */
inline LemmaCheck check_lemma(const LinearCode& original, const NormalizedCode& result) {
    LemmaCheck r;
    const auto before = minimal_of(nonzero_supports(codewords(original)));
    const auto words = codewords(result.code);
    const auto after = minimal_of(nonzero_supports(words));
    const Field& f = result.code.field();

    r.same_structure = before == after;
    if (!r.same_structure) r.failure = "minimal supports changed";

    r.witnesses_exist = true;
    for (auto s : after) {
        bool found = false;
        for (const auto& w : words) {
            std::uint64_t m = 0;
            Elem sum;
            for (std::size_t j = 0; j < w.size(); ++j) {
                if (!w[j].is_zero()) m |= 1ull << j;
                sum = f.add(sum, w[j]);
            }
            if (m == s && !sum.is_zero()) {
                found = true;
                break;
            }
        }
        if (!found) {
            r.witnesses_exist = false;
            r.failure = "support " + SupportSet(s).to_string() + " has no codeword with nonzero sum";
            break;
        }
    }

    r.table_valid = result.witnesses.supports.size() == after.size() && result.witnesses.witnesses.size() == after.size();
    for (std::size_t t = 0; r.table_valid && t < result.witnesses.supports.size(); ++t) {
        const Vec& w = result.witnesses.witnesses[t];
        std::uint64_t m = 0;
        Elem sum;
        for (std::size_t j = 0; j < w.size(); ++j) {
            if (!w[j].is_zero()) m |= 1ull << j;
            sum = f.add(sum, w[j]);
        }
        bool in_kernel = true;
        for (std::size_t row = 0; row < result.parity.rows(); ++row) {
            Elem acc;
            for (std::size_t j = 0; j < w.size(); ++j) acc = f.add(acc, f.mul(result.parity(row, j), w[j]));
            in_kernel = in_kernel && acc.is_zero();
        }
        if (m != result.witnesses.supports[t].mask() || sum.is_zero() || !in_kernel || !after.count(m)) {
            r.table_valid = false;
            if (r.failure.empty()) r.failure = "witness " + std::to_string(t + 1) + " is invalid";
        }
    }
    if (!r.table_valid && r.failure.empty()) r.failure = "witness table size mismatch";
    return r;
}

/**
 * Qualification in Γ0[Γ_C1..Γ_Cr] straight from the defining union: some
 * block set B qualified in Γ0 such that every block in B contains a nonzero
 * codeword support. `supports[i]` are the codeword supports of C_i and
 * `outer(B)` decides Γ0.
 */
template <class OuterPredicate>
bool composite_qualified(const OuterPredicate& outer, const std::vector<std::set<std::uint64_t>>& supports, const BlockPartition& partition,
                         std::uint64_t a) {
    const std::size_t r = supports.size();
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << r); ++b) {
        if (!outer(b)) continue;
        bool all = true;
        for (std::size_t i = 0; i < r && all; ++i)
            if ((b >> i) & 1) all = contains_some(supports[i], partition.restrict(SupportSet(a), i).mask());
        if (all) return true;
    }
    return false;
}

/// Outcome of the duality identity evaluated from definitions.
struct DualityOracle {
    bool equal = true;
    std::optional<SupportSet> counterexample;
};

/**
 * LHS(A) = not qualified(P \ A) in Γ0[Γ_Ci]; RHS(A) = qualified in
 * Γ0*[Γ_{Ci⊥}] with Γ0*(B) = not Γ0(blocks \ B) and the dual codes found by
 * exhaustive orthogonality search.
 */
inline DualityOracle duality_oracle(const AccessStructure& g0, const std::vector<LinearCode>& codes, const BlockPartition& partition) {
    std::vector<std::set<std::uint64_t>> sup, dual_sup;
    for (const auto& c : codes) {
        sup.push_back(nonzero_supports(codewords(c)));
        dual_sup.push_back(nonzero_supports(dual_codewords(c)));
    }
    const std::size_t r = codes.size();
    const std::uint64_t all_blocks = (std::uint64_t{1} << r) - 1;
    auto outer = [&](std::uint64_t b) { return g0.is_qualified(SupportSet(b)); };
    auto outer_dual = [&](std::uint64_t b) { return !g0.is_qualified(SupportSet(all_blocks & ~b)); };

    const std::size_t n = partition.total();
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    DualityOracle out;
    for (std::uint64_t a = 0; a <= full; ++a) {
        const bool lhs = !composite_qualified(outer, sup, partition, full & ~a);
        const bool rhs = composite_qualified(outer_dual, dual_sup, partition, a);
        if (lhs != rhs && (!out.counterexample || lex_less(SupportSet(a), *out.counterexample))) {
            out.equal = false;
            out.counterexample = SupportSet(a);
        }
    }
    return out;
}

}  // namespace ssc::oracle

#endif  // SSC_VERIFY_HPP
