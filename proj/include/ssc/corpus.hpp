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

#ifndef SSC_CORPUS_HPP
#define SSC_CORPUS_HPP

// Desk-scale verification suites. Each suite is exact (no tolerances) and
// carries a wall-clock budget that is part of its pass condition.

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "access.hpp"
#include "codes.hpp"
#include "construction.hpp"
#include "probe.hpp"
#include "scheme.hpp"
#include "verify.hpp"

namespace ssc::corpus {

/// Every code of length n over f, one per subspace, given by its RREF generator.
inline std::vector<LinearCode> rref_codes(const Field& f, std::size_t n) {
    std::vector<LinearCode> out;
    const std::uint32_t q = f.order();
    for (std::size_t k = 1; k <= n; ++k) {
        // pivot column sets in lexicographic order
        std::vector<std::size_t> piv(k);
        std::iota(piv.begin(), piv.end(), std::size_t{0});
        while (true) {
            std::vector<bool> is_piv(n, false);
            for (auto c : piv) is_piv[c] = true;
            std::vector<std::pair<std::size_t, std::size_t>> free;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = piv[i] + 1; j < n; ++j)
                    if (!is_piv[j]) free.emplace_back(i, j);
            std::uint64_t combos = 1;
            for (std::size_t i = 0; i < free.size(); ++i) combos *= q;
            for (std::uint64_t x = 0; x < combos; ++x) {
                Matrix g(f, k, n);
                for (std::size_t i = 0; i < k; ++i) g(i, piv[i]) = f.one();
                std::uint64_t t = x;
                for (auto [i, j] : free) {
                    g(i, j) = Elem{static_cast<std::uint32_t>(t % q)};
                    t /= q;
                }
                out.emplace_back(std::move(g));
            }
            std::size_t i = k;
            while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++piv[i - 1];
            for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
        }
    }
    return out;
}

/// All binary codes of length 1..max_n.
inline std::vector<LinearCode> binary_corpus(std::size_t max_n = 5) {
    const Field f2 = field_make(2, 1);
    std::vector<LinearCode> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        auto codes = rref_codes(f2, n);
        out.insert(out.end(), codes.begin(), codes.end());
    }
    return out;
}

/// Γ0 = (t,r) threshold with its Vandermonde construction, over r code blocks.
struct CompositeInstance {
    std::size_t t = 1;
    AccessStructure outer;
    VectorSpaceConstruction outer_phi;
    std::vector<LinearCode> codes;
    BlockPartition partition;

    std::vector<AccessStructure> parts() const {
        std::vector<AccessStructure> v;
        for (const auto& c : codes) v.push_back(structure_of_code(c));
        return v;
    }
};

/// Smallest GF(p^m) with at least r nonzero elements.
inline Field field_for_points(std::uint32_t p, std::size_t r) {
    std::uint32_t m = 1;
    while (ssc::detail::ipow(p, m) - 1 < r) ++m;
    return field_make(p, m);
}

inline LinearCode random_code(const Field& f, std::size_t n, std::size_t k, SplitMix64& rng) {
    while (true) {
        Matrix g(f, k, n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) g(i, j) = Elem{static_cast<std::uint32_t>(rng.below(f.order()))};
        if (rank(g) == k) return LinearCode(std::move(g));
    }
}

/**
 * Deterministic random composites: r in 1..3 blocks, t in 1..r, all codes
 * over GF(2) or GF(3) with 1 <= n_i <= 4, composite length <= 10.
 */
inline std::vector<CompositeInstance> random_composites(std::size_t count = 50, std::uint64_t seed = 0x5ec2e75a11ull) {
    SplitMix64 rng(seed);
    std::vector<CompositeInstance> out;
    while (out.size() < count) {
        const std::size_t r = 1 + rng.below(3);
        const std::size_t t = 1 + rng.below(r);
        const std::uint32_t p = rng.below(2) ? 3 : 2;
        std::vector<std::size_t> sizes(r);
        for (auto& s : sizes) s = 1 + rng.below(4);
        std::size_t total = 0;
        for (auto s : sizes) total += s;
        if (total > 10) continue;
        const Field base = field_make(p, 1);
        std::vector<LinearCode> codes;
        for (auto s : sizes) codes.push_back(random_code(base, s, 1 + rng.below(s), rng));
        out.push_back({t, threshold(t, r), threshold_construction(t, r, field_for_points(p, r)), std::move(codes), BlockPartition(sizes)});
    }
    return out;
}

struct SuiteResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double budget = 0;
};

namespace detail {

inline SuiteResult timed(int id, std::string name, double budget, const std::function<bool(std::string&)>& body) {
    SuiteResult r{id, std::move(name), false, {}, 0, budget};
    const auto start = std::chrono::steady_clock::now();
    try {
        r.passed = body(r.detail);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds > budget) {
        r.passed = false;
        r.detail += " (over time budget)";
    }
    return r;
}

}  // namespace detail

/// Every binary code of length <= 5: code_construction realizes Γ_C.
inline SuiteResult suite_corollary() {
    return detail::timed(1, "corollary: code constructions realize their code structures", 60, [](std::string& d) {
        const auto codes = binary_corpus(5);
        std::size_t ok = 0;
        std::string first_fail;
        for (const auto& c : codes) {
            const auto v = realizes(code_construction(c), structure_of_code(c));
            if (v.realizes) ++ok;
            else if (first_fail.empty()) first_fail = ", first failure at " + v.counterexample->to_string();
        }
        d = std::to_string(ok) + "/" + std::to_string(codes.size()) + " codes realized" + first_fail;
        return ok == codes.size();
    });
}

/// Lemma conditions on every sum_normalize output, checked by full enumeration.
inline SuiteResult suite_lemma() {
    return detail::timed(2, "lemma: sum normalization keeps the structure and yields witnesses", 60, [](std::string& d) {
        const auto codes = binary_corpus(5);
        std::size_t ok = 0, extended = 0;
        std::uint32_t max_degree = 1;
        std::string first_fail;
        for (const auto& c : codes) {
            const auto nc = sum_normalize(c);
            const auto check = oracle::check_lemma(c, nc);
            if (check.ok()) ++ok;
            else if (first_fail.empty()) first_fail = ", first failure: " + check.failure;
            if (!nc.chain.empty()) ++extended;
            max_degree = std::max(max_degree, nc.code.field().degree());
        }
        d = std::to_string(ok) + "/" + std::to_string(codes.size()) + " codes pass; " + std::to_string(extended) + " needed a field extension; largest field GF(2^" +
            std::to_string(max_degree) + ")" + first_fail;
        return ok == codes.size();
    });
}

/// 50 random composites: the composite construction realizes Γ0[C_1..C_r].
inline SuiteResult suite_theorem() {
    return detail::timed(3, "theorem: composite constructions realize composite structures", 120, [](std::string& d) {
        const auto instances = random_composites();
        std::size_t ok = 0, max_n = 0;
        std::string first_fail;
        for (const auto& inst : instances) {
            const auto gamma = compose(inst.outer, inst.parts(), inst.partition);
            const auto phi = compose_construction(inst.outer_phi, inst.codes, inst.partition);
            const auto v = realizes(phi, gamma);
            // the scanned structure must also agree with the defining union
            std::vector<std::set<std::uint64_t>> sup;
            for (const auto& c : inst.codes) sup.push_back(oracle::nonzero_supports(oracle::codewords(c)));
            bool agrees = true;
            for (std::uint64_t a = 0; a < (std::uint64_t{1} << inst.partition.total()) && agrees; ++a)
                agrees = gamma.is_qualified(SupportSet(a)) ==
                         oracle::composite_qualified([&](std::uint64_t b) { return inst.outer.is_qualified(SupportSet(b)); }, sup, inst.partition, a);
            if (v.realizes && agrees) ++ok;
            else if (first_fail.empty()) first_fail = v.realizes ? ", composite disagrees with its definition" : ", first failure at " + v.counterexample->to_string();
            max_n = std::max(max_n, inst.partition.total());
        }
        d = std::to_string(ok) + "/" + std::to_string(instances.size()) + " composites realized (max n=" + std::to_string(max_n) + ")" + first_fail;
        return ok == instances.size();
    });
}

/// Γ_RS(n,k) = (n-k+1, n) threshold over GF(7) and GF(8), 2 <= k <= n <= 5.
inline SuiteResult suite_remark() {
    return detail::timed(4, "remark: Reed-Solomon structures are thresholds", 10, [](std::string& d) {
        std::size_t ok = 0, total = 0;
        for (const Field& f : {field_make(7, 1), field_make(2, 3)})
            for (std::size_t n = 2; n <= 5; ++n)
                for (std::size_t k = 2; k <= n; ++k) {
                    ++total;
                    if (structure_of_code(reed_solomon(n, k, f)) == threshold(n - k + 1, n)) ++ok;
                }
        d = std::to_string(ok) + "/" + std::to_string(total) + " (n,k,field) cases match";
        return ok == total;
    });
}

/// Identity (a) of probe_propositions on every suite-3 instance.
inline SuiteResult suite_minimal_probe() {
    return detail::timed(5, "probe: minimal sets of composites", 60, [](std::string& d) {
        const auto instances = random_composites();
        std::size_t ok = 0;
        for (const auto& inst : instances)
            if (probe_propositions(inst.outer, inst.codes, inst.partition).minimal_sets.equal) ++ok;
        d = std::to_string(ok) + "/" + std::to_string(instances.size()) + " instances EQUAL";
        return ok == instances.size();
    });
}

/**
 * Identity (b) of probe_propositions over the whole corpus (every binary
 * code with Γ0 = (1,1), plus the suite-3 composites). Passes when every
 * probe verdict, including its counterexample, matches the definitional
 * oracle, and the even-weight [3,2] case is confirmed unequal at {1,2}.
 */
inline SuiteResult suite_duality_probe() {
    return detail::timed(6, "probe: duality of composites (verdicts match the scan oracle)", 60, [](std::string& d) {
        std::size_t agree = 0, total = 0, unequal = 0;
        auto run = [&](const AccessStructure& g0, const std::vector<LinearCode>& codes, const BlockPartition& part) {
            const auto probe = probe_propositions(g0, codes, part);
            const auto orc = oracle::duality_oracle(g0, codes, part);
            ++total;
            if (!probe.duality.equal) ++unequal;
            if (probe.duality.equal == orc.equal && probe.duality.counterexample == orc.counterexample) ++agree;
        };
        const auto single = threshold(1, 1);
        for (const auto& c : binary_corpus(5)) run(single, {c}, BlockPartition({c.length()}));
        for (const auto& inst : random_composites()) run(inst.outer, inst.codes, inst.partition);

        const Field f2 = field_make(2, 1);
        const LinearCode even(Matrix::from_rows(f2, 3, {{Elem{1}, Elem{0}, Elem{1}}, {Elem{0}, Elem{1}, Elem{1}}}));
        const auto probe = probe_propositions(single, {even}, BlockPartition({3}));
        const auto orc = oracle::duality_oracle(single, {even}, BlockPartition({3}));
        const bool confirmed = !probe.duality.equal && !orc.equal && probe.duality.counterexample == SupportSet({1, 2}) &&
                               orc.counterexample == SupportSet({1, 2});

        d = std::to_string(agree) + "/" + std::to_string(total) + " verdicts match the oracle; " + std::to_string(unequal) +
            " instances UNEQUAL; even-weight [3,2] counterexample {1,2} " + (confirmed ? "confirmed" : "NOT confirmed");
        return agree == total && confirmed;
    });
}

namespace detail {

inline std::uint64_t dealer_space(const VectorSpaceConstruction& phi) {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < phi.dim(); ++i) {
        s *= phi.field().order();
        if (s > kMaxAuditDealings) return kMaxAuditDealings + 1;
    }
    return s;
}

}  // namespace detail

/// The 20 constructions exercised by the scheme suite.
inline std::vector<std::pair<VectorSpaceConstruction, AccessStructure>> scheme_constructions() {
    std::vector<std::pair<VectorSpaceConstruction, AccessStructure>> out;
    const auto codes = binary_corpus(5);
    // 12 spread across the code corpus
    const std::size_t stride = codes.size() / 12;
    for (std::size_t i = 0; i < codes.size() && out.size() < 12; i += stride) {
        auto phi = code_construction(codes[i]);
        if (detail::dealer_space(phi) <= kMaxAuditDealings) out.emplace_back(std::move(phi), structure_of_code(codes[i]));
    }
    // the cheapest composites fill the rest
    std::vector<std::pair<std::uint64_t, std::pair<VectorSpaceConstruction, AccessStructure>>> comp;
    for (const auto& inst : random_composites()) {
        auto phi = compose_construction(inst.outer_phi, inst.codes, inst.partition);
        const auto space = detail::dealer_space(phi);
        if (space > kMaxAuditDealings) continue;
        comp.push_back({space << phi.participants(), {std::move(phi), compose(inst.outer, inst.parts(), inst.partition)}});
    }
    std::stable_sort(comp.begin(), comp.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [cost, entry] : comp) {
        if (out.size() == 20) break;
        out.push_back(std::move(entry));
    }
    return out;
}

/// Deal/reconstruct roundtrips and exhaustive perfectness audits.
inline SuiteResult suite_scheme() {
    return detail::timed(7, "scheme: roundtrips, perfect unqualified, determined qualified", 120, [](std::string& d) {
        const auto items = scheme_constructions();
        std::size_t roundtrips = 0, audits = 0, failures = 0;
        std::string first_fail;
        for (std::size_t c = 0; c < items.size(); ++c) {
            const auto& [phi, gamma] = items[c];
            const std::uint64_t q = phi.field().order();
            for (std::uint64_t a = 0; a < (std::uint64_t{1} << phi.participants()); ++a) {
                const SupportSet s(a);
                const bool qualified = gamma.is_qualified(s);
                if (qualified)
                    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                        const Elem secret{static_cast<std::uint32_t>((seed * 0x9E3779B9ull) % q)};
                        const auto bundle = deal(phi, secret, seed);
                        ++roundtrips;
                        if (reconstruct(phi, s, bundle.shares) != secret) {
                            ++failures;
                            if (first_fail.empty()) first_fail = ", roundtrip failed on construction " + std::to_string(c + 1) + " coalition " + s.to_string();
                        }
                    }
                const auto verdict = perfectness_audit(phi, s).verdict;
                ++audits;
                if (verdict != (qualified ? AuditVerdict::Determined : AuditVerdict::Perfect)) {
                    ++failures;
                    if (first_fail.empty()) first_fail = ", audit " + std::string(to_string(verdict)) + " on construction " + std::to_string(c + 1) + " coalition " + s.to_string();
                }
            }
        }
        d = std::to_string(items.size()) + " constructions, " + std::to_string(roundtrips) + " roundtrips, " + std::to_string(audits) + " audits, " +
            std::to_string(failures) + " failures" + first_fail;
        return items.size() == 20 && failures == 0;
    });
}

/// Field axioms for all fields of order <= 16, embedding homomorphisms, rank-nullity.
inline SuiteResult suite_algebra() {
    return detail::timed(8, "algebra: field axioms, embeddings, rank-nullity", 10, [](std::string& d) {
        std::size_t fields = 0, failures = 0;
        for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u})
            for (std::uint32_t m = 1; ssc::detail::ipow(p, m) <= 16; ++m) {
                const Field f = field_make(p, m);
                ++fields;
                const std::uint32_t q = f.order();
                for (std::uint32_t x = 0; x < q; ++x) {
                    const Elem a{x};
                    if (f.add(a, f.zero()) != a || f.mul(a, f.one()) != a || f.add(a, f.neg(a)) != f.zero()) ++failures;
                    if (x && f.mul(a, f.inv(a)) != f.one()) ++failures;
                    for (std::uint32_t y = 0; y < q; ++y) {
                        const Elem b{y};
                        if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a) || f.mul(a, b) != f.mul_poly(a, b)) ++failures;
                        for (std::uint32_t z = 0; z < q; ++z) {
                            const Elem c{z};
                            if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) ++failures;
                            if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) ++failures;
                            if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) ++failures;
                        }
                    }
                }
            }

        std::size_t embeddings = 0;
        for (auto [sm, tm] : {std::pair{2u, 4u}, std::pair{1u, 8u}}) {
            const auto e = field_embed(field_make(2, sm), field_make(2, tm));
            ++embeddings;
            const Field& s = e.source();
            const Field& t = e.target();
            std::set<std::uint32_t> image;
            if (!e.is_valid()) ++failures;
            for (std::uint32_t x = 0; x < s.order(); ++x) {
                image.insert(e(Elem{x}).v);
                for (std::uint32_t y = 0; y < s.order(); ++y) {
                    if (e(s.add(Elem{x}, Elem{y})) != t.add(e(Elem{x}), e(Elem{y}))) ++failures;
                    if (e(s.mul(Elem{x}, Elem{y})) != t.mul(e(Elem{x}), e(Elem{y}))) ++failures;
                }
            }
            if (image.size() != s.order()) ++failures;
        }

        SplitMix64 rng(0xa1e5);
        const std::vector<Field> small{field_make(2, 1), field_make(3, 1), field_make(2, 2), field_make(5, 1), field_make(2, 3), field_make(3, 2)};
        std::size_t matrices = 0;
        for (; matrices < 500; ++matrices) {
            const Field& f = small[rng.below(small.size())];
            const std::size_t rows = 1 + rng.below(6), cols = 1 + rng.below(6);
            Matrix m(f, rows, cols);
            // bias toward rank deficiency
            const bool sparse = rng.below(2);
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t c = 0; c < cols; ++c) m(r, c) = sparse && rng.below(3) ? Elem{} : Elem{static_cast<std::uint32_t>(rng.below(f.order()))};
            const auto basis = kernel_basis(m);
            if (rank(m) + basis.size() != cols) ++failures;
            for (const auto& x : basis)
                for (auto y : m.apply(x))
                    if (!y.is_zero()) ++failures;
        }

        d = std::to_string(fields) + " fields, " + std::to_string(embeddings) + " embeddings, " + std::to_string(matrices) + " matrices, " +
            std::to_string(failures) + " failures";
        return failures == 0;
    });
}

inline std::vector<SuiteResult> run_all() {
    return {suite_corollary(), suite_lemma(), suite_theorem(), suite_remark(), suite_minimal_probe(), suite_duality_probe(), suite_scheme(), suite_algebra()};
}

}  // namespace ssc::corpus

#endif  // SSC_CORPUS_HPP
