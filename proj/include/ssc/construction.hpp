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

#ifndef SSC_CONSTRUCTION_HPP
#define SSC_CONSTRUCTION_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "access.hpp"
#include "codes.hpp"
#include "matrix.hpp"

namespace ssc {

/**
 * A map Φ from participants 1..n to F^dim. The target vector is always
 * e_1 = (1,0,...,0): a coalition A is qualified iff e_1 lies in the span of
 * {Φ(P_j) : j in A}.
 */
class VectorSpaceConstruction {
   public:
    VectorSpaceConstruction(Field f, std::size_t dim, std::vector<Vec> table) : f_(std::move(f)), dim_(dim), table_(std::move(table)) {
        if (dim_ < 1) throw InvalidInput("construction dimension must be >= 1");
        if (table_.empty()) throw InvalidInput("construction needs at least one participant");
        if (table_.size() > kMaxParticipants) throw BoundExceeded("construction has more than 64 participants");
        for (const auto& v : table_) {
            if (v.size() != dim_) throw InvalidInput("construction vector length does not match its dimension");
            for (auto x : v)
                if (!f_.contains(x)) throw InvalidInput("construction entry outside its field");
        }
    }

    const Field& field() const { return f_; }
    std::size_t dim() const { return dim_; }
    std::size_t participants() const { return table_.size(); }
    const std::vector<Vec>& table() const { return table_; }
    const Vec& operator[](std::size_t j) const { return table_[j]; }

    Vec target() const {
        Vec e(dim_);
        e[0] = f_.one();
        return e;
    }

    /// 1-based participants mapped to the zero vector (legal, but never useful).
    std::vector<std::size_t> zero_vectors() const {
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < table_.size(); ++j)
            if (std::all_of(table_[j].begin(), table_[j].end(), [](Elem x) { return x.is_zero(); })) out.push_back(j + 1);
        return out;
    }

    /// Vectors of the coalition A, in increasing participant order.
    std::vector<Vec> vectors_of(SupportSet a) const {
        if (a.max_index() > participants()) throw InvalidInput("coalition " + a.to_string() + " exceeds participant count");
        std::vector<Vec> vs;
        for (auto j : a.indices()) vs.push_back(table_[j - 1]);
        return vs;
    }

    friend bool operator==(const VectorSpaceConstruction&, const VectorSpaceConstruction&) = default;

   private:
    Field f_;
    std::size_t dim_;
    std::vector<Vec> table_;
};

/// Minimal supports A_1..A_α with one certifying codeword each.
struct WitnessTable {
    std::vector<SupportSet> supports;
    std::vector<Vec> witnesses;
};

/// Output of sum_normalize.
struct NormalizedCode {
    LinearCode code;
    Matrix parity;
    WitnessTable witnesses;
    std::vector<FieldEmbedding> chain;  // successive extensions, in order
};

namespace detail {

inline Elem coordinate_sum(const Field& f, const Vec& v) {
    Elem s;
    for (auto x : v) s = f.add(s, x);
    return s;
}

}  // namespace detail

/**
 * Rescales parity-check columns, extending the field when needed, until every
 * minimal support owns a codeword with nonzero coordinate sum. The access
 * structure of the code is unchanged.
 *
 * Supports are processed in lexicographic order. For a support A whose
 * canonical kernel vector λ has zero sum, the first nonzero coordinate j of λ
 * is fixed and the smallest γ is chosen such that λ_j·γ avoids 0, λ_j - Σλ,
 * and, for each earlier witness w with j in its support, λ_j (w_j - Σw) / w_j.
 * Column h_j is replaced by h_j / γ and every stored witness has its j-th
 * entry multiplied by γ. When no γ works the field degree is doubled.
 */
inline NormalizedCode sum_normalize(const LinearCode& c) {
    const std::size_t n = c.length();
    const std::uint32_t p = c.field().characteristic();
    Field f = c.field();
    Matrix h = parity_check(c);
    WitnessTable table;
    table.supports = minimal_supports(c);
    std::vector<FieldEmbedding> chain;

    for (std::size_t t = 0; t < table.supports.size(); ++t) {
        const SupportSet a = table.supports[t];
        std::vector<std::size_t> idx;
        for (auto i : a.indices()) idx.push_back(i - 1);

        std::vector<Vec> candidates;
        for (const auto& b : kernel_basis(h.columns(idx))) {
            Vec lifted(n);
            for (std::size_t i = 0; i < idx.size(); ++i) lifted[idx[i]] = b[i];
            candidates.push_back(std::move(lifted));
        }
        if (candidates.empty()) throw std::logic_error("minimal support " + a.to_string() + " has no kernel vector");

        auto good = std::find_if(candidates.begin(), candidates.end(), [&](const Vec& v) { return !detail::coordinate_sum(f, v).is_zero(); });
        if (good != candidates.end()) {
            table.witnesses.push_back(*good);
            continue;
        }

        Vec lambda = candidates.front();
        const std::size_t j = *std::find_if(idx.begin(), idx.end(), [&](std::size_t i) { return !lambda[i].is_zero(); });

        Elem gamma;
        while (true) {
            std::vector<Elem> forbidden{f.zero(), f.sub(lambda[j], detail::coordinate_sum(f, lambda))};
            for (std::size_t s = 0; s < t; ++s) {
                if (!table.supports[s].contains(j + 1)) continue;
                const Vec& w = table.witnesses[s];
                const Elem shift = f.sub(w[j], detail::coordinate_sum(f, w));
                forbidden.push_back(f.mul(lambda[j], f.div(shift, w[j])));
            }
            bool found = false;
            for (std::uint32_t g = 1; g < f.order() && !found; ++g) {
                const Elem prod = f.mul(lambda[j], Elem{g});
                if (std::find(forbidden.begin(), forbidden.end(), prod) == forbidden.end()) {
                    gamma = Elem{g};
                    found = true;
                }
            }
            if (found) break;

            const Field bigger = field_make(p, 2 * f.degree());
            const FieldEmbedding e = field_embed(f, bigger);
            h = h.embedded(e);
            lambda = e(lambda);
            for (auto& w : table.witnesses) w = e(w);
            chain.push_back(e);
            f = bigger;
        }

        const Elem gamma_inv = f.inv(gamma);
        for (std::size_t r = 0; r < h.rows(); ++r) h(r, j) = f.mul(h(r, j), gamma_inv);
        for (std::size_t s = 0; s < t; ++s)
            if (table.supports[s].contains(j + 1)) table.witnesses[s][j] = f.mul(table.witnesses[s][j], gamma);
        lambda[j] = f.mul(lambda[j], gamma);
        table.witnesses.push_back(std::move(lambda));
    }

    auto code = code_from_parity(h, n);
    return {std::move(code), std::move(h), std::move(table), std::move(chain)};
}

/// Φ(P_i) = (1, α_i, ..., α_i^{t-1}) with α_i the i-th nonzero element in encoding order.
inline VectorSpaceConstruction threshold_construction(std::size_t t, std::size_t n, const Field& f) {
    if (t < 1 || t > n) throw InvalidInput("threshold construction needs 1 <= t <= n");
    if (n > f.order() - 1) throw InvalidInput("threshold construction needs n <= q-1 (n=" + std::to_string(n) + ", q=" + std::to_string(f.order()) + ")");
    std::vector<Vec> table;
    for (std::size_t i = 0; i < n; ++i) {
        const Elem alpha{static_cast<std::uint32_t>(i + 1)};
        Vec v(t);
        Elem x = f.one();
        for (auto& c : v) {
            c = x;
            x = f.mul(x, alpha);
        }
        table.push_back(std::move(v));
    }
    return {f, t, std::move(table)};
}

/// The d = 1 construction {(1)} on one participant; realizes (1,1).
inline VectorSpaceConstruction trivial_construction(const Field& f) { return {f, 1, {Vec{f.one()}}}; }

/**
 * Composite construction for Γ0[C_1..C_r]. Each code is sum-normalized, all
 * data is embedded into GF(p^L) with L the lcm of the degrees involved, and
 * participant j of block i maps to
 *
 *     (Φ0(i) | 0 | ... | h^i_j | ... | 0)
 *
 * where slot i has the height of the normalized parity check of C_i. The
 * ambient dimension is d + Σ (n_i - k_i).
 */
inline VectorSpaceConstruction compose_construction(const VectorSpaceConstruction& outer, const std::vector<LinearCode>& codes,
                                                    const BlockPartition& partition) {
    const std::size_t r = codes.size();
    if (outer.participants() != r) throw InvalidInput("outer construction has " + std::to_string(outer.participants()) + " participants but " + std::to_string(r) + " codes were given");
    if (partition.blocks() != r) throw InvalidInput("partition block count does not match the number of codes");
    const std::uint32_t p = outer.field().characteristic();
    for (std::size_t i = 0; i < r; ++i) {
        if (codes[i].field().characteristic() != p) throw InvalidInput("code " + std::to_string(i + 1) + " has a different characteristic from the outer construction");
        if (codes[i].length() != partition.size(i)) throw InvalidInput("block " + std::to_string(i + 1) + " size does not match the code length");
    }

    std::vector<NormalizedCode> normalized;
    std::uint32_t degree = outer.field().degree();
    for (const auto& c : codes) {
        normalized.push_back(sum_normalize(c));
        degree = std::lcm(degree, normalized.back().parity.field().degree());
    }
    const Field common = field_make(p, degree);

    const FieldEmbedding e0 = field_embed(outer.field(), common);
    std::vector<Matrix> blocks;
    std::size_t dim = outer.dim();
    for (const auto& nc : normalized) {
        blocks.push_back(nc.parity.embedded(field_embed(nc.parity.field(), common)));
        dim += blocks.back().rows();
    }

    std::vector<Vec> table;
    std::size_t slot = outer.dim();
    for (std::size_t i = 0; i < r; ++i) {
        const Vec head = e0(outer[i]);
        for (std::size_t j = 0; j < partition.size(i); ++j) {
            Vec v(dim);
            std::copy(head.begin(), head.end(), v.begin());
            for (std::size_t row = 0; row < blocks[i].rows(); ++row) v[slot + row] = blocks[i](row, j);
            table.push_back(std::move(v));
        }
        slot += blocks[i].rows();
    }
    return {common, dim, std::move(table)};
}

/// Φ(P_j) = (1, h_j) over the normalized parity check; realizes Γ_C.
inline VectorSpaceConstruction code_construction(const LinearCode& c) {
    return compose_construction(trivial_construction(c.field()), {c}, BlockPartition({c.length()}));
}

/// True iff e_1 lies in the span of the coalition's vectors.
inline bool reaches_target(const VectorSpaceConstruction& phi, SupportSet a) {
    const auto vs = phi.vectors_of(a);
    return solve_membership(phi.field(), vs, phi.target()).has_value();
}

struct RealizeVerdict {
    enum class Direction { QualifiedUnreachable, UnqualifiedReachable };

    bool realizes = true;
    std::uint64_t scanned = 0;
    std::optional<SupportSet> counterexample;  // lexicographically first failure
    Direction direction = Direction::QualifiedUnreachable;
};

inline const char* to_string(RealizeVerdict::Direction d) {
    return d == RealizeVerdict::Direction::QualifiedUnreachable ? "qualified but unreachable" : "unqualified but reachable";
}

namespace detail {

/// reach[A] for every coalition A, via depth-first extension of an echelon basis.
inline std::vector<bool> reachability_map(const VectorSpaceConstruction& phi) {
    const std::size_t n = phi.participants();
    std::vector<bool> reach(std::size_t{1} << n, false);
    const Vec e1 = phi.target();
    std::function<void(std::size_t, std::uint64_t, const EchelonBasis&)> walk = [&](std::size_t j, std::uint64_t mask, const EchelonBasis& basis) {
        if (basis.contains(e1)) {
            // every extension of a reaching coalition reaches too
            const std::uint64_t rest = ((std::uint64_t{1} << n) - 1) & ~((std::uint64_t{1} << j) - 1);
            for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
                reach[mask | sub] = true;
                if (sub == 0) break;
            }
            return;
        }
        if (j == n) return;
        walk(j + 1, mask, basis);
        EchelonBasis with = basis;
        with.insert(phi[j]);
        walk(j + 1, mask | (std::uint64_t{1} << j), with);
    };
    walk(0, 0, EchelonBasis(&phi.field()));
    return reach;
}

}  // namespace detail

/// Exhaustively checks: e_1 in span Φ(A) <=> A qualified, for all A.
inline RealizeVerdict realizes(const VectorSpaceConstruction& phi, const AccessStructure& g, const ScanLimits& lim = {}) {
    if (phi.participants() != g.participants())
        throw InvalidInput("construction has " + std::to_string(phi.participants()) + " participants but the structure has " + std::to_string(g.participants()));
    const std::size_t n = phi.participants();
    lim.check(n, "realizes");
    const auto reach = detail::reachability_map(phi);
    RealizeVerdict v;
    v.scanned = reach.size();
    for (std::uint64_t a = 0; a < reach.size(); ++a) {
        const bool q = g.is_qualified(SupportSet(a));
        if (q == reach[a]) continue;
        if (!v.counterexample || lex_less(SupportSet(a), *v.counterexample)) {
            v.realizes = false;
            v.counterexample = SupportSet(a);
            v.direction = q ? RealizeVerdict::Direction::QualifiedUnreachable : RealizeVerdict::Direction::UnqualifiedReachable;
        }
    }
    return v;
}

}  // namespace ssc

#endif  // SSC_CONSTRUCTION_HPP
