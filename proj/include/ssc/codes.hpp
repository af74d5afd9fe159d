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

#ifndef SSC_CODES_HPP
#define SSC_CODES_HPP

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "support.hpp"

namespace ssc {

/// Cap on q^k for anything that walks every codeword.
inline constexpr std::uint64_t kMaxCodewords = 1ull << 20;

/// An [n,k] linear code given by a k x n generator of full row rank.
class LinearCode {
   public:
    explicit LinearCode(Matrix generator) : g_(std::move(generator)) {
        if (g_.rows() < 1) throw InvalidInput("code dimension must be >= 1");
        if (g_.cols() < g_.rows()) throw InvalidInput("code dimension exceeds length");
        if (g_.cols() > kMaxParticipants) throw BoundExceeded("code length exceeds 64");
        if (rank(g_) != g_.rows()) throw InvalidInput("generator matrix is rank deficient");
    }

    const Field& field() const { return g_.field(); }
    std::size_t length() const { return g_.cols(); }
    std::size_t dimension() const { return g_.rows(); }
    const Matrix& generator() const { return g_; }

    /// Reduced row echelon generator; equal codes share it.
    Matrix canonical_generator() const { return rref(g_).reduced; }

    std::uint64_t codeword_count() const {
        std::uint64_t c = 1;
        for (std::size_t i = 0; i < dimension(); ++i) {
            c *= field().order();
            if (c > kMaxCodewords) return kMaxCodewords + 1;
        }
        return c;
    }

    /// Calls visit(codeword) for all q^k codewords, the zero word first.
    void for_each_codeword(const std::function<void(const Vec&)>& visit) const {
        if (codeword_count() > kMaxCodewords) throw BoundExceeded("q^k exceeds the 2^20 enumeration bound");
        const Field& f = field();
        const std::size_t k = dimension(), n = length();
        std::vector<std::uint32_t> msg(k, 0);
        Vec word(n);
        const auto rows = g_.row_list();
        while (true) {
            visit(word);
            // mixed-radix increment, updating the word incrementally
            std::size_t i = 0;
            for (; i < k; ++i) {
                const Elem old{msg[i]};
                msg[i] = (msg[i] + 1) % f.order();
                const Elem delta = f.sub(Elem{msg[i]}, old);
                for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(delta, rows[i][j]));
                if (msg[i] != 0) break;
            }
            if (i == k) break;
        }
    }

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.field() == b.field() && a.length() == b.length() && a.canonical_generator() == b.canonical_generator();
    }

   private:
    Matrix g_;
};

inline SupportSet support_of(const Vec& v) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) m |= 1ull << i;
    return SupportSet(m);
}

inline LinearCode code_make(Matrix generator) { return LinearCode(std::move(generator)); }

/// The code {x : Hx = 0}; a 0 x n parity matrix yields the full [n,n] code.
inline LinearCode code_from_parity(const Matrix& h, std::size_t n) {
    if (h.cols() != n) throw InvalidInput("parity-check column count " + std::to_string(h.cols()) + " does not match length " + std::to_string(n));
    auto basis = kernel_basis(h);
    if (basis.empty()) throw InvalidInput("parity-check matrix has full column rank; the code would be zero");
    return LinearCode(Matrix::from_rows(h.field(), n, basis));
}

/// (n-k) x n canonical parity check: the RREF kernel basis of G, one row per free column.
inline Matrix parity_check(const LinearCode& c) {
    return Matrix::from_rows(c.field(), c.length(), kernel_basis(c.generator()));
}

inline LinearCode dual_code(const LinearCode& c) {
    if (c.dimension() == c.length()) throw InvalidInput("dual of a full [n,n] code is the zero code");
    return LinearCode(parity_check(c));
}

/// Supports of the minimal codewords by exhaustive enumeration, sorted lexicographically.
inline std::vector<SupportSet> minimal_supports(const LinearCode& c) {
    std::set<std::uint64_t> seen;
    c.for_each_codeword([&](const Vec& w) {
        auto s = support_of(w);
        if (!s.empty()) seen.insert(s.mask());
    });
    std::vector<SupportSet> family;
    for (auto m : seen) family.emplace_back(m);
    return minimal_members(std::move(family));
}

/// The first n nonzero elements in encoding order.
inline Vec default_points(const Field& f, std::size_t n) {
    if (n > f.order() - 1) throw InvalidInput("need n <= q-1 distinct nonzero points");
    Vec pts(n);
    for (std::size_t i = 0; i < n; ++i) pts[i] = Elem{static_cast<std::uint32_t>(i + 1)};
    return pts;
}

/// Generator row i is (x_j^i)_j, i = 0..k-1.
inline LinearCode reed_solomon(std::size_t n, std::size_t k, const Field& f, const Vec& points) {
    if (k < 1 || k > n) throw InvalidInput("Reed-Solomon needs 1 <= k <= n");
    if (n > f.order() - 1) throw InvalidInput("Reed-Solomon needs n <= q-1");
    if (points.size() != n) throw InvalidInput("Reed-Solomon needs exactly n evaluation points");
    std::set<std::uint32_t> distinct;
    for (auto x : points) {
        if (!f.contains(x)) throw InvalidInput("evaluation point outside the field");
        if (x.is_zero()) throw InvalidInput("evaluation points must be nonzero");
        if (!distinct.insert(x.v).second) throw InvalidInput("evaluation points must be distinct");
    }
    Matrix g(f, k, n);
    for (std::size_t j = 0; j < n; ++j) {
        Elem x = f.one();
        for (std::size_t i = 0; i < k; ++i) {
            g(i, j) = x;
            x = f.mul(x, points[j]);
        }
    }
    return LinearCode(std::move(g));
}

inline LinearCode reed_solomon(std::size_t n, std::size_t k, const Field& f) { return reed_solomon(n, k, f, default_points(f, n)); }

inline LinearCode embed_code(const LinearCode& c, const FieldEmbedding& e) { return LinearCode(c.generator().embedded(e)); }

}  // namespace ssc

#endif  // SSC_CODES_HPP
