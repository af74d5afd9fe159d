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

#ifndef SSC_GALOIS_HPP
#define SSC_GALOIS_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace ssc {

/// Largest field order handled anywhere in the library.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 20;

/**
 * An element of some GF(p^m), held as its canonical integer encoding
 * enc = a_0 + a_1 p + ... + a_{m-1} p^{m-1} of the coefficient sequence of
 * a_0 + a_1 x + ... + a_{m-1} x^{m-1}. The owning Field is carried
 * separately; see FieldElement for the bound form.
 */
struct Elem {
    std::uint32_t v = 0;

    constexpr Elem() = default;
    constexpr explicit Elem(std::uint32_t enc) : v(enc) {}

    constexpr bool is_zero() const { return v == 0; }
    friend constexpr auto operator<=>(Elem, Elem) = default;
};

inline std::ostream& operator<<(std::ostream& os, Elem e) { return os << e.v; }

using Vec = std::vector<Elem>;

namespace detail {

inline bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense polynomials over GF(p), low degree first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    // p is prime, so a^(p-2)
    std::uint64_t r = 1, b = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<std::uint32_t>(r);
}

/// Remainder of a modulo b over GF(p); b must be nonzero.
inline Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t f = std::uint64_t(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = f * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

/// Monic polynomial of degree d whose lower coefficients encode `low`.
inline Poly monic_from_low(std::uint64_t low, std::uint32_t d, std::uint32_t p) {
    Poly f(d + 1, 0);
    for (std::uint32_t i = 0; i < d; ++i) {
        f[i] = static_cast<std::uint32_t>(low % p);
        low /= p;
    }
    f[d] = 1;
    return f;
}

inline std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

/// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
    for (std::uint32_t d = 1; d <= deg / 2; ++d) {
        const std::uint64_t count = ipow(p, d);
        for (std::uint64_t low = 0; low < count; ++low)
            if (poly_mod(f, monic_from_low(low, d, p), p).empty()) return false;
    }
    return true;
}

inline std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

struct FieldTables {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;  // length m+1, monic
    std::vector<std::uint32_t> exp;      // exp[i] = g^i, i in [0, q-1)
    std::vector<std::uint32_t> log;      // log[exp[i]] = i; log[0] unused
    std::vector<std::uint32_t> pw;       // p^i, i in [0, m]

    std::vector<std::uint32_t> digits(std::uint32_t e) const {
        std::vector<std::uint32_t> d(m);
        for (std::uint32_t i = 0; i < m; ++i) {
            d[i] = e % p;
            e /= p;
        }
        return d;
    }

    std::uint32_t undigits(const std::vector<std::uint32_t>& d) const {
        std::uint32_t e = 0;
        for (std::uint32_t i = m; i-- > 0;) e = e * p + d[i];
        return e;
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (p == 2) return a ^ b;
        if (m == 1) return (a + b) % p;
        std::uint32_t r = 0;
        for (std::uint32_t i = 0; i < m; ++i) {
            r += ((a % p + b % p) % p) * pw[i];
            a /= p;
            b /= p;
        }
        return r;
    }

    std::uint32_t neg(std::uint32_t a) const {
        if (p == 2) return a;
        if (m == 1) return (p - a) % p;
        std::uint32_t r = 0;
        for (std::uint32_t i = 0; i < m; ++i) {
            r += ((p - a % p) % p) * pw[i];
            a /= p;
        }
        return r;
    }

    // Schoolbook product reduced by the modulus; used to bootstrap the tables.
    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
        const auto da = digits(a), db = digits(b);
        std::vector<std::uint64_t> prod(2 * m - 1, 0);
        for (std::uint32_t i = 0; i < m; ++i)
            for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(da[i]) * db[j]) % p;
        for (std::size_t k = prod.size(); k-- > m;) {
            const std::uint64_t c = prod[k];
            if (c == 0) continue;
            prod[k] = 0;
            for (std::uint32_t i = 0; i < m; ++i)
                prod[k - m + i] = (prod[k - m + i] + (p - c) * modulus[i]) % p;
        }
        std::vector<std::uint32_t> r(m);
        for (std::uint32_t i = 0; i < m; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
        return undigits(r);
    }

    std::uint32_t slow_pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    }

    void build_tables() {
        const std::uint32_t order = q - 1;
        const auto factors = prime_factors(order);
        std::uint32_t g = 1;
        for (std::uint32_t cand = 1; cand < q; ++cand) {
            bool primitive = true;
            for (std::uint32_t r : factors)
                if (slow_pow(cand, order / r) == 1) {
                    primitive = false;
                    break;
                }
            if (primitive) {
                g = cand;
                break;
            }
        }
        exp.assign(order, 0);
        log.assign(q, 0);
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < order; ++i) {
            exp[i] = x;
            log[x] = i;
            x = slow_mul(x, g);
        }
    }
};

}  // namespace detail

/**
 * GF(p^m) defined by an explicit monic irreducible modulus.
 *
 * Cheap to copy (shared immutable tables). Two Field objects compare equal
 * iff they have the same characteristic and the same modulus.
 */
class Field {
   public:
    Field() = default;

    /// Validates `modulus` (low degree first, monic, irreducible over GF(p)).
    static Field from_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
        if (!detail::is_prime(p) || p > (1u << 16)) throw InvalidInput("field characteristic must be a prime <= 65536");
        if (modulus.size() < 2) throw InvalidInput("field modulus must have degree >= 1");
        const auto m = static_cast<std::uint32_t>(modulus.size() - 1);
        if (detail::ipow(p, m) > kMaxFieldOrder) throw BoundExceeded("field order p^m exceeds 2^20");
        for (auto c : modulus)
            if (c >= p) throw InvalidInput("field modulus coefficient out of range [0,p)");
        if (modulus.back() != 1) throw InvalidInput("field modulus must be monic");
        if (!detail::is_irreducible(modulus, p)) throw InvalidInput("field modulus is reducible");
        return build(p, std::move(modulus));
    }

    std::uint32_t characteristic() const { return t_->p; }
    std::uint32_t degree() const { return t_->m; }
    std::uint32_t order() const { return t_->q; }
    std::span<const std::uint32_t> modulus() const { return t_->modulus; }
    bool valid() const { return t_ != nullptr; }

    Elem zero() const { return Elem{0}; }
    Elem one() const { return Elem{1}; }
    /// The class of x modulo the field polynomial.
    Elem generator() const { return t_->m == 1 ? Elem{(t_->p - t_->modulus[0]) % t_->p} : Elem{t_->p}; }

    bool contains(Elem a) const { return a.v < t_->q; }

    Elem element(std::uint32_t enc) const {
        if (enc >= t_->q) throw InvalidInput("element encoding " + std::to_string(enc) + " out of range for GF(" + std::to_string(order()) + ")");
        return Elem{enc};
    }

    std::vector<std::uint32_t> coefficients(Elem a) const { return t_->digits(a.v); }
    Elem from_coefficients(const std::vector<std::uint32_t>& c) const {
        if (c.size() != t_->m) throw InvalidInput("coefficient count must equal field degree");
        for (auto x : c)
            if (x >= t_->p) throw InvalidInput("coefficient out of range [0,p)");
        return Elem{t_->undigits(c)};
    }

    Elem add(Elem a, Elem b) const { return Elem{t_->add(a.v, b.v)}; }
    Elem neg(Elem a) const { return Elem{t_->neg(a.v)}; }
    Elem sub(Elem a, Elem b) const { return Elem{t_->add(a.v, t_->neg(b.v))}; }

    Elem mul(Elem a, Elem b) const {
        if (a.v == 0 || b.v == 0) return Elem{0};
        const std::uint32_t s = t_->log[a.v] + t_->log[b.v];
        const std::uint32_t n = t_->q - 1;
        return Elem{t_->exp[s >= n ? s - n : s]};
    }

    Elem inv(Elem a) const {
        if (a.v == 0) throw InvalidInput("inverse of zero");
        const std::uint32_t l = t_->log[a.v];
        return Elem{t_->exp[l == 0 ? 0 : t_->q - 1 - l]};
    }

    Elem div(Elem a, Elem b) const {
        if (b.v == 0) throw InvalidInput("division by zero");
        return mul(a, inv(b));
    }

    /// a^e; negative exponents invert first. 0^0 = 1.
    Elem pow(Elem a, std::int64_t e) const {
        if (e < 0) {
            a = inv(a);
            e = -e;
        }
        if (e == 0) return one();
        if (a.v == 0) return zero();
        const std::uint64_t n = t_->q - 1;
        const std::uint64_t l = (std::uint64_t(t_->log[a.v]) * (std::uint64_t(e) % n)) % n;
        return Elem{t_->exp[l]};
    }

    /// Slow polynomial product; kept for cross-checking the table route.
    Elem mul_poly(Elem a, Elem b) const { return Elem{t_->slow_mul(a.v, b.v)}; }

    std::string name() const {
        return "GF(" + std::to_string(t_->p) + (t_->m > 1 ? "^" + std::to_string(t_->m) : std::string{}) + ")";
    }

    friend bool operator==(const Field& a, const Field& b) {
        if (a.t_ == b.t_) return true;
        if (!a.t_ || !b.t_) return false;
        return a.t_->p == b.t_->p && a.t_->modulus == b.t_->modulus;
    }

   private:
    static Field build(std::uint32_t p, std::vector<std::uint32_t> modulus) {
        auto t = std::make_shared<detail::FieldTables>();
        t->p = p;
        t->m = static_cast<std::uint32_t>(modulus.size() - 1);
        t->q = static_cast<std::uint32_t>(detail::ipow(p, t->m));
        t->modulus = std::move(modulus);
        t->pw.resize(t->m + 1);
        for (std::uint32_t i = 0; i <= t->m; ++i) t->pw[i] = static_cast<std::uint32_t>(detail::ipow(p, i));
        t->build_tables();
        Field f;
        f.t_ = std::move(t);
        return f;
    }

    std::shared_ptr<const detail::FieldTables> t_;
};

/**
 * GF(p^m) with the monic irreducible modulus of smallest canonical encoding.
 * Results are memoized; repeated calls share tables.
 */
inline Field field_make(std::uint32_t p, std::uint32_t m) {
    if (!detail::is_prime(p) || p > (1u << 16)) throw InvalidInput("field characteristic " + std::to_string(p) + " is not a prime <= 65536");
    if (m < 1) throw InvalidInput("field degree must be >= 1");
    if (detail::ipow(p, m) > kMaxFieldOrder) throw BoundExceeded("field order " + std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^20");

    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, Field> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find({p, m}); it != cache.end()) return it->second;
    }
    const std::uint64_t count = detail::ipow(p, m);
    Field f;
    for (std::uint64_t low = 0; low < count; ++low) {
        auto cand = detail::monic_from_low(low, m, p);
        if (detail::is_irreducible(cand, p)) {
            f = Field::from_modulus(p, std::move(cand));
            break;
        }
    }
    std::lock_guard lock(mu);
    return cache.emplace(std::pair{p, m}, f).first->second;
}

/// An element bound to its field; arithmetic checks that operands agree.
class FieldElement {
   public:
    FieldElement(Field f, Elem v) : f_(std::move(f)), v_(f_.element(v.v)) {}

    const Field& field() const { return f_; }
    Elem value() const { return v_; }
    std::uint32_t encoding() const { return v_.v; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) { return {a.same(b), a.f_.add(a.v_, b.v_)}; }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return {a.same(b), a.f_.sub(a.v_, b.v_)}; }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) { return {a.same(b), a.f_.mul(a.v_, b.v_)}; }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return {a.same(b), a.f_.div(a.v_, b.v_)}; }
    FieldElement operator-() const { return {f_, f_.neg(v_)}; }
    FieldElement inverse() const { return {f_, f_.inv(v_)}; }
    FieldElement pow(std::int64_t e) const { return {f_, f_.pow(v_, e)}; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.f_ == b.f_ && a.v_ == b.v_; }

   private:
    const Field& same(const FieldElement& o) const {
        if (!(f_ == o.f_)) throw InvalidInput("field mismatch: " + f_.name() + " vs " + o.f_.name());
        return f_;
    }

    Field f_;
    Elem v_;
};

/**
 * Injective homomorphism source -> target fixed by the image of the source
 * generator x.
 */
class FieldEmbedding {
   public:
    FieldEmbedding(Field source, Field target, Elem image) : src_(std::move(source)), dst_(std::move(target)), image_(image) {
        powers_.resize(src_.degree());
        Elem x = dst_.one();
        for (auto& pw : powers_) {
            pw = x;
            x = dst_.mul(x, image_);
        }
    }

    const Field& source() const { return src_; }
    const Field& target() const { return dst_; }
    Elem image() const { return image_; }

    Elem operator()(Elem a) const {
        Elem r = dst_.zero();
        auto c = src_.coefficients(a);
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i]) r = dst_.add(r, dst_.mul(Elem{c[i]}, powers_[i]));
        return r;
    }

    Vec operator()(const Vec& v) const {
        Vec out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) out[i] = (*this)(v[i]);
        return out;
    }

    /// True iff the source modulus vanishes at the image inside the target.
    bool is_valid() const {
        auto mod = src_.modulus();
        Elem acc = dst_.zero();
        for (std::size_t i = mod.size(); i-- > 0;) acc = dst_.add(dst_.mul(acc, image_), Elem{mod[i]});
        return acc.is_zero();
    }

   private:
    Field src_, dst_;
    Elem image_;
    Vec powers_;
};

/// Embedding whose generator image is the smallest-encoding root of the source modulus.
inline FieldEmbedding field_embed(const Field& source, const Field& target) {
    if (source.characteristic() != target.characteristic())
        throw InvalidInput("no embedding " + source.name() + " -> " + target.name() + ": characteristic mismatch");
    if (target.degree() % source.degree() != 0)
        throw InvalidInput("no embedding " + source.name() + " -> " + target.name() + ": degree does not divide");
    auto mod = source.modulus();
    for (std::uint32_t y = 0; y < target.order(); ++y) {
        Elem acc = target.zero();
        for (std::size_t i = mod.size(); i-- > 0;) acc = target.add(target.mul(acc, Elem{y}), Elem{mod[i]});
        if (acc.is_zero()) return FieldEmbedding(source, target, Elem{y});
    }
    throw InvalidInput("no root of the source modulus in " + target.name());
}

/// second ∘ first.
inline FieldEmbedding compose(const FieldEmbedding& first, const FieldEmbedding& second) {
    if (!(first.target() == second.source())) throw InvalidInput("embeddings do not chain");
    return FieldEmbedding(first.source(), second.target(), second(first.image()));
}

}  // namespace ssc

#endif  // SSC_GALOIS_HPP
