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

#ifndef SSC_ACCESS_HPP
#define SSC_ACCESS_HPP

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "codes.hpp"
#include "support.hpp"

namespace ssc {

/// Bound on exhaustive subset scans; the default covers n <= 20.
struct ScanLimits {
    std::uint64_t max_subsets = 1ull << 20;

    void check(std::size_t n, const char* what) const {
        if (n >= 63 || (1ull << n) > max_subsets)
            throw BoundExceeded(std::string(what) + ": scanning 2^" + std::to_string(n) + " subsets exceeds the limit of " + std::to_string(max_subsets));
    }
};

/**
 * A monotone access structure on participants {1..n}, held as the
 * antichain of its minimal qualified sets (lexicographically sorted).
 *
 * The antichain is never empty except for the structure returned by
 * AccessStructure::empty(), which qualifies nobody; it only arises as the
 * structure of a zero code when probing duality.
 */
class AccessStructure {
   public:
    /// Monotone closure of `family`, reduced to its minimal members.
    static AccessStructure from_supports(std::size_t n, std::vector<SupportSet> family) {
        check_n(n);
        if (family.empty()) throw InvalidInput("access structure needs at least one qualified set");
        for (auto s : family) {
            if (s.empty()) throw InvalidInput("the empty set cannot be a qualified set");
            if (s.max_index() > n) throw InvalidInput("qualified set " + s.to_string() + " exceeds participant count " + std::to_string(n));
        }
        return AccessStructure(n, minimal_members(std::move(family)));
    }

    static AccessStructure empty(std::size_t n) {
        check_n(n);
        return AccessStructure(n, {});
    }

    std::size_t participants() const { return n_; }
    const std::vector<SupportSet>& minimal() const { return min_; }
    bool is_empty() const { return min_.empty(); }

    bool is_qualified(SupportSet a) const {
        for (auto m : min_)
            if (m.subset_of(a)) return true;
        return false;
    }

    friend bool operator==(const AccessStructure&, const AccessStructure&) = default;

    std::string to_string() const {
        std::string s = "n=" + std::to_string(n_) + " {";
        for (std::size_t i = 0; i < min_.size(); ++i) s += (i ? "," : "") + min_[i].to_string();
        return s + "}";
    }

   private:
    AccessStructure(std::size_t n, std::vector<SupportSet> minimal) : n_(n), min_(std::move(minimal)) {}

    static void check_n(std::size_t n) {
        if (n < 1) throw InvalidInput("access structure needs at least one participant");
        if (n > kMaxParticipants) throw BoundExceeded("more than 64 participants");
    }

    std::size_t n_ = 0;
    std::vector<SupportSet> min_;
};

inline bool is_qualified(const AccessStructure& g, SupportSet a) {
    if (a.max_index() > g.participants()) throw InvalidInput("subset " + a.to_string() + " exceeds participant count");
    return g.is_qualified(a);
}

/// Contiguous blocks of participants: block i owns offset_i+1 .. offset_i+n_i.
class BlockPartition {
   public:
    explicit BlockPartition(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
        if (sizes_.empty()) throw InvalidInput("partition needs at least one block");
        std::size_t off = 0;
        for (auto s : sizes_) {
            if (s == 0) throw InvalidInput("partition block sizes must be positive");
            offsets_.push_back(off);
            off += s;
        }
        total_ = off;
        if (total_ > kMaxParticipants) throw BoundExceeded("partition covers more than 64 participants");
    }

    std::size_t blocks() const { return sizes_.size(); }
    std::size_t total() const { return total_; }
    const std::vector<std::size_t>& sizes() const { return sizes_; }
    std::size_t size(std::size_t i) const { return sizes_[i]; }
    std::size_t offset(std::size_t i) const { return offsets_[i]; }

    /// A ∩ P_i, re-indexed to 1..n_i.
    SupportSet restrict(SupportSet a, std::size_t i) const {
        const std::uint64_t local = sizes_[i] >= 64 ? ~0ull : (1ull << sizes_[i]) - 1;
        return SupportSet((a.mask() >> offsets_[i]) & local);
    }

    /// Local subset of block i lifted to global indices.
    SupportSet lift(SupportSet local, std::size_t i) const { return SupportSet(local.mask() << offsets_[i]); }

    friend bool operator==(const BlockPartition&, const BlockPartition&) = default;

   private:
    std::vector<std::size_t> sizes_, offsets_;
    std::size_t total_ = 0;
};

/// Γ_C: monotone closure of the nonzero codeword supports.
inline AccessStructure structure_of_code(const LinearCode& c) {
    return AccessStructure::from_supports(c.length(), minimal_supports(c));
}

inline AccessStructure threshold(std::size_t t, std::size_t n) {
    if (n < 1 || n > kMaxParticipants) throw InvalidInput("threshold participant count out of range");
    if (t < 1 || t > n) throw InvalidInput("threshold t=" + std::to_string(t) + " out of range 1.." + std::to_string(n));
    std::vector<SupportSet> sets;
    // walk t-subsets in lexicographic order
    std::vector<std::size_t> idx(t);
    std::iota(idx.begin(), idx.end(), std::size_t{1});
    while (true) {
        sets.push_back(SupportSet::from_indices(idx));
        std::size_t i = t;
        while (i > 0 && idx[i - 1] == n - t + i) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
    return AccessStructure::from_supports(n, std::move(sets));
}

namespace detail {

/// Minimal members of the monotone family given by a qualified-bitmap over all 2^n subsets.
inline std::vector<SupportSet> minimal_from_bitmap(const std::vector<bool>& qualified) {
    std::vector<SupportSet> out;
    for (std::uint64_t a = 0; a < qualified.size(); ++a) {
        if (!qualified[a]) continue;
        bool minimal = true;
        for (std::uint64_t b = a; b; b &= b - 1)
            if (qualified[a & ~(b & (~b + 1))]) {
                minimal = false;
                break;
            }
        if (minimal) out.emplace_back(a);
    }
    sort_lex(out);
    return out;
}

}  // namespace detail

/// {A : P \ A not qualified}, by exhaustive scan.
inline AccessStructure dual_structure(const AccessStructure& g, const ScanLimits& lim = {}) {
    const std::size_t n = g.participants();
    lim.check(n, "dual_structure");
    if (g.is_empty()) throw InvalidInput("dual of the empty structure would qualify the empty set");
    const std::uint64_t full = SupportSet::full(n).mask();
    std::vector<bool> q(std::size_t{1} << n);
    for (std::uint64_t a = 0; a < q.size(); ++a) q[a] = !g.is_qualified(SupportSet(full & ~a));
    if (q[0]) throw InvalidInput("dual would qualify the empty set");
    return AccessStructure::from_supports(n, detail::minimal_from_bitmap(q));
}

/**
 * Γ0[Γ1..Γr]: A is qualified iff the set of blocks i with A ∩ P_i qualified
 * in Γi is qualified in Γ0. Computed by exhaustive scan.
 */
inline AccessStructure compose(const AccessStructure& g0, const std::vector<AccessStructure>& parts, const BlockPartition& partition,
                               const ScanLimits& lim = {}) {
    const std::size_t r = parts.size();
    if (g0.participants() != r) throw InvalidInput("outer structure has " + std::to_string(g0.participants()) + " participants but " + std::to_string(r) + " parts were given");
    if (partition.blocks() != r) throw InvalidInput("partition block count does not match the number of parts");
    for (std::size_t i = 0; i < r; ++i)
        if (partition.size(i) != parts[i].participants())
            throw InvalidInput("block " + std::to_string(i + 1) + " has size " + std::to_string(partition.size(i)) + " but its structure has " +
                               std::to_string(parts[i].participants()) + " participants");
    const std::size_t n = partition.total();
    lim.check(n, "compose");
    std::vector<bool> q(std::size_t{1} << n);
    for (std::uint64_t a = 0; a < q.size(); ++a) {
        std::uint64_t blocks = 0;
        for (std::size_t i = 0; i < r; ++i)
            if (parts[i].is_qualified(partition.restrict(SupportSet(a), i))) blocks |= 1ull << i;
        q[a] = g0.is_qualified(SupportSet(blocks));
    }
    auto minimal = detail::minimal_from_bitmap(q);
    if (minimal.empty()) return AccessStructure::empty(n);
    return AccessStructure::from_supports(n, std::move(minimal));
}

}  // namespace ssc

#endif  // SSC_ACCESS_HPP
