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

#ifndef SSC_SUPPORT_HPP
#define SSC_SUPPORT_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ssc {

/// Participants and coordinates are limited to 64 so a subset fits a word.
inline constexpr std::size_t kMaxParticipants = 64;

/**
 * A subset of {1..n}. Stored as a bit mask (bit i <-> index i+1); presented
 * with 1-based indices everywhere outside this class.
 */
class SupportSet {
   public:
    constexpr SupportSet() = default;
    constexpr explicit SupportSet(std::uint64_t mask) : bits_(mask) {}
    SupportSet(std::initializer_list<std::size_t> one_based) {
        for (auto i : one_based) insert(i);
    }

    static SupportSet from_indices(const std::vector<std::size_t>& one_based) {
        SupportSet s;
        for (auto i : one_based) s.insert(i);
        return s;
    }

    static SupportSet full(std::size_t n) { return SupportSet(n >= 64 ? ~0ull : (1ull << n) - 1); }

    void insert(std::size_t one_based) {
        if (one_based < 1 || one_based > kMaxParticipants) throw InvalidInput("participant index " + std::to_string(one_based) + " out of range");
        bits_ |= 1ull << (one_based - 1);
    }

    constexpr std::uint64_t mask() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(std::size_t one_based) const { return (bits_ >> (one_based - 1)) & 1u; }
    constexpr bool subset_of(SupportSet o) const { return (bits_ & ~o.bits_) == 0; }
    /// Largest index present, 0 when empty.
    constexpr std::size_t max_index() const { return bits_ ? 64 - static_cast<std::size_t>(std::countl_zero(bits_)) : 0; }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)) + 1);
        return out;
    }

    friend constexpr bool operator==(SupportSet, SupportSet) = default;

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (auto i : indices()) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        }
        return s + "}";
    }

   private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic order of the ascending index sequences; a proper prefix sorts first.
inline bool lex_less(SupportSet a, SupportSet b) {
    std::uint64_t x = a.mask(), y = b.mask();
    while (x && y) {
        const auto lx = x & (~x + 1), ly = y & (~y + 1);
        if (lx != ly) return lx < ly;
        x ^= lx;
        y ^= ly;
    }
    return x == 0 && y != 0;
}

inline void sort_lex(std::vector<SupportSet>& v) {
    std::sort(v.begin(), v.end(), lex_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// Inclusion-minimal members of a family, sorted lexicographically.
inline std::vector<SupportSet> minimal_members(std::vector<SupportSet> family) {
    std::sort(family.begin(), family.end(), [](SupportSet a, SupportSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a.mask() < b.mask();
    });
    family.erase(std::unique(family.begin(), family.end()), family.end());
    std::vector<SupportSet> kept;
    for (auto s : family) {
        bool dominated = false;
        for (auto k : kept)
            if (k.subset_of(s)) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(s);
    }
    sort_lex(kept);
    return kept;
}

inline bool is_antichain(const std::vector<SupportSet>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (i != j && v[i].subset_of(v[j])) return false;
    return true;
}

}  // namespace ssc

#endif  // SSC_SUPPORT_HPP
