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

#ifndef SSC_IO_HPP
#define SSC_IO_HPP

// JSON file formats. Keys are emitted in a fixed order (ordered_json) so the
// bytes of a written file depend only on its content.

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "access.hpp"
#include "construction.hpp"
#include "scheme.hpp"

namespace ssc::io {

using Json = nlohmann::ordered_json;

namespace detail {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("malformed ") + what + ": " + e.what());
    }
}

inline const Json& member(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("malformed ") + what + ": missing key \"" + key + "\"");
    return j.at(key);
}

inline Json encode(const Vec& v) {
    Json a = Json::array();
    for (auto x : v) a.push_back(x.v);
    return a;
}

inline Vec decode(const Field& f, const Json& a) {
    Vec v;
    for (const auto& x : a) v.push_back(f.element(x.get<std::uint32_t>()));
    return v;
}

inline Json encode(SupportSet s) {
    Json a = Json::array();
    for (auto i : s.indices()) a.push_back(i);
    return a;
}

inline SupportSet decode_support(const Json& a, std::size_t n) {
    std::vector<std::size_t> idx;
    for (const auto& x : a) {
        const auto i = x.get<std::size_t>();
        if (i < 1 || i > n) throw InvalidInput("participant index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
        idx.push_back(i);
    }
    return SupportSet::from_indices(idx);
}

}  // namespace detail

inline Json to_json(const Field& f) {
    Json mod = Json::array();
    for (auto c : f.modulus()) mod.push_back(c);
    return Json{{"p", f.characteristic()}, {"m", f.degree()}, {"modulus", mod}};
}

inline Field field_from_json(const Json& j) {
    return detail::guarded("field", [&] {
        const auto p = detail::member(j, "p", "field").get<std::uint32_t>();
        const auto m = detail::member(j, "m", "field").get<std::uint32_t>();
        const auto mod = detail::member(j, "modulus", "field").get<std::vector<std::uint32_t>>();
        if (mod.size() != m + 1) throw InvalidInput("field modulus length must be m+1");
        return Field::from_modulus(p, mod);
    });
}

inline Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(detail::encode(m.row(r)));
    return rows;
}

inline Json to_json(const LinearCode& c) {
    return Json{{"field", to_json(c.field())}, {"n", c.length()}, {"k", c.dimension()}, {"generator", to_json(c.generator())}};
}

inline LinearCode code_from_json(const Json& j) {
    return detail::guarded("code", [&] {
        const Field f = field_from_json(detail::member(j, "field", "code"));
        const auto n = detail::member(j, "n", "code").get<std::size_t>();
        const auto k = detail::member(j, "k", "code").get<std::size_t>();
        std::vector<Vec> rows;
        for (const auto& r : detail::member(j, "generator", "code")) rows.push_back(detail::decode(f, r));
        if (rows.size() != k) throw InvalidInput("code generator must have k rows");
        return LinearCode(Matrix::from_rows(f, n, rows));
    });
}

inline Json to_json(const AccessStructure& g) {
    Json mins = Json::array();
    for (auto s : g.minimal()) mins.push_back(detail::encode(s));
    return Json{{"n", g.participants()}, {"minimal", mins}};
}

inline AccessStructure structure_from_json(const Json& j) {
    return detail::guarded("structure", [&] {
        const auto n = detail::member(j, "n", "structure").get<std::size_t>();
        if (n < 1 || n > kMaxParticipants) throw InvalidInput("structure participant count out of range");
        std::vector<SupportSet> family;
        for (const auto& s : detail::member(j, "minimal", "structure")) family.push_back(detail::decode_support(s, n));
        if (!is_antichain(family)) throw InvalidInput("structure \"minimal\" is not an antichain");
        return AccessStructure::from_supports(n, std::move(family));
    });
}

inline Json to_json(const BlockPartition& p) { return Json{{"blocks", p.sizes()}}; }

inline BlockPartition partition_from_json(const Json& j) {
    return detail::guarded("partition", [&] { return BlockPartition(detail::member(j, "blocks", "partition").get<std::vector<std::size_t>>()); });
}

inline Json to_json(const VectorSpaceConstruction& phi) {
    Json table = Json::array();
    for (const auto& v : phi.table()) table.push_back(detail::encode(v));
    return Json{{"field", to_json(phi.field())}, {"dim", phi.dim()}, {"n", phi.participants()}, {"table", table}};
}

inline VectorSpaceConstruction construction_from_json(const Json& j) {
    return detail::guarded("construction", [&] {
        const Field f = field_from_json(detail::member(j, "field", "construction"));
        const auto dim = detail::member(j, "dim", "construction").get<std::size_t>();
        const auto n = detail::member(j, "n", "construction").get<std::size_t>();
        std::vector<Vec> table;
        for (const auto& v : detail::member(j, "table", "construction")) table.push_back(detail::decode(f, v));
        if (table.size() != n) throw InvalidInput("construction table must have n rows");
        return VectorSpaceConstruction(f, dim, std::move(table));
    });
}

inline Json to_json(const WitnessTable& w) {
    Json sup = Json::array(), wit = Json::array();
    for (auto s : w.supports) sup.push_back(detail::encode(s));
    for (const auto& v : w.witnesses) wit.push_back(detail::encode(v));
    return Json{{"supports", sup}, {"witnesses", wit}};
}

/// Bytes hashed for share-file digests: compact dump of the canonical JSON.
inline std::string canonical_bytes(const VectorSpaceConstruction& phi) { return to_json(phi).dump(); }

inline std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) throw std::runtime_error("SHA-256 failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

inline std::string digest(const VectorSpaceConstruction& phi) { return sha256_hex(canonical_bytes(phi)); }

inline Json to_json(const ShareBundle& b) {
    Json shares = Json::object();
    for (std::size_t j = 0; j < b.shares.size(); ++j) shares[std::to_string(j + 1)] = b.shares[j].v;
    return Json{{"construction_digest", b.construction_digest}, {"shares", shares}};
}

/// Share files may list any subset of participants; absent ones read as nullopt.
struct ShareFile {
    std::string construction_digest;
    std::vector<std::optional<Elem>> shares;
};

inline ShareFile shares_from_json(const Json& j, const VectorSpaceConstruction& phi) {
    return detail::guarded("share file", [&] {
        ShareFile s;
        s.construction_digest = detail::member(j, "construction_digest", "share file").get<std::string>();
        s.shares.resize(phi.participants());
        for (const auto& [key, val] : detail::member(j, "shares", "share file").items()) {
            std::size_t idx = 0;
            try {
                idx = std::stoul(key);
            } catch (const std::exception&) {
                throw InvalidInput("share key \"" + key + "\" is not a participant index");
            }
            if (idx < 1 || idx > phi.participants()) throw InvalidInput("share for unknown participant " + key);
            s.shares[idx - 1] = phi.field().element(val.get<std::uint32_t>());
        }
        return s;
    });
}

inline Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

/// Pretty-printed with two-space indent and a trailing newline.
inline void write_json(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace ssc::io

#endif  // SSC_IO_HPP
