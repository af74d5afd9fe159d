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

#ifndef SSC_CLI_HPP
#define SSC_CLI_HPP

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "corpus.hpp"
#include "io.hpp"
#include "probe.hpp"

namespace ssc::cli {

/// 0: success or verified; 1: a verification found a counterexample; 2: bad input or bounds.
enum ExitCode : int { kOk = 0, kFailed = 1, kInvalid = 2 };

namespace detail {

inline std::vector<std::size_t> parse_list(const std::string& s, const char* what) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size()) throw InvalidInput(std::string("--") + what + ": \"" + item + "\" is not a non-negative integer");
        out.push_back(v);
    }
    return out;
}

inline SupportSet parse_coalition(const std::string& s, std::size_t n) {
    SupportSet a;
    for (auto i : parse_list(s, "participants")) {
        if (i < 1 || i > n) throw InvalidInput("--participants: index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
        a.insert(i);
    }
    return a;
}

/// Writes to `path` when given, else prints the JSON.
inline void emit(const io::Json& j, const std::string& path, std::ostream& out) {
    if (path.empty()) out << j.dump(2) << '\n';
    else io::write_json(path, j);
}

inline BlockPartition blocks_for(const std::vector<std::size_t>& natural, const std::string& flag) {
    if (flag.empty()) return BlockPartition(natural);
    BlockPartition given(parse_list(flag, "blocks"));
    if (given.sizes() != natural) throw InvalidInput("--blocks does not match the sizes of the given parts");
    return given;
}

}  // namespace detail

/**
 * Runs one command line. Output goes to `out`; diagnostics to `err`.
 * Returns the process exit code.
 */
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Secret sharing schemes from linear codes"};
    app.require_subcommand(1);

    std::string output, blocks, participants;
    std::uint64_t seed = 0, max_subsets = 1ull << 20;
    std::uint32_t secret = 0;
    std::uint32_t p = 0, m = 0;
    std::size_t t = 0, n = 0, k = 0;
    std::string file_a, file_b, witness_path, points;
    std::vector<std::string> files;
    int code = kOk;

    auto add_output = [&](CLI::App* c) { c->add_option("-o,--output", output, "output file (default: stdout)"); };
    auto add_scan = [&](CLI::App* c) { c->add_option("--max-subsets", max_subsets, "bound on exhaustive subset scans"); };
    std::function<void()> action;

    auto* field = app.add_subcommand("field", "finite fields")->require_subcommand(1);
    auto* field_new = field->add_subcommand("new", "GF(p^m) with the smallest irreducible modulus");
    field_new->add_option("p", p)->required();
    field_new->add_option("m", m)->required();
    add_output(field_new);
    field_new->callback([&] { action = [&] { detail::emit(io::to_json(field_make(p, m)), output, out); }; });

    auto* codecmd = app.add_subcommand("code", "linear codes")->require_subcommand(1);
    auto* code_min = codecmd->add_subcommand("minimal-supports", "supports of the minimal codewords");
    code_min->add_option("code", file_a)->required();
    add_output(code_min);
    code_min->callback([&] {
        action = [&] {
            const auto c = io::code_from_json(io::read_json(file_a));
            const auto mins = minimal_supports(c);
            for (auto s : mins) out << s.to_string() << '\n';
            if (!output.empty()) io::write_json(output, io::to_json(AccessStructure::from_supports(c.length(), mins)));
        };
    });
    auto* code_dual = codecmd->add_subcommand("dual", "dual code");
    code_dual->add_option("code", file_a)->required();
    add_output(code_dual);
    code_dual->callback([&] { action = [&] { detail::emit(io::to_json(dual_code(io::code_from_json(io::read_json(file_a)))), output, out); }; });
    auto* code_rs = codecmd->add_subcommand("rs", "Reed-Solomon code RS(n,k)");
    code_rs->add_option("field", file_a)->required();
    code_rs->add_option("n", n)->required();
    code_rs->add_option("k", k)->required();
    code_rs->add_option("--points", points, "comma list of evaluation point encodings (default 1..n)");
    add_output(code_rs);
    code_rs->callback([&] {
        action = [&] {
            const Field f = io::field_from_json(io::read_json(file_a));
            Vec pts;
            if (points.empty()) pts = default_points(f, n);
            else
                for (auto x : detail::parse_list(points, "points")) pts.push_back(f.element(static_cast<std::uint32_t>(x)));
            detail::emit(io::to_json(reed_solomon(n, k, f, pts)), output, out);
        };
    });

    auto* structure = app.add_subcommand("structure", "access structures")->require_subcommand(1);
    auto* st_thr = structure->add_subcommand("threshold", "(t,n) threshold structure");
    st_thr->add_option("t", t)->required();
    st_thr->add_option("n", n)->required();
    add_output(st_thr);
    st_thr->callback([&] { action = [&] { detail::emit(io::to_json(threshold(t, n)), output, out); }; });
    auto* st_comp = structure->add_subcommand("compose", "composite structure outer[part_1, ..., part_r]");
    st_comp->add_option("outer", file_a)->required();
    st_comp->add_option("parts", files)->required();
    st_comp->add_option("--blocks", blocks, "comma list of block sizes (checked against the parts)");
    add_scan(st_comp);
    add_output(st_comp);
    st_comp->callback([&] {
        action = [&] {
            const auto outer = io::structure_from_json(io::read_json(file_a));
            std::vector<AccessStructure> parts;
            std::vector<std::size_t> sizes;
            for (const auto& f : files) {
                parts.push_back(io::structure_from_json(io::read_json(f)));
                sizes.push_back(parts.back().participants());
            }
            detail::emit(io::to_json(compose(outer, parts, detail::blocks_for(sizes, blocks), ScanLimits{max_subsets})), output, out);
        };
    });
    auto* st_dual = structure->add_subcommand("dual", "dual structure");
    st_dual->add_option("structure", file_a)->required();
    add_scan(st_dual);
    add_output(st_dual);
    st_dual->callback([&] {
        action = [&] { detail::emit(io::to_json(dual_structure(io::structure_from_json(io::read_json(file_a)), ScanLimits{max_subsets})), output, out); };
    });
    auto* st_code = structure->add_subcommand("of-code", "structure given by the codeword supports");
    st_code->add_option("code", file_a)->required();
    add_output(st_code);
    st_code->callback([&] { action = [&] { detail::emit(io::to_json(structure_of_code(io::code_from_json(io::read_json(file_a)))), output, out); }; });

    auto* construct = app.add_subcommand("construct", "vector space constructions")->require_subcommand(1);
    auto* cn_norm = construct->add_subcommand("normalize", "sum-normalize a code");
    cn_norm->add_option("code", file_a)->required();
    cn_norm->add_option("--witness", witness_path, "write the witness table here");
    add_output(cn_norm);
    cn_norm->callback([&] {
        action = [&] {
            const auto nc = sum_normalize(io::code_from_json(io::read_json(file_a)));
            io::Json j = io::to_json(nc.code);
            j["parity"] = io::to_json(nc.parity);
            detail::emit(j, output, out);
            if (!witness_path.empty()) io::write_json(witness_path, io::to_json(nc.witnesses));
            if (!output.empty())
                out << "normalized over " << nc.code.field().name() << " after " << nc.chain.size() << " extension(s); " << nc.witnesses.supports.size()
                    << " minimal supports\n";
        };
    });
    auto* cn_comp = construct->add_subcommand("compose", "composite construction from an outer construction and codes");
    cn_comp->add_option("outer", file_a)->required();
    cn_comp->add_option("codes", files)->required();
    cn_comp->add_option("--blocks", blocks, "comma list of block sizes (checked against the code lengths)");
    add_output(cn_comp);
    cn_comp->callback([&] {
        action = [&] {
            const auto outer = io::construction_from_json(io::read_json(file_a));
            std::vector<LinearCode> codes;
            std::vector<std::size_t> sizes;
            for (const auto& f : files) {
                codes.push_back(io::code_from_json(io::read_json(f)));
                sizes.push_back(codes.back().length());
            }
            detail::emit(io::to_json(compose_construction(outer, codes, detail::blocks_for(sizes, blocks))), output, out);
        };
    });
    auto* cn_code = construct->add_subcommand("code", "construction realizing the structure of a code");
    cn_code->add_option("code", file_a)->required();
    add_output(cn_code);
    cn_code->callback([&] { action = [&] { detail::emit(io::to_json(code_construction(io::code_from_json(io::read_json(file_a)))), output, out); }; });
    auto* cn_thr = construct->add_subcommand("threshold", "Vandermonde construction of the (t,n) threshold");
    cn_thr->add_option("t", t)->required();
    cn_thr->add_option("n", n)->required();
    cn_thr->add_option("field", file_a)->required();
    add_output(cn_thr);
    cn_thr->callback([&] {
        action = [&] { detail::emit(io::to_json(threshold_construction(t, n, io::field_from_json(io::read_json(file_a)))), output, out); };
    });
    auto* cn_ver = construct->add_subcommand("verify", "check that a construction realizes a structure");
    cn_ver->add_option("construction", file_a)->required();
    cn_ver->add_option("structure", file_b)->required();
    add_scan(cn_ver);
    cn_ver->callback([&] {
        action = [&] {
            const auto phi = io::construction_from_json(io::read_json(file_a));
            const auto g = io::structure_from_json(io::read_json(file_b));
            const auto v = realizes(phi, g, ScanLimits{max_subsets});
            out << "realizes: " << (v.realizes ? "true" : "false") << " (" << v.scanned << " subsets scanned)";
            if (!v.realizes) out << "; counterexample " << v.counterexample->to_string() << " (" << to_string(v.direction) << ")";
            out << '\n';
            for (auto j : phi.zero_vectors()) out << "note: participant " << j << " is mapped to the zero vector\n";
            code = v.realizes ? kOk : kFailed;
        };
    });

    auto* share = app.add_subcommand("share", "deal and reconstruct")->require_subcommand(1);
    auto* sh_deal = share->add_subcommand("deal", "deal shares of a secret");
    sh_deal->add_option("construction", file_a)->required();
    sh_deal->add_option("--secret", secret, "secret as a field element encoding")->required();
    sh_deal->add_option("--seed", seed, "64-bit seed for the dealer randomness");
    add_output(sh_deal);
    sh_deal->callback([&] {
        action = [&] {
            const auto phi = io::construction_from_json(io::read_json(file_a));
            detail::emit(io::to_json(deal(phi, Elem{secret}, seed, io::digest(phi))), output, out);
        };
    });
    auto* sh_rec = share->add_subcommand("reconstruct", "recover the secret from a coalition's shares");
    sh_rec->add_option("construction", file_a)->required();
    sh_rec->add_option("shares", file_b)->required();
    sh_rec->add_option("--participants", participants, "comma list of participants")->required();
    sh_rec->callback([&] {
        action = [&] {
            const auto phi = io::construction_from_json(io::read_json(file_a));
            const auto sf = io::shares_from_json(io::read_json(file_b), phi);
            if (sf.construction_digest != io::digest(phi)) throw InvalidInput("share file was dealt from a different construction");
            const auto a = detail::parse_coalition(participants, phi.participants());
            Vec shares(phi.participants());
            for (auto j : a.indices()) {
                if (!sf.shares[j - 1]) throw InvalidInput("share file has no share for participant " + std::to_string(j));
                shares[j - 1] = *sf.shares[j - 1];
            }
            const Elem secret_value = reconstruct(phi, a, shares);
            out << "secret: " << secret_value.v << '\n';
        };
    });

    auto* audit = app.add_subcommand("audit", "information-theoretic audits")->require_subcommand(1);
    auto* au_perf = audit->add_subcommand("perfect", "exhaustive perfectness audit of one coalition");
    au_perf->add_option("construction", file_a)->required();
    au_perf->add_option("--participants", participants, "comma list of participants (empty for the empty coalition)");
    au_perf->callback([&] {
        action = [&] {
            const auto phi = io::construction_from_json(io::read_json(file_a));
            const auto a = detail::parse_coalition(participants, phi.participants());
            const auto rep = perfectness_audit(phi, a);
            const bool qualified = reaches_target(phi, a);
            const auto expected = qualified ? AuditVerdict::Determined : AuditVerdict::Perfect;
            out << "coalition " << a.to_string() << " (" << (qualified ? "qualified" : "unqualified") << "): " << to_string(rep.verdict) << " over "
                << rep.dealings << " dealings, " << rep.buckets.size() << " share patterns\n";
            code = rep.verdict == expected ? kOk : kFailed;
        };
    });

    auto* probe = app.add_subcommand("probe", "empirical proposition probes")->require_subcommand(1);
    auto* pr_prop = probe->add_subcommand("propositions", "minimal-set and duality identities for outer[codes]");
    pr_prop->add_option("outer", file_a)->required();
    pr_prop->add_option("codes", files)->required();
    pr_prop->add_option("--blocks", blocks, "comma list of block sizes (checked against the code lengths)");
    add_scan(pr_prop);
    pr_prop->callback([&] {
        action = [&] {
            const auto outer = io::structure_from_json(io::read_json(file_a));
            std::vector<LinearCode> codes;
            std::vector<std::size_t> sizes;
            for (const auto& f : files) {
                codes.push_back(io::code_from_json(io::read_json(f)));
                sizes.push_back(codes.back().length());
            }
            const auto rep = probe_propositions(outer, codes, detail::blocks_for(sizes, blocks), ScanLimits{max_subsets});
            auto line = [&](const char* name, const IdentityVerdict& v) {
                out << name << ": " << (v.equal ? "EQUAL" : "UNEQUAL");
                if (v.counterexample) out << ", counterexample " << v.counterexample->to_string();
                out << '\n';
            };
            line("minimal sets", rep.minimal_sets);
            line("duality", rep.duality);
            out << "dual of composite: " << rep.dual_of_composite.to_string() << '\n';
            out << "composite of duals: " << rep.composite_of_duals.to_string() << '\n';
            code = rep.minimal_sets.equal && rep.duality.equal ? kOk : kFailed;
        };
    });

    auto* corpus = app.add_subcommand("corpus", "verification corpus")->require_subcommand(1);
    auto* co_run = corpus->add_subcommand("run", "run every verification suite");
    co_run->callback([&] {
        action = [&] {
            bool all = true;
            for (const auto& r : corpus::run_all()) {
                out << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << std::left << std::setw(64) << r.name << std::right << std::fixed
                    << std::setprecision(2) << std::setw(7) << r.seconds << "s / " << std::setprecision(0) << r.budget << "s  " << r.detail << '\n';
                all = all && r.passed;
            }
            code = all ? kOk : kFailed;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kInvalid;
    }
    if (!action) {
        err << "error: no command given\n";
        return kInvalid;
    }
    try {
        action();
    } catch (const BoundExceeded& e) {
        err << "error: bound exceeded: " << e.what() << '\n';
        return kInvalid;
    } catch (const UnqualifiedSet& e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const InconsistentShares& e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const InvalidInput& e) {
        err << "error: invalid input: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    }
    return code;
}

}  // namespace ssc::cli

#endif  // SSC_CLI_HPP
