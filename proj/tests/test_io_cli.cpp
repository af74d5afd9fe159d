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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "naive.hpp"
#include "ssc/cli.hpp"
#include "ssc/io.hpp"

using namespace ssc;
namespace fs = std::filesystem;

namespace {

Vec v(std::initializer_list<std::uint32_t> xs) {
    Vec out;
    for (auto x : xs) out.push_back(Elem{x});
    return out;
}

struct Outcome {
    int code;
    std::string out, err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "ssc");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("ssc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        const Field f2 = field_make(2, 1);
        io::write_json(path("even32.json"), io::to_json(code_from_parity(Matrix::from_rows(f2, 3, {v({1, 1, 1})}), 3)));
        io::write_json(path("gf2.json"), io::to_json(f2));
        io::write_json(path("gf4.json"), io::to_json(field_make(2, 2)));
        io::write_json(path("gamma23.json"), io::to_json(threshold(2, 3)));
        io::write_json(path("gamma33.json"), io::to_json(threshold(3, 3)));
        io::write_json(path("one.json"), io::to_json(threshold(1, 1)));
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    void write(const std::string& name, const std::string& text) const { std::ofstream(dir_ / name) << text; }

    fs::path dir_;
};

}  // namespace

TEST(Io, Sha256KnownVectors) {
    EXPECT_EQ(io::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    EXPECT_EQ(io::sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Io, RoundTrips) {
    const Field f4 = field_make(2, 2);
    EXPECT_EQ(io::field_from_json(io::to_json(f4)), f4);
    const LinearCode rs = reed_solomon(3, 2, f4);
    EXPECT_EQ(io::code_from_json(io::to_json(rs)).generator(), rs.generator());
    const auto g = AccessStructure::from_supports(4, {{1, 3}, {2, 4}});
    EXPECT_EQ(io::structure_from_json(io::to_json(g)), g);
    const auto phi = threshold_construction(2, 3, f4);
    const auto back = io::construction_from_json(io::to_json(phi));
    EXPECT_EQ(back.table(), phi.table());
    EXPECT_EQ(io::digest(back), io::digest(phi));
    EXPECT_EQ(io::partition_from_json(io::to_json(BlockPartition({2, 1}))).sizes(), (std::vector<std::size_t>{2, 1}));
}

TEST(Io, ConstructionFormat) {
    const auto j = io::to_json(threshold_construction(2, 3, field_make(2, 2)));
    EXPECT_EQ(j.dump(), R"({"field":{"p":2,"m":2,"modulus":[1,1,1]},"dim":2,"n":3,"table":[[1,1],[1,2],[1,3]]})");
}

TEST(Io, RejectsMalformedDocuments) {
    using io::Json;
    EXPECT_THROW(io::field_from_json(Json{{"p", 2}, {"m", 2}, {"modulus", {1, 0, 1}}}), InvalidInput);
    EXPECT_THROW(io::field_from_json(Json{{"p", 2}}), InvalidInput);
    EXPECT_THROW(io::structure_from_json(Json::parse(R"({"n":3,"minimal":[[1],[1,2]]})")), InvalidInput);
    EXPECT_THROW(io::structure_from_json(Json::parse(R"({"n":3,"minimal":[[4]]})")), InvalidInput);
    EXPECT_THROW(io::structure_from_json(Json::parse(R"({"n":"3","minimal":[]})")), InvalidInput);
    const auto phi = Json::parse(R"({"field":{"p":2,"m":1,"modulus":[0,1]},"dim":1,"n":2,"table":[[1]]})");
    EXPECT_THROW(io::construction_from_json(phi), InvalidInput);
}

TEST_F(CliTest, FieldNew) {
    const auto r = run({"field", "new", "2", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(io::Json::parse(r.out).dump(), R"({"p":2,"m":4,"modulus":[1,1,0,0,1]})");
    EXPECT_EQ(run({"field", "new", "4", "1"}).code, 2);
    const auto big = run({"field", "new", "2", "21"});
    EXPECT_EQ(big.code, 2);
    EXPECT_NE(big.err.find("bound exceeded"), std::string::npos);
}

TEST_F(CliTest, CorollaryPipeline) {
    ASSERT_EQ(run({"construct", "code", path("even32.json"), "-o", path("vsc.json")}).code, 0);
    const auto phi = io::construction_from_json(io::read_json(path("vsc.json")));
    EXPECT_EQ(phi.table(), (std::vector<Vec>{v({1, 3}), v({1, 2}), v({1, 1})}));

    const auto ok = run({"construct", "verify", path("vsc.json"), path("gamma23.json")});
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(ok.out, "realizes: true (8 subsets scanned)\n");

    const auto bad = run({"construct", "verify", path("vsc.json"), path("gamma33.json")});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.out.find("counterexample {1,2} (unqualified but reachable)"), std::string::npos);
}

TEST_F(CliTest, DealAndReconstruct) {
    ASSERT_EQ(run({"construct", "code", path("even32.json"), "-o", path("vsc.json")}).code, 0);
    ASSERT_EQ(run({"share", "deal", path("vsc.json"), "--secret", "2", "--seed", "7", "-o", path("shares.json")}).code, 0);
    const auto j = io::read_json(path("shares.json"));
    EXPECT_EQ(j["construction_digest"], io::digest(io::construction_from_json(io::read_json(path("vsc.json")))));
    EXPECT_EQ(j["shares"].size(), 3u);

    const auto r = run({"share", "reconstruct", path("vsc.json"), path("shares.json"), "--participants", "1,2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "secret: 2\n");
    EXPECT_EQ(run({"share", "reconstruct", path("vsc.json"), path("shares.json"), "--participants", "1,2,3"}).out, "secret: 2\n");

    const auto unq = run({"share", "reconstruct", path("vsc.json"), path("shares.json"), "--participants", "2"});
    EXPECT_EQ(unq.code, 2);
    EXPECT_NE(unq.err.find("not qualified"), std::string::npos);
    EXPECT_EQ(unq.out, "");
    EXPECT_EQ(run({"share", "reconstruct", path("vsc.json"), path("shares.json"), "--participants", "1,4"}).code, 2);
    EXPECT_EQ(run({"share", "deal", path("vsc.json"), "--secret", "4"}).code, 2);
    EXPECT_EQ(run({"share", "deal", path("vsc.json")}).code, 2);
}

TEST_F(CliTest, ReconstructRejectsForeignShares) {
    ASSERT_EQ(run({"construct", "code", path("even32.json"), "-o", path("vsc.json")}).code, 0);
    ASSERT_EQ(run({"construct", "threshold", "2", "3", path("gf4.json"), "-o", path("thr.json")}).code, 0);
    ASSERT_EQ(run({"share", "deal", path("thr.json"), "--secret", "1", "-o", path("shares.json")}).code, 0);
    const auto r = run({"share", "reconstruct", path("vsc.json"), path("shares.json"), "--participants", "1,2"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("different construction"), std::string::npos);
}

TEST_F(CliTest, InconsistentSharesExitTwo) {
    ASSERT_EQ(run({"construct", "code", path("even32.json"), "-o", path("vsc.json")}).code, 0);
    const auto phi = io::construction_from_json(io::read_json(path("vsc.json")));
    write("bad.json", R"({"construction_digest":")" + io::digest(phi) + R"(","shares":{"1":1,"2":0,"3":0}})");
    const auto r = run({"share", "reconstruct", path("vsc.json"), path("bad.json"), "--participants", "1,2,3"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("not consistent"), std::string::npos);
}

TEST_F(CliTest, PipelinesAreByteReproducible) {
    for (const char* tag : {"a", "b"}) {
        const std::string t(tag);
        ASSERT_EQ(run({"construct", "code", path("even32.json"), "-o", path("vsc" + t + ".json")}).code, 0);
        ASSERT_EQ(run({"share", "deal", path("vsc" + t + ".json"), "--secret", "3", "--seed", "123456789", "-o", path("sh" + t + ".json")}).code, 0);
        ASSERT_EQ(run({"construct", "normalize", path("even32.json"), "-o", path("norm" + t + ".json"), "--witness", path("wit" + t + ".json")}).code, 0);
    }
    EXPECT_EQ(slurp(path("vsca.json")), slurp(path("vscb.json")));
    EXPECT_EQ(slurp(path("sha.json")), slurp(path("shb.json")));
    EXPECT_EQ(slurp(path("norma.json")), slurp(path("normb.json")));
    EXPECT_EQ(slurp(path("wita.json")), slurp(path("witb.json")));
}

TEST_F(CliTest, NormalizeWritesParityAndWitnesses) {
    const auto r = run({"construct", "normalize", path("even32.json"), "--witness", path("wit.json")});
    ASSERT_EQ(r.code, 0);
    const auto j = io::Json::parse(r.out);
    EXPECT_EQ(j["parity"].dump(), "[[3,2,1]]");
    EXPECT_EQ(j["field"]["m"], 2);
    EXPECT_EQ(io::read_json(path("wit.json")).dump(), R"({"supports":[[1,2],[1,3],[2,3]],"witnesses":[[2,3,0],[2,0,1],[0,3,1]]})");
}

TEST_F(CliTest, CodeCommands) {
    const auto mins = run({"code", "minimal-supports", path("even32.json")});
    EXPECT_EQ(mins.code, 0);
    EXPECT_EQ(mins.out, "{1,2}\n{1,3}\n{2,3}\n");
    const auto dual = run({"code", "dual", path("even32.json")});
    EXPECT_EQ(dual.code, 0);
    EXPECT_EQ(io::Json::parse(dual.out)["generator"].dump(), "[[1,1,1]]");
    const auto rs = run({"code", "rs", path("gf4.json"), "3", "2"});
    EXPECT_EQ(rs.code, 0);
    EXPECT_EQ(io::Json::parse(rs.out)["generator"].dump(), "[[1,1,1],[1,2,3]]");
    EXPECT_EQ(run({"code", "rs", path("gf4.json"), "3", "2", "--points", "1,1,2"}).code, 2);
    EXPECT_EQ(run({"code", "rs", path("gf4.json"), "3", "2", "--points", "1,x,2"}).code, 2);
}

TEST_F(CliTest, StructureCommands) {
    const auto thr = run({"structure", "threshold", "2", "3"});
    EXPECT_EQ(io::Json::parse(thr.out).dump(), R"({"n":3,"minimal":[[1,2],[1,3],[2,3]]})");
    EXPECT_EQ(io::structure_from_json(io::Json::parse(run({"structure", "of-code", path("even32.json")}).out)), threshold(2, 3));
    EXPECT_EQ(io::structure_from_json(io::Json::parse(run({"structure", "dual", path("gamma33.json")}).out)), threshold(1, 3));

    io::write_json(path("t22.json"), io::to_json(threshold(2, 2)));
    io::write_json(path("t12.json"), io::to_json(threshold(1, 2)));
    const auto comp = run({"structure", "compose", path("t22.json"), path("t12.json"), path("one.json"), "--blocks", "2,1"});
    EXPECT_EQ(comp.code, 0);
    EXPECT_EQ(io::Json::parse(comp.out).dump(), R"({"n":3,"minimal":[[1,3],[2,3]]})");
    EXPECT_EQ(run({"structure", "compose", path("t22.json"), path("t12.json"), path("one.json"), "--blocks", "1,2"}).code, 2);
    EXPECT_EQ(run({"structure", "dual", path("gamma33.json"), "--max-subsets", "4"}).code, 2);
}

TEST_F(CliTest, ComposeConstruction) {
    io::write_json(path("outer.json"), io::to_json(VectorSpaceConstruction(field_make(2, 2), 2, {v({1, 1}), v({0, 1})})));
    io::write_json(path("rep2.json"), io::to_json(LinearCode(Matrix::from_rows(field_make(2, 1), 2, {v({1, 1})}))));
    io::write_json(path("full1.json"), io::to_json(LinearCode(Matrix::identity(field_make(2, 1), 1))));
    const auto r = run({"construct", "compose", path("outer.json"), path("rep2.json"), path("full1.json"), "-o", path("phi.json")});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(io::read_json(path("phi.json"))["table"].dump(), "[[1,1,3],[1,1,1],[0,1,0]]");
    io::write_json(path("abc.json"), io::to_json(threshold(3, 3)));
    EXPECT_EQ(run({"construct", "verify", path("phi.json"), path("abc.json")}).code, 0);
}

TEST_F(CliTest, AuditPerfect) {
    ASSERT_EQ(run({"construct", "code", path("even32.json"), "-o", path("vsc.json")}).code, 0);
    const auto one = run({"audit", "perfect", path("vsc.json"), "--participants", "2"});
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out, "coalition {2} (unqualified): PERFECT over 16 dealings, 4 share patterns\n");
    const auto two = run({"audit", "perfect", path("vsc.json"), "--participants", "1,2"});
    EXPECT_EQ(two.code, 0);
    EXPECT_NE(two.out.find("DETERMINED"), std::string::npos);
    EXPECT_EQ(run({"audit", "perfect", path("vsc.json")}).code, 0);
}

TEST_F(CliTest, ProbePropositions) {
    const auto r = run({"probe", "propositions", path("one.json"), path("even32.json")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("minimal sets: EQUAL\n"), std::string::npos);
    EXPECT_NE(r.out.find("duality: UNEQUAL, counterexample {1,2}\n"), std::string::npos);
}

TEST_F(CliTest, CorpusRun) {
    const auto r = run({"corpus", "run"});
    EXPECT_EQ(r.code, 0) << r.out;
    std::size_t passes = 0;
    for (std::size_t pos = r.out.find("PASS"); pos != std::string::npos; pos = r.out.find("PASS", pos + 1)) ++passes;
    EXPECT_EQ(passes, 8u);
}

TEST_F(CliTest, InvalidInputsExitTwo) {
    EXPECT_EQ(run({"construct", "code", path("missing.json")}).code, 2);
    write("garbage.json", "{not json");
    EXPECT_EQ(run({"construct", "code", path("garbage.json")}).code, 2);
    write("notanti.json", R"({"n":3,"minimal":[[1],[1,2]]})");
    EXPECT_EQ(run({"structure", "dual", path("notanti.json")}).code, 2);
    write("wrongtype.json", R"({"field":{"p":2,"m":1,"modulus":[0,1]},"n":"x","k":1,"generator":[[1]]})");
    EXPECT_EQ(run({"code", "dual", path("wrongtype.json")}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"field", "new", "2"}).code, 2);
}

TEST_F(CliTest, HelpExitsZero) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("construct"), std::string::npos);
}
