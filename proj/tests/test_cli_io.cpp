#include "doctest.h"
#include "nforge/cli_io.hpp"
#include "nforge/errors.hpp"

#include <filesystem>
#include <sstream>

using namespace nforge;
using namespace nforge::io;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "nforge");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    const int code = run_command(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path tmp(const std::string& name) {
    const fs::path dir = NFORGE_TEST_TMP;
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("scalar json round trip") {
    for (const Cyc& c : {Cyc(1), Cyc(-1), Cyc::root(12, 5), Cyc::root(8, 3)}) CHECK(scalar_from_json(scalar_to_json(c)) == c);
    const Cyc x = Cyc::root(5, 1) + Cyc(2);
    const auto j = scalar_to_json(x);
    CHECK(j.contains("coords"));
    CHECK(scalar_from_json(j) == x);
    CHECK(scalar_to_json(Cyc::root(12, 5)) == json{{"order", 12}, {"exp", 5}});
    CHECK_THROWS_AS(scalar_from_json(json{{"order", 0}, {"exp", 1}}), ParseError);
    CHECK_THROWS_AS(scalar_from_json(json{{"exp", 1}}), ParseError);
    CHECK_THROWS_AS(scalar_from_json(json("x")), ParseError);
}

TEST_CASE("sign flags") {
    CHECK(sign_from_flag("+") == 1);
    CHECK(sign_from_flag("-1") == -1);
    CHECK_THROWS_AS(sign_from_flag("0"), ParseError);
    const auto p = SuzukiParams::make(3, 2, -1, 1);
    CHECK(params_from_json(params_to_json(p)) == p);
}

TEST_CASE("braiding json round trip") {
    const SuzukiAlgebra a(SuzukiParams::make(1, 2, 1, 1));
    const auto b = braiding_of(build_family(a, Family::I, {0, 2, 0, 0, 1, 0}));
    const auto j = braiding_to_json(b);
    CHECK(j.at("dim") == 4);
    CHECK(braiding_from_json(j) == b);
    CHECK(braiding_from_json(json{{"body", {{"braiding", j}}}}) == b);
    auto bad = j;
    bad["terms"][0]["i"] = 9;
    CHECK_THROWS_AS(braiding_from_json(bad), ParseError);
    bad = j;
    bad.erase("dim");
    CHECK_THROWS_AS(braiding_from_json(bad), ParseError);
}

TEST_CASE("verdict json round trip") {
    const auto f = DimVerdict::finite(27, TypeTag::A2, "rank two");
    CHECK(verdict_from_json(verdict_to_json(f)) == f);
    const auto t = DimVerdict::finite(std::nullopt, TypeTag::ufo8, "table");
    CHECK(verdict_to_json(t).at("dim") == "type-only");
    CHECK(verdict_from_json(verdict_to_json(t)) == t);
    const auto i = DimVerdict::infinite("rack");
    CHECK(verdict_from_json(verdict_to_json(i)) == i);
}

TEST_CASE("digest and atomic write") {
    CHECK(digest("") == "fnv1a64:cbf29ce484222325");
    const auto p = tmp("atomic.txt");
    write_atomic(p.string(), "hello");
    CHECK(read_file(p.string()) == "hello");
    for (const auto& e : fs::directory_iterator(p.parent_path())) CHECK(e.path().extension() != ".tmp");
    CHECK_THROWS(read_file(tmp("missing.txt").string()));
}

TEST_CASE("exit codes") {
    CHECK(run({"suzuki", "verify-hopf", "--N", "1", "--n", "1"}).code == 0);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 64);
    CHECK(run({"suzuki", "verify-hopf", "--bogus"}).code == 64);
    CHECK(run({"suzuki", "verify-hopf", "--N", "0", "--n", "1"}).code == 4);
    CHECK(run({"classify", "--N", "1", "--n", "2", "--family", "D", "--j", "3"}).code == 4);
    CHECK(run({"suzuki", "dump", "--N", "1", "--n", "1", "--format", "yaml"}).code == 4);
    CHECK(run({"braided", "analyze", "--in", tmp("nope.json").string()}).code == 4);
}

TEST_CASE("classify emits a json verdict") {
    const auto r = run({"classify", "--N", "1", "--n", "2", "--family", "K", "--j", "2", "--p", "1", "--s", "1"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j.at("format") == kFormat);
    CHECK(j.at("manifest").contains("output_digest"));
}

TEST_CASE("relation checks") {
    const std::vector<std::string> base = {"nichols", "check-relations", "--N", "1", "--n", "2", "--family", "I",
                                           "--j", "2", "--p", "1", "--s", "1"};
    CHECK(run(base).code == 0);
    std::string text = read_file(data_dir() + "/relations/I_n2.rel");
    text.replace(text.find("- alpha m2w1"), 12, "+ alpha m2w1");
    const auto bad = tmp("I_n2_bad.rel");
    write_atomic(bad.string(), text);
    auto args = base;
    args.insert(args.end(), {"--relations", bad.string()});
    CHECK(run(args).code == 2);
}

TEST_CASE("sweep output is deterministic") {
    const std::vector<std::string> args = {"classify", "sweep", "--preset", "ufo8-E"};
    const auto a = run(args), b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("k,s,t,verdict,type_tag,reason\n", 0) == 0);
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 33);
}

TEST_CASE("repro matches and notices tampering") {
    const auto dir = tmp("repro");
    CHECK(run({"repro", "ufo8-tables", "--out-dir", dir.string()}).code == 0);
    CHECK(fs::exists(dir / "ufo8-D.csv"));
    auto preset = json::parse(read_file(data_dir() + "/presets/ufo8-D.json"));
    preset["expected"].erase(preset["expected"].begin());
    const auto p = tmp("tampered.json");
    write_atomic(p.string(), preset.dump());
    CHECK(run({"repro", p.string(), "--out-dir", dir.string()}).code == 2);
}
