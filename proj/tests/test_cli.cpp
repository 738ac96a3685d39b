#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace klreg;
using Json = nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "klreg");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(KLREG_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("parse_permutation accepts the documented forms") {
    const Permutation p{4, 6, 1, 2, 8, 9, 3, 5, 10, 7};
    CHECK(cli::parse_permutation("[4,6,1,2,8,9,3,5,10,7]") == p);
    CHECK(cli::parse_permutation("4 6 1 2 8 9 3 5 10 7") == p);
    CHECK(cli::parse_permutation("4,6,1,2,8,9,3,5,10,7") == p);
    CHECK(cli::parse_permutation(" 2413 ") == Permutation{2, 4, 1, 3});
    CHECK_THROWS_AS(cli::parse_permutation("4612893510"), ParseError);
    CHECK_THROWS_AS(cli::parse_permutation(""), ParseError);
    CHECK_THROWS_AS(cli::parse_permutation("2a13"), ParseError);
    CHECK_THROWS_AS(cli::parse_permutation("[2,1"), ParseError);
    CHECK_THROWS_AS(cli::parse_permutation("[2,\"1\"]"), ParseError);
    CHECK_THROWS_AS(cli::parse_permutation("2 2 1"), ValidationError);
}

TEST_CASE("parse_ladder") {
    const auto L = cli::load_ladder(data("two_sided.json"));
    CHECK(L.lambda() == std::vector<int>{5, 5, 5, 5, 2, 2});
    CHECK(L.marked().size() == 3);
    CHECK_THROWS_AS(cli::parse_ladder("{\"lambda\": [1]}"), ParseError);
    CHECK_THROWS_AS(cli::parse_ladder("{\"lambda\": [1], \"marked\": [{\"point\": [1], \"r\": 1}]}"), ParseError);
    CHECK_THROWS_AS(cli::parse_ladder("not json"), ParseError);
    CHECK_THROWS_AS(cli::load_ladder(data("missing.json")), ParseError);
}

TEST_CASE("exit codes by error kind") {
    CHECK(cli::exit_code_for(ErrorKind::Parse) == cli::kUsage);
    CHECK(cli::exit_code_for(ErrorKind::Resource) == cli::kResource);
    CHECK(cli::exit_code_for(ErrorKind::Pattern) == cli::kInvalid);
    CHECK(cli::exit_code_for(ErrorKind::Construction) == cli::kInvalid);
}

TEST_CASE("pair subcommand") {
    const auto r = invoke({"pair", "--v", "5 8 9 10 1 2 11 3 4 6 7", "--w", "1 4 5 8 2 3 9 6 10 11 7", "--recurrence", "--oracle", "--render"});
    REQUIRE(r.code == cli::kOk);
    const auto j = Json::parse(r.out);
    CHECK(j["regularity"] == 4);
    CHECK(j["a_invariant"] == -10);
    CHECK(j["groth_degree"] == 16);
    CHECK(j["ell_w"] == 12);
    CHECK(j["ell_v"] == 26);
    CHECK(j["recurrence"]["verdict"] == "AGREE");
    CHECK(j["oracle"]["verdict"] == "AGREE");
    CHECK(j["render"]["d_zip_k"].size() > 0);

    // Byte-stable output.
    CHECK(invoke({"pair", "--v", "2413", "--w", "2143"}).out == invoke({"pair", "--v", "[2,4,1,3]", "--w", "2 1 4 3"}).out);
}

TEST_CASE("pair subcommand errors") {
    CHECK(invoke({"pair", "--v", "321", "--w", "123"}).code == cli::kInvalid);
    CHECK(invoke({"pair", "--v", "2134", "--w", "1324"}).code == cli::kInvalid);
    CHECK(invoke({"pair", "--v", "1234567891"}).code == cli::kUsage);
    CHECK(invoke({"pair", "--v", "x", "--w", "1"}).code == cli::kUsage);
    CHECK(invoke({}).code == cli::kUsage);
    const auto help = invoke({"--help"});
    CHECK(help.code == cli::kOk);
    CHECK(help.out.find("pair") != std::string::npos);
}

TEST_CASE("ladder subcommand") {
    const auto path = (std::filesystem::temp_directory_path() / "klreg_cli_test.m2").string();
    const auto r = invoke({"ladder", "--file", data("two_sided.json"), "--oracle", "--render", "--export-ideal", path});
    REQUIRE(r.code == cli::kOk);
    const auto j = Json::parse(r.out);
    CHECK(j["regularity"] == 4);
    CHECK(j["a_invariant"] == -10);
    CHECK(j["weight"] == 14);
    CHECK(j["elbow_count"] == 4);
    CHECK(j["minimal"]["ok"] == true);
    CHECK(j["oracle"]["verdict"] == "AGREE");
    CHECK(j["exported_generators"] == 17);
    std::ifstream f(path);
    std::string first;
    std::getline(f, first);
    CHECK(first.rfind("R = QQ[", 0) == 0);
    std::filesystem::remove(path);

    const auto big = Json::parse(invoke({"ladder", "--file", data("large_ladder.json")}).out);
    CHECK(big["regularity"] == 7);
    CHECK(big["a_invariant"] == -33);
    CHECK(big["boundary"]["V"] == Json::array({"(0.5,0)", "(1.5,0)", "(5.5,6)", "(4.5,2)"}));
    CHECK(big["boundary"]["H"] == Json::array({"(10,9.5)", "(8,7.5)", "(8,6.5)", "(5,5.5)"}));
    CHECK(big["minimal"]["ok"] == false);

    const auto bad = invoke({"ladder", "--file", data("bad_ladder.json")});
    CHECK(bad.code == cli::kInvalid);
    CHECK(bad.err.find("construction error") != std::string::npos);
}

TEST_CASE("sweep subcommand") {
    const auto j = Json::parse(invoke({"sweep", "--n", "5"}).out);
    CHECK(j["pairs"] == 455);
    CHECK(j["verdict"] == "AGREE");
    const auto s = Json::parse(invoke({"sweep", "--n", "6", "--samples", "50", "--seed", "7"}).out);
    CHECK(s["pairs"] == 50);
    CHECK(invoke({"sweep", "--n", "12"}).code == cli::kInvalid);
}

TEST_CASE("KLREG_BUDGET") {
    ::setenv("KLREG_BUDGET", "2", 1);
    CHECK(cli::budget_from_env() == 2);
    CHECK(invoke({"pair", "--v", "5 8 9 10 1 2 11 3 4 6 7", "--w", "1 4 5 8 2 3 9 6 10 11 7", "--oracle"}).code == cli::kResource);
    ::setenv("KLREG_BUDGET", "zero", 1);
    CHECK_THROWS_AS(cli::budget_from_env(), ParseError);
    ::unsetenv("KLREG_BUDGET");
    CHECK(cli::budget_from_env() == kDefaultBudget);
}

TEST_CASE("batch subcommand keeps input order across threads") {
    const auto one = invoke({"batch", "--file", data("batch.json"), "--threads", "1"});
    const auto many = invoke({"batch", "--file", data("batch.json"), "--threads", "4"});
    CHECK(one.out == many.out);
    CHECK(one.code == cli::kInvalid);
    const auto j = Json::parse(one.out);
    REQUIRE(j["jobs"].size() == 4);
    CHECK(j["jobs"][0]["result"]["regularity"] == 4);
    CHECK(j["jobs"][1]["result"]["regularity"] == 0);
    CHECK(j["jobs"][2]["result"]["error"] == "pattern");
    CHECK(j["jobs"][3]["result"]["a_invariant"] == -33);
    CHECK(invoke({"batch", "--file", data("two_sided.json")}).code == cli::kUsage);
}
