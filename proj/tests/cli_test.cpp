#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "k3taut/commands.hpp"
#include "k3taut/rational.hpp"

using k3taut::Rational;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = k3taut::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

}  // namespace

TEST(CliPushforwards, GoldenText) {
    const Result r = run({"pushforwards", "--max-n", "9", "--format", "text"});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::vector<std::string> expected = {
        "0 24",
        "1 88",
        "2 184",
        "3 352",
        "4 736",
        "5 1295488/691",
        "6 4292224/691",
        "7 68418650624/2499347",
        "8 17412311922527744/109638854849",
        "9 22654813560476770158592/19144150084038739",
    };
    EXPECT_EQ(lines(r.out), expected);
}

TEST(CliPushforwards, SingleRow) {
    const Result r = run({"pushforwards", "--max-n", "0", "--format", "text"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0 24\n");
}

TEST(CliPushforwards, JsonRoundTripsThroughParser) {
    const Result r = run({"pushforwards", "--max-n", "9", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["command"], "pushforwards");
    EXPECT_EQ(doc["params"]["max_n"], 9);
    ASSERT_EQ(doc["rows"].size(), 10u);
    EXPECT_EQ(doc["rows"][5]["n"], 5);
    EXPECT_EQ(doc["rows"][5]["a"], "1295488/691");
    EXPECT_EQ(doc["rows"][5]["value"], "1295488/691");
    for (const auto& row : doc["rows"]) {
        const std::string s = row["value"];
        EXPECT_EQ(Rational::parse(s).str(), s);
    }
}

TEST(CliPushforwards, OutputIsDeterministic) {
    const Result a = run({"pushforwards", "--max-n", "11", "--format", "json"});
    const Result b = run({"pushforwards", "--max-n", "11", "--format", "json"});
    EXPECT_EQ(a.out, b.out);
}

TEST(CliPushforwards, FormatFromEnvironment) {
    ::setenv("K3TAUT_FORMAT", "json", 1);
    const Result r = run({"pushforwards", "--max-n", "1"});
    ::unsetenv("K3TAUT_FORMAT");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["rows"].size(), 2u);

    ::setenv("K3TAUT_FORMAT", "yaml", 1);
    const Result bad = run({"pushforwards", "--max-n", "1"});
    ::unsetenv("K3TAUT_FORMAT");
    EXPECT_NE(bad.code, 0);
}

TEST(CliUsage, InvalidFlagsFail) {
    EXPECT_NE(run({"pushforwards", "--max-n", "-3"}).code, 0);
    EXPECT_NE(run({"pushforwards", "--bogus"}).code, 0);
    EXPECT_NE(run({"pushforwards", "--format", "xml"}).code, 0);
    EXPECT_NE(run({"verify", "nothing"}).code, 0);
    EXPECT_NE(run({}).code, 0);
    EXPECT_NE(run({"lattice", "--d", "1", "--builtin", "U"}).code, 0);
}

TEST(CliVerify, Genfunc) {
    const Result r = run({"verify", "genfunc", "--max-n", "12", "--format", "text"});
    EXPECT_EQ(r.code, 0) << r.out;
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 13u);
    EXPECT_EQ(ls[0], "1 24 24 ok");
    EXPECT_EQ(ls[1], "2 -240 -240 ok");
    EXPECT_EQ(ls.back(), "ok 12/12");
}

TEST(CliVerify, GenfuncShowEven) {
    const Result r = run({"verify", "genfunc", "--max-n", "2", "--show-even", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["ok"], true);
    EXPECT_EQ(doc["even_coefficients"][0]["value"], "48");
    EXPECT_EQ(doc["even_coefficients"][1]["value"], "-152");
}

TEST(CliVerify, OddDualityTautring) {
    const Result odd = run({"verify", "odd", "--max-n", "21", "--format", "text"});
    EXPECT_EQ(odd.code, 0) << odd.out;
    EXPECT_EQ(lines(odd.out).front(), "3 -1 -1 ok");
    EXPECT_EQ(lines(odd.out).back(), "ok 10/10");

    const Result dual = run({"verify", "duality", "--format", "json"});
    EXPECT_EQ(dual.code, 0) << dual.out;
    EXPECT_EQ(nlohmann::json::parse(dual.out)["ok"], true);

    const Result taut = run({"verify", "tautring", "--format", "text"});
    EXPECT_EQ(taut.code, 0) << taut.out;
    EXPECT_NE(taut.out.find("c1_Theta_M -19 -19 ok"), std::string::npos);
}

TEST(CliVerify, OtherTruncations) {
    EXPECT_EQ(run({"verify", "tautring", "--truncation", "5"}).code, 0);
    EXPECT_EQ(run({"verify", "duality", "--truncation", "7"}).code, 0);
}

TEST(CliMisc, Bernoulli) {
    const Result r = run({"bernoulli", "--max-n", "12", "--format", "text"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out).back(), "12 -691/2730");
    EXPECT_EQ(lines(r.out).front(), "0 1");
}

TEST(CliMisc, Todd) {
    const Result r = run({"todd", "--max-degree", "3", "--format", "text"});
    EXPECT_EQ(r.code, 0);
    const auto ls = lines(r.out);
    EXPECT_NE(std::find(ls.begin(), ls.end(), "(3,1) -1/24"), ls.end());
    EXPECT_NE(std::find(ls.begin(), ls.end(), "(1,0) -1/2"), ls.end());
}

TEST(CliMisc, Lattice) {
    Result r = run({"lattice", "--d", "1", "--format", "text"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "rank 21, signature (2,19), det -2, even\n");

    r = run({"lattice", "--builtin", "K3", "--format", "text"});
    EXPECT_EQ(r.out, "rank 22, signature (3,19), det -1, even\n");

    r = run({"lattice", "--gram", "[[0,1],[1,\"0\"]]", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["signature"], nlohmann::json::array({1, 1}));
    EXPECT_EQ(doc["determinant"], "-1");
    EXPECT_EQ(doc["gram"], nlohmann::json::parse("[[0,1],[1,0]]"));

    EXPECT_NE(run({"lattice", "--gram", "[[1,2],[3,4]]"}).code, 0);
    EXPECT_NE(run({"lattice", "--gram", "not json"}).code, 0);
}

TEST(CliMisc, LatticeFromFile) {
    const std::string path = ::testing::TempDir() + "k3taut_gram.json";
    {
        std::ofstream f(path);
        f << "[[-2]]";
    }
    const Result r = run({"lattice", "--gram", "@" + path, "--format", "text"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "rank 1, signature (0,1), det -2, even\n");
}
