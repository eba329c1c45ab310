#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "support.hpp"
#include "tate/io.hpp"

using namespace tate;
using namespace tate::testing;

namespace {

struct Outcome {
    int code;
    std::string out;
};

Outcome run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + std::string(TATE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string quoted(const Json& j) { return "'" + j.dump() + "'"; }

std::filesystem::path scratch(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("tate_cli_test_" + name);
}

}  // namespace

TEST(Cli, GroupInfo) {
    Outcome r = run("group info --preset S3");
    ASSERT_EQ(r.code, 0);
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["order"], 6);
    std::vector<int> sizes;
    for (const auto& c : j["classes"]) sizes.push_back(c["size"].get<int>());
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(sizes, (std::vector<int>{1, 2, 3}));
}

TEST(Cli, GroupList) {
    Outcome r = run("group list");
    ASSERT_EQ(r.code, 0);
    Json j = Json::parse(r.out);
    EXPECT_NE(std::find(j.begin(), j.end(), Json("Z2xZ2")), j.end());
}

TEST(Cli, TreesList) {
    Outcome r = run("trees list 4");
    ASSERT_EQ(r.code, 0);
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["count"], 10);
    EXPECT_EQ(j["trees"].size(), 10u);
    EXPECT_EQ(run("trees list 3 --pretty").out, "(.,(.,.))\n((.,.),.)\n(.,.,.)\n");
}

TEST(Cli, VerifyPasses) {
    Outcome r = run("verify all --group Z4 --field F2 --window 3");
    EXPECT_EQ(r.code, 0);
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["pass"], true);
    EXPECT_FALSE(j["reports"][0].contains("seconds"));
    Outcome t = run("verify trees --timing");
    EXPECT_EQ(t.code, 0);
    EXPECT_TRUE(Json::parse(t.out)["reports"][0].contains("seconds"));
}

TEST(Cli, ComputeCupMatchesLibrary) {
    auto G = FiniteGroup::preset("S3");
    const Field Q = Field::rationals();
    TateElement a = tel(1, Q, Word{1, 2}), b = tel(-2, Q, Word{3, 4});
    Outcome r = run("compute cup --group S3 -i " + quoted(to_json(a)) + " -i " + quoted(to_json(b)));
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(tate_from_json(G, Json::parse(r.out), Q), cup(G, a, b));
}

TEST(Cli, OutputFeedsBackIn) {
    auto G = FiniteGroup::preset("S3");
    const Field Q = Field::rationals();
    TateElement a = tel(-3, Q, Word{1, 2, 3}, 2);
    auto path = scratch("decompose.json");
    ASSERT_EQ(run("compute decompose --group S3 --out " + path.string() + " -i " + quoted(to_json(a))).code, 0);
    // the components file expands to one input per class
    EXPECT_EQ(run("compute iota --group S3 -i " + path.string()).code, 2);
    std::ifstream in(path);
    Json comps = Json::parse(in)["components"];
    ASSERT_EQ(comps.size(), 3u);
    TateElement sum = TateElement::zero(-3, Q);
    for (const auto& c : comps) sum = sum + tate_from_json(G, c["element"], Q);
    EXPECT_EQ(sum, a);
    Outcome diff = run("compute diff --group S3 -i " + quoted(to_json(a)));
    ASSERT_EQ(diff.code, 0);
    Outcome again = run("compute diff --group S3 -i " + quoted(Json::parse(diff.out)));
    ASSERT_EQ(again.code, 0);
    EXPECT_TRUE(tate_from_json(G, Json::parse(again.out), Q).is_zero());
    std::filesystem::remove(path);
}

TEST(Cli, AbelianTable) {
    Outcome r = run("abelian table --group Z2 --op m2 --degrees -2,-2");
    ASSERT_EQ(r.code, 0);
    Json j = Json::parse(r.out);
    ASSERT_EQ(j["rows"].size(), 1u);
    EXPECT_EQ(j["rows"][0]["output"]["terms"].size(), 1u);
    EXPECT_EQ(run("abelian table --group S3 --op m2 --degrees 0,0").code, 4);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("trees list 0").code, 2);
    EXPECT_EQ(run("verify all --window 9").code, 2);
    EXPECT_EQ(run("group info --preset Nope").code, 3);
    EXPECT_EQ(run("compute cup -i '{\"degree\": 1'").code, 3);
    EXPECT_EQ(run("compute diff --group Z2 -i '{\"degree\": 1, \"terms\": [{\"key\": [0], \"value\": []}]}'").code, 3);
    EXPECT_EQ(run("compute cup --group Z2 -i '{\"field\": \"Q\", \"degree\": 0, \"terms\": []}' -i "
                  "'{\"field\": \"F2\", \"degree\": 0, \"terms\": []}'")
                  .code,
              4);
    EXPECT_EQ(run("abelian table --group Z2 --op m7").code, 2);
}

TEST(Cli, FieldFromEnvironment) {
    Outcome e = run("verify complex --group Z2 --window 1", "TATE_FIELD=F3 ");
    ASSERT_EQ(e.code, 0);
    EXPECT_EQ(Json::parse(e.out)["reports"][0]["field"], Field::prime(3).name());
    Outcome flag = run("verify complex --group Z2 --window 1 --field Q", "TATE_FIELD=F3 ");
    EXPECT_EQ(Json::parse(flag.out)["reports"][0]["field"], Field::rationals().name());
}
