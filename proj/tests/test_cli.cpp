#include "ballcalc/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int code = 0;
    std::string out, err;
};

CliResult run(std::vector<std::string> args) {
    args.insert(args.begin(), "ballcalc");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    CliResult r;
    r.code = ballcalc::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

json run_json(std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    CliResult r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return json::parse(r.out);
}

}  // namespace

TEST(Cli, RequiresASubcommand) {
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"no-such-command"}).code, 1);
}

TEST(Cli, HelpExitsCleanly) {
    CliResult r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("borcherds"), std::string::npos);
}

TEST(Cli, JsonEnvelope) {
    json j = run_json({"lattice", "--spec", "L_dm"});
    EXPECT_EQ(j["command"], "lattice");
    EXPECT_EQ(j["inputs"]["spec"], "L_dm");
    EXPECT_EQ(j["outputs"]["rank"], 20);
    EXPECT_EQ(j["outputs"]["det"], "9");
    EXPECT_EQ(j["outputs"]["order"], 9);
    EXPECT_TRUE(j["provenance"].is_array());
    EXPECT_FALSE(j["provenance"].empty());
}

TEST(Cli, HumanOutputHasKeyValueLines) {
    CliResult r = run({"dimension"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("total: 4"), std::string::npos);
    EXPECT_NE(r.out.find("alpha: 1 4/3 1"), std::string::npos);
    EXPECT_NE(r.out.find("provenance: "), std::string::npos);
}

TEST(Cli, Theta) {
    json j = run_json({"theta", "--lattice", "E6", "--coset", "1"});
    EXPECT_EQ(j["outputs"]["theta"]["coefficients"]["2/3"], "27");
    EXPECT_EQ(j["outputs"]["theta"]["coefficients"]["5/3"], "216");
}

TEST(Cli, BorcherdsCombo) {
    json j = run_json({"borcherds", "--combo", "2,54,6"});
    EXPECT_EQ(j["outputs"]["exists"], true);
    EXPECT_EQ(j["outputs"]["weight"], "102");
    json bad = run_json({"borcherds", "--combo", "1,0,0"});
    EXPECT_EQ(bad["outputs"]["exists"], false);
    EXPECT_EQ(bad["outputs"]["violated_pairings"]["case_a"], "99");
    EXPECT_EQ(bad["outputs"]["violated_pairings"]["case_b"], "3");
}

TEST(Cli, BorcherdsLifts) {
    EXPECT_EQ(run_json({"borcherds", "--lift", "delta"})["outputs"]["weight"], "12");
    EXPECT_EQ(run_json({"borcherds", "--lift", "e4-delta"})["outputs"]["weight"], "132");
    json ma = run_json({"borcherds", "--lift", "ma"});
    EXPECT_EQ(ma["outputs"]["weight"], "51");
    EXPECT_EQ(ma["outputs"]["divisor"]["D(4/3,-2/3)"], "27");
    EXPECT_EQ(run({"borcherds", "--lift", "nothing"}).code, 1);
}

TEST(Cli, QuasiPullback) {
    EXPECT_EQ(run_json({"quasi-pullback", "--lattice", "E6+A2"})["outputs"]["weight"], "51");
    EXPECT_EQ(run_json({"quasi-pullback", "--lattice", "E8"})["outputs"]["weight"], "132");
}

TEST(Cli, Betti) {
    json mk = run_json({"betti", "--space", "MK"});
    json tor = run_json({"betti", "--space", "tor"});
    EXPECT_EQ(mk["outputs"], tor["outputs"]);
    EXPECT_EQ(run({"betti", "--space", "X"}).code, 1);
}

TEST(Cli, LedgerAndKequivVerify) {
    json l = run_json({"ledger"});
    EXPECT_EQ(l["outputs"]["verified"], true);
    EXPECT_EQ(l["outputs"]["repairs"][0]["repaired"], "-16");
    json k = run_json({"kequiv"});
    EXPECT_EQ(k["outputs"]["valuation_at_3"], -22);
    EXPECT_EQ(k["outputs"]["contradiction"], true);
    EXPECT_EQ(run_json({"t9"})["outputs"]["T9"], "7/103680");
}

TEST(Cli, BadPrecisionIsAUsageError) {
    CliResult r = run({"theta", "--prec", "0"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("--prec"), std::string::npos);
    EXPECT_EQ(run({"theta", "--prec", "abc"}).code, 1);
    EXPECT_EQ(run({"lattice", "--spec", "Q7"}).code, 1);
}

TEST(Cli, OutFileHoldsTheJson) {
    auto path = std::filesystem::temp_directory_path() / "ballcalc_cli_test.json";
    std::filesystem::remove(path);
    CliResult r = run({"--out", path.string(), "t9"});
    EXPECT_EQ(r.code, 0);
    std::ifstream f(path);
    ASSERT_TRUE(f.good());
    json j = json::parse(f);
    EXPECT_EQ(j["outputs"]["components"], "462");
    std::filesystem::remove(path);
}
