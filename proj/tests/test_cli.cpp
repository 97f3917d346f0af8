#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include <mzr/index.hpp>
#include <mzr/mzv.hpp>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = mzr::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

} // namespace

TEST(Cli, ReduceJson)
{
    const Result r = run({"reduce", "--", "2", "-3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"terms\":[{\"index\":[],\"coeff\":\"1/6\"},{\"index\":[2],\"coeff\":\"1/120\"}]}\n");
}

TEST(Cli, ReduceLatexAndPlain)
{
    EXPECT_EQ(run({"reduce", "--format", "latex", "--", "-1", "-2"}).out, "-\\frac{1}{240}\n");
    EXPECT_EQ(run({"reduce", "--format", "plain", "--", "2", "-3"}).out, "1/6 + 1/120*zeta(2)\n");
}

TEST(Cli, ReduceWithTraceAndPivot)
{
    const Result r = run({"reduce", "--pivot", "leftmost", "--trace", "--", "-1", "6", "-1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto out = lines(r.out);
    ASSERT_EQ(out.size(), 2u);
    EXPECT_NO_THROW(mzr::MzvCombination::from_json(out[0]));
    const auto trace = nlohmann::json::parse(out[1]);
    EXPECT_EQ(trace["steps"].back()["point"], nlohmann::json::parse("[-1,6,-1]"));
    EXPECT_EQ(trace["steps"].back()["pivot"], 1);

    EXPECT_EQ(run({"reduce", "--pivot", "j=3", "--", "-1", "6", "-1"}).code, 0);
    EXPECT_EQ(run({"reduce", "--pivot", "j=2", "--", "-1", "6", "-1"}).code, 2);
    EXPECT_EQ(run({"reduce", "--pivot", "middle", "--", "-1", "6", "-1"}).code, 2);
}

TEST(Cli, ClassifyAndSingularReduce)
{
    const Result c = run({"classify", "--", "-1", "-1"});
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(c.out, "{\"status\":\"singular\",\"condition\":\"b\",\"k\":2}\n");

    const Result r = run({"reduce", "--", "-1", "-1"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "");
    EXPECT_EQ(r.err, "{\"status\":\"singular\",\"condition\":\"b\",\"k\":2}\n");

    EXPECT_EQ(run({"classify", "--", "2", "3"}).out, "{\"status\":\"regular\"}\n");
}

TEST(Cli, ParseErrors)
{
    EXPECT_EQ(run({"reduce", "--", "2", "x"}).code, 2);
    EXPECT_EQ(run({"reduce"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"reduce", "--format", "html", "--", "2", "3"}).code, 2);
    EXPECT_EQ(run({"eval", "--N", "5", "--", "2"}).code, 2);
    EXPECT_EQ(run({"table", "--depth", "2", "--min", "3", "--max", "1"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, EvalPrintsValueAndBound)
{
    const Result r = run({"eval", "--N", "100000", "--", "2", "-3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["value"].get<double>(), 0.1803744, 1e-6);
    EXPECT_GE(j["error_bound"].get<double>(), 0.0);
    EXPECT_EQ(run({"eval", "--", "-1", "-1"}).code, 1);
}

TEST(Cli, EvalUsesCacheFromEnvironment)
{
    const auto path = std::filesystem::temp_directory_path() / "mzr_cli_env_cache.json";
    std::filesystem::remove(path);
    ::setenv("MZR_CACHE", path.c_str(), 1);
    EXPECT_EQ(run({"eval", "--N", "1000", "--", "1", "2"}).code, 0);
    ::unsetenv("MZR_CACHE");
    ASSERT_TRUE(std::filesystem::exists(path));
    std::ifstream in(path);
    EXPECT_TRUE(nlohmann::json::parse(in).contains("1,2|1000"));
    std::filesystem::remove(path);
}

TEST(Cli, TableMatchesClassifier)
{
    const Result r = run({"table", "--depth", "2", "--min", "-6", "--max", "8", "--N", "1000"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::set<std::vector<long>> emitted;
    for (const auto &line : lines(r.out)) {
        const auto rec = nlohmann::json::parse(line);
        EXPECT_EQ(rec["status"], "regular");
        EXPECT_NO_THROW(mzr::MzvCombination::from_json(rec["combination"].dump()));
        emitted.insert(rec["point"].get<std::vector<long>>());
    }
    std::set<std::vector<long>> expected;
    for (long a = -6; a <= 8; ++a) {
        for (long b = -6; b <= 8; ++b) {
            if (mzr::classify(mzr::IndexPoint{a, b}).is_regular()) {
                expected.insert({a, b});
            }
        }
    }
    EXPECT_EQ(emitted, expected);
}

TEST(Cli, TableCsv)
{
    const Result r = run({"table", "--depth", "2", "--min", "-2", "--max", "3", "--format", "csv", "--N", "1000"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto out = lines(r.out);
    ASSERT_FALSE(out.empty());
    EXPECT_EQ(out[0], "n1,n2,status,value,error_bound,combination");
    bool found = false;
    for (const auto &line : out) {
        if (line.starts_with("2,-3,")) {
            found = true;
        }
        if (line.starts_with("-1,-2,regular,")) {
            EXPECT_NE(line.find("\"{\"\"terms\"\":[{\"\"index\"\":[],\"\"coeff\"\":\"\"-1/240\"\"}]}\""), std::string::npos)
                << line;
        }
    }
    EXPECT_FALSE(found);
}

TEST(Cli, SelftestPasses)
{
    const Result r = run({"selftest", "--N", "20000"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("selftest:"), std::string::npos);
    EXPECT_NE(r.out.find(" 0 failed\n"), std::string::npos) << r.out;
}
