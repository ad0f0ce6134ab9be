#include "cli/cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "dihom");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = dihom::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string data(const std::string& name) { return std::string(DIHOM_TEST_DATA_DIR) + "/" + name; }

} // namespace

TEST(Cli, CountTreeOnFiveVertexHost)
{
    const auto ppp = run({"count", "--tree", "P +++", "--host", data("app5.mat"), "--json"});
    ASSERT_EQ(ppp.code, 0) << ppp.err;
    const auto j = nlohmann::json::parse(ppp.out);
    EXPECT_EQ(j["schema"], "dihom/1");
    EXPECT_EQ(j["count"], "37");
    const auto pmp = run({"count", "--tree", "P +-+", "--host", data("app5.mat")});
    EXPECT_EQ(pmp.code, 0);
    EXPECT_NE(pmp.out.find("36"), std::string::npos);
}

TEST(Cli, CountStarsOnSmallHosts)
{
    EXPECT_NE(run({"count", "--tree", "S 0 3", "--host", data("edge.mat")}).out.find('1'), std::string::npos);
    EXPECT_NE(run({"count", "--tree", "S 1 0", "--host", data("empty3.mat")}).out.find('0'), std::string::npos);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run({"count", "--tree", "P +x", "--host", data("edge.mat")}).code, dihom::cli::kParseError);
    EXPECT_EQ(run({"count", "--tree", "P ++", "--host", data("missing.mat")}).code, dihom::cli::kParseError);
    EXPECT_EQ(run({"frobnicate"}).code, dihom::cli::kParseError);
    EXPECT_EQ(run({"search", "--family", "trees-k3", "--nmax", "6"}).code, dihom::cli::kDomainError);
    EXPECT_EQ(run({"check", "--inequality", "star-holder", "--n", "2", "--k", "5", "--host", data("edge.mat")}).code,
              dihom::cli::kDomainError);
}

TEST(Cli, CheckInstanceAndSuite)
{
    const auto one = run({"check", "--inequality", "main", "--tree", "P +-+", "--host", data("app5.mat")});
    EXPECT_EQ(one.code, 0) << one.err;
    const auto suite = run({"check", "--inequality", "main", "--suite", "200", "--seed", "7", "--json"});
    EXPECT_EQ(suite.code, 0) << suite.err;
    EXPECT_EQ(nlohmann::json::parse(suite.out)["suite"]["violations"], 0);
    const auto mv = run({"check", "--inequality", "mv-path", "--p", "2", "--matrix", data("a2.rat")});
    EXPECT_EQ(mv.code, 0) << mv.err;
}

TEST(Cli, KernelEval)
{
    const auto r = run({"kernel", "--op", "eval", "--kernel", data("tri.k"), "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("1/9"), std::string::npos);
}

TEST(Cli, OutputIndependentOfWorkers)
{
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"check", "--inequality", "tail", "--suite", "150", "--seed", "3", "--json"},
          std::vector<std::string>{"search", "--family", "trees-k3", "--nmax", "4", "--json"},
          std::vector<std::string>{"enumerate", "--what", "trees", "--size", "4"}}) {
        auto one = args;
        one.insert(one.end(), {"--workers", "1"});
        auto four = args;
        four.insert(four.end(), {"--workers", "4"});
        const auto a = run(one);
        const auto b = run(four);
        EXPECT_EQ(a.code, 0) << a.err;
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(Cli, EnumerateAndAppendix)
{
    const auto trees = run({"enumerate", "--what", "trees", "--size", "3"});
    EXPECT_EQ(std::count(trees.out.begin(), trees.out.end(), '\n'), 8);
    const auto hosts = run({"enumerate", "--what", "hosts", "--size", "3", "--canonical"});
    EXPECT_EQ(hosts.code, 0);
    const auto app = run({"search", "--reproduce-appendix"});
    EXPECT_EQ(app.code, 0) << app.err;
}
