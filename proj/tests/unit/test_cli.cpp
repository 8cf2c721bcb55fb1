#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <cli.hpp>
#include <modparam/error.hpp>

#include "test_support.hpp"

using namespace modparam;
using namespace modparam::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "modparam");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args)
{
    args.emplace_back("--format");
    args.emplace_back("json");
    const Outcome o = invoke(std::move(args));
    EXPECT_EQ(o.code, exit_ok) << o.err;
    return json::parse(o.out);
}

std::filesystem::path temp_file(const std::string &name)
{
    return std::filesystem::temp_directory_path() / ("modparam_test_" + std::to_string(::getpid()) + "_" + name);
}

} // namespace

TEST(ParseRational, Forms)
{
    EXPECT_EQ(parse_rational("-3/7"), Rational(-3, 7));
    EXPECT_EQ(parse_rational("12"), Rational(12));
    EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
    EXPECT_EQ(parse_rational("-1.5"), Rational(-3, 2));
    EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
    try {
        parse_rational("1/0");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.position(), 2U);
    }
    try {
        parse_rational("1.2x");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.position(), 3U);
    }
    EXPECT_THROW(parse_rational("."), ParseError);
    EXPECT_THROW(parse_rational("abc"), ParseError);
}

TEST(ParseRational, StringRoundTrip)
{
    std::mt19937 rng(83);
    for (int i = 0; i < 200; ++i) {
        const Rational r = test::random_rational(rng, 1000, 97);
        EXPECT_EQ(parse_rational(r.str()), r);
    }
}

TEST(ParseComplex, Forms)
{
    EXPECT_EQ(parse_complex("0.3,0.9"), (std::pair<std::string, std::string>{"0.3", "0.9"}));
    EXPECT_THROW(parse_complex("0.3"), ParseError);
    try {
        parse_complex("1,2q");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.position(), 3U);
    }
}

TEST(Cli, ExpandGolden)
{
    const json j = invoke_json({"expand", "--g2", "4", "--g3", "0", "--order", "9"});
    EXPECT_EQ(j["config"]["command"], "expand");
    EXPECT_EQ(j["config"]["order"], 9);
    const json expected = json::array({"0", "1", "0", "0", "0", "2/5", "0", "0", "0", "2/15"});
    EXPECT_EQ(j["result"]["series"]["coeffs"], expected);

    const json an = invoke_json({"expand", "--g2", "4", "--g3", "0", "--order", "9", "--what", "an"});
    EXPECT_EQ(an["result"]["an"], json::array({"1", "0", "0", "0", "-2", "0", "0", "0", "6"}));

    const json wp = invoke_json({"expand", "--g2", "4", "--g3", "0", "--order", "3", "--what", "wp"});
    EXPECT_EQ(wp["result"]["series"]["valuation"], -2);
    EXPECT_EQ(wp["result"]["c"], json::array({"1/5", "0"}));
}

TEST(Cli, HondaReport)
{
    const json j = invoke_json({"honda", "--g2", "4", "--g3", "0", "--pmax", "20", "--order", "23"});
    std::vector<std::int64_t> checked;
    for (const auto &e : j["result"]["entries"]) {
        if (!e.contains("skipped_reason")) {
            checked.push_back(e["p"].get<std::int64_t>());
            EXPECT_TRUE(e["congruent"].get<bool>());
        }
    }
    EXPECT_EQ(checked, (std::vector<std::int64_t>{5, 7, 11, 13, 17, 19}));
    EXPECT_TRUE(j["result"]["all_congruent"].get<bool>());
}

TEST(Cli, GroupLawAgreement)
{
    const json j = invoke_json({"grouplaw", "--g2", "3/2", "--g3", "-1", "--order", "6"});
    ASSERT_EQ(j["result"]["laws"].size(), 2U);
    EXPECT_TRUE(j["result"]["constructions_agree"].get<bool>());
    EXPECT_EQ(j["result"]["laws"][0]["law"], j["result"]["laws"][1]["law"]);
    for (const auto &law : j["result"]["laws"]) {
        EXPECT_TRUE(law["axioms"]["associativity"].get<bool>());
    }
}

TEST(Cli, ParamReport)
{
    const json j = invoke_json({"param", "--g2", "4", "--g3", "0", "--z", "0.3,0.9"});
    EXPECT_TRUE(j["result"]["ok"].get<bool>());
    EXPECT_LT(std::stod(j["result"]["scaled_residual"].get<std::string>()), 1e-12);
    EXPECT_LT(std::stod(j["result"]["derivative_check"]["relative_deviation"].get<std::string>()), 1e-6);

    const json quad = invoke_json({"param", "--g2", "4", "--g3", "0", "--precision", "113"});
    EXPECT_LT(std::stod(quad["result"]["residual"].get<std::string>()), 1e-9);
}

TEST(Cli, ClassicalReport)
{
    const json j = invoke_json({"classical", "--nmax", "1000", "--s", "1,2,3"});
    EXPECT_TRUE(j["result"]["coefficients_match_log1p"].get<bool>());
    ASSERT_EQ(j["result"]["eta"].size(), 3U);
    for (const auto &s : j["result"]["eta"]) {
        EXPECT_TRUE(s["within_alternating_bound"].get<bool>());
    }
}

TEST(Cli, Deterministic)
{
    const std::vector<std::string> args{"grouplaw", "--g2", "7", "--g3", "-2", "--order", "6", "--format", "json"};
    EXPECT_EQ(invoke(args).out, invoke(args).out);
    const std::vector<std::string> text{"param", "--g2", "4", "--g3", "0"};
    EXPECT_EQ(invoke(text).out, invoke(text).out);
}

TEST(Cli, ConfigFileReproducesRun)
{
    const json first = invoke_json({"param", "--g2", "-3", "--g3", "5/2", "--z", "0.1,0.8", "--nmax", "30"});
    const auto path = temp_file("param.json");
    {
        std::ofstream f(path);
        f << first["config"].dump(2);
    }
    const Outcome second = invoke({"param", "--config", path.string()});
    ASSERT_EQ(second.code, exit_ok) << second.err;
    EXPECT_EQ(json::parse(second.out), first);

    // Flags override the file.
    const Outcome third = invoke({"param", "--config", path.string(), "--nmax", "20"});
    ASSERT_EQ(third.code, exit_ok) << third.err;
    EXPECT_EQ(json::parse(third.out)["config"]["nmax"], 20);

    const Outcome wrong = invoke({"honda", "--config", path.string()});
    EXPECT_EQ(wrong.code, exit_usage);
    std::filesystem::remove(path);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(invoke({"expand", "--bogus", "1"}).code, exit_usage);
    EXPECT_EQ(invoke({"expand", "--g2", "1/0"}).code, exit_usage);
    EXPECT_EQ(invoke({"expand", "--what", "xyz"}).code, exit_usage);
    EXPECT_EQ(invoke({"honda", "--pmax", "50", "--order", "10"}).code, exit_usage);
    EXPECT_EQ(invoke({"param", "--precision", "80"}).code, exit_usage);
    EXPECT_EQ(invoke({}).code, exit_usage);
    EXPECT_EQ(invoke({"expand", "--config", "/nonexistent/modparam.json"}).code, exit_usage);

    // g2^3 = 27 g3^2 with g2 = 3, g3 = 1: singular.
    const Outcome singular = invoke({"expand", "--g2", "3", "--g3", "1"});
    EXPECT_EQ(singular.code, exit_usage);
    EXPECT_NE(singular.err.find("error"), std::string::npos);

    const auto path = temp_file("extra.json");
    {
        std::ofstream f(path);
        f << R"({"g2": "4", "pmax": 7})";
    }
    EXPECT_EQ(invoke({"expand", "--config", path.string()}).code, exit_usage);
    std::filesystem::remove(path);
}

TEST(Cli, RefusalsAndHelp)
{
    const Outcome near_axis = invoke({"param", "--g2", "4", "--g3", "0", "--z", "0,0.01"});
    EXPECT_EQ(near_axis.code, exit_check_failed);
    EXPECT_TRUE(near_axis.out.empty());
    EXPECT_EQ(invoke({"param", "--z", "0,-1", "--g2", "4"}).code, exit_usage);
    EXPECT_EQ(invoke({"--help"}).code, exit_ok);
}

#ifdef MODPARAM_TOOL_PATH
TEST(Cli, ExecutableExitCodes)
{
    const auto quiet = [](const std::string &args) {
        const std::string cmd = std::string(MODPARAM_TOOL_PATH) + " " + args + " >/dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        return WEXITSTATUS(status);
    };
    EXPECT_EQ(quiet("expand --g2 4 --g3 0"), 0);
    EXPECT_EQ(quiet("expand --g2 nope"), 2);
    EXPECT_EQ(quiet("param --g2 4 --g3 0 --z 0,0.01"), 1);
}
#endif
