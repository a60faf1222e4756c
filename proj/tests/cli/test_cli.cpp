#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "golden.hpp"

using namespace gafunc;
using namespace gafunc::testing;
using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "gafunc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::string signature_flag(const nlohmann::json& golden) {
  return std::to_string(golden["signature"][0].get<int>()) + "," + std::to_string(golden["signature"][1].get<int>());
}

}  // namespace

class CliGolden : public ::testing::TestWithParam<const char*> {};

TEST_P(CliGolden, ExpMatchesGolden) {
  const auto golden = load_golden(GetParam());
  auto r = invoke({"func", "--signature", signature_flag(golden), "--function", "exp", "--output", "structured"},
                  golden["input"].get<std::string>());
  ASSERT_EQ(r.code, 0) << r.err;
  const Json record = Json::parse(r.out);
  ASSERT_TRUE(record.contains("real"));
  double worst = -1000;
  for (const auto& [blade, value] : golden["real"].items()) {
    const BigFloat got(record["real"].at(blade).get<std::string>(), 80);
    const BigFloat want(value.get<std::string>(), 80);
    const BigFloat d = abs(got - want);
    if (!is_zero(d)) worst = std::max(worst, log10_abs(d));
  }
  EXPECT_LT(worst, -40);
}

INSTANTIATE_TEST_SUITE_P(Examples, CliGolden, ::testing::Values("ex1_exp.json", "ex2_exp.json", "ex3_exp.json"));

TEST(Cli, StructuredOutputRoundTrips) {
  for (const char* command : {"func", "minpoly", "roots", "basis", "charpoly", "verify", "rank"}) {
    auto r = invoke({command, "--output", "structured", "--input", fixtures::kEx1Text});
    ASSERT_EQ(r.code, 0) << command << ": " << r.err;
    EXPECT_EQ(Json::parse(r.out).dump(2) + "\n", r.out) << command;
  }
  auto m = invoke({"matfunc", "--output", "structured", "--input", "0 1; -1 0"});
  ASSERT_EQ(m.code, 0) << m.err;
  EXPECT_EQ(Json::parse(m.out).dump(2) + "\n", m.out);
}

TEST(Cli, TextAndStructuredAgree) {
  auto text = invoke({"func", "--function", "sin", "--input", fixtures::kEx1Text});
  auto structured = invoke({"func", "--function", "sin", "--output", "structured", "--input", fixtures::kEx1Text});
  ASSERT_EQ(text.code, 0);
  const Json record = Json::parse(structured.out);
  for (const auto& [blade, value] : record["real"].items()) {
    std::string magnitude = value.get<std::string>();
    if (magnitude.front() == '-') magnitude.erase(0, 1);
    EXPECT_NE(text.out.find(magnitude), std::string::npos) << blade;
  }
}

TEST(Cli, MinpolyOfEx3) {
  const auto golden = load_golden("minpoly.json")["ex3"];
  auto r = invoke({"minpoly", "--signature", "4,2", "--output", "structured"}, fixtures::kEx3Text);
  ASSERT_EQ(r.code, 0) << r.err;
  const Json record = Json::parse(r.out);
  std::vector<std::string> want;
  for (const auto& c : golden["mu"]) want.push_back(c.get<std::string>());
  EXPECT_EQ(record["coefficients"].get<std::vector<std::string>>(), want);

  auto text = invoke({"minpoly", "--signature", "4,2", "--input", fixtures::kEx3Text});
  EXPECT_EQ(text.out, "x^8 + 8 x^7 + 20 x^6 + 56 x^5 + 334 x^4 - 1160 x^3 - 3804 x^2 + 9288 x - 4743\n");
}

TEST(Cli, ExitCodes) {
  auto empty = invoke({"func"}, "");
  EXPECT_EQ(empty.code, cli::kParseError);
  const Json record = Json::parse(empty.err);
  EXPECT_EQ(record["error"], "parse_error");
  EXPECT_EQ(record["exit_code"], 2);
  EXPECT_EQ(std::count(empty.err.begin(), empty.err.end(), '\n'), 1);

  EXPECT_EQ(invoke({"func", "--input", "1 + e7"}).code, cli::kParseError);
  EXPECT_EQ(invoke({"func", "--signature", "x"}, "1").code, cli::kParseError);
  EXPECT_EQ(invoke({"func", "--function", "tan"}, "1").code, cli::kParseError);
  EXPECT_EQ(invoke({"func", "--function", "log", "--input", "e1 - 1"}).code, cli::kSingularFunction);
  EXPECT_EQ(invoke({"func", "--function", "inv", "--input", "1/2 + 1/2*e1"}).code, cli::kSingularFunction);
  // sqrt(-1) is not real; the real-symmetric flag makes that a hard failure
  EXPECT_EQ(invoke({"func", "--function", "sqrt", "--input", "-1"}).code, cli::kSingularFunction);
  EXPECT_EQ(invoke({"func", "--precision", "8"}, "1").code, cli::kOtherError);
  EXPECT_EQ(invoke({"bogus"}).code, cli::kOtherError);
}

TEST(Cli, Methods) {
  std::vector<std::string> outputs;
  for (const char* method : {"recursive", "classical", "charpoly"}) {
    auto r = invoke({"func", "--precision", "30", "--method", method, "--input", fixtures::kEx1Text});
    ASSERT_EQ(r.code, 0) << r.err;
    outputs.push_back(r.out);
  }
  auto charpoly = invoke({"func", "--precision", "30", "--use-charpoly", "--input", fixtures::kEx1Text});
  EXPECT_EQ(charpoly.out, outputs[2]);
  EXPECT_EQ(invoke({"func", "--use-charpoly", "--method", "classical", "--input", "1"}).code, cli::kOtherError);
}

TEST(Cli, ComplexForm) {
  auto r = invoke({"func", "--output", "structured", "--complex-form", "--precision", "20", "--input", "e12"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json record = Json::parse(r.out);
  ASSERT_TRUE(record.contains("complex"));
  EXPECT_EQ(record["complex"]["e12"]["re"].get<std::string>().substr(0, 8), "8.414709");
}

TEST(Cli, MatfuncAndVerify) {
  auto m = invoke({"matfunc", "--precision", "20", "--input", "1 0\n0 2"});
  ASSERT_EQ(m.code, 0) << m.err;
  EXPECT_EQ(m.out.substr(0, 10), "2.71828182");
  auto v = invoke({"verify", "--signature", "4,2", "--output", "structured", "--input", fixtures::kEx3Text});
  ASSERT_EQ(v.code, 0) << v.err;
  EXPECT_TRUE(Json::parse(v.out)["passed"].get<bool>());
  auto rank = invoke({"rank", "--input", fixtures::kEx1Text});
  EXPECT_EQ(rank.out, "4\n");
}
