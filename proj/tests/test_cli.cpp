#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = phasest::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

std::vector<std::string> data_lines(const std::string& s) {
  std::vector<std::string> v;
  for (auto& l : lines(s)) {
    if (!l.empty() && l[0] != '#') v.push_back(l);
  }
  return v;
}

}  // namespace

TEST(Cli, TradeoffCsv) {
  const auto r = run({"tradeoff", "--emin", "1", "--emax", "100", "--points", "50", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto d = data_lines(r.out);
  ASSERT_EQ(d.size(), 51u);
  EXPECT_EQ(d[0], "E,bound,asymptote,s_star");
  EXPECT_EQ(d[1].rfind("1,", 0), 0u);
  EXPECT_NE(r.out.find("# points=50"), std::string::npos);
}

TEST(Cli, FiniteOptJson) {
  const auto r = run({"finite-opt", "--n", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "finite-opt");
  EXPECT_EQ(j["config"]["n"], "3");
  EXPECT_NEAR(j["result"]["risk"].get<double>(), 1.0 - std::cos(std::numbers::pi / 5.0), 1e-11);
  EXPECT_EQ(j["rows"].size(), 4u);
  for (const char* key : {"lo", "hi", "loss", "risk", "eigen_residual", "eigen_gap", "closed_form"}) {
    EXPECT_TRUE(j["result"].contains(key)) << key;
  }
}

TEST(Cli, NumbersHaveTwelveSignificantDigits) {
  const auto r = run({"kappa", "--E", "1", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto d = data_lines(r.out);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0], "E,s_star,kappa,asymptote");
  EXPECT_NE(d[1].find("0.117423652645"), std::string::npos) << d[1];
}

TEST(Cli, TableHeaders) {
  for (const char* cmd : {"heisenberg", "prolate", "mathieu-a0", "gamma", "dpss"}) {
    const auto r = run({cmd, "--format", "table"});
    EXPECT_EQ(r.code, 0) << cmd << ": " << r.err;
    EXPECT_NE(r.out.find(std::string("# command=") + cmd), std::string::npos);
  }
}

TEST(Cli, InvalidArgumentsExitTwo) {
  auto r = run({"kappa", "--E", "-1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("error: invalid_argument:", 0), 0u) << r.err;
  EXPECT_EQ(lines(r.err).size(), 1u);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"tradeoff", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"finite-opt", "--loss", "interval", "--T", "10", "--N", "1"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, ConfigFileFillsMissingFlags) {
  const auto path = std::filesystem::temp_directory_path() / "phasest_cli.cfg";
  {
    std::ofstream f(path);
    f << "# sweep\nemin = 2\nemax=4\npoints=3\nformat=csv\n";
  }
  const auto r = run({"tradeoff", "--config", path.string(), "--points", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto d = data_lines(r.out);
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d[1].rfind("2,", 0), 0u);
  EXPECT_EQ(d[2].rfind("4,", 0), 0u);
  EXPECT_NE(r.out.find("# config="), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, SimulateWritesSamples) {
  const auto path = std::filesystem::temp_directory_path() / "phasest_cli_samples.csv";
  const auto r = run({"simulate", "--state", "sine", "--n", "4", "--samples", "200", "--seed", "3",
                      "--samples-out", path.string(), "--samples-format", "csv", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["run"]["seed"], 3);
  EXPECT_EQ(j["result"]["run"]["n"], 200);
  std::ifstream in(path);
  EXPECT_EQ(data_lines(std::string(std::istreambuf_iterator<char>(in), {})).size(), 200u);
  std::filesystem::remove(path);
}

TEST(Cli, VerifySubset) {
  const auto r = run({"verify", "--only", "C01,heisenberg_scaling"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("[PASS] C01"), std::string::npos);
  EXPECT_NE(r.out.find("[PASS] C02"), std::string::npos);
  EXPECT_EQ(r.out.find("C03"), std::string::npos);
}

TEST(Cli, TamperedToleranceIsReportedByName) {
  const auto r = run({"verify", "--only", "C02", "--tol", "heisenberg_scaling=1e-6"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("[FAIL] C02 heisenberg_scaling"), std::string::npos) << r.out;
  EXPECT_NE(r.err.find("heisenberg_scaling"), std::string::npos);
}
