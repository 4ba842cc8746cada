// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <fstream>
#include <regex>
#include <sstream>

#include "morbench/commands.hpp"
#include "morbench/error.hpp"
#include "morbench/problems.hpp"
#include "test_support.hpp"

using namespace morbench;
using namespace morbench::testing;
namespace fs = std::filesystem;

namespace
{

const fs::path kRegistry = fs::path(MORBENCH_REPO_ROOT) / "data" / "registry";
const fs::path kNewEngland = fs::path(MORBENCH_TEST_DATA) / "newEngland_n66m1q1.json";

std::string slurp(const fs::path &p)
{
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_error_line(const std::string &err)
{
  static const std::regex line(R"(error: [A-Za-z]+: [^\n]*\n)");
  std::smatch m;
  const std::string last = err.substr(err.rfind("error: "));
  CHECK(std::regex_match(last, line));
}

}  // namespace

TEST_CASE("list", "[commands]")
{
  std::ostringstream out, err;
  CHECK(cmd_list(kRegistry, out, err) == 0);
  CHECK(out.str().find("heatToy_n100m2q2") != std::string::npos);
  CHECK(out.str().find("n=100 m=2 q=2") != std::string::npos);
}

TEST_CASE("validate newEngland config", "[commands]")
{
  std::ostringstream out, err;
  const ImplMap map = parse_impl_map({"cst=sign", "mess=sign", "morlab=sign", "pymor=emp"});
  CHECK(cmd_validate(kNewEngland, kRegistry, map, out, err) == 0);
  CHECK(out.str().find("newEngland_n66m1q1: 6 isotope(s)") != std::string::npos);
  CHECK(err.str().find("error:") == std::string::npos);

  std::ostringstream out2, err2;
  CHECK(cmd_validate(kNewEngland, kRegistry, {}, out2, err2) == 0);
  CHECK(out2.str().find("0 isotope(s)") != std::string::npos);
  CHECK(err2.str().find("warning:") != std::string::npos);
}

TEST_CASE("impl map parsing", "[commands]")
{
  CHECK(parse_impl_map({"a=b", "c=d"}) == ImplMap{{"a", "b"}, {"c", "d"}});
  CHECK_THROWS_AS(parse_impl_map({"ab"}), Error);
  CHECK_THROWS_AS(parse_impl_map({"=b"}), Error);
  CHECK_THROWS_AS(parse_impl_map({"a="}), Error);
}

TEST_CASE("error paths exit nonzero with one error line", "[commands]")
{
  const auto dir = scratch_dir("commands_errors");
  {
    std::ofstream(dir / "bad.json") << R"({"x_n1m1q1": {"meas_opt": {}}})";
    std::ofstream(dir / "junk.json") << "{";
    std::ofstream(dir / "bad_param.json") << R"({"heatToy_n100m2q2": {"alg_iso": {"bt": {"sign": {"tol": 7}}}}})";
    std::ofstream(dir / "empty.json") << R"({"heatToy_n100m2q2": {"alg_iso": {"bt": {"sign": null}}}})";
    std::ofstream(dir / "absent.json") << R"({"ghost_n1m1q1": {"alg_iso": {"bt": {"sign": {}}}}})";
  }
  struct Case
  {
    std::function<int(std::ostream &, std::ostream &)> run;
    std::string code;
  };
  const std::vector<Case> cases = {
      {[&](auto &o, auto &e) { return cmd_validate(dir / "missing.json", kRegistry, {}, o, e); }, "Io"},
      {[&](auto &o, auto &e) { return cmd_validate(dir / "bad.json", kRegistry, {}, o, e); }, "SchemaError"},
      {[&](auto &o, auto &e) { return cmd_validate(dir / "junk.json", kRegistry, {}, o, e); }, "ParseError"},
      {[&](auto &o, auto &e) { return cmd_validate(dir / "bad_param.json", kRegistry, {}, o, e); },
       "InvalidParameter"},
      {[&](auto &o, auto &e) { return cmd_run(dir / "empty.json", kRegistry, dir / "o1", 1, {}, o, e); },
       "SchemaError"},
      {[&](auto &o, auto &e) { return cmd_run(dir / "absent.json", kRegistry, dir / "o2", 1, {}, o, e); }, "Io"},
      {[&](auto &o, auto &e) { return cmd_run(kNewEngland, kRegistry, dir / "o3", 0, {}, o, e); },
       "InvalidParameter"},
      {[&](auto &o, auto &e) { return cmd_report(dir / "none.json", dir / "o4", std::nullopt, o, e); }, "Io"},
      {[&](auto &o, auto &e) { return cmd_list(dir / "bad.json", o, e); }, ""},
  };
  for (const auto &c : cases)
  {
    std::ostringstream out, err;
    const int rc = c.run(out, err);
    if (c.code.empty())
      continue;
    INFO(err.str());
    CHECK(rc != 0);
    check_error_line(err.str());
    CHECK(err.str().find("error: " + c.code + ":") != std::string::npos);
  }
}

TEST_CASE("run and report", "[commands]")
{
  const auto dir = scratch_dir("commands_run");
  const auto cfg = fs::path(MORBENCH_REPO_ROOT) / "configs" / "heatToy_n100m2q2.json";
  std::ostringstream out, err;
  CHECK(cmd_run(cfg, kRegistry, dir, 1, {}, out, err) == 0);
  CHECK(fs::exists(dir / "results.json"));
  CHECK(fs::exists(dir / "report.md"));
  CHECK(err.str().find("warning: heatToy_n100m2q2: bt-emp failed") != std::string::npos);

  std::ostringstream o1, e1, o2, e2;
  CHECK(cmd_report(dir / "results.json", dir / "r1", std::nullopt, o1, e1) == 0);
  CHECK(cmd_report(dir / "results.json", dir / "r2", std::nullopt, o2, e2) == 0);
  CHECK(slurp(dir / "r1" / "report.md") == slurp(dir / "r2" / "report.md"));
  CHECK(slurp(dir / "r1" / "report.md") == slurp(dir / "report.md"));

  std::ostringstream o3, e3;
  CHECK(cmd_report(dir / "results.json", dir / "r3", std::string("tex"), o3, e3) == 0);
  CHECK(fs::exists(dir / "r3" / "report.tex"));
  std::ostringstream o4, e4;
  CHECK(cmd_report(dir / "results.json", dir / "r4", std::string("html"), o4, e4) != 0);
  CHECK(e4.str().find("error: UnknownFormat:") != std::string::npos);
}

TEST_CASE("multi-problem configs write one directory per problem", "[commands]")
{
  const auto dir = scratch_dir("commands_multi");
  const auto reg = dir / "registry";
  Matrix a(2, 2);
  a << -1, 0, 0, -3;
  write_problem(reg, "toyA_n2m1q1", LtiSystem(SystemMatrices{a, Matrix::Ones(2, 1), Matrix::Ones(1, 2), {}, {}}));
  write_problem(reg, "toyB_n2m1q1",
                LtiSystem(SystemMatrices{Matrix(2 * a), Matrix::Ones(2, 1), Matrix::Ones(1, 2), {}, {}}));
  std::ofstream(dir / "multi.json") << R"({"toyA_n2m1q1": {"alg_iso": {"bt": {"sign": {}}}},
                                          "toyB_n2m1q1": {"alg_iso": {"bt": {"sign": {}}}}})";
  std::ostringstream out, err;
  CHECK(cmd_run(dir / "multi.json", reg, dir / "out", 1, {}, out, err) == 0);
  CHECK(fs::exists(dir / "out" / "toyA_n2m1q1" / "results.json"));
  CHECK(fs::exists(dir / "out" / "toyB_n2m1q1" / "report.md"));
}

TEST_CASE("default registry honours the environment", "[commands]")
{
  ::setenv(kRegistryEnv, "/some/where", 1);
  CHECK(default_registry() == fs::path("/some/where"));
  ::unsetenv(kRegistryEnv);
  CHECK(default_registry() == fs::path("data/registry"));
}
