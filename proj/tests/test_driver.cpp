// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include "morbench/analyzer.hpp"
#include "morbench/config.hpp"
#include "morbench/driver.hpp"
#include "morbench/error.hpp"
#include "morbench/problems.hpp"
#include "test_support.hpp"

using namespace morbench;
using namespace morbench::testing;
namespace fs = std::filesystem;

namespace
{

const fs::path kNewEngland = fs::path(MORBENCH_TEST_DATA) / "newEngland_n66m1q1.json";
const ImplMap kNewEnglandMap = {{"cst", "sign"}, {"mess", "sign"}, {"morlab", "sign"}, {"pymor", "emp"}};

std::vector<std::string> labels(const RunPlan &plan)
{
  std::vector<std::string> out;
  for (const auto &iso : plan.isotopes)
    out.push_back(iso.label);
  return out;
}

ProblemConfig config_of(const std::string &text)
{
  return parse_config_text(text).problems.at(0);
}

EnvInfo fixed_env()
{
  return EnvInfo{"2024-01-02T03:04:05Z", "TestOS 1.0", "morbench test", "host"};
}

}  // namespace

TEST_CASE("newEngland config expands to six isotopes", "[driver]")
{
  const auto cfg = parse_config(kNewEngland).problems.at(0);
  const auto mapped = expand_config(cfg, kNewEnglandMap);
  CHECK(labels(mapped.plan) ==
        std::vector<std::string>{"bt-cst-1", "bt-cst-2", "bt-mess-1", "bt-mess-2", "bt-morlab", "bt-pymor"});
  CHECK(mapped.plan.isotopes[5].impl_id == "emp");
  CHECK(mapped.plan.isotopes[2].params == ParamSet{{"max_order", 100}, {"tol", 1e-6}});
  CHECK(mapped.warnings.empty());
  CHECK(mapped.notices.size() == 3);  // bt.emgr, bg.emgr, bg.mess

  const auto raw = expand_config(cfg);
  CHECK(raw.plan.isotopes.empty());
  CHECK(raw.warnings.size() == 4);
}

TEST_CASE("expansion rules", "[driver]")
{
  const auto three = expand_config(
      config_of(R"({"x_n1m1q1": {"alg_iso": {"bt": {"sign": [{"tol": 1e-6}, {"tol": 1e-12}], "emp": {}}}}})"));
  CHECK(labels(three.plan) == std::vector<std::string>{"bt-sign-1", "bt-sign-2", "bt-emp"});

  const auto none = expand_config(config_of(R"({"x_n1m1q1": {"alg_iso": {"bt": {"sign": null}}}})"));
  CHECK(none.plan.isotopes.empty());
  CHECK(none.notices.size() == 1);

  CHECK_THROWS_AS(expand_config(config_of(R"({"x_n1m1q1": {"alg_iso": {"bt": {"sign": {"tol": 2}}}}})")), Error);
  CHECK_THROWS_AS(expand_config(config_of(R"({"bad id": {"alg_iso": {}}})")), Error);
  try
  {
    expand_config(config_of(R"({"x_n1m1q1": {"alg_iso": {"bt": {"sign": [{}, {}], "sign-1": {}}}}})"),
                  {{"sign-1", "sign"}});
    FAIL("expected duplicate label error");
  }
  catch (const Error &e)
  {
    CHECK(e.code() == ErrorCode::SchemaError);
  }
}

TEST_CASE("expansion is deterministic", "[driver][property]")
{
  const auto cfg = parse_config(kNewEngland).problems.at(0);
  const auto first = labels(expand_config(cfg, kNewEnglandMap).plan);
  for (int i = 0; i < 20; i++)
    CHECK(labels(expand_config(cfg, kNewEnglandMap).plan) == first);
}

TEST_CASE("failures are isolated", "[driver]")
{
  RunPlan plan;
  plan.problem_id = "heatToy_n100m2q2";
  plan.isotopes = {{"bt", "sign", {{"tol", 1e-6}}, "bt-sign"},
                   {"bt", "emp", {}, "bt-emp"},
                   {"bt", "sign", {{"tol", 1e-8}}, "bt-sign-fine"}};
  const auto res = run_plan(plan, make_heat_toy(100), 1, MethodRegistry::builtin(), fixed_env());
  REQUIRE(res.runs.size() == 3);
  CHECK(res.runs[0].status == RunStatus::ok);
  CHECK(res.runs[1].status == RunStatus::failed);
  CHECK(res.runs[1].message.find("NonFinite") != std::string::npos);
  CHECK(!res.runs[1].reduced_order.has_value());
  CHECK(res.runs[2].status == RunStatus::ok);
  CHECK(res.measures.size() == 2);
  for (const auto &run : res.runs)
  {
    CHECK(run.problem_id == "heatToy_n100m2q2");
    CHECK((run.status == RunStatus::ok ? run.wall_time_s > 0.0 : run.wall_time_s >= 0.0));
    CHECK((run.reduced_order.has_value() == (run.status == RunStatus::ok)));
  }
  CHECK(res.problem_size == ProblemDims{100, 2, 2});
}

TEST_CASE("throwing reducers do not lose other runs", "[driver]")
{
  MethodRegistry reg;
  reg.add(MethodRegistryEntry{"bt", "sign", "", {{"tol", 1e-6}}, {"tol", "max_order"},
                              [](const LtiSystem &sys, const AlgorithmIsotope &iso) {
                                return reduce(sys, iso, MethodRegistry::builtin());
                              }});
  reg.add(MethodRegistryEntry{"bt", "boom", "", {}, {},
                              [](const LtiSystem &, const AlgorithmIsotope &) -> ReducedModel {
                                throw std::runtime_error("injected");
                              }});
  RunPlan plan;
  plan.problem_id = "heatToy_n100m2q2";
  plan.isotopes = {{"bt", "boom", {}, "bt-boom"}, {"bt", "sign", {}, "bt-sign"}};
  const auto res = run_plan(plan, make_heat_toy(100), 2, reg, fixed_env());
  CHECK(res.runs[0].status == RunStatus::failed);
  CHECK(res.runs[0].message.find("injected") != std::string::npos);
  CHECK(res.runs[1].status == RunStatus::ok);
  CHECK(res.measures.count("bt-sign") == 1);
}

TEST_CASE("zero input runs as an order-0 model", "[driver]")
{
  Matrix a(2, 2);
  a << -1, 0, 0, -2;
  Matrix c(1, 2);
  c << 1, 1;
  const LtiSystem sys(SystemMatrices{a, Matrix::Zero(2, 1), c, {}, {}});
  RunPlan plan;
  plan.problem_id = "zero_n2m1q1";
  plan.isotopes = {{"bt", "sign", {}, "bt-sign"}};
  const auto res = run_plan(plan, sys, 1, MethodRegistry::builtin(), fixed_env());
  REQUIRE(res.runs[0].status == RunStatus::ok);
  CHECK(*res.runs[0].reduced_order == 0);
  for (const auto &[id, v] : res.measures.at("bt-sign").norms)
    CHECK(v == 0.0);
}

TEST_CASE("jobs do not change results", "[driver]")
{
  RunPlan plan;
  plan.problem_id = "heatToy_n100m2q2";
  for (int k = 0; k < 6; k++)
    plan.isotopes.push_back({"bt", "sign", {{"tol", std::pow(10.0, -2 - k)}}, "bt-sign-" + std::to_string(k)});
  const auto sys = make_heat_toy(100);
  auto serial = run_plan(plan, sys, 1, MethodRegistry::builtin(), fixed_env());
  auto parallel = run_plan(plan, sys, 4, MethodRegistry::builtin(), fixed_env());
  CHECK(parallel.jobs == 4);
  parallel.jobs = 1;
  for (auto *r : {&serial, &parallel})
    for (auto &run : r->runs)
      run.wall_time_s = 0.0;
  CHECK(results_to_json(serial) == results_to_json(parallel));
}

TEST_CASE("results json round-trips", "[driver]")
{
  RunPlan plan;
  plan.problem_id = "heatToy_n100m2q2";
  plan.isotopes = {{"bt", "sign", {{"tol", 1e-6}}, "bt-sign"}, {"bt", "emp", {}, "bt-emp"}};
  plan.analysis.meas.time_points = 40;
  plan.analysis.meas.sigmaplot = PlotGridOptions{-2, 6, 30};
  plan.report.format = ReportFormat::tex;
  plan.plot.save_data = false;
  const auto res = run_plan(plan, make_heat_toy(100), 1, MethodRegistry::builtin(), fixed_env());
  const std::string text = results_to_json(res);
  const auto back = results_from_json(text);
  CHECK(results_to_json(back) == text);
  CHECK(back.env.hostname == "host");
  CHECK(back.report.format == ReportFormat::tex);
  CHECK_FALSE(back.plot.save_data);
  CHECK(back.runs[1].status == RunStatus::failed);
  CHECK(back.measures.at("bt-sign").freq_samples.at("error").omega.size() == 30);

  const auto dir = scratch_dir("driver_json");
  write_results(dir / "results.json", res);
  CHECK(results_to_json(read_results(dir / "results.json")) == text);

  auto inf = res;
  inf.measures.at("bt-sign").norms.back().second = std::numeric_limits<double>::infinity();
  CHECK(std::isinf(*results_from_json(results_to_json(inf)).measures.at("bt-sign").norm("h2")));
  CHECK_THROWS_AS(results_from_json("{\"schema_version\": 2}"), Error);
}
