// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include "morbench/config.hpp"
#include "morbench/error.hpp"

using namespace morbench;
namespace fs = std::filesystem;

namespace
{

const fs::path kNewEngland = fs::path(MORBENCH_TEST_DATA) / "newEngland_n66m1q1.json";

std::string schema_message(const std::string &text)
{
  try
  {
    parse_config_text(text, "cfg");
  }
  catch (const Error &e)
  {
    CHECK(e.code() == ErrorCode::SchemaError);
    return e.what();
  }
  FAIL("expected SchemaError");
  return {};
}

}  // namespace

TEST_CASE("newEngland config parses unmodified", "[config]")
{
  const auto cfg = parse_config(kNewEngland);
  CHECK(cfg.warnings.empty());
  REQUIRE(cfg.problems.size() == 1);
  const auto &p = cfg.problems[0];
  CHECK(p.problem_id == "newEngland_n66m1q1");
  REQUIRE(p.alg_iso.size() == 2);
  const auto &bt = p.alg_iso[0];
  CHECK(bt.method_id == "bt");
  REQUIRE(bt.impls.size() == 5);
  CHECK(bt.impls[0].impl_id == "cst");
  CHECK(bt.impls[0].form == ImplConfig::Form::array);
  CHECK(bt.impls[0].param_sets.size() == 2);
  CHECK(bt.impls[0].param_sets[0] == ParamSet{{"tol", 1e-6}});
  CHECK(bt.impls[1].form == ImplConfig::Form::null);
  CHECK(bt.impls[2].param_sets[0] == ParamSet{{"max_order", 100}, {"tol", 1e-6}});
  CHECK(bt.impls[3].form == ImplConfig::Form::object);
  CHECK(p.alg_iso[1].method_id == "bg");

  CHECK(p.analysis.meas.norm_ids == std::vector<std::string>{"l0", "l1", "l2", "linf", "h2"});
  CHECK(p.analysis.meas.time_points == 250);
  REQUIRE(p.analysis.meas.sigmaplot.has_value());
  CHECK(p.analysis.meas.sigmaplot->lo == -8.0);
  CHECK(p.analysis.meas.sigmaplot->hi == 8.0);
  CHECK(p.analysis.meas.sigmaplot->max_points == 500);
  CHECK(p.analysis.bode.has_value());
  CHECK(p.plot.save_vector);
  CHECK(p.plot.save_data);
  CHECK(p.report.format == ReportFormat::markdown);
}

TEST_CASE("schema errors name the offending path", "[config]")
{
  CHECK(schema_message(R"({"x_n1m1q1": {"meas_opt": {}}})").find("x_n1m1q1") != std::string::npos);
  CHECK(schema_message(R"({"x_n1m1q1": {"meas_opt": {}}})").find("alg_iso") != std::string::npos);
  CHECK(schema_message(R"({"newEngland_n66m1q1": {"alg_iso": {"bt": {"cst": [{"tol": "1e-6"}]}}}})")
            .find("newEngland_n66m1q1.alg_iso.bt.cst[0].tol") != std::string::npos);
  CHECK(schema_message(R"({"x_n1m1q1": {"alg_iso": {}, "extra": 1}})").find("x_n1m1q1.extra") != std::string::npos);
  CHECK(schema_message(R"({"x_n1m1q1": {"alg_iso": {"bt": {"sign": 3}}}})").find("bt.sign") != std::string::npos);
  CHECK(schema_message(R"({"x_n1m1q1": 5})").find("x_n1m1q1") != std::string::npos);
  CHECK(schema_message(R"([])").find("cfg") != std::string::npos);
}

TEST_CASE("option blocks warn on unknown keys", "[config]")
{
  const auto cfg = parse_config_text(
      R"({"x_n1m1q1": {"alg_iso": {"bt": {"sign": {}}},
          "meas_opt": {"h2_method": "quad", "mystery": 1},
          "plot_opt": {"save_eps": false, "save_fig": 1, "colour": "red"},
          "report_opt": {"format": "tex"}}})");
  CHECK(cfg.warnings.size() == 3);
  const auto &p = cfg.problems[0];
  CHECK_FALSE(p.plot.save_vector);
  CHECK(p.plot.save_data);
  CHECK(p.report.format == ReportFormat::tex);
  CHECK(p.alg_iso[0].impls[0].param_sets[0].empty());
}

TEST_CASE("report format names", "[config]")
{
  CHECK(parse_report_format("md") == ReportFormat::markdown);
  CHECK(parse_report_format("tex") == ReportFormat::tex);
  try
  {
    parse_report_format("html");
    FAIL("expected UnknownFormat");
  }
  catch (const Error &e)
  {
    CHECK(e.code() == ErrorCode::UnknownFormat);
  }
  CHECK_THROWS_AS(parse_config_text(R"({"x_n1m1q1": {"alg_iso": {}, "report_opt": {"format": "pdf"}}})"), Error);
}

TEST_CASE("malformed json and missing files", "[config]")
{
  try
  {
    parse_config_text("{", "cfg");
    FAIL("expected ParseError");
  }
  catch (const Error &e)
  {
    CHECK(e.code() == ErrorCode::ParseError);
  }
  try
  {
    parse_config(fs::path(MORBENCH_TEST_DATA) / "nope.json");
    FAIL("expected Io");
  }
  catch (const Error &e)
  {
    CHECK(e.code() == ErrorCode::Io);
  }
}

TEST_CASE("multiple benchmark ids keep file order", "[config]")
{
  const auto cfg = parse_config_text(R"({"b_n1m1q1": {"alg_iso": {}}, "a_n1m1q1": {"alg_iso": {}}})");
  REQUIRE(cfg.problems.size() == 2);
  CHECK(cfg.problems[0].problem_id == "b_n1m1q1");
  CHECK(cfg.problems[1].problem_id == "a_n1m1q1");
}
