#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "twirlwave/report.hpp"
#include "twirlwave/suites.hpp"

using namespace twirlwave;

TEST(Emit, empty_series_is_header_only_csv) {
  Table t;
  t.columns = {"step", "t", "norm", "energy", "p_y"};
  EXPECT_EQ(emit_string(t, OutputFormat::csv), "step,t,norm,energy,p_y\n");
}

TEST(Emit, csv_quoting) {
  Table t;
  t.columns = {"a", "b,c"};
  t.add_row({std::string("say \"hi\""), std::string("x\ny")});
  EXPECT_EQ(emit_string(t, OutputFormat::csv), "a,\"b,c\"\n\"say \"\"hi\"\"\",\"x\ny\"\n");
}

TEST(Emit, numbers_carry_seventeen_digits) {
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(format_number(2.0), "2");
  EXPECT_EQ(format_number(std::nan("")), "nan");
  EXPECT_EQ(std::stod(format_number(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Emit, json_has_metadata_and_rows) {
  Table t;
  t.columns = {"name", "value", "ok", "n"};
  t.add_row({std::string("a\"b"), 0.5, true, std::int64_t{3}});
  t.add_row({std::string("inf"), std::numeric_limits<double>::infinity(), false, std::int64_t{-1}});
  t.metadata = {{"seed", std::int64_t{42}}, {"unit_system", std::string("natural")}};
  const auto j = nlohmann::json::parse(emit_string(t, OutputFormat::json));
  ASSERT_TRUE(j.contains("metadata"));
  ASSERT_TRUE(j.contains("rows"));
  EXPECT_EQ(j.size(), 2u);
  EXPECT_EQ(j["metadata"]["seed"], 42);
  EXPECT_EQ(j["rows"][0]["name"], "a\"b");
  EXPECT_EQ(j["rows"][0]["value"], 0.5);
  EXPECT_EQ(j["rows"][0]["ok"], true);
  EXPECT_TRUE(j["rows"][1]["value"].is_null());
}

TEST(Emit, empty_json) {
  Table t;
  t.columns = {"x"};
  const auto j = nlohmann::json::parse(emit_string(t, OutputFormat::json));
  EXPECT_TRUE(j["rows"].empty());
  EXPECT_TRUE(j["metadata"].empty());
}

TEST(Emit, row_width_is_checked) {
  Table t;
  t.columns = {"x", "y"};
  EXPECT_THROW(t.add_row({1.0}), invalid_input);
  EXPECT_THROW((void)parse_output_format("xml"), invalid_input);
}

TEST(Check, pass_is_strict) {
  EXPECT_TRUE(Check("a", 0.0, 1e-300).pass);
  EXPECT_FALSE(Check("a", 0.0, 0.0).pass);
  EXPECT_FALSE(Check("a", 1e-12, 1e-12).pass);
  EXPECT_FALSE(Check("a", std::nan(""), 1.0).pass);
}

TEST(ReportTable, overall_follows_checks) {
  Report r;
  r.suite = "s";
  r.checks = {{"a", 0.0, 1.0}, {"b", 2.0, 1.0}};
  EXPECT_FALSE(r.overall());
  const auto t = r.table();
  EXPECT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(std::get<bool>(t.metadata[1].second), false);
  r.checks.pop_back();
  EXPECT_TRUE(r.overall());
}

TEST(Suites, fast_suites_pass_and_are_deterministic) {
  SuiteOptions o;
  o.draws = 2000;
  const std::vector<std::string> names{"algebra", "maxwell", "solutions", "identities", "quantum-forms", "twirl"};
  const auto a = run_suites(names, o, "t");
  const auto b = run_suites(names, o, "t");
  EXPECT_TRUE(a.overall());
  EXPECT_EQ(emit_string(a.table(), OutputFormat::csv), emit_string(b.table(), OutputFormat::csv));
}

TEST(Suites, seed_changes_the_draws) {
  SuiteOptions o;
  o.draws = 500;
  const auto a = run_suites({"identities"}, o, "t");
  o.seed = 43;
  const auto b = run_suites({"identities"}, o, "t");
  EXPECT_NE(a.checks[0].max_rel_err, b.checks[0].max_rel_err);
}

TEST(Suites, unknown_names_are_rejected) {
  SuiteOptions o;
  EXPECT_THROW((void)run_suites({"nope"}, o, "t"), invalid_input);
  o.tolerances["nope"] = 1.0;
  EXPECT_THROW((void)run_suites({"twirl"}, o, "t"), invalid_input);
}

TEST(Suites, gaussian_units_pass) {
  SuiteOptions o;
  o.draws = 1000;
  o.constants = PhysicalConstants::gaussian();
  EXPECT_TRUE(run_suites({"maxwell", "solutions", "quantum-forms", "twirl"}, o, "t").overall());
}

TEST(Suites, every_check_has_a_default_tolerance) {
  SuiteOptions o;
  o.draws = 200;
  std::size_t seen = 0;
  for (const auto& e : all_suites()) {
    if (e.name == "dynamics") continue;
    for (const auto& c : e.run(o)) {
      EXPECT_TRUE(default_tolerances().contains(c.name));
      ++seen;
    }
  }
  EXPECT_EQ(seen + 6, default_tolerances().size());
}
