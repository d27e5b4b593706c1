#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zdg/export.hpp"
#include "zdg/suite.hpp"

using namespace zdg;

TEST_SUITE("export") {
  TEST_CASE("graph json and dot") {
    const Graph g = zero_divisor_graph(Ring::zn(12));
    const auto j = nlohmann::json::parse(to_json(g));
    CHECK(j["vertices"] == 7);
    CHECK(j["labels"][0] == "2");
    CHECK(j["edges"].size() == 8);
    CHECK(j["edges"][0] == nlohmann::json::array({0, 3}));
    const std::string text = to_json(g);
    CHECK(text.find("\"edges\"") < text.find("\"labels\""));
    CHECK(text.find("\"labels\"") < text.find("\"vertices\""));
    CHECK(text.find('\r') == std::string::npos);
    CHECK(text.back() == '\n');

    const std::string dot = to_dot(g);
    CHECK(dot.rfind("graph G {\n", 0) == 0);
    CHECK(std::count(dot.begin(), dot.end(), '\n') == 1 + 7 + 8 + 1);
    CHECK(dot.find("\"2\" -- \"6\";") != std::string::npos);
    CHECK_THROWS_AS(render(g, ExportFormat::Csv), std::invalid_argument);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
  }

  TEST_CASE("invariant json") {
    const Graph g = standard_graph(StandardKind::Cycle, 5).with_labels({"a", "b", "c", "d", "e"});
    const auto r = determining_number(g);
    const auto j = nlohmann::json::parse(to_json(r, g));
    CHECK(j["kind"] == "Det");
    CHECK(j["lower"] == 2);
    CHECK(j["upper"] == 2);
    CHECK(j["exact"] == true);
    CHECK(j["certificate"].size() == 2);
    CHECK(j["certificate"][0].is_string());
  }

  TEST_CASE("write_file") {
    const auto path = std::filesystem::temp_directory_path() / "zdg_export_test.json";
    write_file(path, "{}\n");
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == "{}\n");
    std::filesystem::remove(path);
    CHECK_THROWS_AS(write_file("/nonexistent-dir/x.json", "x"), std::runtime_error);
  }
}

TEST_SUITE("suite") {
  TEST_CASE("zn suite report") {
    SuiteParams p;
    p.zn_max_n = 60;
    const auto report = run_suite("zn", p);
    CHECK(report.summary.failed == 0);
    CHECK(exit_status(report) == 0);
    CHECK(report.cases.front().id == "zn/n=4");
    std::size_t checks = 0;
    for (const auto& c : report.cases) checks += c.checks.size();
    CHECK(report.summary.checks == checks);
    CHECK(report.summary.passed + report.summary.failed + report.summary.deviations == checks);
    const std::string csv = to_csv(report);
    CHECK(csv.rfind("n,formula,twinLower,certUpper,exact\n4,0,0,0,true\n", 0) == 0);
    // worker count does not change the report
    p.workers = 4;
    CHECK(to_json(run_suite("zn", p)) == to_json(report));
  }

  TEST_CASE("gap suite") {
    SuiteParams p;
    p.gap_max_k = 6;
    p.gap_bound_max_k = 8;
    const auto report = run_suite("gap", p);
    CHECK(report.summary.failed == 0);
    std::vector<std::string> det;
    for (const auto& c : report.cases)
      if (c.id != "gap/trend") det.push_back(c.value("det"));
    CHECK(det == std::vector<std::string>(8, "1"));
  }

  TEST_CASE("boolean suite records deviations") {
    SuiteParams p;
    p.boolean_max_n = 5;
    const auto report = run_suite("boolean", p);
    CHECK(report.summary.failed == 0);
    CHECK(report.summary.deviations > 0);
    std::vector<std::string> det;
    for (const auto& c : report.cases) det.push_back(c.value("det"));
    CHECK(det == std::vector<std::string>{"1", "2", "2", "3"});
  }

  TEST_CASE("join suite is reproducible") {
    SuiteParams p;
    p.join_instances = 6;
    const auto a = run_suite("join", p);
    CHECK(a.summary.failed == 0);
    CHECK(to_json(a) == to_json(run_suite("join", p)));
    CHECK(to_csv(a).rfind("instance,family,base,parts,vertices,formula,exhaustive\n", 0) == 0);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
    SuiteParams p;
    p.zn_max_n = 100000;
    CHECK_THROWS_AS(run_suite("zn", p), std::out_of_range);
    p = {};
    p.boolean_max_n = 30;
    CHECK_THROWS_AS(run_suite("boolean", p), std::out_of_range);
  }
}
