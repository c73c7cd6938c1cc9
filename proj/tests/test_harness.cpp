// Check records, report serialization, and the experiment runners' record
// semantics: verdict arithmetic, round-trips, determinism, and config
// validation. Heavy sweep content is covered by the acceptance binary.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "riesz/check_record.hpp"
#include "riesz/errors.hpp"
#include "riesz/experiment_harness.hpp"

using namespace riesz;

namespace {

RunReport tiny_report() {
  RunReport rep;
  rep.params = make_params(2, 1.0);
  rep.config = {{"d", "2"}, {"alpha", "1"}};
  rep.records.push_back(make_check("demo.le", {{"p", "1.5"}, {"profile", "f0"}}, 1.0, 2.0,
                                   CheckDirection::computed_le_bound, 1e-3));
  rep.records.push_back(make_check("demo.ge", {{"p", "1.5"}}, 2.5, 2.0,
                                   CheckDirection::computed_ge_bound, 1e-3));
  rep.records.push_back(make_divergent("demo.diverged", {{"p", "3"}}, "tail not integrable"));
  rep.records.push_back(make_recorded("demo.recorded", {}, 4.2, 1.0));
  return rep;
}

}  // namespace

TEST_CASE("check verdicts honor direction and relative slack") {
  const auto le = CheckDirection::computed_le_bound;
  const auto ge = CheckDirection::computed_ge_bound;
  CHECK(make_check("x", {}, 1.0009, 1.0, le, 1e-3).status == CheckStatus::pass);
  CHECK(make_check("x", {}, 1.0011, 1.0, le, 1e-3).status == CheckStatus::fail);
  CHECK(make_check("x", {}, 0.9991, 1.0, ge, 1e-3).status == CheckStatus::pass);
  CHECK(make_check("x", {}, 0.9989, 1.0, ge, 1e-3).status == CheckStatus::fail);
  CHECK(make_check("x", {}, 5.0, 5.0, le, 0.0).status == CheckStatus::pass);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK(make_check("x", {}, nan, 1.0, le, 0.0).status == CheckStatus::divergent);
  CHECK(make_check("x", {}, 1.0, nan, ge, 0.0).status == CheckStatus::divergent);
  CHECK(make_recorded("x", {}, 1.0, 2.0).status == CheckStatus::recorded_only);
}

TEST_CASE("summary counts every status once") {
  const ReportSummary s = summarize(tiny_report().records);
  CHECK(s.total == 4);
  CHECK(s.passed == 2);
  CHECK(s.failed == 0);
  CHECK(s.divergent == 1);
  CHECK(s.recorded == 1);
}

TEST_CASE("json report carries records verbatim and consistent totals") {
  const RunReport rep = tiny_report();
  const nlohmann::json j = nlohmann::json::parse(report_to_json(rep));
  CHECK(j["params"]["d"] == 2);
  CHECK(j["params"]["alpha"] == 1.0);
  CHECK(j["config"]["alpha"] == "1");
  CHECK(j["records"].size() == 4);
  CHECK(j["records"][0]["name"] == "demo.le");
  CHECK(j["records"][0]["status"] == "pass");
  CHECK(j["records"][0]["computed"] == 1.0);
  CHECK(j["records"][0]["inputs"]["p"] == "1.5");
  // NaN fields serialize as null rather than breaking the document.
  CHECK(j["records"][2]["computed"].is_null());
  const auto& sum = j["summary"];
  CHECK(sum["pass"].get<int>() + sum["fail"].get<int>() + sum["divergent"].get<int>() +
            sum["recorded_only"].get<int>() ==
        4);
}

TEST_CASE("csv report round-trips its typed fields") {
  const RunReport rep = tiny_report();
  const std::string csv = report_to_csv(rep);
  const std::vector<CheckRecord> back = parse_csv_records(csv);
  REQUIRE(back.size() == rep.records.size());
  for (size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].name == rep.records[i].name);
    CHECK(back[i].status == rep.records[i].status);
    CHECK(back[i].direction == rep.records[i].direction);
    CHECK(back[i].slack_used == rep.records[i].slack_used);
    const bool nan_pair =
        std::isnan(back[i].computed) && std::isnan(rep.records[i].computed);
    CHECK((nan_pair || back[i].computed == rep.records[i].computed));
    CHECK(back[i].inputs == rep.records[i].inputs);
  }
}

TEST_CASE("report writing is atomic and validated") {
  const RunReport rep = tiny_report();
  RunReport empty;
  empty.params = rep.params;
  CHECK_THROWS_AS(write_report(empty, ReportFormat::json, "/tmp/riesz_empty.json"), ConfigError);
  CHECK_THROWS_AS(write_report(rep, ReportFormat::json, "/nonexistent-dir/report.json"),
                  IoError);
  const std::string path = "/tmp/riesz_report_roundtrip.json";
  write_report(rep, ReportFormat::json, path);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == report_to_json(rep));
  std::remove(path.c_str());
}

TEST_CASE("config echo lists grids and free constants") {
  SweepConfig cfg;
  cfg.params = make_params(2, 1.0);
  cfg.p_grid = {1.5, 1.75};
  cfg.free_constants["c1d"] = 2.5;
  const auto echo = config_echo(cfg);
  auto find = [&](const std::string& key) -> std::string {
    for (const auto& [k, v] : echo)
      if (k == key) return v;
    return "<missing>";
  };
  CHECK(find("d") == "2");
  CHECK(find("p_grid") == "1.5,1.75");
  CHECK(find("rs_grid") == "auto");
  CHECK(find("free_const.c1d") == "2.5");
  CHECK(find("free_const.thm4_c") == "1");
  CHECK(find("free_const.stein_sqrt") == "unset");
  CHECK(cfg.free_constant("c1d") == doctest::Approx(2.5));
  CHECK(cfg.free_constant("thm4_c") == doctest::Approx(1.0));
}

TEST_CASE("norm validation runner emits paired equality records") {
  SweepConfig cfg;
  cfg.params = make_params(2, 1.0);
  cfg.p_grid = {1.5};
  const auto records = run_norm_validation(cfg);
  REQUIRE(records.size() == 4);  // two profiles, le + ge each
  for (const auto& rec : records) {
    CHECK(rec.name.rfind("norms.closed_vs_numeric", 0) == 0);
    CHECK(rec.status == CheckStatus::pass);
  }
  cfg.p_grid.clear();
  CHECK_THROWS_AS(run_norm_validation(cfg), ConfigError);
  cfg.p_grid = {0.8};
  CHECK_THROWS_AS(run_norm_validation(cfg), ConfigError);
}

TEST_CASE("witness and probe runners validate their grids") {
  SweepConfig cfg;
  cfg.params = make_params(2, 1.0);
  cfg.p_grid = {2.5};  // outside (1, d/alpha)
  CHECK_THROWS_AS(run_witness_sweep(cfg), ConfigError);
  cfg.p_grid.clear();
  CHECK_THROWS_AS(run_witness_sweep(cfg), ConfigError);
  CHECK_THROWS_AS(run_truncated_check(cfg), ConfigError);
  CHECK_THROWS_AS(run_conjecture_probe(cfg), ConfigError);
  cfg.alpha_grid = {2.0};  // not inside (0, d)
  CHECK_THROWS_AS(run_conjecture_probe(cfg), ConfigError);
}

TEST_CASE("truncated runner certifies the Young bound on a small grid") {
  SweepConfig cfg;
  cfg.params = make_params(2, 1.0);
  cfg.quad.rel_tol = 1e-6;
  cfg.rs_grid = {{2.0, 2.0}};
  const auto records = run_truncated_check(cfg);
  int young = 0, identity = 0;
  for (const auto& rec : records) {
    CHECK(rec.status != CheckStatus::fail);
    if (rec.name == "truncated.young_bound") ++young;
    if (rec.name.rfind("truncated.z_identity", 0) == 0) ++identity;
  }
  CHECK(young == 3);       // three profile pairs, one admissible (r, s)
  CHECK(identity == 20);   // ten p-points, le + ge each
}

TEST_CASE("sandwich runner is deterministic") {
  SweepConfig cfg;
  cfg.params = make_params(2, 1.0);
  RunReport a, b;
  a.params = b.params = cfg.params;
  a.config = b.config = config_echo(cfg);
  a.records = run_sandwich_report(cfg);
  b.records = run_sandwich_report(cfg);
  CHECK(report_to_json(a) == report_to_json(b));
  // Nine default rows, each lower <= sharp, sharp <= upper, one shape echo.
  CHECK(a.records.size() == 27);
  for (const auto& rec : a.records) CHECK(rec.status != CheckStatus::fail);
}

TEST_CASE("potential norm of the Newtonian ball against a hand value") {
  // d = 3, alpha = 2, |I_2 ball|_4 via the closed potential:
  // (4 pi [int_0^1 (2 pi (1 - R^2/3))^4 R^2 dR + (4 pi/3)^4])^(1/4).
  const ProblemParams prm = make_params(3, 2.0);
  QuadratureSpec quad;
  quad.rel_tol = 1e-7;
  const NormResult n =
      potential_lq_norm(RadialProfile::ball_indicator(), 4.0, prm, quad);
  CHECK(n.value == doctest::Approx(9.0605085253851038).epsilon(1e-5));
  CHECK(n.method == NormMethod::quadrature);

  GeneralizedKernelSpec identity;
  identity.alpha = prm.alpha;
  const NormResult g = generalized_potential_lq_norm(RadialProfile::ball_indicator(), identity,
                                                     4.0, prm, quad);
  CHECK(g.value == n.value);  // flagged identity delegates exactly

  CHECK_THROWS_AS(potential_lq_norm(RadialProfile::ball_indicator(), 0.5, prm, quad),
                  std::domain_error);
}
