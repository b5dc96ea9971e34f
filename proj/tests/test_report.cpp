// Report tests: the verification run end to end at a light resolution, the
// JSON schema the CLI exposes, CSV shape, and the solver reports.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/elliptic.hpp"
#include "report/report.hpp"

using namespace wpmin;
using report::Json;
using rep::FamilyId;
constexpr double kPi = std::numbers::pi;

namespace {

report::VerifyOptions light_options() {
  report::VerifyOptions opt;
  opt.resolution = 100;
  opt.identity_points = 40;
  opt.symmetry_samples = 25;
  opt.immersion_points = 8;
  return opt;
}

} // namespace

TEST_CASE("verification passes for every family at light settings") {
  for (auto id : {FamilyId::vilhena3, FamilyId::weber2, FamilyId::chen_gackstatter}) {
    auto v = report::run_verification(id, light_options());
    CHECK(v.overall);
    for (const auto& row : v.checks) {
      CAPTURE(row.section);
      CAPTURE(row.id);
      CHECK(row.pass);
    }
  }
}

TEST_CASE("report schema is stable") {
  auto v = report::run_verification(FamilyId::vilhena3, light_options());
  const Json& j = v.report;
  // Top-level keys, in order: this is the shape consumers parse.
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"family", "options", "constants",
                                         "lemma_checks", "period_report",
                                         "curvature", "symmetry", "immersion",
                                         "notes", "checks", "overall"});
  CHECK(j["family"] == "vilhena3");
  for (const char* k : {"jorge_meeks", "degree_based", "mesh_integrated",
                        "mesh_truncated", "degree"})
    CHECK(j["curvature"].contains(k));
  for (const char* k : {"group_order", "max_deviation", "geodesic_max_deviation"})
    CHECK(j["symmetry"].contains(k));
  for (const char* k : {"closed_vs_numeric_max", "base_point_norm"})
    CHECK(j["immersion"].contains(k));
  const Json& pr = j["period_report"];
  for (const char* k : {"family", "lambda", "c", "cycle_integrals", "residues",
                        "residual_norm", "residues_phi12_max", "residue_sum"})
    CHECK(pr.contains(k));
  CHECK(pr["cycle_integrals"].size() == 12);
  for (const auto& e : pr["cycle_integrals"])
    for (const char* k : {"form", "cycle", "re", "im"}) CHECK(e.contains(k));
  // Check rows carry the full record.
  REQUIRE(!j["checks"].empty());
  for (const char* k :
       {"section", "id", "value", "reference", "deviation", "tolerance", "pass"})
    CHECK(j["checks"][0].contains(k));
  CHECK(j["overall"] == true);
}

TEST_CASE("notes carry the documented ids") {
  auto note_ids = [](const Json& j) {
    std::vector<std::string> ids;
    for (const auto& n : j["notes"]) ids.push_back(n["id"].get<std::string>());
    return ids;
  };
  auto v3 = report::run_verification(FamilyId::vilhena3, light_options());
  auto ids = note_ids(v3.report);
  CHECK(std::count(ids.begin(), ids.end(), "imaginary_vertical_periods") == 1);
  CHECK(std::count(ids.begin(), ids.end(), "antiderivative_split_3") == 1);
  CHECK(std::count(ids.begin(), ids.end(), "x2_constant") == 1);
  CHECK(std::count(ids.begin(), ids.end(), "curvature_truncation") == 1);
  auto w2 = report::run_verification(FamilyId::weber2, light_options());
  ids = note_ids(w2.report);
  CHECK(std::count(ids.begin(), ids.end(), "weber2_symmetry") == 1);
  CHECK(std::count(ids.begin(), ids.end(), "x2_constant") == 0);
}

TEST_CASE("csv rendering") {
  auto v = report::run_verification(FamilyId::chen_gackstatter, light_options());
  std::string csv = report::checks_to_csv(v.checks);
  std::istringstream in(csv);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "section,id,value,reference,deviation,tolerance,pass");
  size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 6);
    CHECK((line.find(",true") != std::string::npos ||
           line.find(",false") != std::string::npos));
  }
  CHECK(rows == v.checks.size());
}

TEST_CASE("solve report") {
  double e1 = ell::engine().e1();
  Json j = report::solve_json(FamilyId::vilhena3, {});
  CHECK(j["family"] == "vilhena3");
  auto roots = j["roots"];
  REQUIRE(roots.size() == 2);
  CHECK(roots[0]["lambda"].get<double>() == doctest::Approx(e1).epsilon(1e-9));
  CHECK(roots[0]["degenerate"].get<bool>());
  CHECK(roots[1]["lambda"].get<double>() == doctest::Approx(3 * e1).epsilon(1e-9));
  CHECK_FALSE(roots[1]["degenerate"].get<bool>());
  auto fitted = j["quadratic"]["monic_coefficients"];
  CHECK(fitted[0].get<double>() == 1.0);
  CHECK(fitted[1].get<double>() == doctest::Approx(-4 * e1).epsilon(1e-8));
  CHECK(fitted[2].get<double>() == doctest::Approx(3 * e1 * e1).epsilon(1e-8));
  // The admissible root is exposed as the solved lambda.
  CHECK(j["lambda"].get<double>() == doctest::Approx(3 * e1).epsilon(1e-9));
  CHECK(j["c"]["deviation"].get<double>() <= 1e-10);
  CHECK(j["period_residual"].get<double>() <= 1e-8);
  // The degenerate family solves without a lambda block.
  Json cg = report::solve_json(FamilyId::chen_gackstatter, {});
  CHECK(cg["lambda"].is_null());
  CHECK(!cg.contains("roots"));
}

TEST_CASE("degenerate root report") {
  Json j = report::degenerate_root_json(FamilyId::vilhena3, {});
  CHECK(j["coincides_with"] == "weber2");
  CHECK(j["max_form_deviation"].get<double>() <= 1e-8);
  CHECK(j["c_deviation"].get<double>() <= 1e-8);
  Json k = report::degenerate_root_json(FamilyId::weber2, {});
  CHECK(k["coincides_with"] == "chen-gackstatter");
  CHECK(k["max_form_deviation"].get<double>() <= 1e-8);
  CHECK_THROWS_AS(report::degenerate_root_json(FamilyId::chen_gackstatter, {}),
                  std::invalid_argument);
}

TEST_CASE("constants report") {
  Json j = report::constants_json(100);
  CHECK(j["e1"].get<double>() == ell::engine().e1());
  CHECK(std::abs(j["e1_oracle"].get<double>() - ell::engine().e1()) < 1e-8);
  CHECK(j["zeta_half"]["re"].get<double>() == doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK(j["g2_over_e1_sq"].get<double>() == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(std::abs(j["g4_oracle"].get<double>() - j["g4_reference"].get<double>()) < 1e-10);
}
