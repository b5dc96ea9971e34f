// Invariant tests: Gauss map degrees by the argument principle, total
// curvature sums, and the end-count accounting they must both match.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rep/invariants.hpp"

using namespace wpmin;
using rep::FamilyId;
constexpr double kPi = std::numbers::pi;

TEST_CASE("gauss map degrees") {
  CHECK(rep::gauss_map_degree(rep::make_family(FamilyId::vilhena3)) == 4);
  CHECK(rep::gauss_map_degree(rep::make_family(FamilyId::weber2)) == 3);
  CHECK(rep::gauss_map_degree(rep::make_family(FamilyId::chen_gackstatter)) == 2);
  // A different seed picks different targets and must agree.
  CHECK(rep::gauss_map_degree(rep::make_family(FamilyId::vilhena3), 424242, 5) == 4);
}

TEST_CASE("end accounting equals the degree count") {
  struct Row {
    FamilyId id;
    double total; // 2 pi (2 - 2 genus - ends - sum of end orders)
  };
  for (auto row : {Row{FamilyId::vilhena3, -16.0 * kPi},
                   Row{FamilyId::weber2, -12.0 * kPi},
                   Row{FamilyId::chen_gackstatter, -8.0 * kPi}}) {
    auto fam = rep::make_family(row.id);
    CHECK(rep::jorge_meeks_total(fam) == doctest::Approx(row.total).epsilon(1e-14));
    CHECK(rep::degree_total(fam) == doctest::Approx(row.total).epsilon(1e-14));
  }
}

TEST_CASE("grid curvature sums converge spectrally") {
  for (auto id : {FamilyId::vilhena3, FamilyId::weber2, FamilyId::chen_gackstatter}) {
    auto fam = rep::make_family(id);
    double target = rep::jorge_meeks_total(fam);
    double err100 = std::abs(rep::total_curvature(fam, 100) - target);
    double err200 = std::abs(rep::total_curvature(fam, 200) - target);
    CHECK(err200 <= 1e-8);
    // Doubling the grid cannot make things worse beyond the noise floor.
    CHECK(err200 <= err100 + 1e-10);
  }
}

TEST_CASE("truncation removes curvature mass") {
  auto fam = rep::make_family(FamilyId::vilhena3);
  double full = rep::total_curvature(fam, 200);
  double trunc = rep::total_curvature_truncated(fam, 200, 0.04);
  CHECK(trunc < 0.0);
  CHECK(std::abs(trunc) < std::abs(full));
  // A larger cutoff removes more.
  double wider = rep::total_curvature_truncated(fam, 200, 0.08);
  CHECK(std::abs(wider) < std::abs(trunc));
}
