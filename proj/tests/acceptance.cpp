// Acceptance gate: one binary, one pass/fail line per criterion, nonzero
// exit if anything fails.  Each criterion re-derives its expected values
// from first principles (pi, e1, end counts) and enforces its runtime
// budget as part of the verdict.

#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "core/elliptic.hpp"
#include "mesh/export.hpp"
#include "mesh/mesh.hpp"
#include "rep/family.hpp"
#include "rep/identities.hpp"
#include "rep/immersion.hpp"
#include "rep/invariants.hpp"
#include "rep/periods.hpp"
#include "rep/symmetry.hpp"

using namespace wpmin;
using rep::cplx;
using rep::FamilyId;

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kSeed = 20250815;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// Random points of [0,1)^2 at least min_dist from every puncture translate.
std::vector<cplx> sample_points(const rep::Family& fam, int count,
                                double min_dist, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<cplx> out;
  while (static_cast<int>(out.size()) < count) {
    cplx z(uni(gen), uni(gen));
    if (fam.puncture_distance(z) >= min_dist) out.push_back(z);
  }
  return out;
}

// --- 1: zeta at the half periods ------------------------------------------

Outcome criterion_legendre() {
  Outcome o;
  const auto& W = ell::engine();
  auto check = [&](cplx z, cplx expect, const char* name) {
    double dev = std::abs(W.zeta(z) - expect);
    o.require(dev <= 1e-10, std::string(name) + " deviation " + fmt(dev));
  };
  check(cplx(0.5, 0.0), cplx(kPi / 2, 0.0), "zeta(1/2)");
  check(cplx(0.0, 0.5), cplx(0.0, -kPi / 2), "zeta(i/2)");
  check(cplx(0.5, 0.5), cplx(kPi / 2, -kPi / 2), "zeta((1+i)/2)");
  return o;
}

// --- 2: cycle integrals of wp, plain and shifted ---------------------------

Outcome criterion_cycles() {
  Outcome o;
  auto fam = rep::make_family(FamilyId::vilhena3);
  for (auto form : {rep::CycleForm::wp, rep::CycleForm::wp_shift_half,
                    rep::CycleForm::wp_shift_ihalf}) {
    cplx a = rep::cycle_integral(fam, form, rep::Cycle::alpha);
    cplx b = rep::cycle_integral(fam, form, rep::Cycle::beta);
    std::string n = rep::cycle_form_name(form);
    o.require(std::abs(a - cplx(-kPi, 0.0)) <= 1e-9,
              n + " alpha deviation " + fmt(std::abs(a + kPi)));
    o.require(std::abs(b - cplx(0.0, kPi)) <= 1e-9,
              n + " beta deviation " + fmt(std::abs(b - cplx(0.0, kPi))));
  }
  return o;
}

// --- 3 and 4: the period problem -------------------------------------------

Outcome criterion_period_solution(FamilyId id, double c_denom) {
  Outcome o;
  const double e1 = ell::engine().e1();

  auto sol = rep::solve_lambda(id);
  o.require(std::abs(sol.roots[0] - e1) / e1 <= 1e-9,
            "root e1 off by " + fmt(std::abs(sol.roots[0] - e1) / e1));
  o.require(std::abs(sol.roots[1] - 3.0 * e1) / (3.0 * e1) <= 1e-9,
            "root 3e1 off by " +
                fmt(std::abs(sol.roots[1] - 3.0 * e1) / (3.0 * e1)));
  // The fitted quadratic is monic, so proportionality to
  // lambda^2 - 4 e1 lambda + 3 e1^2 is agreement coefficient by coefficient.
  o.require(std::abs(sol.quad_coeffs[0] - 1.0) <= 1e-12, "quadratic not monic");
  o.require(std::abs(sol.quad_coeffs[1] + 4.0 * e1) / (4.0 * e1) <= 1e-8,
            "linear coefficient off by " +
                fmt(std::abs(sol.quad_coeffs[1] + 4.0 * e1) / (4.0 * e1)));
  o.require(std::abs(sol.quad_coeffs[2] - 3.0 * e1 * e1) / (3.0 * e1 * e1) <= 1e-8,
            "constant coefficient off by " +
                fmt(std::abs(sol.quad_coeffs[2] - 3.0 * e1 * e1) /
                    (3.0 * e1 * e1)));
  o.require(sol.fit_residual <= 1e-8, "quadratic fit residual " +
                                          fmt(sol.fit_residual));

  auto cs = rep::solve_c(id, sol.roots[1]);
  double c_expect = std::sqrt(6.0 * kPi / c_denom) / e1;
  o.require(std::abs(cs.c - c_expect) / c_expect <= 1e-10,
            "scale c off by " + fmt(std::abs(cs.c - c_expect) / c_expect));

  double residual = rep::period_residual(rep::make_family(id));
  o.require(residual <= 1e-8, "period residual " + fmt(residual));
  return o;
}

// --- 5: puncture residues ---------------------------------------------------

Outcome criterion_residues() {
  Outcome o;
  const double e1 = ell::engine().e1();
  for (auto id : {FamilyId::vilhena3, FamilyId::weber2}) {
    auto fam = rep::make_family(id);
    double phi12_max = 0.0;
    cplx phi3_sum = 0.0;
    for (const auto& r : rep::residues(fam)) {
      std::string key = std::string(r.form) + " at " + r.puncture;
      if (std::string(r.form) != "phi3") {
        phi12_max = std::max(phi12_max, std::abs(r.value));
        continue;
      }
      phi3_sum += r.value;
      double expect = 0.0;
      if (id == FamilyId::vilhena3) {
        if (std::string(r.puncture) == "1/2") expect = -4.0 * fam.c * e1;
        if (std::string(r.puncture) == "i/2") expect = 4.0 * fam.c * e1;
      } else {
        if (std::string(r.puncture) == "1/2") expect = -2.0 * fam.c * e1;
        if (std::string(r.puncture) == "0") expect = 2.0 * fam.c * e1;
      }
      double dev = std::abs(r.value - cplx(expect, 0.0));
      o.require(dev <= 1e-8, key + " deviation " + fmt(dev));
    }
    o.require(phi12_max <= 1e-8,
              rep::family_name(id) + " phi1/phi2 residues " + fmt(phi12_max));
    o.require(std::abs(phi3_sum) <= 1e-8,
              rep::family_name(id) + " phi3 residue sum " +
                  fmt(std::abs(phi3_sum)));
  }
  return o;
}

// --- 6: the identity suite --------------------------------------------------

Outcome criterion_identities() {
  Outcome o;
  const int points = 60; // at least 50 random points per identity

  auto diff = rep::differential_checks(points, kSeed);
  for (const auto& chk : diff)
    o.require(chk.pass && chk.max_residual <= 1e-9,
              chk.id + " residual " + fmt(chk.max_residual));

  auto frac = rep::fraction_identity_checks(points, kSeed);
  o.require(frac.size() == 7, "expected seven fraction identities, got " +
                                  std::to_string(frac.size()));
  for (const auto& chk : frac)
    o.require(chk.pass, chk.id + " residual " + fmt(chk.max_residual));

  auto anti = rep::antiderivative_checks(points, kSeed);
  o.require(!anti.empty(), "no antiderivative checks ran");
  for (const auto& chk : anti)
    o.require(chk.pass, chk.id + " residual " + fmt(chk.max_residual));
  return o;
}

// --- 7: gauss map degrees ---------------------------------------------------

Outcome criterion_degrees() {
  Outcome o;
  const std::array<std::pair<FamilyId, int>, 3> expected = {{
      {FamilyId::vilhena3, 4},
      {FamilyId::weber2, 3},
      {FamilyId::chen_gackstatter, 2},
  }};
  for (auto [id, want] : expected) {
    try {
      int got = rep::gauss_map_degree(rep::make_family(id), kSeed, 5);
      o.require(got == want, rep::family_name(id) + " degree " +
                                 std::to_string(got) + ", expected " +
                                 std::to_string(want));
    } catch (const std::exception& e) {
      o.require(false, rep::family_name(id) + ": " + e.what());
    }
  }
  return o;
}

// --- 8: total curvature accounting ------------------------------------------

Outcome criterion_curvature() {
  Outcome o;
  auto fam = rep::make_family(FamilyId::vilhena3);
  const double jm = rep::jorge_meeks_total(fam);
  o.require(jm == 2.0 * kPi * (2 - 2 - 3 - 5),
            "end-count total != 2 pi (2 - 2 - 3 - 5)");
  o.require(jm == -16.0 * kPi, "end-count total != -16 pi");

  mesh::SamplingPlan fine;
  fine.resolution = 400;
  fine.puncture_cutoff = 0.02;
  auto fine_mesh = mesh::build_mesh(fam, fine);
  double dev_fine = std::abs(fine_mesh.total_curvature_grid - jm) / std::abs(jm);
  o.require(dev_fine <= 0.02,
            "resolution 400 integral off by " + fmt(dev_fine));

  mesh::SamplingPlan coarse; // default resolution 200 / cutoff 0.04
  auto coarse_mesh = mesh::build_mesh(fam, coarse);
  double dev_coarse =
      std::abs(coarse_mesh.total_curvature_grid - jm) / std::abs(jm);
  o.require(dev_coarse <= 0.05,
            "resolution 200 integral off by " + fmt(dev_coarse));
  return o;
}

// --- 9: closed form against the numeric integral -----------------------------

Outcome criterion_immersion() {
  Outcome o;
  for (auto id : {FamilyId::vilhena3, FamilyId::weber2}) {
    auto fam = rep::make_family(id);

    auto base = rep::immersion_closed(fam, fam.base_point);
    double at_base = std::max({std::abs(base.x[0]), std::abs(base.x[1]),
                               std::abs(base.x[2])});
    o.require(at_base <= 1e-9,
              rep::family_name(id) + " base point image " + fmt(at_base));

    double worst = 0.0;
    for (cplx z : sample_points(fam, 20, 0.08, kSeed)) {
      auto closed = rep::immersion_closed(fam, z);
      auto numeric = rep::immersion_numeric(fam, z);
      for (int k = 0; k < 3; ++k)
        worst = std::max(worst, std::abs(closed.x[k] - numeric[k]));
    }
    o.require(worst <= 1e-6, rep::family_name(id) +
                                 " closed vs numeric worst coordinate gap " +
                                 fmt(worst));
  }
  return o;
}

// --- 10: symmetry group and planar geodesics ---------------------------------

Outcome criterion_symmetry() {
  Outcome o;
  auto fam = rep::make_family(FamilyId::vilhena3);

  double dev = rep::symmetry_deviation(fam, 50, kSeed);
  o.require(dev <= 1e-7, "symmetry relation deviation " + fmt(dev));

  auto group = rep::symmetry_group(FamilyId::vilhena3);
  o.require(group.size() == 8, "group has " + std::to_string(group.size()) +
                                   " elements, expected 8");

  auto geos = rep::planar_geodesics(FamilyId::vilhena3);
  o.require(geos.size() == 8, "expected eight planar geodesics, got " +
                                  std::to_string(geos.size()));
  double geo_dev = rep::max_geodesic_deviation(fam, 32);
  o.require(geo_dev <= 1e-7, "planar geodesic deviation " + fmt(geo_dev));
  return o;
}

// --- 11: mesh export parsing and determinism ---------------------------------

bool parse_obj(const std::string& text, size_t& vertices, size_t& faces,
               std::string& err) {
  vertices = faces = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("v ", 0) == 0) {
      ++vertices;
    } else if (line.rfind("f ", 0) == 0) {
      long a = 0, b = 0, c = 0;
      if (std::sscanf(line.c_str(), "f %ld %ld %ld", &a, &b, &c) != 3) {
        err = "unparsable face line: " + line;
        return false;
      }
      for (long idx : {a, b, c}) {
        if (idx < 1 || idx > static_cast<long>(vertices)) {
          err = "face index " + std::to_string(idx) + " out of range";
          return false;
        }
      }
      ++faces;
    }
  }
  return true;
}

bool parse_ply(const std::string& text, size_t& vertices, size_t& faces,
               std::string& err) {
  vertices = faces = 0;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "ply") {
    err = "missing ply magic";
    return false;
  }
  size_t want_v = 0, want_f = 0;
  while (std::getline(in, line) && line != "end_header") {
    unsigned long n = 0;
    if (std::sscanf(line.c_str(), "element vertex %lu", &n) == 1) want_v = n;
    if (std::sscanf(line.c_str(), "element face %lu", &n) == 1) want_f = n;
  }
  for (size_t i = 0; i < want_v; ++i) {
    if (!std::getline(in, line)) {
      err = "truncated vertex block";
      return false;
    }
    ++vertices;
  }
  for (size_t i = 0; i < want_f; ++i) {
    long cnt = 0, a = 0, b = 0, c = 0;
    if (!std::getline(in, line) ||
        std::sscanf(line.c_str(), "%ld %ld %ld %ld", &cnt, &a, &b, &c) != 4 ||
        cnt != 3) {
      err = "bad face row " + std::to_string(i);
      return false;
    }
    for (long idx : {a, b, c}) {
      if (idx < 0 || idx >= static_cast<long>(want_v)) {
        err = "face index " + std::to_string(idx) + " out of range";
        return false;
      }
    }
    ++faces;
  }
  return true;
}

Outcome criterion_exports() {
  Outcome o;
  auto fam = rep::make_family(FamilyId::vilhena3);
  mesh::SamplingPlan plan; // resolution 200

  auto render = [&](const std::string& format) {
    auto m = mesh::build_mesh(fam, plan);
    std::ostringstream os;
    if (format == "obj")
      mesh::write_obj(m, os);
    else
      mesh::write_ply(m, os);
    return std::pair{os.str(), m};
  };

  for (const std::string format : {"obj", "ply"}) {
    auto [first, m] = render(format);
    auto [second, m2] = render(format);
    o.require(first == second, format + " bytes differ across runs");

    size_t v = 0, f = 0;
    std::string err;
    bool ok = (format == "obj") ? parse_obj(first, v, f, err)
                                : parse_ply(first, v, f, err);
    o.require(ok, format + ": " + err);
    o.require(v == m.vertices.size() && f == m.faces.size(),
              format + " counts disagree with the mesh");
  }
  return o;
}

} // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> run;
  };

  const std::vector<Criterion> criteria = {
      {1, "zeta values at the half periods", 1.0, criterion_legendre},
      {2, "wp cycle integrals, plain and shifted", 5.0, criterion_cycles},
      {3, "three-end period solution", 30.0,
       [] { return criterion_period_solution(FamilyId::vilhena3, 73.0); }},
      {4, "two-end period solution", 30.0,
       [] { return criterion_period_solution(FamilyId::weber2, 7.0); }},
      {5, "puncture residues", 10.0, criterion_residues},
      {6, "identity suite", 10.0, criterion_identities},
      {7, "gauss map degrees", 60.0, criterion_degrees},
      {8, "total curvature accounting", 300.0, criterion_curvature},
      {9, "closed form vs numeric immersion", 30.0, criterion_immersion},
      {10, "symmetry group and planar geodesics", 30.0, criterion_symmetry},
      {11, "mesh export parsing and determinism", 30.0, criterion_exports},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (seconds > c.limit_seconds) {
      o.pass = false;
      if (!o.detail.empty()) o.detail += "; ";
      o.detail += "time limit exceeded";
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %2d: %s (%.2fs, limit %.0fs)%s%s\n",
                o.pass ? "PASS" : "FAIL", c.number, c.title, seconds,
                c.limit_seconds, o.detail.empty() ? "" : " ",
                o.detail.c_str());
  }

  if (failed == 0) {
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    return 0;
  }
  std::printf("acceptance: %d of %zu criteria failed\n", failed,
              criteria.size());
  return 1;
}
