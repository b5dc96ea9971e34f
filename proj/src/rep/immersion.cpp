// Closed-form immersion coordinates and the path-integral cross-check.

#include "rep/immersion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace wpmin::rep {

using ell::engine;

namespace {

constexpr cplx kI{0.0, 1.0};
const double kPi = std::numbers::pi;

// Horizontal part shared by x1 and x2: both are Re of -zeta(z) -+ (c^2/4) B(z)
// for a family-specific combination B built from wp', shifted zetas and a
// linear term.
cplx horizontal_core(const Family& fam, cplx z) {
  const auto& W = engine();
  const double e1 = W.e1();
  cplx pp = W.wp_prime(z);
  switch (fam.id) {
    case FamilyId::vilhena3:
      return pp / 6.0 + 16.0 * e1 * W.zeta(z - cplx(0.0, 0.5)) -
             16.0 * e1 * W.zeta(z - cplx(0.5, 0.0)) -
             (146.0 / 3.0) * e1 * e1 * z;
    case FamilyId::weber2:
      return pp / 6.0 - (14.0 / 3.0) * e1 * e1 * z + 4.0 * e1 * W.zeta(z) -
             4.0 * e1 * W.zeta(z - cplx(0.5, 0.0));
    default:
      return pp / 6.0 - (2.0 / 3.0) * e1 * e1 * z;
  }
}

// x3 before the additive constant.
double height_core(const Family& fam, cplx z) {
  const auto& W = engine();
  const double e1 = W.e1();
  cplx p = W.wp(z);
  double base = (0.5 * fam.c * p).real();
  switch (fam.id) {
    case FamilyId::vilhena3:
      return base + 2.0 * fam.c * e1 * std::log(std::abs((p + e1) / (p - e1)));
    case FamilyId::weber2:
      return base - fam.c * e1 * std::log(std::abs(p - e1));
    default:
      return base;
  }
}

} // namespace

std::array<double, 3> immersion_constants(const Family& fam) {
  const double e1 = engine().e1();
  switch (fam.id) {
    case FamilyId::vilhena3: {
      double h = 12.0 * kPi * kPi / (73.0 * e1);
      return {h, h, 0.0};
    }
    case FamilyId::weber2:
      return {3.0 * kPi * kPi / (7.0 * e1), 0.0, fam.c * e1 * std::log(e1)};
    default:
      return {0.0, 0.0, 0.0};
  }
}

std::array<double, 3> immersion_constants_recomputed(const Family& fam) {
  cplx w2 = fam.base_point;
  const auto& W = engine();
  cplx zt = W.zeta(w2);
  cplx B = horizontal_core(fam, w2);
  double q = 0.25 * fam.c * fam.c;
  return {-(-zt - q * B).real(), -(-kI * zt + kI * q * B).real(),
          -height_core(fam, w2)};
}

ImmersionPoint immersion_closed(const Family& fam, cplx z) {
  const auto& W = engine();
  cplx zt = W.zeta(z);
  cplx B = horizontal_core(fam, z);
  double q = 0.25 * fam.c * fam.c;
  auto k = immersion_constants(fam);

  ImmersionPoint pt;
  pt.z = z;
  pt.x[0] = (-zt - q * B).real() + k[0];
  pt.x[1] = (-kI * zt + kI * q * B).real() + k[1];
  pt.x[2] = height_core(fam, z) + k[2];
  pt.gauss = fam.gauss(z);
  pt.conformal = fam.conformal_factor(z);
  pt.curvature = fam.curvature(z);
  return pt;
}

namespace {

double segment_puncture_distance(const Family& fam, cplx a, cplx b) {
  // Minimum distance from the segment [a, b] to any puncture translate.
  // Legs live in roughly [0,1]^2, so a few rings of translates suffice.
  double best = std::numeric_limits<double>::infinity();
  cplx d = b - a;
  double dd = std::norm(d);
  for (const auto& q : fam.punctures) {
    for (int m = -2; m <= 3; ++m) {
      for (int n = -2; n <= 3; ++n) {
        cplx p = q.p + cplx(m, n);
        double t = dd == 0.0 ? 0.0
                             : std::clamp(((p - a) * std::conj(d)).real() / dd, 0.0, 1.0);
        best = std::min(best, std::abs(a + t * d - p));
      }
    }
  }
  return best;
}

void extend_path(const Family& fam, cplx a, cplx b, double clearance, int depth,
                 std::vector<cplx>& out) {
  if (depth < 8 && segment_puncture_distance(fam, a, b) < clearance) {
    cplx mid = 0.5 * (a + b) + cplx(0.013, 0.017);
    extend_path(fam, a, mid, clearance, depth + 1, out);
    extend_path(fam, mid, b, clearance, depth + 1, out);
    return;
  }
  out.push_back(b);
}

} // namespace

std::vector<cplx> integration_path(const Family& fam, cplx from, cplx to,
                                   double clearance) {
  cplx corner(to.real(), from.imag());
  std::vector<cplx> path{from};
  extend_path(fam, from, corner, clearance, 0, path);
  extend_path(fam, corner, to, clearance, 0, path);
  return path;
}

std::array<double, 3> immersion_numeric(const Family& fam, cplx z,
                                        double clearance,
                                        const quad::Options& opt) {
  if (fam.puncture_distance(z) < 1e-6)
    throw std::invalid_argument("immersion_numeric: target is at a puncture");
  auto path = integration_path(fam, fam.base_point, z, clearance);
  std::array<double, 3> x{};
  for (int j = 0; j < 3; ++j) {
    auto f = [&](cplx w) {
      FormSample s = fam.phi_stable(w);
      return j == 0 ? s.phi1 : j == 1 ? s.phi2 : s.phi3;
    };
    x[j] = quad::integrate_polyline(f, path, opt).real();
  }
  return x;
}

} // namespace wpmin::rep
