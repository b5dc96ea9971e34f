// Symmetry groups, their domain action, and the planar geodesic checks.

#include "rep/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "rep/immersion.hpp"

namespace wpmin::rep {

Mat3 Mat3::identity() {
  Mat3 r{};
  for (int i = 0; i < 3; ++i) r.m[i][i] = 1.0;
  return r;
}

Mat3 Mat3::operator*(const Mat3& o) const {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r.m[i][j] += m[i][k] * o.m[k][j];
  return r;
}

std::array<double, 3> Mat3::apply(const std::array<double, 3>& v) const {
  std::array<double, 3> r{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) r[i] += m[i][k] * v[k];
  return r;
}

double Mat3::maxdiff(const Mat3& o) const {
  double d = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d = std::max(d, std::abs(m[i][j] - o.m[i][j]));
  return d;
}

double Mat3::det() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 reflection_matrix() {
  Mat3 r = Mat3::identity();
  r.m[1][1] = -1.0;
  return r;
}

Mat3 rotation_matrix() {
  Mat3 r{};
  r.m[0][1] = -1.0;
  r.m[1][0] = 1.0;
  r.m[2][2] = -1.0;
  return r;
}

cplx apply_domain_symmetry(const SymmetryElement& s, cplx base, cplx z) {
  cplx u = z - base;
  if (s.refl) u = std::conj(u);
  for (int k = 0; k < s.rot; ++k) u *= cplx(0.0, 1.0);
  return base + u;
}

std::vector<SymmetryElement> symmetry_group(FamilyId id) {
  const Mat3 R = rotation_matrix();
  const Mat3 B = reflection_matrix();
  std::vector<SymmetryElement> out;
  auto push = [&](int rot, bool refl) {
    Mat3 A = refl ? B : Mat3::identity();
    for (int k = 0; k < rot; ++k) A = R * A;
    out.push_back({A, rot, refl});
  };
  if (id == FamilyId::weber2) {
    // Only the reflection survives: the quarter turn permutes the puncture
    // set of the two-ended family into a different one.
    push(0, false);
    push(0, true);
    return out;
  }
  for (int rot = 0; rot < 4; ++rot) push(rot, false);
  for (int rot = 0; rot < 4; ++rot) push(rot, true);
  return out;
}

double symmetry_deviation(const Family& fam, int samples, std::uint64_t seed) {
  auto group = symmetry_group(fam.id);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  double worst = 0.0;
  int accepted = 0;
  while (accepted < samples) {
    cplx z(uni(rng), uni(rng));
    if (fam.puncture_distance(z) < 0.05) continue;
    ++accepted;
    auto x = immersion_closed(fam, z).x;
    for (const auto& s : group) {
      cplx zi = apply_domain_symmetry(s, fam.base_point, z);
      auto xi = immersion_closed(fam, zi).x;
      auto ref = s.matrix.apply(x);
      for (int j = 0; j < 3; ++j)
        worst = std::max(worst, std::abs(xi[j] - ref[j]));
    }
  }
  return worst;
}

std::vector<Geodesic> planar_geodesics(FamilyId id) {
  if (id != FamilyId::vilhena3) return {};
  using K = Geodesic::Kind;
  return {
      {"real_axis_left", cplx(0, 0), cplx(1, 0), 0.0, 0.5, K::plane_x2},
      {"real_axis_right", cplx(0, 0), cplx(1, 0), 0.5, 1.0, K::plane_x2},
      {"horizontal_mid", cplx(0, 0.5), cplx(1, 0), 0.0, 1.0, K::plane_x2},
      {"imag_axis_low", cplx(0, 0), cplx(0, 1), 0.0, 0.5, K::plane_x1},
      {"imag_axis_high", cplx(0, 0), cplx(0, 1), 0.5, 1.0, K::plane_x1},
      {"vertical_mid", cplx(0.5, 0), cplx(0, 1), 0.0, 1.0, K::plane_x1},
      {"antidiagonal", cplx(0, 1), cplx(1, -1), 0.0, 1.0, K::line_sum},
      {"diagonal", cplx(0, 0), cplx(1, 1), 0.0, 1.0, K::line_diff},
  };
}

double geodesic_deviation(const Family& fam, const Geodesic& g, int samples) {
  double worst = 0.0;
  int used = 0;
  for (int k = 1; used < samples && k <= 8 * samples; ++k) {
    double u = g.u0 + (g.u1 - g.u0) * k / (8.0 * samples + 1.0);
    cplx z = g.start + u * g.dir;
    if (fam.puncture_distance(z) < 0.05) continue;
    ++used;
    auto x = immersion_closed(fam, z).x;
    switch (g.kind) {
      case Geodesic::Kind::plane_x2: worst = std::max(worst, std::abs(x[1])); break;
      case Geodesic::Kind::plane_x1: worst = std::max(worst, std::abs(x[0])); break;
      case Geodesic::Kind::line_sum:
        worst = std::max({worst, std::abs(x[2]), std::abs(x[0] + x[1])});
        break;
      case Geodesic::Kind::line_diff:
        worst = std::max({worst, std::abs(x[2]), std::abs(x[0] - x[1])});
        break;
    }
  }
  if (used < samples)
    throw std::runtime_error("geodesic_deviation: not enough usable samples");
  return worst;
}

double max_geodesic_deviation(const Family& fam, int samples) {
  double worst = 0.0;
  for (const auto& g : planar_geodesics(fam.id))
    worst = std::max(worst, geodesic_deviation(fam, g, samples));
  return worst;
}

} // namespace wpmin::rep
