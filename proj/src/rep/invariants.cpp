// Degree counting and curvature integrals.

#include "rep/invariants.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "core/kahan.hpp"
#include "core/parallel.hpp"
#include "core/quadrature.hpp"

namespace wpmin::rep {

namespace {

const double kPi = std::numbers::pi;

// Poles of g per family, as representatives in [0,1)^2.  These are known
// exactly (lattice point and wp' zeros), so the argument principle only has
// to count zeros of g - w0 through boundary windings.
std::vector<cplx> gauss_poles(const Family& fam) {
  switch (fam.id) {
    case FamilyId::vilhena3:
      return {cplx(0, 0), cplx(0.5, 0), cplx(0, 0.5), cplx(0.5, 0.5)};
    case FamilyId::weber2:
      return {cplx(0, 0), cplx(0.5, 0), cplx(0.5, 0.5)};
    default:
      return {cplx(0, 0), cplx(0.5, 0.5)};
  }
}

// Counts preimages of w0 in one fundamental cell, tiled as an 8x8 grid of
// subcells offset so that no pole of g sits on a subcell edge.
int count_preimages(const Family& fam, cplx w0) {
  const int cells = 8;
  const double ox = 0.01237, oy = 0.00941;
  auto poles = gauss_poles(fam);

  int zeros = 0;
  int winding_sum = 0;
  for (int i = 0; i < cells; ++i) {
    for (int j = 0; j < cells; ++j) {
      double x0 = ox + double(i) / cells, x1 = ox + double(i + 1) / cells;
      double y0 = oy + double(j) / cells, y1 = oy + double(j + 1) / cells;
      cplx c00(x0, y0), c10(x1, y0), c11(x1, y1), c01(x0, y1);
      auto boundary = [&](double t) -> cplx {
        double s = 4.0 * t;
        cplx z;
        if (s < 1.0) z = c00 + s * (c10 - c00);
        else if (s < 2.0) z = c10 + (s - 1.0) * (c11 - c10);
        else if (s < 3.0) z = c11 + (s - 2.0) * (c01 - c11);
        else z = c01 + (s - 3.0) * (c00 - c01);
        return fam.gauss(z) - w0;
      };
      int w = quad::winding_number(boundary, cplx(0.0, 0.0), 192);
      winding_sum += w;

      int pole_count = 0;
      for (cplx p : poles)
        for (int m = 0; m <= 1; ++m)
          for (int n = 0; n <= 1; ++n) {
            double px = p.real() + m, py = p.imag() + n;
            if (px >= x0 && px < x1 && py >= y0 && py < y1) ++pole_count;
          }
      zeros += w + pole_count;
    }
  }
  // Interior edges cancel and the outer ones match by periodicity, so the
  // windings alone must sum to zero; a nonzero sum means a missed jump.
  if (winding_sum != 0)
    throw std::runtime_error("count_preimages: windings do not cancel");
  return zeros;
}

} // namespace

int gauss_map_degree(const Family& fam, std::uint64_t seed, int targets) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mag(0.4, 1.8);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);

  int degree = -1;
  for (int k = 0; k < targets; ++k) {
    int count = -1;
    for (int attempt = 0; attempt < 20; ++attempt) {
      double r = mag(rng), t = ang(rng);
      cplx w0 = r * cplx(std::cos(t), std::sin(t));
      try {
        count = count_preimages(fam, w0);
        break;
      } catch (const std::runtime_error&) {
        // target too close to the image of a subcell edge; redraw
      }
    }
    if (count < 0)
      throw std::runtime_error("gauss_map_degree: no usable target after retries");
    if (degree < 0) degree = count;
    else if (degree != count)
      throw std::runtime_error("gauss_map_degree: targets disagree");
  }
  return degree;
}

double total_curvature(const Family& fam, int resolution) {
  const int R = resolution;
  std::vector<double> row_sums(R, 0.0);
  parallel_chunks(R, [&](int begin, int end, int) {
    for (int i = begin; i < end; ++i) {
      ell::Kahan<double> acc;
      for (int j = 0; j < R; ++j) {
        double sd = fam.spherical_deriv(cplx(double(i) / R, double(j) / R));
        acc.add(sd * sd);
      }
      row_sums[i] = acc.value();
    }
  });
  ell::Kahan<double> total;
  for (double v : row_sums) total.add(v);
  return -4.0 * total.value() / (double(R) * R);
}

double total_curvature_truncated(const Family& fam, int resolution, double cutoff) {
  const int R = resolution;
  std::vector<double> row_sums(R, 0.0);
  parallel_chunks(R, [&](int begin, int end, int) {
    for (int i = begin; i < end; ++i) {
      ell::Kahan<double> acc;
      for (int j = 0; j < R; ++j) {
        cplx z(double(i) / R, double(j) / R);
        if (fam.puncture_distance(z) < cutoff) continue;
        double sd = fam.spherical_deriv(z);
        acc.add(sd * sd);
      }
      row_sums[i] = acc.value();
    }
  });
  ell::Kahan<double> total;
  for (double v : row_sums) total.add(v);
  return -4.0 * total.value() / (double(R) * R);
}

double jorge_meeks_total(const Family& fam) {
  int orders = 0;
  for (const auto& p : fam.punctures) orders += p.end_order;
  int ends = static_cast<int>(fam.punctures.size());
  return 2.0 * kPi * (2 - 2 * fam.genus - ends - orders);
}

double degree_total(const Family& fam) { return -4.0 * kPi * fam.gauss_degree; }

} // namespace wpmin::rep
