// Period problem: cycle integrals, the lambda quadratic, the scale c,
// and puncture residues.

#include "rep/periods.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wpmin::rep {

using ell::engine;
using ell::HalfPeriod;

namespace {
const double kPi = std::numbers::pi;
} // namespace

const char* cycle_name(Cycle c) { return c == Cycle::alpha ? "alpha" : "beta"; }

cplx cycle_start(Cycle c) {
  return c == Cycle::alpha ? cplx(0.0, 1.0 / 3.0) : cplx(1.0 / 3.0, 0.0);
}

cplx cycle_end(Cycle c) {
  return cycle_start(c) + (c == Cycle::alpha ? cplx(1.0, 0.0) : cplx(0.0, 1.0));
}

const char* cycle_form_name(CycleForm f) {
  switch (f) {
    case CycleForm::phi1: return "phi1";
    case CycleForm::phi2: return "phi2";
    case CycleForm::phi3: return "phi3";
    case CycleForm::wp: return "wp";
    case CycleForm::wp_shift_half: return "wp_shift_half";
    default: return "wp_shift_ihalf";
  }
}

cplx cycle_integral(const Family& fam, CycleForm form, Cycle cycle,
                    const quad::Options& opt) {
  const auto& W = engine();
  auto f = [&](cplx z) -> cplx {
    switch (form) {
      case CycleForm::phi1: return fam.phi_stable(z).phi1;
      case CycleForm::phi2: return fam.phi_stable(z).phi2;
      case CycleForm::phi3: return fam.phi_stable(z).phi3;
      case CycleForm::wp: return W.wp(z);
      case CycleForm::wp_shift_half: return W.wp(z - cplx(0.5, 0.0));
      default: return W.wp(z - cplx(0.0, 0.5));
    }
  };
  return quad::integrate_segment(f, cycle_start(cycle), cycle_end(cycle), opt);
}

std::vector<CycleEntry> cycle_matrix(const Family& fam, const quad::Options& opt) {
  std::vector<CycleEntry> out;
  for (CycleForm form : {CycleForm::phi1, CycleForm::phi2, CycleForm::phi3,
                         CycleForm::wp, CycleForm::wp_shift_half,
                         CycleForm::wp_shift_ihalf})
    for (Cycle cyc : {Cycle::alpha, Cycle::beta})
      out.push_back({form, cyc, cycle_integral(fam, form, cyc, opt)});
  return out;
}

double period_residual(const Family& fam, const quad::Options& opt) {
  double worst = 0.0;
  for (CycleForm form : {CycleForm::phi1, CycleForm::phi2, CycleForm::phi3})
    for (Cycle cyc : {Cycle::alpha, Cycle::beta})
      worst = std::max(worst, std::abs(cycle_integral(fam, form, cyc, opt).real()));
  return worst;
}

namespace {

// The balance function whose root in lambda closes the periods: the
// difference of the two real cycle integrals that must both vanish.  Taken
// at c = 1 so the c^2 prefactor drops out of the root location.
double lambda_balance(FamilyId id, double lambda, const quad::Options& opt) {
  Family probe = make_family(id, lambda, 1.0);
  cplx a = cycle_integral(probe, CycleForm::phi1, Cycle::alpha, opt);
  cplx b = cycle_integral(probe, CycleForm::phi2, Cycle::beta, opt);
  return a.real() - b.real();
}

} // namespace

LambdaSolution solve_lambda(FamilyId id, const quad::Options& opt) {
  if (id == FamilyId::chen_gackstatter)
    throw std::invalid_argument("solve_lambda: family has no free parameter");
  const double e1 = engine().e1();
  const double x0 = 0.0, x1 = 2.0 * e1, x2 = 4.0 * e1;
  double y0 = lambda_balance(id, x0, opt);
  double y1 = lambda_balance(id, x1, opt);
  double y2 = lambda_balance(id, x2, opt);

  // Exact quadratic through three equally spaced samples, via divided
  // differences, then normalized monic.
  double d1 = (y1 - y0) / (x1 - x0);
  double d2 = ((y2 - y1) / (x2 - x1) - d1) / (x2 - x0);
  double c2 = d2;
  double c1 = d1 - d2 * (x0 + x1);
  double c0 = y0 - d1 * x0 + d2 * x0 * x1;
  if (c2 == 0.0) throw std::runtime_error("solve_lambda: balance is not quadratic");

  LambdaSolution s;
  s.quad_coeffs[0] = 1.0;
  s.quad_coeffs[1] = c1 / c2;
  s.quad_coeffs[2] = c0 / c2;

  // Fourth sample validates that the balance really is a quadratic.
  double x3 = 5.0 * e1;
  double y3 = lambda_balance(id, x3, opt);
  double pred = c2 * x3 * x3 + c1 * x3 + c0;
  s.fit_residual = std::abs(y3 - pred) / std::max(1.0, std::abs(y3));

  double disc = s.quad_coeffs[1] * s.quad_coeffs[1] - 4.0 * s.quad_coeffs[2];
  if (disc < 0.0) throw std::runtime_error("solve_lambda: no real roots");
  double sq = std::sqrt(disc);
  double r0 = 0.5 * (-s.quad_coeffs[1] - sq);
  double r1 = 0.5 * (-s.quad_coeffs[1] + sq);
  s.roots[0] = r0;
  s.roots[1] = r1;
  // lambda = e1 collapses the family: the Gauss map picks up a common
  // factor and the data coincides with the next family down the ladder.
  for (int i = 0; i < 2; ++i)
    s.degenerate[i] = std::abs(s.roots[i] - e1) < 1e-6 * e1;
  return s;
}

ScaleSolution solve_c(FamilyId id, double lambda, const quad::Options& opt) {
  const double e1 = engine().e1();
  Family probe = make_family(id, lambda, 1.0);
  auto f = [&](cplx z) { return probe.g_squared_wp(z); };
  cplx k = quad::integrate_segment(f, cycle_start(Cycle::alpha), cycle_end(Cycle::alpha), opt);
  if (std::abs(k.imag()) > 1e-8)
    throw std::runtime_error("solve_c: alpha integral unexpectedly complex");
  double c2 = -kPi / k.real();
  if (!(c2 > 0.0)) throw std::runtime_error("solve_c: negative scale squared");

  ScaleSolution s;
  s.k_alpha = k.real();
  s.c = std::sqrt(c2);

  // Independent closed forms for the same scale, quadratic in lambda.
  double ref;
  switch (id) {
    case FamilyId::vilhena3: {
      double q = (5.0 / 3.0) * e1 * e1 * e1 + 18.0 * kPi * e1 * e1 + 9.0 * e1 * e1 * e1 +
                 (-24.0 * kPi * e1 - 12.0 * e1 * e1) * lambda +
                 (6.0 * kPi - 8.0 * e1) * lambda * lambda;
      ref = std::sqrt(-8.0 * kPi * e1 / q);
      break;
    }
    case FamilyId::weber2: {
      double q = (4.0 / 3.0) * e1 * e1 - 3.0 * kPi * e1 + (4.0 * kPi - 2.0 * e1) * lambda -
                 (kPi / e1) * lambda * lambda;
      ref = std::sqrt(-4.0 * kPi / q);
      break;
    }
    default:
      ref = std::sqrt(6.0 * kPi) / e1;
      break;
  }
  s.closed_form = ref;
  return s;
}

std::vector<ResidueEntry> residues(const Family& fam, double radius, int nodes) {
  std::vector<ResidueEntry> out;
  for (const auto& q : fam.punctures) {
    auto r1 = quad::residue_circle([&](cplx z) { return fam.phi_stable(z).phi1; },
                                   q.p, radius, nodes);
    auto r2 = quad::residue_circle([&](cplx z) { return fam.phi_stable(z).phi2; },
                                   q.p, radius, nodes);
    auto r3 = quad::residue_circle([&](cplx z) { return fam.phi_stable(z).phi3; },
                                   q.p, radius, nodes);
    out.push_back({q.label, "phi1", r1});
    out.push_back({q.label, "phi2", r2});
    out.push_back({q.label, "phi3", r3});
  }
  return out;
}

int wp_cycle_winding(Cycle cycle, double target) {
  const auto& W = engine();
  cplx z0 = cycle_start(cycle);
  cplx step = cycle_end(cycle) - z0;
  auto curve = [&](double t) { return W.wp(z0 + t * step); };
  return quad::winding_number(curve, cplx(target, 0.0));
}

} // namespace wpmin::rep
