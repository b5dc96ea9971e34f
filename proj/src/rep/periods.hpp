// Cycle integrals, the period problem, and puncture residues.
//
// The homology basis is alpha(t) = i/3 + t and beta(t) = 1/3 + i t for
// t in [0,1]; both stay a comfortable distance from every pole involved.
// The free parameter lambda is pinned by the vanishing of the real cycle
// periods: the difference of the two balancing integrals is an exact
// quadratic in lambda, so three samples determine it and a fourth checks
// the fit.  The scale c then follows from one alpha integral.

#pragma once

#include <vector>

#include "core/quadrature.hpp"
#include "rep/family.hpp"

namespace wpmin::rep {

enum class Cycle { alpha, beta };
const char* cycle_name(Cycle c);
cplx cycle_start(Cycle c);
cplx cycle_end(Cycle c);

enum class CycleForm { phi1, phi2, phi3, wp, wp_shift_half, wp_shift_ihalf };
const char* cycle_form_name(CycleForm f);

cplx cycle_integral(const Family& fam, CycleForm form, Cycle cycle,
                    const quad::Options& opt = {});

struct CycleEntry {
  CycleForm form;
  Cycle cycle;
  cplx value;
};
std::vector<CycleEntry> cycle_matrix(const Family& fam, const quad::Options& opt = {});

// max |Re| of the phi cycle integrals: the quantity the period problem kills.
double period_residual(const Family& fam, const quad::Options& opt = {});

struct LambdaSolution {
  double roots[2];       // ascending; e1 and 3 e1
  bool degenerate[2];    // true where the family collapses to fewer ends
  double quad_coeffs[3]; // monic fitted quadratic: lambda^2 + q1 lambda + q0
  double fit_residual;   // relative mismatch of a fourth sample vs the fit
};
LambdaSolution solve_lambda(FamilyId id, const quad::Options& opt = {});

struct ScaleSolution {
  double c;
  double k_alpha;     // alpha integral of g^2 wp at c = 1
  double closed_form; // c from the quadratic-in-lambda closed expression
};
ScaleSolution solve_c(FamilyId id, double lambda, const quad::Options& opt = {});

struct ResidueEntry {
  const char* puncture;
  const char* form; // "phi1", "phi2", "phi3"
  cplx value;
};
std::vector<ResidueEntry> residues(const Family& fam, double radius = 0.05,
                                   int nodes = 512);

// Winding number of wp along a cycle around a real target, used to account
// for the cycle integral values of the shifted integrands.
int wp_cycle_winding(Cycle cycle, double target);

} // namespace wpmin::rep
