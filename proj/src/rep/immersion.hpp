// The immersion into R^3: closed-form coordinates and the slow numeric
// cross-check that integrates the forms from the base point.
//
// All three families are normalized to vanish at the base point (1+i)/2.
// The closed coordinates combine zeta terms, a linear term, and for the
// vertical coordinate a log of wp differences; the additive constants that
// make the base point map to the origin have exact closed forms which
// the verification report recomputes.

#pragma once

#include <array>

#include "core/quadrature.hpp"
#include "rep/family.hpp"

namespace wpmin::rep {

struct ImmersionPoint {
  cplx z;
  std::array<double, 3> x;
  cplx gauss;
  double conformal;
  double curvature;
};

ImmersionPoint immersion_closed(const Family& fam, cplx z);

// The exact additive constants in the closed coordinates, ordered x1 x2 x3.
std::array<double, 3> immersion_constants(const Family& fam);

// Same constants recomputed by zeroing the un-normalized closed coordinates
// at the base point.
std::array<double, 3> immersion_constants_recomputed(const Family& fam);

// Polyline from `from` to `to`: axis-aligned two-leg route, with small fixed
// detours inserted recursively wherever a leg passes a puncture closer than
// `clearance`.
std::vector<cplx> integration_path(const Family& fam, cplx from, cplx to,
                                   double clearance);

// Coordinates by integrating the forms along integration_path from the base
// point.  Path independence of the real parts is what makes this well
// defined; the tests drive that point separately with homotopic paths.
std::array<double, 3> immersion_numeric(const Family& fam, cplx z,
                                        double clearance = 0.02,
                                        const quad::Options& opt = {});

} // namespace wpmin::rep
