// The three surface families and their Weierstrass data.
//
// Each family lives on the square torus and is described by a Gauss map g
// and the height form eta = 2 wp dz.  The two tower families share the shape
//   g = c (wp + a)(wp + b) / wp',
// with (a, b) = (-3 e1, +lambda) for the three-ended surface and
// (e1, -lambda) for the two-ended one; the classical genus-one Enneper
// surface has g = (c/4) wp'/wp.  lambda is fixed by the period problem
// (solved value 3 e1 for both towers) and c by the alpha-cycle balance.

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "core/elliptic.hpp"

namespace wpmin::rep {

using cplx = std::complex<double>;

enum class FamilyId { chen_gackstatter, weber2, vilhena3 };

FamilyId family_from_name(const std::string& name); // throws std::invalid_argument
std::string family_name(FamilyId id);

// phi_j/dz at a point: the integrands of the immersion coordinates.
struct FormSample {
  cplx phi1, phi2, phi3;
};

struct Puncture {
  cplx p;        // representative in [0,1)^2
  int end_order; // 1 catenoid-type, 3 Enneper-type
  const char* label;
};

struct Family {
  FamilyId id;
  bool uses_lambda = true;
  double a = 0.0, b = 0.0; // shifts in g = c (wp+a)(wp+b)/wp'
  double lambda = 0.0;
  double c = 0.0;
  std::vector<Puncture> punctures;
  cplx base_point;   // (1+i)/2, the common regular symmetry point
  int genus = 1;
  int gauss_degree = 0;

  // g = N/D with derivatives, the workhorse for curvature and windings.
  void gauss_nd(cplx z, cplx& N, cplx& D, cplx& Np, cplx& Dp) const;
  cplx gauss(cplx z) const;

  // Forms by the literal product route (1 - g^2) wp etc.  Valid away from
  // zeros of wp' that are not punctures; there g -> infinity and the product
  // route hits 0 * inf even though the form itself is finite.
  FormSample phi_direct(cplx z) const;

  // Forms by the expanded partial-fraction route, an independent
  // transcription of the same differentials.  Finite wherever the forms are.
  FormSample phi_partial_fraction(cplx z) const;

  // Forms with the wp'^2 denominator removed through the lattice curve
  //   wp'^2 = 4 wp (wp - e1)(wp + e1)
  // and common factors cancelled, so the only singularities left are the
  // punctures.  This is the evaluation used for integration and meshing.
  FormSample phi_stable(cplx z) const;

  // g^2 * wp in the cancelled form that backs phi_stable.
  cplx g_squared_wp(cplx z) const;

  // Metric quantities.  conformal_factor is (1 + |g|^2)|wp| (infinite at the
  // punctures); spherical_deriv is |g'|/(1 + |g|^2) evaluated through the
  // N/D split, which stays finite across poles of g.  curvature is
  // -4 (spherical_deriv / conformal_factor)^2, with the puncture limit 0.
  double conformal_factor(cplx z) const;
  double spherical_deriv(cplx z) const;
  double curvature(cplx z) const;

  // Distance from z to the nearest puncture, minimized over lattice
  // translates.
  double puncture_distance(cplx z) const;
};

// Family with its solved parameters.
Family make_family(FamilyId id);

// Family with explicit parameters, used while solving the period problem.
Family make_family(FamilyId id, double lambda, double c);

} // namespace wpmin::rep
