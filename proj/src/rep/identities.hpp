// The algebraic identity suite behind the period computations.
//
// Everything the period solver integrates in closed form rests on a small
// stack of identities on the square lattice: the differential equation of
// wp, the half-period partial fraction identities that rewrite
// wp^k/(wp -+ e1) through shifted wp values, and the explicit
// antiderivatives of those fractions in terms of zeta.  Each check samples
// random points away from the poles and reports its worst residual.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wpmin::rep {

struct IdentityCheck {
  std::string id;
  double max_residual;
  double tolerance;
  bool pass;
};

// Differential equation and the second-derivative relation, residuals
// relative to the local scale.  Tolerance 1e-9.
std::vector<IdentityCheck> differential_checks(int points, std::uint64_t seed);

// The seven partial-fraction identities, LHS from wp powers and RHS from
// shifted wp evaluations.  Relative tolerance 1e-8.
std::vector<IdentityCheck> fraction_identity_checks(int points, std::uint64_t seed);

// Central-difference derivative of each closed antiderivative against its
// integrand, step 1e-5, absolute-ish tolerance 1e-6.
std::vector<IdentityCheck> antiderivative_checks(int points, std::uint64_t seed);

// Quarter-turn and conjugation symmetries of wp around the base point,
// tolerance 1e-9.
std::vector<IdentityCheck> wp_symmetry_checks(int points, std::uint64_t seed);

// Everything above in one list, in a stable order.
std::vector<IdentityCheck> identity_suite(int points, std::uint64_t seed);

} // namespace wpmin::rep
