// Slow, direct lattice sums for wp, wp' and zeta.
//
// This is the independent cross-check for the series engine: no shared
// tables, no shared constants, just the defining sums over a box of lattice
// points plus a tail correction.  With the box and extrapolation defaults it
// agrees with the series to ~1e-11, which is what the equivalence tests pin.

#pragma once

#include <complex>

namespace wpmin::ell {

using cplx = std::complex<double>;

struct OracleValues {
  cplx wp;
  cplx wp_prime;
  cplx zeta;
};

// Plain truncated sums over lattice points m + n*i with |m|, |n| <= box.
OracleValues lattice_sum_box(cplx z, int box);

// Eisenstein-type sum sum' 1/omega^4 over the same box (real by symmetry).
double g4_box(int box);

// Limit of g4_box from boxes box/4, box/2, box, 2*box under the model
// A + B/n^2 + C/n^3 + D/n^4; returns A.
double g4_extrapolated(int box);

// Box sums with the leading tail corrections applied.  Expanding the summand
// about omega = infinity, the box truncation error is a series in lattice
// tails; odd powers cancel by symmetry of the box, the 1/omega^6 tail cancels
// under the quarter turn omega -> i*omega, and what survives at double
// precision is the 1/omega^4 tail dG4:
//   wp  += 3 z^2 dG4,   wp' += 6 z dG4,   zeta -= z^3 dG4.
OracleValues lattice_sum(cplx z, int box);

} // namespace wpmin::ell
