// Global invariants of the immersions: Gauss map degree, total curvature,
// and the end-count bookkeeping they must both match.

#pragma once

#include <cstdint>

#include "rep/family.hpp"

namespace wpmin::rep {

// Degree of g as a map from the torus to the sphere, by the argument
// principle: preimages of a random target counted cell by cell through
// boundary windings plus the known pole count.  Requires the same answer for
// `targets` independent random targets and throws otherwise.
int gauss_map_degree(const Family& fam, std::uint64_t seed = 20250815,
                     int targets = 5);

// Total Gauss curvature integral over the torus in the domain measure:
// curvature times area element is -4 * spherical_deriv^2 dx dy, summed over
// the full resolution x resolution grid.  The integrand extends smoothly
// over the punctures, so the periodic trapezoid sum converges spectrally.
double total_curvature(const Family& fam, int resolution);

// Same sum restricted to vertices at least `cutoff` from the punctures: the
// part a truncated mesh can see.
double total_curvature_truncated(const Family& fam, int resolution, double cutoff);

// 2 pi (2 - 2 genus - ends - sum of end orders).
double jorge_meeks_total(const Family& fam);

// -4 pi deg(g).
double degree_total(const Family& fam);

} // namespace wpmin::rep
