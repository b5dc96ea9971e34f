// Euclidean symmetries of the immersions and the planar geodesics they fix.
//
// Two isometries generate everything here: the reflection that conjugates
// the domain around the base point and flips the second coordinate, and the
// quarter-turn that rotates the domain by i and acts on R^3 by a rotation
// about the vertical axis composed with a vertical flip.  For the
// three-ended family (and the genus-one Enneper surface) these generate a
// dihedral group of order eight; the two-ended family only keeps the
// reflection.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rep/family.hpp"

namespace wpmin::rep {

struct Mat3 {
  double m[3][3];

  static Mat3 identity();
  Mat3 operator*(const Mat3& o) const;
  std::array<double, 3> apply(const std::array<double, 3>& v) const;
  double maxdiff(const Mat3& o) const;
  double det() const;
};

Mat3 reflection_matrix(); // diag(1, -1, 1)
Mat3 rotation_matrix();   // [[0,-1,0],[1,0,0],[0,0,-1]]

struct SymmetryElement {
  Mat3 matrix;
  int rot;   // quarter turns applied in the domain
  bool refl; // conjugation applied first
};

// Domain action: conjugate around `base` if refl, then rotate by i around
// `base` rot times.
cplx apply_domain_symmetry(const SymmetryElement& s, cplx base, cplx z);

// The family's symmetry group, identity first, generated as the closure of
// its generators (so the tests can compare against an independent closure).
std::vector<SymmetryElement> symmetry_group(FamilyId id);

// Max over random samples and group elements of |X(sigma z) - A X(z)|_inf.
double symmetry_deviation(const Family& fam, int samples, std::uint64_t seed);

// Straight lines in the domain whose images lie in coordinate planes.
struct Geodesic {
  const char* label;
  cplx start, dir;
  double u0, u1;
  enum class Kind {
    plane_x2,      // image in {x2 = 0}
    plane_x1,      // image in {x1 = 0}
    line_sum,      // image in {x3 = 0} and {x1 + x2 = 0}
    line_diff      // image in {x3 = 0} and {x1 - x2 = 0}
  } kind;
};

std::vector<Geodesic> planar_geodesics(FamilyId id); // empty except vilhena3
double geodesic_deviation(const Family& fam, const Geodesic& g, int samples);
double max_geodesic_deviation(const Family& fam, int samples);

} // namespace wpmin::rep
