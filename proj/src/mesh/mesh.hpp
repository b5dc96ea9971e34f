// Triangulated meshes of the immersed tori.
//
// The domain grid is the uniform resolution x resolution lattice on the
// torus; vertices inside a cutoff disk of a puncture (over all lattice
// translates) or mapping farther than the clip norm are dropped, and faces
// are emitted only when all their corners survive.  Everything is evaluated
// through the closed-form immersion.  symmetry_complete appends the images
// of the mesh under the family's symmetry group, welding duplicate vertices
// and adding faces only where new vertices appear; on the symmetric grids
// build_mesh produces, every image welds onto the mesh itself, which is the
// group-invariance check the tests lean on.

#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "rep/family.hpp"

namespace wpmin::mesh {

using rep::cplx;

struct SamplingPlan {
  int resolution = 200;       // grid points per side; even, at least 8
  double puncture_cutoff = 0.04;
  double clip_norm = 50.0;
};

void validate_plan(const SamplingPlan& plan); // throws std::invalid_argument

// Grid points that survive the cutoff disks, row-major deterministic order.
// The plan's clip is not applied here; it needs immersion values.
std::vector<cplx> sample_domain(const SamplingPlan& plan,
                                const std::vector<rep::Puncture>& punctures);

struct MeshVertex {
  std::array<double, 3> x;
  double curvature;         // Gauss curvature K at the sample
  double curvature_density; // K times conformal^2, the K dA density in x+iy
  cplx domain;
};

struct SurfaceMesh {
  std::string family;
  int resolution = 0;
  std::vector<MeshVertex> vertices;
  std::vector<std::array<int, 3>> faces;
  // Curvature integral bookkeeping computed alongside the mesh: the full
  // domain-grid value and the cutoff-truncated part the faces cover.
  double total_curvature_grid = 0.0;
  double total_curvature_truncated = 0.0;
};

SurfaceMesh build_mesh(const rep::Family& fam, const SamplingPlan& plan);

// Discrete total curvature of the triangulation itself: per-face average of
// the vertex curvatures times the face area in the domain metric.
double mesh_curvature_integral(const SurfaceMesh& mesh);

void symmetry_complete(SurfaceMesh& mesh, const rep::Family& fam,
                       double weld = 1e-7);

} // namespace wpmin::mesh
