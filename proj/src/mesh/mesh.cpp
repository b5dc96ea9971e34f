// Mesh construction, curvature accounting, and symmetry completion.

#include "mesh/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "core/parallel.hpp"
#include "rep/immersion.hpp"
#include "rep/invariants.hpp"
#include "rep/symmetry.hpp"

namespace wpmin::mesh {

void validate_plan(const SamplingPlan& plan) {
  if (plan.resolution < 8)
    throw std::invalid_argument("mesh resolution must be at least 8");
  if (plan.resolution % 2 != 0)
    throw std::invalid_argument("mesh resolution must be even so the grid hits the half periods");
  if (!(plan.puncture_cutoff > 0.0) || !(plan.puncture_cutoff < 0.25))
    throw std::invalid_argument("puncture cutoff must lie in (0, 0.25)");
  if (!(plan.clip_norm > 0.0))
    throw std::invalid_argument("clip norm must be positive");
}

namespace {

double puncture_distance(const std::vector<rep::Puncture>& punctures, cplx z) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& q : punctures) {
    cplx d = z - q.p;
    double dx = d.real() - std::nearbyint(d.real());
    double dy = d.imag() - std::nearbyint(d.imag());
    best = std::min(best, std::hypot(dx, dy));
  }
  return best;
}

} // namespace

std::vector<cplx> sample_domain(const SamplingPlan& plan,
                                const std::vector<rep::Puncture>& punctures) {
  validate_plan(plan);
  const int R = plan.resolution;
  std::vector<cplx> out;
  out.reserve(static_cast<size_t>(R) * R);
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j) {
      cplx z(double(i) / R, double(j) / R);
      if (puncture_distance(punctures, z) >= plan.puncture_cutoff)
        out.push_back(z);
    }
  return out;
}

SurfaceMesh build_mesh(const rep::Family& fam, const SamplingPlan& plan) {
  validate_plan(plan);
  const int R = plan.resolution;
  const size_t total = static_cast<size_t>(R) * R;

  // Evaluate the whole grid in parallel, then compact.
  std::vector<MeshVertex> grid(total);
  std::vector<uint8_t> keep(total, 0);
  parallel_chunks(R, [&](int begin, int end, int) {
    for (int i = begin; i < end; ++i) {
      for (int j = 0; j < R; ++j) {
        size_t idx = static_cast<size_t>(i) * R + j;
        cplx z(double(i) / R, double(j) / R);
        if (fam.puncture_distance(z) < plan.puncture_cutoff) continue;
        auto pt = rep::immersion_closed(fam, z);
        double m = std::max({std::abs(pt.x[0]), std::abs(pt.x[1]), std::abs(pt.x[2])});
        if (!(m <= plan.clip_norm)) continue;
        double sd = fam.spherical_deriv(z);
        grid[idx] = MeshVertex{pt.x, pt.curvature, -4.0 * sd * sd, z};
        keep[idx] = 1;
      }
    }
  });

  SurfaceMesh mesh;
  mesh.family = rep::family_name(fam.id);
  mesh.resolution = R;

  std::vector<int> vid(total, -1);
  for (size_t idx = 0; idx < total; ++idx) {
    if (!keep[idx]) continue;
    vid[idx] = static_cast<int>(mesh.vertices.size());
    mesh.vertices.push_back(grid[idx]);
  }

  // Two triangles per grid cell, with torus wraparound; emitted only when
  // every corner survived.
  auto at = [&](int i, int j) { return vid[static_cast<size_t>(i % R) * R + (j % R)]; };
  for (int i = 0; i < R; ++i) {
    for (int j = 0; j < R; ++j) {
      int v00 = at(i, j), v10 = at(i + 1, j), v11 = at(i + 1, j + 1), v01 = at(i, j + 1);
      if (v00 < 0 || v10 < 0 || v11 < 0 || v01 < 0) continue;
      mesh.faces.push_back({v00, v10, v11});
      mesh.faces.push_back({v00, v11, v01});
    }
  }

  mesh.total_curvature_grid = rep::total_curvature(fam, R);
  mesh.total_curvature_truncated =
      rep::total_curvature_truncated(fam, R, plan.puncture_cutoff);
  return mesh;
}

double mesh_curvature_integral(const SurfaceMesh& mesh) {
  // K dA in the domain parametrization is -4 spherical_deriv^2 dx dy, the
  // stored per-vertex density; integrate it with the per-face mean times the
  // face's domain area.
  double acc = 0.0;
  for (const auto& f : mesh.faces) {
    const auto& a = mesh.vertices[f[0]];
    const auto& b = mesh.vertices[f[1]];
    const auto& c = mesh.vertices[f[2]];
    // Edge vectors reduced mod 1 so wraparound faces get their true area.
    cplx e1 = b.domain - a.domain;
    cplx e2 = c.domain - a.domain;
    e1 = cplx(e1.real() - std::nearbyint(e1.real()), e1.imag() - std::nearbyint(e1.imag()));
    e2 = cplx(e2.real() - std::nearbyint(e2.real()), e2.imag() - std::nearbyint(e2.imag()));
    double area = 0.5 * std::abs(e1.real() * e2.imag() - e1.imag() * e2.real());
    double mean_density =
        (a.curvature_density + b.curvature_density + c.curvature_density) / 3.0;
    acc += mean_density * area;
  }
  return acc;
}

void symmetry_complete(SurfaceMesh& mesh, const rep::Family& fam, double weld) {
  auto group = rep::symmetry_group(fam.id);
  const size_t original_vertices = mesh.vertices.size();
  const size_t original_faces = mesh.faces.size();

  // Spatial hash over weld-sized cells for duplicate detection.
  auto cell_key = [&](const std::array<double, 3>& x) {
    auto q = [&](double v) { return static_cast<int64_t>(std::llround(v / weld)); };
    uint64_t h = 1469598103934665603ull;
    for (int64_t v : {q(x[0]), q(x[1]), q(x[2])}) {
      h ^= static_cast<uint64_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  };
  std::unordered_map<uint64_t, std::vector<int>> cells;
  auto find_near = [&](const std::array<double, 3>& x) -> int {
    auto q = [&](double v) { return static_cast<int64_t>(std::llround(v / weld)); };
    int64_t cx = q(x[0]), cy = q(x[1]), cz = q(x[2]);
    for (int64_t dx = -1; dx <= 1; ++dx)
      for (int64_t dy = -1; dy <= 1; ++dy)
        for (int64_t dz = -1; dz <= 1; ++dz) {
          std::array<double, 3> probe{(cx + dx) * weld, (cy + dy) * weld,
                                      (cz + dz) * weld};
          auto it = cells.find(cell_key(probe));
          if (it == cells.end()) continue;
          for (int idx : it->second) {
            const auto& v = mesh.vertices[idx].x;
            double d2 = 0.0;
            for (int k = 0; k < 3; ++k) d2 += (v[k] - x[k]) * (v[k] - x[k]);
            if (d2 <= weld * weld) return idx;
          }
        }
    return -1;
  };
  auto insert_vertex = [&](int idx) { cells[cell_key(mesh.vertices[idx].x)].push_back(idx); };
  for (size_t i = 0; i < original_vertices; ++i) insert_vertex(static_cast<int>(i));

  std::unordered_set<uint64_t> face_set;
  auto face_key = [](std::array<int, 3> f) {
    std::sort(f.begin(), f.end());
    return (static_cast<uint64_t>(f[0]) << 42) | (static_cast<uint64_t>(f[1]) << 21) |
           static_cast<uint64_t>(f[2]);
  };
  for (const auto& f : mesh.faces) face_set.insert(face_key(f));

  for (size_t gi = 1; gi < group.size(); ++gi) {
    const auto& s = group[gi];
    bool flip = s.matrix.det() < 0.0;
    std::vector<int> remap(original_vertices);
    for (size_t i = 0; i < original_vertices; ++i) {
      auto x = s.matrix.apply(mesh.vertices[i].x);
      int found = find_near(x);
      if (found >= 0) {
        remap[i] = found;
        continue;
      }
      cplx zd = rep::apply_domain_symmetry(s, fam.base_point, mesh.vertices[i].domain);
      zd = cplx(zd.real() - std::floor(zd.real()), zd.imag() - std::floor(zd.imag()));
      MeshVertex nv{x, mesh.vertices[i].curvature,
                    mesh.vertices[i].curvature_density, zd};
      int nidx = static_cast<int>(mesh.vertices.size());
      mesh.vertices.push_back(nv);
      insert_vertex(nidx);
      remap[i] = nidx;
    }
    for (size_t fi = 0; fi < original_faces; ++fi) {
      auto f = mesh.faces[fi];
      std::array<int, 3> nf{remap[f[0]], remap[f[1]], remap[f[2]]};
      if (flip) std::swap(nf[1], nf[2]);
      // Only faces that touch a genuinely new vertex add coverage.  When all
      // three corners weld onto existing vertices the image cell is already
      // triangulated, just possibly along the other grid diagonal, and
      // appending it would double-cover the surface.
      bool has_new = false;
      for (int v : nf) has_new |= v >= static_cast<int>(original_vertices);
      if (!has_new) continue;
      if (face_set.insert(face_key(nf)).second) mesh.faces.push_back(nf);
    }
  }
}

} // namespace wpmin::mesh
