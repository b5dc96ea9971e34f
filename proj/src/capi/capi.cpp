// C interface implementation: thin exception-to-status translation over the
// C++ core.  Every entry point catches, records the message in a
// thread-local slot, and returns a status code.

#include "wpmin.h"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "core/elliptic.hpp"
#include "mesh/export.hpp"
#include "mesh/mesh.hpp"
#include "report/report.hpp"
#include "rep/family.hpp"
#include "rep/immersion.hpp"

namespace {

thread_local std::string g_last_error;

using wpmin::ell::cplx;

void set_error(const std::string& msg) { g_last_error = msg; }

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Run `fn`, translating exceptions.  `fallback` classifies exceptions that
// are not std::invalid_argument (numeric trouble vs file trouble).
template <class Fn>
wpmin_status guarded(wpmin_status fallback, Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return WPMIN_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return fallback;
  } catch (...) {
    set_error("unknown error");
    return fallback;
  }
}

wpmin_status check_point(double re, double im, double& excl) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    set_error("evaluation point must be finite");
    return WPMIN_ERR_INVALID_ARGUMENT;
  }
  if (excl == 0.0) excl = 1e-3;
  if (!(excl > 0.0) || excl > 0.5) {
    set_error("pole exclusion radius must lie in (0, 0.5]");
    return WPMIN_ERR_INVALID_ARGUMENT;
  }
  return WPMIN_OK;
}

// Shared body of the three guarded evaluators.
template <class Eval>
wpmin_status eval_guarded(double re, double im, double excl, double* out_re,
                          double* out_im, Eval&& eval) {
  if (!out_re || !out_im) {
    set_error("output pointers must not be NULL");
    return WPMIN_ERR_INVALID_ARGUMENT;
  }
  wpmin_status st = check_point(re, im, excl);
  if (st != WPMIN_OK) return st;
  cplx z(re, im);
  if (wpmin::ell::Weierstrass::dist_to_lattice(z) < excl) {
    set_error("point is within the pole exclusion radius of a lattice point");
    return WPMIN_ERR_NUMERIC;
  }
  return guarded(WPMIN_ERR_NUMERIC, [&]() {
    cplx v = eval(z);
    *out_re = v.real();
    *out_im = v.imag();
    return WPMIN_OK;
  });
}

} // namespace

struct wpmin_family {
  wpmin::rep::Family fam;
};

struct wpmin_mesh {
  wpmin::mesh::SurfaceMesh mesh;
  double discrete_integral = 0.0;
};

extern "C" {

const char* wpmin_last_error(void) { return g_last_error.c_str(); }

void wpmin_string_free(char* s) { std::free(s); }

wpmin_status wpmin_lattice_constants(wpmin_constants* out) {
  if (!out) {
    set_error("out must not be NULL");
    return WPMIN_ERR_INVALID_ARGUMENT;
  }
  return guarded(WPMIN_ERR_NUMERIC, [&]() {
    auto c = wpmin::ell::engine().constants();
    out->e1 = c.e1;
    out->g2 = c.g2;
    out->zeta_half_re = c.zeta_half.real();
    out->zeta_half_im = c.zeta_half.imag();
    out->zeta_i_half_re = c.zeta_half_i.real();
    out->zeta_i_half_im = c.zeta_half_i.imag();
    out->zeta_w2_re = c.zeta_w2.real();
    out->zeta_w2_im = c.zeta_w2.imag();
    return WPMIN_OK;
  });
}

wpmin_status wpmin_wp(double re, double im, double pole_exclusion,
                      double* out_re, double* out_im) {
  return eval_guarded(re, im, pole_exclusion, out_re, out_im,
                      [](cplx z) { return wpmin::ell::engine().wp(z); });
}

wpmin_status wpmin_wp_prime(double re, double im, double pole_exclusion,
                            double* out_re, double* out_im) {
  return eval_guarded(re, im, pole_exclusion, out_re, out_im,
                      [](cplx z) { return wpmin::ell::engine().wp_prime(z); });
}

wpmin_status wpmin_zeta(double re, double im, double pole_exclusion,
                        double* out_re, double* out_im) {
  return eval_guarded(re, im, pole_exclusion, out_re, out_im,
                      [](cplx z) { return wpmin::ell::engine().zeta(z); });
}

wpmin_status wpmin_constants_report(char** out_json) {
  if (!out_json) {
    set_error("out_json must not be NULL");
    return WPMIN_ERR_INVALID_ARGUMENT;
  }
  return guarded(WPMIN_ERR_NUMERIC, [&]() {
    *out_json = copy_string(wpmin::report::constants_json().dump(2));
    return *out_json ? WPMIN_OK : WPMIN_ERR_NUMERIC;
  });
}

wpmin_status wpmin_family_create(const char* name, wpmin_family** out) {
  if (!name || !out) {
    set_error("name and out must not be NULL");
    return WPMIN_ERR_INVALID_ARGUMENT;
  }
  return guarded(WPMIN_ERR_NUMERIC, [&]() {
    auto id = wpmin::rep::family_from_name(name);
    *out = new wpmin_family{wpmin::rep::make_family(id)};
    return WPMIN_OK;
  });
}

wpmin_status wpmin_family_create_with(const char* name, double lambda,
                                      double c, wpmin_family** out) {
  if (!name || !out) {
    set_error("name and out must not be NULL");
    return WPMIN_ERR_INVALID_ARGUMENT;
  }
  if (!std::isfinite(lambda) || !std::isfinite(c) || c <= 0.0) {
    set_error("lambda must be finite and c positive");
    return WPMIN_ERR_INVALID_ARGUMENT;
  }
  return guarded(WPMIN_ERR_NUMERIC, [&]() {
    auto id = wpmin::rep::family_from_name(name);
    *out = new wpmin_family{wpmin::rep::make_family(id, lambda, c)};
    return WPMIN_OK;
  });
}

void wpmin_family_destroy(wpmin_family* fam) { delete fam; }

wpmin_status wpmin_family_parameters(const wpmin_family* fam, double* lambda,
                                     double* c) {
  if (!fam || !lambda || !c) {
    set_error("arguments must not be NULL");
    return WPMIN_ERR_INVALID_ARGUMENT;
  }
  *lambda = fam->fam.lambda;
  *c = fam->fam.c;
  return WPMIN_OK;
}

wpmin_status wpmin_family_immersion(const wpmin_family* fam, double re,
                                    double im, double xyz[3]) {
  if (!fam || !xyz) {
    set_error("arguments must not be NULL");
    return WPMIN_ERR_INVALID_ARGUMENT;
  }
  if (!std::isfinite(re) || !std::isfinite(im)) {
    set_error("evaluation point must be finite");
    return WPMIN_ERR_INVALID_ARGUMENT;
  }
  if (fam->fam.puncture_distance(cplx(re, im)) < 1e-3) {
    set_error("point is within the pole exclusion radius of a puncture");
    return WPMIN_ERR_NUMERIC;
  }
  return guarded(WPMIN_ERR_NUMERIC, [&]() {
    auto p = wpmin::rep::immersion_closed(fam->fam, cplx(re, im));
    xyz[0] = p.x[0];
    xyz[1] = p.x[1];
    xyz[2] = p.x[2];
    return WPMIN_OK;
  });
}

wpmin_status wpmin_family_solve_report(const wpmin_family* fam,
                                       int degenerate_root, char** out_json) {
  if (!fam || !out_json) {
    set_error("arguments must not be NULL");
    return WPMIN_ERR_INVALID_ARGUMENT;
  }
  return guarded(WPMIN_ERR_NUMERIC, [&]() {
    auto j = wpmin::report::solve_json(fam->fam.id);
    if (degenerate_root)
      j["degenerate_root"] = wpmin::report::degenerate_root_json(fam->fam.id);
    *out_json = copy_string(j.dump(2));
    return *out_json ? WPMIN_OK : WPMIN_ERR_NUMERIC;
  });
}

wpmin_status wpmin_family_verify(const wpmin_family* fam, const char* format,
                                 int resolution, double cutoff,
                                 double quad_tol, int* passed,
                                 char** out_report) {
  if (!fam || !format || !passed || !out_report) {
    set_error("arguments must not be NULL");
    return WPMIN_ERR_INVALID_ARGUMENT;
  }
  std::string fmt(format);
  if (fmt != "json" && fmt != "csv") {
    set_error("report format must be json or csv");
    return WPMIN_ERR_INVALID_ARGUMENT;
  }
  wpmin::report::VerifyOptions opt;
  if (resolution != 0) opt.resolution = resolution;
  if (cutoff != 0.0) opt.cutoff = cutoff;
  if (quad_tol != 0.0) opt.quad_tol = quad_tol;
  if (opt.resolution < 8 || opt.resolution % 2 != 0) {
    set_error("resolution must be even and at least 8");
    return WPMIN_ERR_INVALID_ARGUMENT;
  }
  if (!(opt.cutoff > 0.0) || opt.cutoff >= 0.25) {
    set_error("cutoff must lie in (0, 0.25)");
    return WPMIN_ERR_INVALID_ARGUMENT;
  }
  if (opt.quad_tol < 1e-14 || opt.quad_tol > 1e-6) {
    set_error("quadrature tolerance must lie in [1e-14, 1e-6]");
    return WPMIN_ERR_INVALID_ARGUMENT;
  }
  return guarded(WPMIN_ERR_NUMERIC, [&]() {
    auto v = wpmin::report::run_verification(fam->fam.id, opt);
    *passed = v.overall ? 1 : 0;
    std::string text = (fmt == "json")
                           ? v.report.dump(2)
                           : wpmin::report::checks_to_csv(v.checks);
    *out_report = copy_string(text);
    return *out_report ? WPMIN_OK : WPMIN_ERR_NUMERIC;
  });
}

wpmin_status wpmin_mesh_create(const wpmin_family* fam, int resolution,
                               double cutoff, double clip,
                               int symmetry_complete, wpmin_mesh** out) {
  if (!fam || !out) {
    set_error("arguments must not be NULL");
    return WPMIN_ERR_INVALID_ARGUMENT;
  }
  wpmin::mesh::SamplingPlan plan;
  if (resolution != 0) plan.resolution = resolution;
  if (cutoff != 0.0) plan.puncture_cutoff = cutoff;
  if (clip != 0.0) plan.clip_norm = clip;
  return guarded(WPMIN_ERR_NUMERIC, [&]() {
    wpmin::mesh::validate_plan(plan); // invalid_argument on bad values
    auto m = std::make_unique<wpmin_mesh>();
    m->mesh = wpmin::mesh::build_mesh(fam->fam, plan);
    if (symmetry_complete)
      wpmin::mesh::symmetry_complete(m->mesh, fam->fam);
    m->discrete_integral = wpmin::mesh::mesh_curvature_integral(m->mesh);
    *out = m.release();
    return WPMIN_OK;
  });
}

void wpmin_mesh_destroy(wpmin_mesh* mesh) { delete mesh; }

wpmin_status wpmin_mesh_counts(const wpmin_mesh* mesh, size_t* vertices,
                               size_t* faces) {
  if (!mesh || !vertices || !faces) {
    set_error("arguments must not be NULL");
    return WPMIN_ERR_INVALID_ARGUMENT;
  }
  *vertices = mesh->mesh.vertices.size();
  *faces = mesh->mesh.faces.size();
  return WPMIN_OK;
}

wpmin_status wpmin_mesh_total_curvature(const wpmin_mesh* mesh, double* grid,
                                        double* truncated, double* discrete) {
  if (!mesh || !grid || !truncated || !discrete) {
    set_error("arguments must not be NULL");
    return WPMIN_ERR_INVALID_ARGUMENT;
  }
  *grid = mesh->mesh.total_curvature_grid;
  *truncated = mesh->mesh.total_curvature_truncated;
  *discrete = mesh->discrete_integral;
  return WPMIN_OK;
}

wpmin_status wpmin_mesh_write(const wpmin_mesh* mesh, const char* dir,
                              const char* format, char** out_path) {
  if (!mesh || !dir || !format || !out_path) {
    set_error("arguments must not be NULL");
    return WPMIN_ERR_INVALID_ARGUMENT;
  }
  return guarded(WPMIN_ERR_IO, [&]() {
    std::string path = wpmin::mesh::write_mesh_file(mesh->mesh, dir, format);
    *out_path = copy_string(path);
    return *out_path ? WPMIN_OK : WPMIN_ERR_IO;
  });
}

} // extern "C"
