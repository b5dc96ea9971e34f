/* wpmin: complete genus-one minimal surfaces on the square torus.
 *
 * C interface to the numerics core: guarded elliptic-function evaluation,
 * the three surface families with their solved parameters, verification
 * reports, and mesh construction/export.  All functions return a status
 * code; on failure wpmin_last_error() holds a message for the calling
 * thread.  Strings returned through char** out-parameters are owned by the
 * caller and must be released with wpmin_string_free().
 */

#ifndef WPMIN_H
#define WPMIN_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wpmin_status {
  WPMIN_OK = 0,
  WPMIN_ERR_INVALID_ARGUMENT = 1,
  WPMIN_ERR_NUMERIC = 2,
  WPMIN_ERR_IO = 3
} wpmin_status;

/* Message for the most recent failure in the calling thread; never NULL. */
const char* wpmin_last_error(void);

/* Release a string returned by any wpmin function. */
void wpmin_string_free(char* s);

/* ---- lattice constants and guarded evaluation ------------------------- */

typedef struct wpmin_constants {
  double e1;
  double g2;
  double zeta_half_re, zeta_half_im;
  double zeta_i_half_re, zeta_i_half_im;
  double zeta_w2_re, zeta_w2_im;
} wpmin_constants;

wpmin_status wpmin_lattice_constants(wpmin_constants* out);

/* Evaluate wp, wp' or zeta at re + i*im.  pole_exclusion is the minimum
 * allowed distance from z to the lattice (0 selects the default 1e-3);
 * closer points fail with WPMIN_ERR_NUMERIC rather than returning huge
 * cancellation-ridden values.  Non-finite inputs fail with
 * WPMIN_ERR_INVALID_ARGUMENT. */
wpmin_status wpmin_wp(double re, double im, double pole_exclusion,
                      double* out_re, double* out_im);
wpmin_status wpmin_wp_prime(double re, double im, double pole_exclusion,
                            double* out_re, double* out_im);
wpmin_status wpmin_zeta(double re, double im, double pole_exclusion,
                        double* out_re, double* out_im);

/* Lattice constants with deviations from their exact values, as JSON. */
wpmin_status wpmin_constants_report(char** out_json);

/* ---- surface families -------------------------------------------------- */

typedef struct wpmin_family wpmin_family;

/* name is one of "vilhena3", "weber2", "chen-gackstatter"; the family is
 * created with its solved parameters. */
wpmin_status wpmin_family_create(const char* name, wpmin_family** out);

/* Same, but with explicit lambda and scale c (c > 0). */
wpmin_status wpmin_family_create_with(const char* name, double lambda,
                                      double c, wpmin_family** out);

void wpmin_family_destroy(wpmin_family* fam);

wpmin_status wpmin_family_parameters(const wpmin_family* fam, double* lambda,
                                     double* c);

/* Closed-form immersion coordinates at a domain point. */
wpmin_status wpmin_family_immersion(const wpmin_family* fam, double re,
                                    double im, double xyz[3]);

/* Period-problem solution as JSON: both lambda roots with the degenerate
 * one flagged, the fitted quadratic, and c with its closed-form
 * cross-check.  degenerate_root != 0 appends the comparison against the
 * family the degenerate root collapses to. */
wpmin_status wpmin_family_solve_report(const wpmin_family* fam,
                                       int degenerate_root, char** out_json);

/* Full verification run.  format is "json" or "csv".  resolution (even,
 * >= 8), cutoff and quad_tol may be 0 for the defaults 200 / 0.04 / 1e-10.
 * On success *passed reports whether every check passed. */
wpmin_status wpmin_family_verify(const wpmin_family* fam, const char* format,
                                 int resolution, double cutoff,
                                 double quad_tol, int* passed,
                                 char** out_report);

/* ---- meshes ------------------------------------------------------------ */

typedef struct wpmin_mesh wpmin_mesh;

/* Build a triangulated mesh.  resolution must be even and >= 8; cutoff and
 * clip may be 0 for the defaults 0.04 / 50.  symmetry_complete != 0 welds
 * in the images of the mesh under the family's symmetry group. */
wpmin_status wpmin_mesh_create(const wpmin_family* fam, int resolution,
                               double cutoff, double clip,
                               int symmetry_complete, wpmin_mesh** out);

void wpmin_mesh_destroy(wpmin_mesh* mesh);

wpmin_status wpmin_mesh_counts(const wpmin_mesh* mesh, size_t* vertices,
                               size_t* faces);

/* Total Gauss curvature accounting: the full-grid integral, the truncated
 * integral over the meshed region only, and the discrete per-face value. */
wpmin_status wpmin_mesh_total_curvature(const wpmin_mesh* mesh, double* grid,
                                        double* truncated, double* discrete);

/* Write <family>-r<resolution>.<format> (format "obj" or "ply") under dir;
 * *out_path receives the full path. */
wpmin_status wpmin_mesh_write(const wpmin_mesh* mesh, const char* dir,
                              const char* format, char** out_path);

#ifdef __cplusplus
}
#endif

#endif /* WPMIN_H */
