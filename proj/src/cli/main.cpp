// wpmin command line: verify | solve | mesh | constants.
//
// Exit status contract: 0 on success, 1 on failed checks or runtime
// errors, 2 on usage or configuration errors (unknown family, bad
// resolution, malformed flags).  All numerics go through the C API.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wpmin.h"

namespace {

int status_to_exit(wpmin_status st) {
  if (st == WPMIN_OK) return 0;
  std::cerr << "error: " << wpmin_last_error() << "\n";
  return st == WPMIN_ERR_INVALID_ARGUMENT ? 2 : 1;
}

struct FamilyHandle {
  wpmin_family* fam = nullptr;
  ~FamilyHandle() { wpmin_family_destroy(fam); }
};

struct MeshHandle {
  wpmin_mesh* mesh = nullptr;
  ~MeshHandle() { wpmin_mesh_destroy(mesh); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { wpmin_string_free(s); }
};

bool write_text_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  os << text;
  os.flush();
  return bool(os);
}

// Print the report and optionally persist it under dir as <stem>.<ext>.
int emit_report(const std::string& text, const std::string& dir,
                const std::string& stem, const std::string& ext) {
  std::cout << text;
  if (text.empty() || text.back() != '\n') std::cout << "\n";
  if (!dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::string path = (std::filesystem::path(dir) / (stem + "." + ext)).string();
    if (ec || !write_text_file(path, text)) {
      std::cerr << "error: cannot write " << path << "\n";
      return 1;
    }
    std::cerr << "report written to " << path << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complete genus-one minimal surfaces on the square torus: "
               "verify the defining identities, solve the period problem, "
               "and export meshes."};
  app.require_subcommand(1);

  std::string family = "vilhena3";
  int resolution = 0; // 0 selects the library default
  double cutoff = 0.0;
  double clip = 0.0;
  double tolerance = 0.0;
  std::string format = "obj";
  std::string report_fmt = "json";
  std::string output_dir;
  bool degenerate_root = false;
  bool sym_complete = false;

  auto add_family = [&](CLI::App* cmd) {
    cmd->add_option("--family", family,
                    "family: vilhena3, weber2, chen-gackstatter")
        ->capture_default_str();
  };

  auto* verify = app.add_subcommand(
      "verify", "run the full verification suite and print the report");
  add_family(verify);
  verify->add_option("--resolution", resolution,
                     "curvature grid resolution (even, >= 8; default 200)")
      ->check(CLI::Range(8, 100000));
  verify->add_option("--cutoff", cutoff,
                     "puncture cutoff radius (default 0.04)");
  verify->add_option("--tolerance", tolerance,
                     "quadrature tolerance override (default 1e-10)");
  verify->add_option("--report", report_fmt, "report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  verify->add_option("--output-dir", output_dir,
                     "also write the report under this directory");

  auto* solve = app.add_subcommand(
      "solve", "solve the period problem: lambda roots and the scale c");
  add_family(solve);
  solve->add_flag("--degenerate-root", degenerate_root,
                  "also report which family the degenerate root collapses to");
  solve->add_option("--output-dir", output_dir,
                    "also write the report under this directory");

  auto* mesh = app.add_subcommand("mesh", "build and export a surface mesh");
  add_family(mesh);
  mesh->add_option("--resolution", resolution,
                   "grid resolution (even, >= 8; default 200)")
      ->check(CLI::Range(8, 100000));
  mesh->add_option("--cutoff", cutoff, "puncture cutoff radius (default 0.04)");
  mesh->add_option("--clip", clip, "drop vertices with |X| beyond this (default 50)");
  mesh->add_option("--format", format, "mesh format")
      ->check(CLI::IsMember({"obj", "ply"}))
      ->capture_default_str();
  mesh->add_flag("--symmetry-complete", sym_complete,
                 "weld in the mesh's images under the symmetry group");
  mesh->add_option("--output-dir", output_dir, "output directory (default .)");

  app.add_subcommand("constants",
                     "print the lattice constants and their deviations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (app.got_subcommand("constants")) {
    OwnedString text;
    wpmin_status st = wpmin_constants_report(&text.s);
    if (st != WPMIN_OK) return status_to_exit(st);
    return emit_report(text.s, output_dir, "constants", "json");
  }

  FamilyHandle fam;
  {
    wpmin_status st = wpmin_family_create(family.c_str(), &fam.fam);
    if (st != WPMIN_OK) return status_to_exit(st);
  }

  if (app.got_subcommand("verify")) {
    int passed = 0;
    OwnedString text;
    wpmin_status st =
        wpmin_family_verify(fam.fam, report_fmt.c_str(), resolution, cutoff,
                            tolerance, &passed, &text.s);
    if (st != WPMIN_OK) return status_to_exit(st);
    int rc = emit_report(text.s, output_dir, family + "-verify", report_fmt);
    if (rc != 0) return rc;
    if (!passed) {
      std::cerr << "verification FAILED for " << family << "\n";
      return 1;
    }
    std::cerr << "verification passed for " << family << "\n";
    return 0;
  }

  if (app.got_subcommand("solve")) {
    OwnedString text;
    wpmin_status st =
        wpmin_family_solve_report(fam.fam, degenerate_root ? 1 : 0, &text.s);
    if (st != WPMIN_OK) return status_to_exit(st);
    return emit_report(text.s, output_dir, family + "-solve", "json");
  }

  // mesh
  MeshHandle m;
  wpmin_status st = wpmin_mesh_create(fam.fam, resolution, cutoff, clip,
                                      sym_complete ? 1 : 0, &m.mesh);
  if (st != WPMIN_OK) return status_to_exit(st);
  size_t nv = 0, nf = 0;
  wpmin_mesh_counts(m.mesh, &nv, &nf);
  double grid = 0, truncated = 0, discrete = 0;
  wpmin_mesh_total_curvature(m.mesh, &grid, &truncated, &discrete);
  OwnedString path;
  st = wpmin_mesh_write(m.mesh, output_dir.empty() ? "." : output_dir.c_str(),
                        format.c_str(), &path.s);
  if (st != WPMIN_OK) return status_to_exit(st);
  std::printf("file: %s\n", path.s);
  std::printf("vertices: %zu\nfaces: %zu\n", nv, nf);
  std::printf("total_curvature_grid: %.12g\n", grid);
  std::printf("total_curvature_truncated: %.12g\n", truncated);
  std::printf("total_curvature_faces: %.12g\n", discrete);
  return 0;
}
