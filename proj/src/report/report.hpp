// Verification reports: run every check for a family, collect the results
// into a fixed-key JSON document plus a flat check table, and serialize the
// table as CSV for spreadsheet triage.
//
// Fixed top-level keys: family, constants, lemma_checks, period_report,
// curvature, symmetry, immersion, notes, checks, overall.  The embedded
// period report uses { family, lambda, c, cycle_integrals, residues,
// residual_norm }.  overall is true iff every row in checks passed.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/quadrature.hpp"
#include "rep/family.hpp"

namespace wpmin::report {

using Json = nlohmann::ordered_json;

// One verdict row.  For complex-valued comparisons value and reference hold
// the moduli and deviation the modulus of the difference; deviation is
// relative where the tolerance is a relative one (noted in the id).
struct CheckRow {
  std::string section;
  std::string id;
  double value = 0.0;
  double reference = 0.0;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  int resolution = 200;
  double cutoff = 0.04;
  double clip = 50.0;
  double quad_tol = 1e-10; // absolute quadrature target
  int identity_points = 60;
  int symmetry_samples = 50;
  int immersion_points = 20;
  std::uint64_t seed = 20250815;
};

struct Verification {
  Json report;
  std::vector<CheckRow> checks;
  bool overall = false;
};

Verification run_verification(rep::FamilyId id, const VerifyOptions& opt = {});

// The embedded period report for a family at its stored parameters.
Json period_report_json(const rep::Family& fam, const quad::Options& qopt = {});

// Lattice constants with deviations from the exact values, plus the
// independent lattice-sum oracle value of e1.
Json constants_json(int oracle_box = 200);

// Period-problem solution: both lambda roots with the degenerate one
// flagged, the fitted quadratic against its reference, and c with the
// closed-form cross-check.
Json solve_json(rep::FamilyId id, const quad::Options& qopt = {});

// What the degenerate root lambda = e1 collapses to: the next family down
// the tower, compared form-by-form at sample points.
Json degenerate_root_json(rep::FamilyId id, const quad::Options& qopt = {});

std::string checks_to_csv(const std::vector<CheckRow>& checks);

} // namespace wpmin::report
