// Weierstrass functions on the square lattice generated by 1 and i.
//
// Everything downstream (forms, periods, meshes) evaluates through this one
// engine.  The invariants are g3 = 0 and g2 = 4*e1^2 where e1 = wp(1/2) is
// found once by a Newton iteration, so the only runtime input is the point z.
// Evaluation reduces z modulo half-lattice translates and sums a precomputed
// series: the Laurent expansion about the pole for points nearest a lattice
// point, or the even Taylor expansion about the relevant half period
// otherwise.  Either way |w| <= 1/(2*sqrt(2)) and forty terms reach full
// double precision with margin.

#pragma once

#include <complex>
#include <stdexcept>

namespace wpmin::ell {

using cplx = std::complex<double>;

// Square-lattice constants, computed once at engine construction.
struct LatticeConstants {
  double e1;        // wp(1/2); the other finite critical values are 0, -e1
  double g2;        // 4*e1^2
  cplx zeta_half;   // zeta(1/2)   = pi/2
  cplx zeta_half_i; // zeta(i/2)   = -i*pi/2
  cplx zeta_w2;     // zeta((1+i)/2) = pi/2 - i*pi/2
};

// Identifies which half period a reduced point sits nearest to.
enum class HalfPeriod { h1, h2, h3 }; // 1/2, (1+i)/2, i/2

class Weierstrass {
public:
  static constexpr int kTerms = 40;

  Weierstrass();

  const LatticeConstants& constants() const { return k_; }
  double e1() const { return k_.e1; }
  double g2() const { return k_.g2; }

  // Unguarded evaluators.  At a lattice point wp/wp_prime return infinity and
  // zeta returns infinity; callers that need pole protection should test
  // dist_to_lattice first (the guarded layer in the C API does).
  cplx wp(cplx z) const;
  cplx wp_prime(cplx z) const;
  cplx wp_second(cplx z) const; // 6*wp^2 - g2/2
  cplx zeta(cplx z) const;

  // wp and wp_prime in one reduction pass.
  void wp_pair(cplx z, cplx& p, cplx& pp) const;

  // wp(z + h) for a half period h, evaluated directly through the series.
  cplx wp_shifted(cplx z, HalfPeriod h) const;

  // Same quantity through the half-period addition formulas
  //   wp(z + 1/2)     = e1 + 2*e1^2 / (wp(z) - e1)
  //   wp(z + i/2)     = -e1 + 2*e1^2 / (wp(z) + e1)
  //   wp(z + (1+i)/2) = -e1^2 / wp(z)
  // Kept as an independent cross-check path; it is singular where the
  // denominators vanish, so tests sample away from those points.
  cplx wp_shifted_addition(cplx z, HalfPeriod h) const;

  // Distance from z to the nearest lattice point m + n*i.
  static double dist_to_lattice(cplx z);

  // Critical value at a half period: e1 at 1/2, 0 at (1+i)/2, -e1 at i/2.
  double critical_value(HalfPeriod h) const;

private:
  struct Reduced {
    cplx w;        // z minus the nearest half-lattice point
    int cls;       // 0: lattice point, 1: h1 + L, 2: h3 + L, 3: h2 + L
    long long m, n; // subtracted whole periods, for the zeta quasi-period
  };
  Reduced reduce(cplx z) const;

  // Series tables, all indexed by power of w^2.
  double c_[kTerms + 1];    // Laurent coefficients of wp about 0 (c_[0..1] unused)
  double cd_[kTerms + 1];   // (2k-2)*c_k, for wp'
  double cz_[kTerms + 1];   // c_k/(2k-1), for zeta
  double a_[3][kTerms + 1]; // Taylor coefficients of wp about h1, h3, h2
  double ad_[3][kTerms + 1];
  double az_[3][kTerms + 1];
  cplx zeta_at_[3];         // zeta at h1, h3, h2
  LatticeConstants k_;

  static void laurent_table(double g2, double* c);
  static void taylor_table(double g2, double eh, double* a);
  static double wp_laurent_real(const double* c, double w);
  double solve_e1() const;
};

// Shared immutable engine.  Construction is cheap but not free, and every
// consumer wants the same lattice, so hand out one instance.
const Weierstrass& engine();

} // namespace wpmin::ell
