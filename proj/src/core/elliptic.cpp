// Series tables and point reduction for the square-lattice Weierstrass engine.

#include "core/elliptic.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace wpmin::ell {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Horner on x for real coefficients c[0..n-1], complex x.
cplx horner(const double* c, int n, cplx x) {
  cplx r = c[n - 1];
  for (int k = n - 2; k >= 0; --k) r = r * x + c[k];
  return r;
}

double horner_real(const double* c, int n, double x) {
  double r = c[n - 1];
  for (int k = n - 2; k >= 0; --k) r = r * x + c[k];
  return r;
}

} // namespace

// Laurent coefficients about the pole: wp(w) = w^-2 + sum_{k>=2} c_k w^{2k-2}
// with c_2 = g2/20, c_3 = g3/28 = 0, and for k >= 4
//   c_k = 3 / ((2k+1)(k-3)) * sum_{m=2}^{k-2} c_m c_{k-m}.
void Weierstrass::laurent_table(double g2, double* c) {
  c[0] = 0.0;
  c[1] = 0.0;
  c[2] = g2 / 20.0;
  c[3] = 0.0;
  for (int k = 4; k <= kTerms; ++k) {
    double s = 0.0;
    for (int m = 2; m <= k - 2; ++m) s += c[m] * c[k - m];
    c[k] = 3.0 * s / ((2.0 * k + 1.0) * (k - 3.0));
  }
}

// Even Taylor coefficients about a half period h where wp(h) = eh and
// wp'(h) = 0: wp(h + w) = sum_{k>=0} a_k w^{2k}.  Plugging the series into
// wp'' = 6 wp^2 - g2/2 gives
//   a_{k+1} = (6 sum_{j=0}^{k} a_j a_{k-j} - (g2/2) [k=0]) / ((2k+2)(2k+1)).
void Weierstrass::taylor_table(double g2, double eh, double* a) {
  a[0] = eh;
  for (int k = 0; k < kTerms; ++k) {
    double s = 0.0;
    for (int j = 0; j <= k; ++j) s += a[j] * a[k - j];
    double rhs = 6.0 * s - (k == 0 ? 0.5 * g2 : 0.0);
    a[k + 1] = rhs / ((2.0 * k + 2.0) * (2.0 * k + 1.0));
  }
}

double Weierstrass::wp_laurent_real(const double* c, double w) {
  double ww = w * w;
  return 1.0 / ww + ww * horner_real(c + 2, kTerms - 1, ww);
}

// e1 is pinned by the lattice periods.  The curve for invariants (4e^2, 0)
// is y^2 = 4x(x - e)(x + e) with real roots (-e, 0, e), whose real half
// period is pi / (2 AGM(sqrt(e - (-e)), sqrt(e - 0))) =
// pi / (2 sqrt(e) AGM(sqrt 2, 1)).  Requiring the half period to equal 1/2
// gives e1 = (pi / AGM(1, sqrt 2))^2.  The AGM converges quadratically, so
// this is exact at double precision; the slow lattice-sum oracle and the
// zeta validation below cross-check it independently.
//
// Solving wp_Laurent(1/2; 4e^2) = e instead does NOT work: wp has a critical
// point at the half period, making that equation's root a double root, so
// residual-based iteration leaves O(sqrt(eps)) errors in e.
double Weierstrass::solve_e1() const {
  double a = 1.0, b = std::sqrt(2.0);
  for (int it = 0; it < 8; ++it) {
    double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  double root = std::numbers::pi / a;
  double e = root * root;

  // The Laurent table must reproduce wp(1/2) = e1; being a double root this
  // residual is quadratically small, so the bound here is loose and only
  // catches gross table corruption.
  double c[kTerms + 1];
  laurent_table(4.0 * e * e, c);
  if (std::abs(wp_laurent_real(c, 0.5) - e) > 1e-9)
    throw std::runtime_error("Weierstrass: Laurent table is inconsistent with e1");
  return e;
}

Weierstrass::Weierstrass() {
  double e1 = solve_e1();
  double g2 = 4.0 * e1 * e1;

  laurent_table(g2, c_);
  for (int k = 0; k <= kTerms; ++k) {
    cd_[k] = (2.0 * k - 2.0) * c_[k];
    cz_[k] = k >= 2 ? c_[k] / (2.0 * k - 1.0) : 0.0;
  }

  const double crit[3] = {e1, 0.0, -e1}; // at h1, h2, h3
  // a_ rows are ordered by reduction class: [0] h1, [1] h3, [2] h2.
  const double by_class[3] = {crit[0], crit[2], crit[1]};
  for (int r = 0; r < 3; ++r) {
    taylor_table(g2, by_class[r], a_[r]);
    for (int k = 0; k <= kTerms; ++k) {
      ad_[r][k] = 2.0 * k * a_[r][k];
      az_[r][k] = k == 0 ? a_[r][0] : a_[r][k] / (2.0 * k + 1.0);
    }
  }

  // zeta(1/2) from the Laurent series: zeta(w) = 1/w - sum c_k w^{2k-1}/(2k-1).
  // The series converges out to |w| = 1; at w = 1/2 the terms fall like 2^-2k
  // which is plenty.  zeta(i/2) the same way (it equals -i*zeta(1/2) by the
  // quarter-turn symmetry, which the tests confirm rather than assume).
  auto zeta_laurent = [&](cplx w) {
    cplx ww = w * w;
    return 1.0 / w - w * ww * horner(cz_ + 2, kTerms - 1, ww);
  };
  cplx zh = zeta_laurent(cplx(0.5, 0.0));
  cplx zi = zeta_laurent(cplx(0.0, 0.5));
  // zeta((1+i)/2) by the addition formula
  //   zeta(u+v) = zeta(u) + zeta(v) + (1/2)(wp'(u) - wp'(v))/(wp(u) - wp(v)).
  // The correction term vanishes here because wp' is zero at both 1/2 and
  // i/2 while wp(1/2) != wp(i/2), so the sum is exact.
  cplx zw2 = zh + zi;

  zeta_at_[0] = zh;
  zeta_at_[1] = zi;
  zeta_at_[2] = zw2;

  k_ = LatticeConstants{e1, g2, zh, zi, zw2};

  // Sanity against the closed forms; failure means the tables are corrupt.
  const double pi = std::numbers::pi;
  if (std::abs(zh - cplx(pi / 2, 0.0)) > 1e-10 ||
      std::abs(zi - cplx(0.0, -pi / 2)) > 1e-10)
    throw std::runtime_error("Weierstrass: half-period zeta values failed validation");
}

double Weierstrass::critical_value(HalfPeriod h) const {
  switch (h) {
    case HalfPeriod::h1: return k_.e1;
    case HalfPeriod::h2: return 0.0;
    default: return -k_.e1;
  }
}

Weierstrass::Reduced Weierstrass::reduce(cplx z) const {
  double x = z.real(), y = z.imag();
  if (!std::isfinite(x) || !std::isfinite(y) || std::abs(x) > 1e15 || std::abs(y) > 1e15)
    throw std::invalid_argument("Weierstrass: evaluation point must be finite and moderate");
  double m2d = std::nearbyint(2.0 * x);
  double n2d = std::nearbyint(2.0 * y);
  auto m2 = static_cast<long long>(m2d);
  auto n2 = static_cast<long long>(n2d);
  Reduced r;
  r.w = cplx(x - 0.5 * m2d, y - 0.5 * n2d);
  r.cls = static_cast<int>(m2 & 1LL) | (static_cast<int>(n2 & 1LL) << 1);
  r.m = (m2 - (m2 & 1LL)) >> 1;
  r.n = (n2 - (n2 & 1LL)) >> 1;
  return r;
}

// Reduction class -> row of the half-period tables.
// cls 1 = h1 family, cls 2 = h3 family, cls 3 = h2 family.
namespace {
inline int table_row(int cls) { return cls == 1 ? 0 : cls == 2 ? 1 : 2; }
} // namespace

cplx Weierstrass::wp(cplx z) const {
  Reduced r = reduce(z);
  cplx ww = r.w * r.w;
  if (r.cls == 0) {
    if (r.w == cplx(0.0, 0.0)) return cplx(kInf, 0.0);
    return 1.0 / ww + ww * horner(c_ + 2, kTerms - 1, ww);
  }
  return horner(a_[table_row(r.cls)], kTerms + 1, ww);
}

cplx Weierstrass::wp_prime(cplx z) const {
  Reduced r = reduce(z);
  cplx ww = r.w * r.w;
  if (r.cls == 0) {
    if (r.w == cplx(0.0, 0.0)) return cplx(kInf, 0.0);
    return -2.0 / (ww * r.w) + r.w * horner(cd_ + 2, kTerms - 1, ww);
  }
  const double* t = ad_[table_row(r.cls)];
  // sum 2k a_k w^{2k-1} = w * sum_{k>=1} (2k a_k) (w^2)^{k-1}
  return r.w * horner(t + 1, kTerms, ww);
}

cplx Weierstrass::wp_second(cplx z) const {
  cplx p = wp(z);
  return 6.0 * p * p - 0.5 * k_.g2;
}

void Weierstrass::wp_pair(cplx z, cplx& p, cplx& pp) const {
  Reduced r = reduce(z);
  cplx ww = r.w * r.w;
  if (r.cls == 0) {
    if (r.w == cplx(0.0, 0.0)) { p = cplx(kInf, 0.0); pp = cplx(kInf, 0.0); return; }
    p = 1.0 / ww + ww * horner(c_ + 2, kTerms - 1, ww);
    pp = -2.0 / (ww * r.w) + r.w * horner(cd_ + 2, kTerms - 1, ww);
    return;
  }
  int row = table_row(r.cls);
  p = horner(a_[row], kTerms + 1, ww);
  pp = r.w * horner(ad_[row] + 1, kTerms, ww);
}

cplx Weierstrass::zeta(cplx z) const {
  Reduced r = reduce(z);
  cplx ww = r.w * r.w;
  cplx quasi = 2.0 * static_cast<double>(r.m) * k_.zeta_half +
               2.0 * static_cast<double>(r.n) * k_.zeta_half_i;
  if (r.cls == 0) {
    if (r.w == cplx(0.0, 0.0)) return cplx(kInf, 0.0);
    return 1.0 / r.w - r.w * ww * horner(cz_ + 2, kTerms - 1, ww) + quasi;
  }
  int row = table_row(r.cls);
  // zeta(h + w) = zeta(h) - sum_{k>=0} a_k w^{2k+1}/(2k+1)
  return zeta_at_[row] - r.w * horner(az_[row], kTerms + 1, ww) + quasi;
}

cplx Weierstrass::wp_shifted(cplx z, HalfPeriod h) const {
  switch (h) {
    case HalfPeriod::h1: return wp(z + cplx(0.5, 0.0));
    case HalfPeriod::h2: return wp(z + cplx(0.5, 0.5));
    default: return wp(z + cplx(0.0, 0.5));
  }
}

cplx Weierstrass::wp_shifted_addition(cplx z, HalfPeriod h) const {
  cplx p = wp(z);
  double e1 = k_.e1;
  switch (h) {
    case HalfPeriod::h1: return e1 + 2.0 * e1 * e1 / (p - e1);
    case HalfPeriod::h2: return -e1 * e1 / p;
    default: return -e1 + 2.0 * e1 * e1 / (p + e1);
  }
}

double Weierstrass::dist_to_lattice(cplx z) {
  double x = z.real() - std::nearbyint(z.real());
  double y = z.imag() - std::nearbyint(z.imag());
  return std::hypot(x, y);
}

const Weierstrass& engine() {
  static const Weierstrass w;
  return w;
}

} // namespace wpmin::ell
