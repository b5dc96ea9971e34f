// Direct lattice sums with compensated accumulation and tail extrapolation.

#include "core/lattice_oracle.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "core/kahan.hpp"

namespace wpmin::ell {

OracleValues lattice_sum_box(cplx z, int box) {
  if (box < 4) throw std::invalid_argument("lattice_sum_box: box too small");
  Kahan<cplx> p, pp, zt;
  // omega = 0 terms.
  p.add(1.0 / (z * z));
  pp.add(-2.0 / (z * z * z));
  zt.add(1.0 / z);
  for (int m = -box; m <= box; ++m) {
    for (int n = -box; n <= box; ++n) {
      if (m == 0 && n == 0) continue;
      cplx w(m, n);
      cplx d = z - w;
      cplx iw = 1.0 / w;
      cplx iw2 = iw * iw;
      cplx id = 1.0 / d;
      cplx id2 = id * id;
      p.add(id2 - iw2);
      pp.add(-2.0 * id2 * id);
      zt.add(id + iw + z * iw2);
    }
  }
  return {p.value(), pp.value(), zt.value()};
}

double g4_box(int box) {
  Kahan<double> s;
  for (int m = -box; m <= box; ++m) {
    for (int n = -box; n <= box; ++n) {
      if (m == 0 && n == 0) continue;
      double r2 = double(m) * m + double(n) * n;
      // Re(1/omega^4) summed pairwise; the imaginary parts cancel by the
      // m <-> -m symmetry, so sum the real part directly:
      // Re(omega^-4) = (x^4 - 6 x^2 y^2 + y^4)/r^8 with x=m, y=n.
      double x2 = double(m) * m, y2 = double(n) * n;
      double num = x2 * x2 - 6.0 * x2 * y2 + y2 * y2;
      double r4 = r2 * r2;
      s.add(num / (r4 * r4));
    }
  }
  return s.value();
}

double g4_extrapolated(int box) {
  if (box % 4 != 0) throw std::invalid_argument("g4_extrapolated: box must be divisible by 4");
  const std::array<int, 4> nodes = {box / 4, box / 2, box, 2 * box};
  // Fit g4_box(n) = A + B/n^2 + C/n^3 + D/n^4 through the four nodes and
  // return A.  Solve the 4x4 system by Gaussian elimination with partial
  // pivoting; it is tiny and well scaled after the 1/n^k columns.
  double M[4][5];
  for (int i = 0; i < 4; ++i) {
    double n = nodes[i];
    M[i][0] = 1.0;
    M[i][1] = 1.0 / (n * n);
    M[i][2] = M[i][1] / n;
    M[i][3] = M[i][2] / n;
    M[i][4] = g4_box(nodes[i]);
  }
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
    for (int c = 0; c < 5; ++c) std::swap(M[col][c], M[piv][c]);
    if (M[col][col] == 0.0) throw std::runtime_error("g4_extrapolated: singular fit");
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      double f = M[r][col] / M[col][col];
      for (int c = col; c < 5; ++c) M[r][c] -= f * M[col][c];
    }
  }
  return M[0][4] / M[0][0];
}

OracleValues lattice_sum(cplx z, int box) {
  OracleValues v = lattice_sum_box(z, box);
  double dg4 = g4_extrapolated(box) - g4_box(box);
  v.wp += 3.0 * z * z * dg4;
  v.wp_prime += 6.0 * z * dg4;
  v.zeta -= z * z * z * dg4;
  return v;
}

} // namespace wpmin::ell
