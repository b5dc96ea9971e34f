// Residual computations for the identity suite.

#include "rep/identities.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include "core/elliptic.hpp"

namespace wpmin::rep {

using ell::engine;
using cplx = std::complex<double>;

namespace {

// Distance to the nearest half-lattice point (m/2, n/2); every singular or
// degenerate spot of the identities below lives there.
double half_lattice_distance(cplx z) {
  double x = 2.0 * z.real(), y = 2.0 * z.imag();
  return 0.5 * std::hypot(x - std::nearbyint(x), y - std::nearbyint(y));
}

std::vector<cplx> sample_points(int n, std::uint64_t seed, double min_dist) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<cplx> pts;
  pts.reserve(n);
  while (static_cast<int>(pts.size()) < n) {
    cplx z(uni(rng), uni(rng));
    if (half_lattice_distance(z) >= min_dist) pts.push_back(z);
  }
  return pts;
}

IdentityCheck make_check(std::string id, double tol,
                         const std::vector<cplx>& pts,
                         const std::function<double(cplx)>& residual) {
  double worst = 0.0;
  for (cplx z : pts) worst = std::max(worst, residual(z));
  return {std::move(id), worst, tol, worst <= tol};
}

double rel(cplx diff, cplx scale) {
  return std::abs(diff) / std::max(1.0, std::abs(scale));
}

} // namespace

std::vector<IdentityCheck> differential_checks(int points, std::uint64_t seed) {
  const auto& W = engine();
  const double e1 = W.e1();
  auto pts = sample_points(points, seed, 0.15);
  std::vector<IdentityCheck> out;

  out.push_back(make_check("wp_ode_square", 1e-9, pts, [&](cplx z) {
    cplx p, pp;
    W.wp_pair(z, p, pp);
    cplx lhs = pp * pp;
    cplx rhs = 4.0 * p * (p - e1) * (p + e1);
    return rel(lhs - rhs, lhs);
  }));

  // Second derivative by Richardson-extrapolated central differences of wp',
  // deliberately not using the 6 wp^2 - g2/2 shortcut it is checked against.
  out.push_back(make_check("wp_second_relation", 1e-9, pts, [&](cplx z) {
    const double h = 5e-5;
    auto diff = [&](double step) {
      return (W.wp_prime(z + step) - W.wp_prime(z - step)) / (2.0 * step);
    };
    cplx ppp = (4.0 * diff(h / 2) - diff(h)) / 3.0;
    cplx p = W.wp(z);
    cplx rhs = ppp / 6.0 + e1 * e1 / 3.0;
    return rel(p * p - rhs, p * p);
  }));

  return out;
}

std::vector<IdentityCheck> fraction_identity_checks(int points, std::uint64_t seed) {
  const auto& W = engine();
  const double e1 = W.e1();
  auto pts = sample_points(points, seed + 1, 0.1);
  std::vector<IdentityCheck> out;

  struct Parts {
    cplx p, pp, u, v, s1, s2;
  };
  auto parts = [&](cplx z) {
    Parts q;
    W.wp_pair(z, q.p, q.pp);
    q.u = 1.0 / (q.p - e1);
    q.v = 1.0 / (q.p + e1);
    q.s1 = W.wp(z - cplx(0.5, 0.0));
    q.s2 = W.wp(z - cplx(0.0, 0.5));
    return q;
  };

  using Fn = std::function<double(cplx)>;
  std::pair<const char*, Fn> checks[] = {
      {"fraction_identity_1",
       [&](cplx z) {
         auto q = parts(z);
         cplx lhs = q.u - q.v;
         cplx rhs = (q.s1 - q.s2 - 2.0 * e1) / (2.0 * e1 * e1);
         return rel(lhs - rhs, lhs);
       }},
      {"fraction_identity_2",
       [&](cplx z) {
         auto q = parts(z);
         cplx lhs = q.p * (q.u - q.v);
         cplx rhs = (q.s1 + q.s2) / (2.0 * e1);
         return rel(lhs - rhs, lhs);
       }},
      {"fraction_identity_3",
       [&](cplx z) {
         auto q = parts(z);
         cplx lhs = q.p * q.p * (q.u - q.v);
         cplx rhs = e1 + 0.5 * (q.s1 - q.s2);
         return rel(lhs - rhs, lhs);
       }},
      {"fraction_identity_4",
       [&](cplx z) {
         auto q = parts(z);
         cplx lhs = q.p * q.p * q.p * (q.u - q.v);
         cplx rhs = 2.0 * e1 * q.p + 0.5 * e1 * (q.s1 + q.s2);
         return rel(lhs - rhs, lhs);
       }},
      {"fraction_identity_5",
       [&](cplx z) {
         auto q = parts(z);
         cplx p2 = q.p * q.p;
         cplx lhs = p2 * p2 * (q.u - q.v);
         cplx rhs = 2.0 * e1 * p2 + e1 * e1 * e1 + 0.5 * e1 * e1 * (q.s1 - q.s2);
         return rel(lhs - rhs, lhs);
       }},
      {"fraction_identity_6",
       [&](cplx z) {
         auto q = parts(z);
         cplx lhs = q.pp * q.p * (q.u - q.v);
         cplx rhs = e1 * q.pp * (q.u + q.v);
         return rel(lhs - rhs, lhs);
       }},
      {"fraction_identity_7",
       [&](cplx z) {
         auto q = parts(z);
         cplx lhs = q.pp * q.p * q.p * (q.u - q.v);
         cplx rhs = 2.0 * e1 * q.pp + e1 * e1 * q.pp * (q.u - q.v);
         return rel(lhs - rhs, lhs);
       }},
  };
  for (auto& [name, fn] : checks) out.push_back(make_check(name, 1e-8, pts, fn));
  return out;
}

std::vector<IdentityCheck> antiderivative_checks(int points, std::uint64_t seed) {
  const auto& W = engine();
  const double e1 = W.e1();
  auto pts = sample_points(points, seed + 2, 0.15);
  const cplx h1(0.5, 0.0), h3(0.0, 0.5);

  auto zme = [&](cplx z) { return W.zeta(z - h1); };  // zeta(z - 1/2)
  auto zmi = [&](cplx z) { return W.zeta(z - h3); };  // zeta(z - i/2)

  struct Entry {
    std::string id;
    std::function<cplx(cplx)> F;      // antiderivative
    std::function<cplx(cplx)> f;      // integrand
  };
  std::vector<Entry> entries;

  // Antiderivatives of wp^k/(wp - e1), k = 0..3.
  entries.push_back({"antiderivative_pole_0",
                     [&](cplx z) { return -zme(z) / (2 * e1 * e1) - z / (2 * e1); },
                     [&](cplx z) { return 1.0 / (W.wp(z) - e1); }});
  entries.push_back({"antiderivative_pole_1",
                     [&](cplx z) { return 0.5 * z - zme(z) / (2 * e1); },
                     [&](cplx z) { cplx p = W.wp(z); return p / (p - e1); }});
  entries.push_back({"antiderivative_pole_2",
                     [&](cplx z) { return 0.5 * e1 * z - W.zeta(z) - 0.5 * zme(z); },
                     [&](cplx z) { cplx p = W.wp(z); return p * p / (p - e1); }});
  entries.push_back(
      {"antiderivative_pole_3",
       [&](cplx z) {
         return (5.0 / 6.0) * e1 * e1 * z + W.wp_prime(z) / 6.0 -
                e1 * W.zeta(z) - 0.5 * e1 * zme(z);
       },
       [&](cplx z) { cplx p = W.wp(z); return p * p * p / (p - e1); }});

  // Antiderivatives of wp^k/(wp - e1) - wp^k/(wp + e1), k = 0..4.
  auto split = [&](cplx z, int k) {
    cplx p = W.wp(z);
    cplx pk = 1.0;
    for (int j = 0; j < k; ++j) pk *= p;
    return pk / (p - e1) - pk / (p + e1);
  };
  entries.push_back({"antiderivative_split_0",
                     [&](cplx z) {
                       return (-zme(z) + zmi(z) - 2.0 * e1 * z) / (2 * e1 * e1);
                     },
                     [&](cplx z) { return split(z, 0); }});
  entries.push_back({"antiderivative_split_1",
                     [&](cplx z) { return -(zme(z) + zmi(z)) / (2 * e1); },
                     [&](cplx z) { return split(z, 1); }});
  entries.push_back({"antiderivative_split_2",
                     [&](cplx z) { return e1 * z - 0.5 * zme(z) + 0.5 * zmi(z); },
                     [&](cplx z) { return split(z, 2); }});
  entries.push_back({"antiderivative_split_3",
                     [&](cplx z) {
                       return -2.0 * e1 * W.zeta(z) - 0.5 * e1 * zme(z) -
                              0.5 * e1 * zmi(z);
                     },
                     [&](cplx z) { return split(z, 3); }});
  entries.push_back({"antiderivative_split_4",
                     [&](cplx z) {
                       return (e1 / 3.0) * W.wp_prime(z) +
                              (5.0 / 3.0) * e1 * e1 * e1 * z -
                              0.5 * e1 * e1 * zme(z) + 0.5 * e1 * e1 * zmi(z);
                     },
                     [&](cplx z) { return split(z, 4); }});

  std::vector<IdentityCheck> out;
  // Central-difference truncation is ~ h^2/d^2 relative at distance d from
  // a pole; h = 1e-5 keeps it ~1e-8 at the 0.15 sampling floor while
  // cancellation stays near 1e-10.
  const double h = 1e-5;
  for (auto& e : entries) {
    out.push_back(make_check(e.id, 1e-6, pts, [&](cplx z) {
      cplx deriv = (e.F(z + h) - e.F(z - h)) / (2.0 * h);
      cplx want = e.f(z);
      return rel(deriv - want, want);
    }));
  }
  return out;
}

std::vector<IdentityCheck> wp_symmetry_checks(int points, std::uint64_t seed) {
  const auto& W = engine();
  const cplx w2(0.5, 0.5);
  std::mt19937_64 rng(seed + 3);
  std::uniform_real_distribution<double> uni(-0.4, 0.4);
  std::vector<cplx> offs;
  while (static_cast<int>(offs.size()) < points) {
    cplx u(uni(rng), uni(rng));
    if (half_lattice_distance(w2 + u) >= 0.1) offs.push_back(u);
  }

  std::vector<IdentityCheck> out;
  out.push_back(make_check("wp_quarter_turn", 1e-9, offs, [&](cplx u) {
    cplx lhs = W.wp(w2 + cplx(0, 1) * u);
    cplx rhs = -W.wp(w2 + u);
    return rel(lhs - rhs, lhs);
  }));
  out.push_back(make_check("wp_conjugation", 1e-9, offs, [&](cplx u) {
    cplx lhs = W.wp(w2 + std::conj(u));
    cplx rhs = std::conj(W.wp(w2 + u));
    return rel(lhs - rhs, lhs);
  }));
  out.push_back(make_check("wp_parity", 1e-9, offs, [&](cplx u) {
    cplx z = w2 + u;
    return rel(W.wp(-z) - W.wp(z), W.wp(z));
  }));
  out.push_back(make_check("zeta_parity", 1e-9, offs, [&](cplx u) {
    cplx z = w2 + u;
    return rel(W.zeta(-z) + W.zeta(z), W.zeta(z));
  }));
  return out;
}

std::vector<IdentityCheck> identity_suite(int points, std::uint64_t seed) {
  std::vector<IdentityCheck> out = differential_checks(points, seed);
  for (auto&& v : fraction_identity_checks(points, seed)) out.push_back(std::move(v));
  for (auto&& v : antiderivative_checks(points, seed)) out.push_back(std::move(v));
  for (auto&& v : wp_symmetry_checks(points, seed)) out.push_back(std::move(v));
  return out;
}

} // namespace wpmin::rep
