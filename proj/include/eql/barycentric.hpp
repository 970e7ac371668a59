#pragma once

// Conformal barycentric extension of circle homeomorphisms to the disk,
// numerical Beltrami coefficients of the extension, and the dilatation-based
// distance proxy between circle maps.
//
// The barycenter w of the push-forward of harmonic measure (seen from z)
// under h solves  V(w) = sum_j omega_j (u_j - w)/(1 - conj(w) u_j) = 0,
// where the u_j are quadrature images h(zeta_j) on the circle. Nodes are
// uniform harmonic-measure angles transported by the automorphism centered
// at z, with the quadrature split at the map's kink angles (piecewise
// Gauss-Legendre): earthquake boundary maps are only piecewise smooth and a
// kink inside a panel would cap the accuracy far above what the
// finite-difference Beltrami step needs.

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "eql/circle_map.hpp"
#include "eql/geometry.hpp"

namespace eql {

struct DEParams {
  int quadrature = 512;  // total node budget over all panels
  double tol = 1e-9;     // accepted barycenter residual
};

namespace detail {

// 16-point Gauss-Legendre rule on [-1, 1].
inline const double kGlNode[16] = {
    -0.98940093499164993, -0.94457502307323258, -0.86563120238783175,
    -0.75540440835500303, -0.61787624440264375, -0.45801677765722739,
    -0.28160355077925891, -0.09501250983763744, 0.09501250983763744,
    0.28160355077925891,  0.45801677765722739,  0.61787624440264375,
    0.75540440835500303,  0.86563120238783175,  0.94457502307323258,
    0.98940093499164993};
inline const double kGlWeight[16] = {
    0.027152459411754095, 0.062253523938647893, 0.095158511682492785,
    0.12462897125553387,  0.14959598881657673,  0.16915651939500254,
    0.18260341504492359,  0.18945061045506850,  0.18945061045506850,
    0.18260341504492359,  0.16915651939500254,  0.14959598881657673,
    0.12462897125553387,  0.095158511682492785, 0.062253523938647893,
    0.027152459411754095};

struct BarycenterData {
  std::vector<Complex> u;
  std::vector<double> omega;  // sums to 1
};

inline BarycenterData barycenter_nodes(const CircleMap& h, Complex z,
                                       const DEParams& params) {
  // Split the harmonic-measure parameter t at preimages of the kink angles
  // under the automorphism zeta(t) = (e^{it} + z)/(1 + conj(z) e^{it}).
  std::vector<double> cuts;
  for (double tb : h.breakpoints) {
    Complex ub = std::polar(1.0, tb);
    cuts.push_back(angle_mod(std::arg((ub - z) / (1.0 - std::conj(z) * ub))));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<std::pair<double, double>> segments;
  if (cuts.empty()) {
    segments.emplace_back(0.0, 2.0 * kPi);
  } else {
    for (size_t i = 0; i < cuts.size(); ++i) {
      double a = cuts[i];
      double b = i + 1 < cuts.size() ? cuts[i + 1] : cuts[0] + 2.0 * kPi;
      if (b - a > 1e-13) segments.emplace_back(a, b);
    }
  }

  int panel_budget = std::max<int>(params.quadrature / 16, (int)segments.size());
  BarycenterData data;
  for (auto [a, b] : segments) {
    int panels = std::max(1, (int)std::lround(panel_budget * (b - a) / (2.0 * kPi)));
    double plen = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
      double mid = a + (p + 0.5) * plen;
      for (int q = 0; q < 16; ++q) {
        double t = mid + 0.5 * plen * kGlNode[q];
        Complex e = std::polar(1.0, t);
        Complex zeta = (e + z) / (1.0 + std::conj(z) * e);
        BoundaryPoint img = h.fwd(BoundaryPoint::from_circle_point(zeta));
        data.u.push_back(img.circle_point());
        data.omega.push_back(kGlWeight[q] * 0.5 * plen / (2.0 * kPi));
      }
    }
  }
  return data;
}

}  // namespace detail

// Barycentric extension of h evaluated at z: damped Newton on the barycenter
// field with Wirtinger derivatives, polished to near machine precision (the
// finite-difference Beltrami below divides the residual by a ~1e-5 step, so
// a merely tol-accurate solve would drown the derivatives in solver noise).
inline DPoint de_extend(const CircleMap& h, const DPoint& z,
                        const DEParams& params = {}) {
  if (params.quadrature < 64 || !(params.tol > 0))
    throw ValidationError("de_extend: need quadrature >= 64 and tol > 0");
  detail::BarycenterData nodes = detail::barycenter_nodes(h, z.z(), params);
  size_t m = nodes.u.size();

  auto field = [&](Complex w) {
    Complex v = 0;
    for (size_t j = 0; j < m; ++j)
      v += nodes.omega[j] * (nodes.u[j] - w) / (1.0 - std::conj(w) * nodes.u[j]);
    return v;
  };

  Complex w = 0;
  for (size_t j = 0; j < m; ++j) w += nodes.omega[j] * nodes.u[j];
  if (std::abs(w) > 0.9) w *= 0.9 / std::abs(w);

  Complex V = field(w);
  double res = std::abs(V);
  for (int it = 0; it < 80 && res > 1e-15; ++it) {
    Complex A = 0, B = 0;
    for (size_t j = 0; j < m; ++j) {
      Complex den = 1.0 - std::conj(w) * nodes.u[j];
      A += nodes.omega[j] * (-1.0) / den;
      B += nodes.omega[j] * (nodes.u[j] - w) * nodes.u[j] / (den * den);
    }
    double det = std::norm(A) - std::norm(B);
    Complex r = -V;
    Complex dw = std::abs(det) > 1e-300
                     ? (std::conj(A) * r - B * std::conj(r)) / det
                     : V;  // fall back to a fixed-point step
    bool accepted = false;
    for (int halve = 0; halve < 40; ++halve) {
      Complex cand = w + dw;
      if (std::abs(cand) < 1.0 - 1e-14) {
        Complex Vc = field(cand);
        if (std::abs(Vc) < res) {
          w = cand;
          V = Vc;
          res = std::abs(Vc);
          accepted = true;
          break;
        }
      }
      dw *= 0.5;
    }
    if (!accepted) break;
  }
  if (res > params.tol)
    throw NumericalError("de_extend: barycenter solve stalled, residual " +
                         std::to_string(res));
  return DPoint(w);
}

struct BeltramiSample {
  DPoint point;
  Complex value;
};

// Beltrami coefficient of an arbitrary interior map by central differences.
inline BeltramiSample beltrami(const std::function<Complex(Complex)>& F,
                               const DPoint& z, double step) {
  if (!(step > 0) || step > 0.5 * (1.0 - z.abs()))
    throw ValidationError("beltrami: step must be positive and small next to the rim");
  Complex zc = z.z();
  Complex fx = (F(zc + step) - F(zc - step)) / (2.0 * step);
  Complex fy = (F(zc + Complex(0, step)) - F(zc - Complex(0, step))) / (2.0 * step);
  Complex dz = 0.5 * (fx - Complex(0, 1) * fy);
  Complex dzbar = 0.5 * (fx + Complex(0, 1) * fy);
  Complex mu = dzbar / dz;
  if (!(std::abs(mu) < 1.0) || !std::isfinite(std::abs(mu)))
    throw NumericalError("beltrami: |coefficient| >= 1 (step too large or extension inaccurate)");
  return {z, mu};
}

// Beltrami coefficient of the barycentric extension of a circle map.
inline BeltramiSample beltrami(const CircleMap& h, const DPoint& z,
                               double step = 0.0, const DEParams& params = {}) {
  if (step <= 0) step = 1e-4 * (1.0 - z.abs());
  return beltrami(
      [&](Complex w) { return de_extend(h, DPoint(w), params).z(); }, z, step);
}

inline std::vector<DPoint> default_proxy_grid() {
  std::vector<DPoint> grid;
  grid.emplace_back(0.0, 0.0);
  for (double r : {0.3, 0.6, 0.9})
    for (int k = 0; k < 16; ++k) {
      double t = 2.0 * kPi * k / 16.0;
      grid.emplace_back(r * std::cos(t), r * std::sin(t));
    }
  return grid;
}

// Quasiconformal distance proxy: maximal sampled dilatation of the
// barycentric extension of h1 o h2^{-1}. Vanishes on equal Teichmüller
// classes (Möbius post-composition leaves the Beltrami coefficient alone);
// an upper-bound-flavored surrogate, not the Teichmüller metric itself.
inline double distance_proxy(const CircleMap& h1, const CircleMap& h2,
                             const std::vector<DPoint>& grid,
                             const DEParams& params = {}) {
  if (grid.empty()) throw ValidationError("distance_proxy: empty grid");
  CircleMap k = compose(h1, inverse(h2));
  double beta = 0;
  for (const DPoint& z : grid)
    beta = std::max(beta, std::abs(beltrami(k, z, 0.0, params).value));
  return 0.5 * std::log((1.0 + beta) / (1.0 - beta));
}

inline double distance_proxy(const CircleMap& h1, const CircleMap& h2,
                             const DEParams& params = {}) {
  return distance_proxy(h1, h2, default_proxy_grid(), params);
}

}  // namespace eql
