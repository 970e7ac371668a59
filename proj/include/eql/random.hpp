#pragma once

// Seeded generators shared by the test suite and the experiment harness.

#include <cmath>
#include <random>
#include <vector>

#include "eql/geometry.hpp"
#include "eql/lamination.hpp"
#include "eql/moebius.hpp"

namespace eql {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline BoundaryPoint random_boundary_point(Rng& rng) {
  return BoundaryPoint::from_circle_angle(uniform(rng, 0.0, 2.0 * kPi));
}

inline HPoint random_hpoint(Rng& rng) {
  return HPoint(uniform(rng, -3.0, 3.0), std::exp(uniform(rng, -2.0, 2.0)));
}

// Random orientation-preserving Möbius map: image of (0, 1, inf) under a
// random counterclockwise triple.
inline MoebiusMap random_moebius(Rng& rng) {
  for (;;) {
    double t1 = uniform(rng, 0.0, 2.0 * kPi);
    double t2 = t1 + uniform(rng, 0.05, kPi);
    double t3 = t2 + uniform(rng, 0.05, kPi);
    if (t3 - t1 > 2.0 * kPi - 0.05) continue;
    return moebius_three_points(
        BoundaryPoint(0.0), BoundaryPoint(1.0), BoundaryPoint::infinity(),
        BoundaryPoint::from_circle_angle(t1), BoundaryPoint::from_circle_angle(t2),
        BoundaryPoint::from_circle_angle(t3));
  }
}

// Random disjoint chords of the circle with weights in [w_lo, w_hi].
inline FiniteMeasuredLamination random_lamination(Rng& rng, int max_leaves,
                                                  double w_lo = 0.1,
                                                  double w_hi = 1.0) {
  std::vector<WeightedLeaf> leaves;
  int attempts = 0;
  while ((int)leaves.size() < max_leaves && attempts < 60 * max_leaves) {
    ++attempts;
    BoundaryPoint a = random_boundary_point(rng);
    BoundaryPoint b = random_boundary_point(rng);
    if (circle_gap(a, b) < 0.05) continue;
    Geodesic g(a, b);
    bool ok = true;
    for (const auto& l : leaves) {
      if (geodesics_cross(l.g, g) || l.g.same_as(g) ||
          circle_gap(l.g.p(), a) < 0.02 || circle_gap(l.g.p(), b) < 0.02 ||
          circle_gap(l.g.q(), a) < 0.02 || circle_gap(l.g.q(), b) < 0.02) {
        ok = false;
        break;
      }
    }
    if (ok) leaves.push_back({g, uniform(rng, w_lo, w_hi)});
  }
  return FiniteMeasuredLamination(std::move(leaves));
}

}  // namespace eql
