#pragma once

// Boxes of geodesics [a,b]x[c,d] on the circle at infinity, their Liouville
// measure, and the normalizing Möbius map onto the standard unit box.

#include <cmath>

#include "eql/geometry.hpp"
#include "eql/moebius.hpp"

namespace eql {

// Second corner of the standard box [0,1]x[c*,inf] with Liouville measure 1:
// log(c/(c-1)) = 1  =>  c = e/(e-1).
inline const double kStandardC = std::exp(1.0) / (std::exp(1.0) - 1.0);

// Quadruple of distinct boundary points in counterclockwise circular order.
class GeodesicBox {
 public:
  GeodesicBox(BoundaryPoint a, BoundaryPoint b, BoundaryPoint c, BoundaryPoint d)
      : a_(a), b_(b), c_(c), d_(d) {
    double ta = a_.circle_angle();
    double tb = angle_mod(b_.circle_angle() - ta);
    double tc = angle_mod(c_.circle_angle() - ta);
    double td = angle_mod(d_.circle_angle() - ta);
    double eps = 1e-13;
    if (tb < eps || tc < tb + eps || td < tc + eps || td > 2.0 * kPi - eps)
      throw ValidationError("GeodesicBox: corners must be distinct and counterclockwise");
  }

  const BoundaryPoint& a() const { return a_; }
  const BoundaryPoint& b() const { return b_; }
  const BoundaryPoint& c() const { return c_; }
  const BoundaryPoint& d() const { return d_; }

 private:
  BoundaryPoint a_, b_, c_, d_;
};

inline GeodesicBox standard_box() {
  return GeodesicBox(BoundaryPoint(0.0), BoundaryPoint(1.0),
                     BoundaryPoint(kStandardC), BoundaryPoint::infinity());
}

// Liouville measure log((c-a)(d-b)/((d-a)(c-b))) evaluated with projective
// determinants so that an infinite corner cancels algebraically instead of
// overflowing.
inline double liouville_measure(const GeodesicBox& Q) {
  double n1 = detail::pdet(Q.c(), Q.a());
  double n2 = detail::pdet(Q.d(), Q.b());
  double d1 = detail::pdet(Q.d(), Q.a());
  double d2 = detail::pdet(Q.c(), Q.b());
  double ratio = (n1 * n2) / (d1 * d2);
  if (!(ratio > 0) || !std::isfinite(ratio))
    throw ValidationError("liouville_measure: degenerate box");
  return std::log(ratio);
}

inline GeodesicBox apply(const MoebiusMap& g, const GeodesicBox& Q) {
  return GeodesicBox(g.apply(Q.a()), g.apply(Q.b()), g.apply(Q.c()), g.apply(Q.d()));
}

// The unique Möbius map with g(Q) = Qstar, both boxes of Liouville measure 1.
// Interpolates three corners; the fourth is forced by Liouville invariance
// and re-checked.
inline MoebiusMap moebius_from_box(const GeodesicBox& Q, const GeodesicBox& Qstar,
                                   double tol = 1e-9) {
  if (std::abs(liouville_measure(Q) - 1.0) > tol ||
      std::abs(liouville_measure(Qstar) - 1.0) > tol)
    throw ValidationError("moebius_from_box: boxes must have Liouville measure 1");
  MoebiusMap g = moebius_three_points(Q.a(), Q.b(), Q.c(),
                                      Qstar.a(), Qstar.b(), Qstar.c());
  if (circle_gap(g.apply(Q.d()), Qstar.d()) > 1e-7)
    throw NumericalError("moebius_from_box: fourth corner mismatch");
  return g;
}

}  // namespace eql
