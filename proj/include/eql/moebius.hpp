#pragma once

// Real Möbius maps (PSL_2(R)) acting on the half-plane, the disk (through
// the Cayley conjugation) and the circle at infinity, with classification,
// translation length, axes and the side tests used by laminations.

#include <algorithm>
#include <array>
#include <cmath>

#include "eql/geometry.hpp"

namespace eql {

namespace detail {

// Unnormalized real 2x2 matrix, used while assembling maps whose
// intermediate determinants may be negative.
struct Raw {
  double a, b, c, d;
  Raw mul(const Raw& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Raw adj() const { return {d, -b, -c, a}; }
  double det() const { return a * d - b * c; }
};

inline double pdet(const BoundaryPoint& u, const BoundaryPoint& w) {
  return u.px() * w.py() - w.px() * u.py();
}

// Raw map sending p -> 0 and q -> inf (determinant sign unconstrained).
inline Raw to_zero_inf(const BoundaryPoint& p, const BoundaryPoint& q) {
  return {p.py(), -p.px(), q.py(), -q.px()};
}

// Raw map sending (p, q, r) -> (0, 1, inf).
inline Raw to_zero_one_inf(const BoundaryPoint& p, const BoundaryPoint& q,
                           const BoundaryPoint& r) {
  double k1 = pdet(q, r), k2 = pdet(q, p);
  return {k1 * p.py(), -k1 * p.px(), k2 * r.py(), -k2 * r.px()};
}

}  // namespace detail

class MoebiusMap {
 public:
  MoebiusMap() : a_(1), b_(0), c_(0), d_(1) {}

  MoebiusMap(double a, double b, double c, double d) {
    double det = a * d - b * c;
    if (!(det > 0) || !std::isfinite(det))
      throw ValidationError("MoebiusMap: determinant must be positive and finite");
    double s = std::sqrt(det);
    a_ = a / s;
    b_ = b / s;
    c_ = c / s;
    d_ = d / s;
  }

  explicit MoebiusMap(const detail::Raw& r) : MoebiusMap(r.a, r.b, r.c, r.d) {}

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }
  double trace() const { return a_ + d_; }

  MoebiusMap inverse() const {
    MoebiusMap m;
    m.a_ = d_;
    m.b_ = -b_;
    m.c_ = -c_;
    m.d_ = a_;
    return m;
  }

  MoebiusMap operator*(const MoebiusMap& o) const {
    MoebiusMap m;
    m.a_ = a_ * o.a_ + b_ * o.c_;
    m.b_ = a_ * o.b_ + b_ * o.d_;
    m.c_ = c_ * o.a_ + d_ * o.c_;
    m.d_ = c_ * o.b_ + d_ * o.d_;
    return m;
  }

  BoundaryPoint apply(const BoundaryPoint& p) const {
    return BoundaryPoint::projective(a_ * p.px() + b_ * p.py(),
                                     c_ * p.px() + d_ * p.py());
  }

  HPoint apply(const HPoint& p) const {
    Complex w = (a_ * p.z() + b_) / (c_ * p.z() + d_);
    return HPoint(w.real(), std::max(w.imag(), 1e-300));
  }

  DPoint apply(const DPoint& p) const { return to_disk(apply(from_disk(p))); }

  Geodesic apply(const Geodesic& g) const {
    return Geodesic(apply(g.p()), apply(g.q()));
  }

  GeodesicArc apply(const GeodesicArc& arc) const {
    return GeodesicArc(apply(arc.start), apply(arc.end));
  }

  // Equality in PSL_2(R): entries agree up to a global sign.
  bool approx_identity(double tol = 1e-9) const {
    double s = trace() >= 0 ? 1.0 : -1.0;
    return std::abs(s * a_ - 1.0) <= tol && std::abs(s * b_) <= tol &&
           std::abs(s * c_) <= tol && std::abs(s * d_ - 1.0) <= tol;
  }

  bool approx_equal(const MoebiusMap& o, double tol = 1e-9) const {
    return (*this * o.inverse()).approx_identity(tol);
  }

 private:
  double a_, b_, c_, d_;
};

enum class MoebiusClass { Identity, Elliptic, Parabolic, Hyperbolic };

inline MoebiusClass classify(const MoebiusMap& g, double tol = 1e-11) {
  if (g.approx_identity(tol)) return MoebiusClass::Identity;
  double t = std::abs(g.trace());
  if (t > 2.0 + tol) return MoebiusClass::Hyperbolic;
  if (t < 2.0 - tol) return MoebiusClass::Elliptic;
  return MoebiusClass::Parabolic;
}

// Translation length along the axis: 2*acosh(|tr|/2) for hyperbolic maps,
// zero for every other class.
inline double translation_length(const MoebiusMap& g, double tol = 1e-11) {
  if (classify(g, tol) != MoebiusClass::Hyperbolic) return 0.0;
  return 2.0 * std::acosh(0.5 * std::abs(g.trace()));
}

struct OrientedAxis {
  BoundaryPoint repelling, attracting;
  Geodesic geodesic() const { return Geodesic(repelling, attracting); }
};

// Fixed points of a hyperbolic map, ordered (repelling, attracting).
// The eigenvector of the eigenvalue with |lambda| > 1 is attracting: the
// boundary derivative there is 1/lambda^2.
inline OrientedAxis axis(const MoebiusMap& g, double tol = 1e-11) {
  if (classify(g, tol) != MoebiusClass::Hyperbolic)
    throw ValidationError("axis: map is not hyperbolic");
  double a = g.a(), b = g.b(), c = g.c(), d = g.d();
  double t = a + d;
  if (t < 0) {
    a = -a; b = -b; c = -c; d = -d; t = -t;
  }
  double s = std::sqrt(t * t - 4.0);
  auto eigenvector = [&](double l) {
    double n1 = std::hypot(b, l - a), n2 = std::hypot(l - d, c);
    if (n1 >= n2) return BoundaryPoint::projective(b, l - a);
    return BoundaryPoint::projective(l - d, c);
  };
  return {eigenvector(0.5 * (t - s)), eigenvector(0.5 * (t + s))};
}

// The hyperbolic translation of the given length whose axis is oriented
// from `repelling` to `attracting`.
inline MoebiusMap translation_along(const BoundaryPoint& repelling,
                                    const BoundaryPoint& attracting,
                                    double length) {
  detail::Raw s = detail::to_zero_inf(repelling, attracting);
  detail::Raw d{std::exp(0.5 * length), 0, 0, std::exp(-0.5 * length)};
  return MoebiusMap(s.adj().mul(d).mul(s));
}

// The unique orientation-preserving Möbius map with p -> P, q -> Q, r -> R.
// Throws when the two triples are oppositely oriented.
inline MoebiusMap moebius_three_points(const BoundaryPoint& p, const BoundaryPoint& q,
                                       const BoundaryPoint& r, const BoundaryPoint& P,
                                       const BoundaryPoint& Q, const BoundaryPoint& R) {
  detail::Raw A = detail::to_zero_one_inf(p, q, r);
  detail::Raw B = detail::to_zero_one_inf(P, Q, R);
  return MoebiusMap(B.adj().mul(A));
}

// Signed side of an interior point relative to the geodesic (p, q): the
// geodesic is normalized to (0, inf) and the value is Re(w)/|Im(w)| of the
// image, i.e. sinh of the signed distance to the geodesic.
inline double geodesic_side(const Geodesic& g, const HPoint& z) {
  detail::Raw s = detail::to_zero_inf(g.p(), g.q());
  Complex w = (s.a * z.z() + s.b) / (s.c * z.z() + s.d);
  double im = std::abs(w.imag());
  if (im < 1e-300) im = 1e-300;
  return w.real() / im;
}

// Side of a boundary point: -1/+1, or 0 when x is an endpoint of g.
inline int boundary_side(const Geodesic& g, const BoundaryPoint& x,
                         double tol = kGeomTol) {
  if (approx_equal(x, g.p(), tol) || approx_equal(x, g.q(), tol)) return 0;
  double num = detail::pdet(x, g.p());
  double den = detail::pdet(x, g.q());
  return num * den > 0 ? 1 : -1;
}

inline bool geodesics_cross(const Geodesic& g1, const Geodesic& g2,
                            double tol = kGeomTol) {
  return boundary_side(g1, g2.p(), tol) * boundary_side(g1, g2.q(), tol) < 0;
}

// Length of the common perpendicular between disjoint geodesics; zero for
// equal geodesics and for geodesics sharing an ideal endpoint.
inline double geodesic_distance(const Geodesic& g1, const Geodesic& g2) {
  if (g1.same_as(g2)) return 0.0;
  if (approx_equal(g1.p(), g2.p()) || approx_equal(g1.p(), g2.q()) ||
      approx_equal(g1.q(), g2.p()) || approx_equal(g1.q(), g2.q()))
    return 0.0;
  if (geodesics_cross(g1, g2))
    throw ValidationError("geodesic_distance: geodesics cross");
  // Normalize g1 to (0, inf); g2 lands at (u, v) on one side of 0.
  BoundaryPoint p = g1.p(), q = g1.q();
  if (detail::pdet(p, q) < 0) std::swap(p, q);
  MoebiusMap s{detail::to_zero_inf(p, q)};
  double u = std::abs(s.apply(g2.p()).value());
  double v = std::abs(s.apply(g2.q()).value());
  double lo = std::min(u, v), hi = std::max(u, v);
  return std::log((std::sqrt(hi) + std::sqrt(lo)) /
                  (std::sqrt(hi) - std::sqrt(lo)));
}

inline double point_to_geodesic_distance(const HPoint& z, const Geodesic& g) {
  return std::asinh(std::abs(geodesic_side(g, z)));
}

// Distance from a point to a closed geodesic segment.
inline double point_to_arc_distance(const HPoint& z, const GeodesicArc& arc) {
  Geodesic line = geodesic_through(arc.start, arc.end);
  BoundaryPoint p = line.p(), q = line.q();
  if (detail::pdet(p, q) < 0) std::swap(p, q);
  MoebiusMap s{detail::to_zero_inf(p, q)};
  Complex w = s.apply(z).z();
  double h1 = std::abs(s.apply(arc.start).z());
  double h2 = std::abs(s.apply(arc.end).z());
  if (h1 > h2) std::swap(h1, h2);
  double foot = std::abs(w);
  if (foot >= h1 && foot <= h2) return std::asinh(std::abs(w.real()) / w.imag());
  return std::min(hyp_distance(z, arc.start), hyp_distance(z, arc.end));
}

}  // namespace eql
