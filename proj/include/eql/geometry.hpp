#pragma once

// Core geometry of the hyperbolic plane in its two models: the upper
// half-plane {y > 0} with metric |dz|/y and the unit disk with metric
// 2|dz|/(1-|z|^2), plus the circle at infinity shared by both.
//
// Boundary points are kept as canonicalized projective pairs so that
// infinity is an ordinary value; all circular-order logic goes through
// the Cayley image on the unit circle.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace eql {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kGeomTol = 1e-10;   // geometric point equality
inline constexpr double kCrossTol = 1e-12;  // cross-ratio / Liouville checks

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline double angle_mod(double t) {
  t = std::fmod(t, 2.0 * kPi);
  if (t < 0) t += 2.0 * kPi;
  return t + 0.0;  // normalize -0
}

// A point of R ∪ {inf}, the circle at infinity, stored as a projective
// pair (x : y) with x^2 + y^2 = 1 and y >= 0; (1 : 0) is inf.
class BoundaryPoint {
 public:
  BoundaryPoint() : x_(1.0), y_(0.0) {}
  BoundaryPoint(double v) : x_(v), y_(1.0) { canonicalize(); }

  static BoundaryPoint infinity() { return BoundaryPoint(); }

  static BoundaryPoint projective(double x, double y) {
    BoundaryPoint p;
    p.x_ = x;
    p.y_ = y;
    p.canonicalize();
    return p;
  }

  bool is_infinite() const { return y_ == 0.0; }

  double value() const {
    if (is_infinite()) throw ValidationError("BoundaryPoint: value() of infinity");
    return x_ / y_;
  }

  double px() const { return x_; }
  double py() const { return y_; }

  // Image on the unit circle under the Cayley transform t -> (t-i)/(t+i).
  Complex circle_point() const {
    return Complex(x_ * x_ - y_ * y_, -2.0 * x_ * y_);
  }

  // Angle of the Cayley image, in [0, 2*pi); increases counterclockwise
  // as the point moves in increasing order along R toward inf.
  double circle_angle() const {
    return angle_mod(std::atan2(-2.0 * x_ * y_, x_ * x_ - y_ * y_));
  }

  static BoundaryPoint from_circle_angle(double theta) {
    double phi = -0.5 * theta;
    return projective(std::cos(phi), std::sin(phi));
  }

  static BoundaryPoint from_circle_point(Complex u) {
    double m = std::abs(u);
    if (!(m > 0) || !std::isfinite(m))
      throw ValidationError("BoundaryPoint: bad circle point");
    return from_circle_angle(std::atan2(u.imag(), u.real()));
  }

 private:
  double x_, y_;

  void canonicalize() {
    double n = std::hypot(x_, y_);
    if (!(n > 0) || !std::isfinite(n))
      throw ValidationError("BoundaryPoint: projective pair must be finite and nonzero");
    x_ /= n;
    y_ /= n;
    if (y_ < 0) {
      x_ = -x_;
      y_ = -y_;
    }
    if (y_ < 1e-14) {  // snap to the canonical representative of inf
      x_ = 1.0;
      y_ = 0.0;
    }
  }
};

inline bool approx_equal(const BoundaryPoint& a, const BoundaryPoint& b,
                         double tol = kGeomTol) {
  return std::abs(a.circle_point() - b.circle_point()) <= tol;
}

// Chordal distance between boundary points on the Cayley circle.
inline double circle_gap(const BoundaryPoint& a, const BoundaryPoint& b) {
  double m = angle_mod(a.circle_angle() - b.circle_angle());
  return std::min(m, 2.0 * kPi - m);
}

// b lies in the closed counterclockwise arc from `from` to `to`.
inline bool in_ccw_arc(const BoundaryPoint& b, const BoundaryPoint& from,
                       const BoundaryPoint& to, double tol = 1e-9) {
  double tb = angle_mod(b.circle_angle() - from.circle_angle());
  double tc = angle_mod(to.circle_angle() - from.circle_angle());
  if (tb > 2.0 * kPi - tol) tb = 0.0;
  return tb <= tc + tol;
}

// (a, b, c) strictly counterclockwise on the circle at infinity.
inline bool strictly_ccw(const BoundaryPoint& a, const BoundaryPoint& b,
                         const BoundaryPoint& c, double tol = 1e-12) {
  double tb = angle_mod(b.circle_angle() - a.circle_angle());
  double tc = angle_mod(c.circle_angle() - a.circle_angle());
  return tb > tol && tc > tb + tol;
}

// The angle metric on the circle at infinity: the angle at the basepoint i
// between the geodesic rays toward the two points. Under the Cayley map the
// rays become radii of the disk, so this is the wrapped angular gap.
inline double angle_metric(const BoundaryPoint& a, const BoundaryPoint& b) {
  return circle_gap(a, b);
}

struct HPoint {
  double x, y;
  HPoint(double x_, double y_) : x(x_), y(y_) {
    if (!(y > 0) || !std::isfinite(x) || !std::isfinite(y))
      throw ValidationError("HPoint: requires finite coordinates with y > 0");
  }
  Complex z() const { return Complex(x, y); }
};

struct DPoint {
  double u, v;
  DPoint(double u_, double v_) : u(u_), v(v_) {
    if (!(u * u + v * v < 1.0))
      throw ValidationError("DPoint: requires u^2 + v^2 < 1");
  }
  explicit DPoint(Complex w) : DPoint(w.real(), w.imag()) {}
  Complex z() const { return Complex(u, v); }
  double abs() const { return std::abs(z()); }
};

inline DPoint to_disk(const HPoint& p) {
  Complex w = (p.z() - Complex(0, 1)) / (p.z() + Complex(0, 1));
  double m = std::abs(w);
  if (m >= 1.0) w *= (1.0 - 1e-16) / m;  // guard rounding at the rim
  return DPoint(w);
}

inline HPoint from_disk(const DPoint& p) {
  Complex z = Complex(0, 1) * (1.0 + p.z()) / (1.0 - p.z());
  return HPoint(z.real(), std::max(z.imag(), 1e-300));
}

inline double hyp_distance(const HPoint& p, const HPoint& q) {
  double dx = p.x - q.x, dy = p.y - q.y;
  double t = 1.0 + (dx * dx + dy * dy) / (2.0 * p.y * q.y);
  return std::acosh(std::max(t, 1.0));
}

inline double disk_distance(const DPoint& p, const DPoint& q) {
  double t = std::abs(p.z() - q.z()) / std::abs(1.0 - std::conj(p.z()) * q.z());
  return 2.0 * std::atanh(std::min(t, 1.0 - 1e-17));
}

// Complete geodesic, an unordered pair of distinct boundary points.
class Geodesic {
 public:
  Geodesic(BoundaryPoint p, BoundaryPoint q) : p_(p), q_(q) {
    if (approx_equal(p_, q_))
      throw ValidationError("Geodesic: endpoints must be distinct");
  }
  const BoundaryPoint& p() const { return p_; }
  const BoundaryPoint& q() const { return q_; }

  bool same_as(const Geodesic& o, double tol = kGeomTol) const {
    return (approx_equal(p_, o.p_, tol) && approx_equal(q_, o.q_, tol)) ||
           (approx_equal(p_, o.q_, tol) && approx_equal(q_, o.p_, tol));
  }

 private:
  BoundaryPoint p_, q_;
};

// Closed finite geodesic segment between two interior points.
struct GeodesicArc {
  HPoint start, end;
  GeodesicArc(HPoint s, HPoint e) : start(s), end(e) {}
  double length() const { return hyp_distance(start, end); }
};

// Extension of the segment through a and b to the circle at infinity.
inline Geodesic geodesic_through(const HPoint& a, const HPoint& b) {
  double scale = std::max({1.0, std::abs(a.x), std::abs(b.x), a.y, b.y});
  if (std::abs(a.x - b.x) < 1e-13 * scale)
    return Geodesic(BoundaryPoint(0.5 * (a.x + b.x)), BoundaryPoint::infinity());
  double m = (b.x * b.x + b.y * b.y - a.x * a.x - a.y * a.y) / (2.0 * (b.x - a.x));
  double r = std::hypot(a.x - m, a.y);
  return Geodesic(BoundaryPoint(m - r), BoundaryPoint(m + r));
}

// Unit-speed geodesic flow: the point at hyperbolic distance `dist` from z
// in the direction `angle` (measured in the half-plane tangent space).
inline HPoint flow_from(const HPoint& z, double angle, double dist) {
  Complex w0 = to_disk(z).z();
  Complex cp = Complex(0, 2) / ((z.z() + Complex(0, 1)) * (z.z() + Complex(0, 1)));
  double beta = std::arg(cp * std::polar(1.0, angle));
  Complex target = std::polar(std::tanh(0.5 * dist), beta);
  Complex p = (target + w0) / (1.0 + std::conj(w0) * target);
  double m = std::abs(p);
  if (m >= 1.0) p *= (1.0 - 1e-16) / m;
  return from_disk(DPoint(p));
}

inline GeodesicArc unit_arc(const HPoint& z, double angle, double len = 1.0) {
  return GeodesicArc(z, flow_from(z, angle, len));
}

}  // namespace eql
