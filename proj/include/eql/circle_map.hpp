#pragma once

// Orientation-preserving self-homeomorphisms of the circle at infinity as
// evaluable values: Möbius restrictions, earthquake boundary maps, their
// compositions and inverses. Each map carries the circle angles where it is
// not smooth (stratum boundaries), which the barycentric quadrature splits at.

#include <algorithm>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "eql/earthquake.hpp"
#include "eql/geometry.hpp"
#include "eql/moebius.hpp"

namespace eql {

struct CircleMap {
  std::function<BoundaryPoint(const BoundaryPoint&)> fwd;
  std::function<BoundaryPoint(const BoundaryPoint&)> inv;
  std::vector<double> breakpoints;  // circle angles of kinks, may be empty

  BoundaryPoint operator()(const BoundaryPoint& x) const { return fwd(x); }
};

inline CircleMap identity_circle_map() {
  auto id = [](const BoundaryPoint& x) { return x; };
  return {id, id, {}};
}

inline CircleMap circle_map(const MoebiusMap& g) {
  MoebiusMap ginv = g.inverse();
  return {[g](const BoundaryPoint& x) { return g.apply(x); },
          [ginv](const BoundaryPoint& x) { return ginv.apply(x); },
          {}};
}

inline CircleMap circle_map(const EarthquakeMap& E) {
  auto e = std::make_shared<EarthquakeMap>(E);
  std::vector<double> breaks;
  for (const auto& l : e->lamination().leaves()) {
    breaks.push_back(l.g.p().circle_angle());
    breaks.push_back(l.g.q().circle_angle());
  }
  std::sort(breaks.begin(), breaks.end());
  return {[e](const BoundaryPoint& x) { return e->eval_boundary(x); },
          [e](const BoundaryPoint& x) { return e->invert_boundary(x); },
          std::move(breaks)};
}

// f after g; kinks of the composite sit at g's kinks and at g-preimages of
// f's kinks.
inline CircleMap compose(const CircleMap& f, const CircleMap& g) {
  std::vector<double> breaks = g.breakpoints;
  for (double t : f.breakpoints)
    breaks.push_back(g.inv(BoundaryPoint::from_circle_angle(t)).circle_angle());
  std::sort(breaks.begin(), breaks.end());
  auto ffwd = f.fwd, gfwd = g.fwd, finv = f.inv, ginv = g.inv;
  return {[ffwd, gfwd](const BoundaryPoint& x) { return ffwd(gfwd(x)); },
          [finv, ginv](const BoundaryPoint& x) { return ginv(finv(x)); },
          std::move(breaks)};
}

inline CircleMap inverse(const CircleMap& h) {
  std::vector<double> breaks;
  for (double t : h.breakpoints)
    breaks.push_back(h.fwd(BoundaryPoint::from_circle_angle(t)).circle_angle());
  std::sort(breaks.begin(), breaks.end());
  return {h.inv, h.fwd, std::move(breaks)};
}

}  // namespace eql
