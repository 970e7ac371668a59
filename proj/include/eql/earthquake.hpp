#pragma once

// Finite left earthquakes. Each leaf carries a hyperbolic translation along
// itself; a stratum's map is the product of the translations of the leaves
// separating it from the base stratum, accumulated base-first (which is the
// order that makes the boundary extension continuous across leaf endpoints).
//
// Left convention: orient each leaf's translation so that, looking across
// the leaf from the base side, the far side slides to the observer's left.
// Concretely, normalize the leaf to (0, inf) with the base in {x < 0}; the
// far side then maps by x -> e^{w} x. verify_left re-checks this via the
// counterclockwise triple test on comparison axes; flipping the direction
// globally produces right earthquakes (exposed as a build option).

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "eql/geometry.hpp"
#include "eql/lamination.hpp"
#include "eql/moebius.hpp"

namespace eql {

struct EarthquakeBuildOptions {
  bool right = false;                // flip every leaf: right earthquake
  std::vector<size_t> flip_leaves;   // flip selected leaves (adversarial testing)
};

class EarthquakeMap {
 public:
  const FiniteMeasuredLamination& lamination() const { return mu_; }
  const HPoint& basepoint() const { return base_; }

  // Side of leaf j for a boundary point: +1 matches positive reals in the
  // leaf's (0, inf) frame, 0 at the leaf's endpoints. The frame is the
  // oriented normalization of (p, q) -> (0, inf); its values have sign
  // pdet(x,p) pdet(x,q) pdet(p,q), the last factor coming from the
  // orientation flip.
  int side_of(size_t j, const BoundaryPoint& x) const {
    const Geodesic& g = mu_.leaves()[j].g;
    if (approx_equal(x, g.p()) || approx_equal(x, g.q())) return 0;
    double s = detail::pdet(x, g.p()) * detail::pdet(x, g.q()) *
               detail::pdet(g.p(), g.q());
    return s > 0 ? 1 : -1;
  }

  // Same sign convention for an interior point; 0 on the leaf itself.
  int side_of(size_t j, const HPoint& z) const {
    HPoint w = frames_[j].apply(z);
    double s = w.x / w.y;
    if (std::abs(s) < 1e-9) return 0;
    return s > 0 ? 1 : -1;
  }

  // Ordered chain of leaves separating x (boundary or interior) from the
  // base stratum, nearest-base first, and the resulting stratum map.
  template <typename Point>
  MoebiusMap stratum_map(const Point& x) const {
    std::vector<size_t> chain;
    for (size_t j = 0; j < mu_.size(); ++j)
      if (side_of(j, x) == -base_side_[j]) chain.push_back(j);
    order_chain(chain);
    MoebiusMap m;
    for (size_t j : chain) m = m * twist_[j];
    return m;
  }

  BoundaryPoint eval_boundary(const BoundaryPoint& x) const {
    return stratum_map(x).apply(x);
  }

  HPoint eval_interior(const HPoint& z) const { return stratum_map(z).apply(z); }

  BoundaryPoint invert_boundary(const BoundaryPoint& y) const {
    if (gaps_.empty()) return y;
    double best_err = 1e18;
    BoundaryPoint best = y;
    for (const Gap& gap : gaps_) {
      if (!in_ccw_arc(y, gap.image_start, gap.image_end, 1e-7)) continue;
      BoundaryPoint x = gap.map.inverse().apply(y);
      double err = circle_gap(eval_boundary(x), y);
      if (err < best_err) {
        best_err = err;
        best = x;
      }
    }
    if (best_err > 1e-6)
      throw NumericalError("invert_boundary: no stratum image contains the point");
    return best;
  }

  // Recovered measure: for each leaf, the comparison map between its two
  // adjacent strata (source frame, base side first) is the leaf's
  // translation; its axis and translation length give the leaf and weight.
  FiniteMeasuredLamination recover_measure() const {
    std::vector<WeightedLeaf> out;
    for (size_t j = 0; j < mu_.size(); ++j) {
      size_t base_gap = 0, far_gap = 0;
      adjacent_gaps(j, base_gap, far_gap);
      MoebiusMap D = gaps_[base_gap].map.inverse() * gaps_[far_gap].map;
      double w = translation_length(D);
      if (w <= 0)
        throw NumericalError("recover_measure: comparison map not hyperbolic");
      out.push_back({axis(D).geodesic(), w});
    }
    return FiniteMeasuredLamination(std::move(out));
  }

  struct Violation {
    size_t gap1, gap2;
    std::string reason;
  };
  struct LeftReport {
    bool ok = true;
    std::vector<Violation> violations;
  };

  // Checks, over stratum pairs, that the comparison map (source frame)
  // is hyperbolic or identity, that its axis weakly separates the two
  // boundary intervals, and that the translation direction is to the left:
  // (attracting, g1, repelling) and (repelling, g2, attracting) are both
  // counterclockwise.
  LeftReport verify_left(size_t sample_pairs = 300,
                         unsigned long long seed = 20260825) const {
    LeftReport rep;
    size_t n = gaps_.size();
    if (n < 2) return rep;
    std::vector<std::pair<size_t, size_t>> pairs;
    if (mu_.size() <= 12) {
      for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    } else {
      std::mt19937_64 rng(seed);
      for (size_t k = 0; k < sample_pairs; ++k) {
        size_t i = rng() % n, j = rng() % n;
        if (i != j) pairs.emplace_back(std::min(i, j), std::max(i, j));
      }
    }
    for (auto [i, j] : pairs) {
      check_pair(i, j, rep);
      check_pair(j, i, rep);
    }
    rep.ok = rep.violations.empty();
    return rep;
  }

  size_t gap_count() const { return gaps_.size(); }

 private:
  struct Gap {
    double t0, t1;  // circle angles of the boundary interval
    BoundaryPoint start, end, mid;
    MoebiusMap map;
    BoundaryPoint image_start, image_end;
  };

  FiniteMeasuredLamination mu_;
  HPoint base_{0.0, 1.0};
  std::vector<MoebiusMap> frames_;  // leaf -> (0, inf), orientation-preserving
  std::vector<int> base_side_;      // side of the base stratum in that frame
  std::vector<MoebiusMap> twist_;   // per-leaf translation
  std::vector<Gap> gaps_;

  friend EarthquakeMap build_earthquake(const FiniteMeasuredLamination&,
                                        const EarthquakeBuildOptions&);

  // Nearest-base-first order: leaf a precedes leaf b iff a separates b from
  // the base; leaves separating a common point from the base are nested, so
  // counting predecessors yields the total order.
  void order_chain(std::vector<size_t>& chain) const {
    if (chain.size() < 2) return;
    std::vector<std::pair<int, size_t>> keyed;
    for (size_t j : chain) {
      int depth = 0;
      for (size_t k : chain)
        if (k != j && side_of(k, mu_.leaves()[j].g.p()) == -base_side_[k]) ++depth;
      keyed.emplace_back(depth, j);
    }
    std::sort(keyed.begin(), keyed.end());
    for (size_t t = 0; t < chain.size(); ++t) chain[t] = keyed[t].second;
  }

  // The two gaps meeting at leaf j's first endpoint, split by j.
  void adjacent_gaps(size_t j, size_t& base_gap, size_t& far_gap) const {
    double t = mu_.leaves()[j].g.p().circle_angle();
    size_t before = gaps_.size(), after = gaps_.size();
    auto same_angle = [](double a, double b) {
      double d = angle_mod(a - b);
      return std::min(d, 2.0 * kPi - d) < 1e-12;
    };
    for (size_t k = 0; k < gaps_.size(); ++k) {
      if (same_angle(gaps_[k].t1, t)) before = k;
      if (same_angle(gaps_[k].t0, t)) after = k;
    }
    if (before == gaps_.size() || after == gaps_.size())
      throw NumericalError("adjacent_gaps: endpoint not found in gap structure");
    if (side_of(j, gaps_[after].mid) == -base_side_[j]) {
      far_gap = after;
      base_gap = before;
    } else {
      far_gap = before;
      base_gap = after;
    }
  }

  void check_pair(size_t i, size_t j, LeftReport& rep) const {
    auto fail = [&](const std::string& why) {
      rep.violations.push_back({i, j, why});
    };
    MoebiusMap D = gaps_[i].map.inverse() * gaps_[j].map;
    if (D.approx_identity(1e-9)) return;
    if (classify(D) != MoebiusClass::Hyperbolic) {
      fail("comparison map not hyperbolic or identity");
      return;
    }
    OrientedAxis ax = axis(D);
    double tol = 1e-7;
    const Gap& g1 = gaps_[i];
    const Gap& g2 = gaps_[j];
    bool separated =
        in_ccw_arc(g1.start, ax.attracting, ax.repelling, tol) &&
        in_ccw_arc(g1.end, ax.attracting, ax.repelling, tol) &&
        in_ccw_arc(g2.start, ax.repelling, ax.attracting, tol) &&
        in_ccw_arc(g2.end, ax.repelling, ax.attracting, tol);
    bool left = strictly_ccw(ax.attracting, g1.mid, ax.repelling) &&
                strictly_ccw(ax.repelling, g2.mid, ax.attracting);
    if (!separated && !left)
      fail("axis does not separate the strata to the left");
    else if (!separated)
      fail("axis does not weakly separate the strata");
    else if (!left)
      fail("translation direction is not to the left");
  }
};

inline EarthquakeMap build_earthquake(const FiniteMeasuredLamination& mu,
                                      const EarthquakeBuildOptions& opts = {}) {
  EarthquakeMap E;
  E.mu_ = mu;
  size_t n = mu.size();

  // Basepoint: i, nudged right in steps of 1e-3 if it sits on a leaf.
  for (int k = 0; k <= 100000; ++k) {
    HPoint cand(1e-3 * k, 1.0);
    bool clear = true;
    for (const auto& l : mu.leaves()) {
      MoebiusMap S(detail::orient(detail::to_zero_inf(l.g.p(), l.g.q())));
      HPoint w = S.apply(cand);
      if (std::abs(w.x / w.y) < 1e-6) {
        clear = false;
        break;
      }
    }
    if (clear) {
      E.base_ = cand;
      break;
    }
    if (k == 100000)
      throw NumericalError("build_earthquake: could not place a basepoint");
  }

  for (size_t j = 0; j < n; ++j) {
    const auto& l = mu.leaves()[j];
    E.frames_.emplace_back(detail::orient(detail::to_zero_inf(l.g.p(), l.g.q())));
    HPoint w = E.frames_[j].apply(E.base_);
    E.base_side_.push_back(w.x > 0 ? 1 : -1);
    bool flipped = opts.right ^ (std::find(opts.flip_leaves.begin(),
                                           opts.flip_leaves.end(),
                                           j) != opts.flip_leaves.end());
    // Base at x < 0 in the frame => far side moves by x -> e^{w} x.
    double sigma = (E.base_side_[j] < 0 ? 1.0 : -1.0) * (flipped ? -1.0 : 1.0);
    detail::Raw S{E.frames_[j].a(), E.frames_[j].b(), E.frames_[j].c(),
                  E.frames_[j].d()};
    detail::Raw D{std::exp(0.5 * sigma * l.w), 0, 0, std::exp(-0.5 * sigma * l.w)};
    E.twist_.emplace_back(S.adj().mul(D).mul(S));
  }

  // Boundary gaps between consecutive leaf endpoints; each gets its chain's
  // accumulated map and the image interval used for inversion.
  std::vector<double> angles;
  for (const auto& l : mu.leaves()) {
    angles.push_back(l.g.p().circle_angle());
    angles.push_back(l.g.q().circle_angle());
  }
  std::sort(angles.begin(), angles.end());
  if (angles.empty()) {
    return E;  // identity earthquake: no gaps needed
  }
  for (size_t k = 0; k < angles.size(); ++k) {
    EarthquakeMap::Gap gap;
    gap.t0 = angles[k];
    gap.t1 = angles[(k + 1) % angles.size()];
    double width = angle_mod(gap.t1 - gap.t0);
    if (width == 0.0) width = 2.0 * kPi;  // single leaf sharing... cannot happen
    gap.start = BoundaryPoint::from_circle_angle(gap.t0);
    gap.end = BoundaryPoint::from_circle_angle(gap.t1);
    gap.mid = BoundaryPoint::from_circle_angle(gap.t0 + 0.5 * width);
    gap.map = E.stratum_map(gap.mid);
    gap.image_start = gap.map.apply(gap.start);
    gap.image_end = gap.map.apply(gap.end);
    E.gaps_.push_back(gap);
  }
  return E;
}

}  // namespace eql
