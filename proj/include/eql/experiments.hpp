#pragma once

// Desk-scale experiments: the box functional on laminations, the scaling
// path of an earthquake measure, exhaustion decay vs. Beltrami decay, and
// the o(delta) circle-mass trend. Also the lamination generators the
// experiments are built from (geodesic stacks with chosen weight laws).

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "eql/barycentric.hpp"
#include "eql/box.hpp"
#include "eql/circle_map.hpp"
#include "eql/earthquake.hpp"
#include "eql/lamination.hpp"
#include "eql/random.hpp"
#include "eql/report.hpp"

namespace eql {

// Continuous test function on geodesics supported inside the standard box
// [0,1] x [c*, inf] and vanishing on its boundary.
class BoxTestFunction {
 public:
  explicit BoxTestFunction(std::function<double(const Geodesic&)> f)
      : f_(std::move(f)) {}
  double operator()(const Geodesic& g) const { return f_(g); }

 private:
  std::function<double(const Geodesic&)> f_;
};

// Tensor bump: coordinates u = first endpoint in [0,1] and
// v = (x - c*)/(x - c* + 1) in [0,1] for the second endpoint (v = 1 at inf),
// multiplied through bump(t) = 16 t^2 (1-t)^2.
inline BoxTestFunction standard_bump() {
  return BoxTestFunction([](const Geodesic& g) -> double {
    auto bump = [](double t) {
      if (t <= 0.0 || t >= 1.0) return 0.0;
      double s = t * (1.0 - t);
      return 16.0 * s * s;
    };
    auto coords = [&](const BoundaryPoint& first,
                      const BoundaryPoint& second) -> double {
      if (first.is_infinite() || first.value() <= 0.0 || first.value() >= 1.0)
        return 0.0;
      double v;
      if (second.is_infinite()) {
        v = 1.0;
      } else {
        double x = second.value();
        if (x <= kStandardC) return 0.0;
        v = (x - kStandardC) / (x - kStandardC + 1.0);
      }
      return bump(first.value()) * bump(v);
    };
    double a = coords(g.p(), g.q());
    if (a != 0.0) return a;
    return coords(g.q(), g.p());
  });
}

// Finite-lamination integral of phi over the box Q after normalizing Q onto
// the standard box.
inline double box_integral(const FiniteMeasuredLamination& mu,
                           const BoxTestFunction& phi, const GeodesicBox& Q) {
  MoebiusMap gq = moebius_from_box(Q, standard_box());
  double sum = 0;
  for (const auto& l : mu.leaves()) sum += l.w * phi(gq.apply(l.g));
  return sum;
}

// Sampled S_phi: max over the supplied measure-1 boxes of the difference of
// the two lamination integrals. A finite stand-in for the supremum over all
// boxes.
inline double box_functional(const FiniteMeasuredLamination& mu1,
                             const FiniteMeasuredLamination& mu2,
                             const BoxTestFunction& phi,
                             const std::vector<GeodesicBox>& boxes) {
  double best = 0;
  for (const auto& Q : boxes)
    best = std::max(best, std::abs(box_integral(mu1, phi, Q) -
                                   box_integral(mu2, phi, Q)));
  return best;
}

// Random Möbius translates of the standard box (all have Liouville measure 1).
inline std::vector<GeodesicBox> random_unit_boxes(int count,
                                                  unsigned long long seed) {
  Rng rng(seed);
  std::vector<GeodesicBox> boxes;
  boxes.push_back(standard_box());
  while ((int)boxes.size() < count)
    boxes.push_back(apply(random_moebius(rng), standard_box()));
  return boxes;
}

// ---- lamination generators -------------------------------------------------

// Stack of nested leaves (-s_k, s_k), s_k = s0 * exp(-gap * k), accumulating
// at the boundary point 0. gap > 1 keeps consecutive leaves more than a unit
// arc apart, so every chain is a singleton.
inline FiniteMeasuredLamination make_stack(int n_leaves,
                                           const std::function<double(int, double)>& weight,
                                           double s0 = 1.0, double gap = 1.2) {
  std::vector<WeightedLeaf> leaves;
  for (int k = 0; k < n_leaves; ++k) {
    double s = s0 * std::exp(-gap * k);
    Geodesic g(BoundaryPoint(-s), BoundaryPoint(s));
    leaves.push_back({g, weight(k, leaf_collar_depth(g))});
  }
  return FiniteMeasuredLamination(std::move(leaves));
}

inline FiniteMeasuredLamination stack_decaying(int n, double c, double rho) {
  return make_stack(n, [=](int k, double) { return c * std::pow(rho, k); });
}

inline FiniteMeasuredLamination stack_constant(int n, double c) {
  return make_stack(n, [=](int, double) { return c; });
}

// Weights tied to each leaf's collar depth: w = c * depth^alpha, so the
// depth profile decays like c * delta^alpha.
inline FiniteMeasuredLamination stack_power(int n, double c, double alpha) {
  return make_stack(n, [=](int, double depth) { return c * std::pow(depth, alpha); });
}

// ---- experiments -----------------------------------------------------------

inline ExperimentReport run_scaling_path(const FiniteMeasuredLamination& mu,
                                         double t0, std::vector<double> t_list,
                                         const DEParams& de = {},
                                         double threshold = 1e-3) {
  if (!(t0 >= 0.0 && t0 <= 1.0))
    throw ValidationError("run_scaling_path: t0 must lie in [0,1]");
  if (thurston_norm(mu) > 4.0)
    throw ValidationError("run_scaling_path: lamination norm above solver comfort zone (4)");
  ExperimentReport rep;
  rep.experiment = "scaling-path";
  rep.params = {{"t0", t0},
                {"leaves", mu.size()},
                {"norm", thurston_norm(mu)},
                {"quadrature", de.quadrature},
                {"tol", de.tol},
                {"threshold", threshold}};
  CircleMap ref = circle_map(build_earthquake(scale(mu, 1.0 - t0)));
  // Rows ordered by decreasing |t - t0|.
  std::sort(t_list.begin(), t_list.end(), [&](double a, double b) {
    return std::abs(a - t0) > std::abs(b - t0);
  });
  std::vector<double> proxies;
  for (double t : t_list) {
    Json row = {{"t", t}, {"dt", std::abs(t - t0)}};
    try {
      CircleMap ht = circle_map(build_earthquake(scale(mu, 1.0 - t)));
      double d = distance_proxy(ht, ref, de);
      row["proxy"] = d;
      row["status"] = "ok";
      proxies.push_back(d);
    } catch (const NumericalError& e) {
      row["proxy"] = nullptr;
      row["status"] = std::string("solver failure: ") + e.what();
    }
    rep.rows.push_back(row);
  }
  bool decreasing = proxies.size() == t_list.size();
  for (size_t i = 0; i + 1 < proxies.size(); ++i)
    if (!(proxies[i + 1] < proxies[i])) decreasing = false;
  bool small_tail = !proxies.empty() && proxies.back() < threshold;
  rep.verdicts.push_back({"proxy_strictly_decreasing", decreasing, 0.0, ""});
  rep.verdicts.push_back({"proxy_tail_below_threshold", small_tail, threshold,
                          proxies.empty() ? "no convergent rows" : ""});
  return rep;
}

// Exhaustion profile vs. Beltrami magnitude of the earthquake boundary map's
// extension, sampled on the hyperbolic circle of radius R about the center.
inline ExperimentReport run_asymptotic_test(const std::string& family,
                                            const FiniteMeasuredLamination& mu,
                                            const std::vector<double>& radii,
                                            const DEParams& de = {},
                                            double floor_threshold = 1e-3,
                                            int ring_samples = 12) {
  ExperimentReport rep;
  rep.experiment = "asymptotic-test";
  rep.params = {{"family", family},
                {"leaves", mu.size()},
                {"quadrature", de.quadrature},
                {"tol", de.tol},
                {"floor_threshold", floor_threshold},
                {"ring_samples", ring_samples}};
  CircleMap h = circle_map(build_earthquake(mu));
  DecayProfile prof = exhaustion_profile(mu, radii);
  std::vector<double> sups;
  for (size_t idx = 0; idx < prof.entries.size(); ++idx) {
    auto [R, profile] = prof.entries[idx];
    double r = std::tanh(0.5 * R);
    Json row = {{"radius", R}, {"profile", profile}};
    try {
      double sup = 0;
      for (int k = 0; k < ring_samples; ++k) {
        double t = 2.0 * kPi * (k + 0.5) / ring_samples;
        DPoint z(r * std::cos(t), r * std::sin(t));
        sup = std::max(sup, std::abs(beltrami(h, z, 0.0, de).value));
      }
      row["beltrami_sup"] = sup;
      row["status"] = "ok";
      sups.push_back(sup);
    } catch (const NumericalError& e) {
      row["beltrami_sup"] = nullptr;
      row["status"] = std::string("solver failure: ") + e.what();
    }
    rep.rows.push_back(row);
  }
  if (family == "decaying") {
    bool dec = sups.size() == prof.entries.size() && sups.size() >= 2;
    for (size_t i = 0; i + 1 < sups.size(); ++i)
      if (!(sups[i + 1] < sups[i])) dec = false;
    rep.verdicts.push_back({"beltrami_sup_decreasing", dec, 0.0, ""});
  } else {
    bool floored = !sups.empty();
    for (double s : sups)
      if (!(s > floor_threshold)) floored = false;
    rep.verdicts.push_back(
        {"beltrami_sup_bounded_away_from_zero", floored, floor_threshold, ""});
  }
  return rep;
}

inline ExperimentReport run_odelta_test(const std::vector<double>& alphas,
                                        const std::vector<int>& n_list,
                                        int n_leaves = 16, double c = 0.5) {
  ExperimentReport rep;
  rep.experiment = "odelta-test";
  rep.params = {{"alphas", alphas}, {"n_list", n_list}, {"leaves", n_leaves}, {"c", c}};
  for (double alpha : alphas) {
    FiniteMeasuredLamination mu = stack_power(n_leaves, c, alpha);
    double first_bound = 0, last_bound = 0;
    for (size_t i = 0; i < n_list.size(); ++i) {
      auto [length, bound] = circle_mass_bound(mu, n_list[i]);
      rep.rows.push_back({{"alpha", alpha},
                          {"n", n_list[i]},
                          {"length", length},
                          {"bound", bound}});
      if (i == 0) first_bound = bound;
      last_bound = bound;
    }
    std::string tag = "alpha_" + std::to_string(alpha);
    if (alpha > 1.0 + 1e-9)
      rep.verdicts.push_back({tag + "_bound_shrinks", last_bound < first_bound, 0.0, ""});
    else if (alpha < 1.0 - 1e-9)
      rep.verdicts.push_back({tag + "_bound_grows", last_bound > first_bound, 0.0, ""});
    else
      rep.verdicts.push_back(
          {tag + "_bound_roughly_constant",
           first_bound > 0 && last_bound < 4.0 * first_bound &&
               first_bound < 4.0 * last_bound,
           4.0, "ratio band"});
  }
  return rep;
}

}  // namespace eql
