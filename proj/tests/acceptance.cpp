// Acceptance checks, one printed line per criterion. Exits nonzero if any
// criterion fails. Kept free of any test framework so the pass/fail lines
// are the whole story.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "eql/eql.hpp"

using namespace eql;

namespace {

int failures = 0;

void report(int number, const char* title, bool pass, const std::string& detail) {
  std::printf("%s criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", number,
              title, detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++failures;
}

FiniteMeasuredLamination five_leaf_fixture() {
  std::vector<WeightedLeaf> leaves;
  for (auto [a, b] : {std::pair{-8.0, -6.0}, {-4.0, -2.0}, {-1.0, 1.0},
                      {2.0, 4.0}, {6.0, 8.0}})
    leaves.push_back({Geodesic(BoundaryPoint(a), BoundaryPoint(b)), 0.15});
  return FiniteMeasuredLamination(std::move(leaves));
}

// 1. Liouville measure: closed form for [0,1]x[2,3] and invariance under
//    1000 random Moebius maps at relative 1e-12.
void criterion1() {
  GeodesicBox q(BoundaryPoint(0.0), BoundaryPoint(1.0), BoundaryPoint(2.0),
                BoundaryPoint(3.0));
  double err = std::abs(liouville_measure(q) - std::log(4.0 / 3.0));
  bool pass = err < 1e-12;
  double worst = 0;
  Rng rng(101);
  for (int k = 0; k < 1000; ++k) {
    GeodesicBox box = apply(random_moebius(rng), standard_box());
    MoebiusMap g = random_moebius(rng);
    double before = liouville_measure(box);
    double after = liouville_measure(apply(g, box));
    worst = std::max(worst, std::abs(after - before) / std::abs(before));
  }
  pass = pass && worst < 1e-12;
  char buf[128];
  std::snprintf(buf, sizeof buf, "closed-form err %.2e, worst invariance %.2e",
                err, worst);
  report(1, "Liouville measure closed form and invariance", pass, buf);
}

// 2. Measure recovery round trip over 500 random laminations with up to 20
//    leaves: every leaf and weight back within 1e-9.
void criterion2() {
  Rng rng(202);
  double worst = 0;
  bool pass = true;
  for (int trial = 0; trial < 500; ++trial) {
    FiniteMeasuredLamination mu = random_lamination(rng, 20);
    FiniteMeasuredLamination back = build_earthquake(mu).recover_measure();
    if (back.size() != mu.size()) {
      pass = false;
      break;
    }
    for (size_t j = 0; j < mu.size(); ++j) {
      if (!back.leaves()[j].g.same_as(mu.leaves()[j].g, 1e-9)) pass = false;
      worst = std::max(worst, std::abs(back.leaves()[j].w - mu.leaves()[j].w) /
                                  mu.leaves()[j].w);
    }
  }
  pass = pass && worst < 1e-9;
  char buf[96];
  std::snprintf(buf, sizeof buf, "worst relative weight error %.2e", worst);
  report(2, "measure recovery round trip (500 laminations)", pass, buf);
}

// 3. Left-movement verification: zero violations, checked exhaustively over
//    all stratum pairs for laminations with at most 12 leaves.
void criterion3() {
  Rng rng(303);
  size_t total_violations = 0;
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    FiniteMeasuredLamination mu = random_lamination(rng, 12);
    auto rep = build_earthquake(mu).verify_left();
    total_violations += rep.violations.size();
    ++checked;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu violations over %d laminations",
                total_violations, checked);
  report(3, "left property verified exhaustively", total_violations == 0, buf);
}

// 4. Thurston norm: exact values 0.7 / 2 / 1 on the fixtures, and the
//    10,000-arc sampled norm within 5% on single-chain configurations.
void criterion4() {
  FiniteMeasuredLamination single(
      {{Geodesic(BoundaryPoint(-1.0), BoundaryPoint(1.0)), 0.7}});
  FiniteMeasuredLamination close(
      {{Geodesic(BoundaryPoint(-1.0), BoundaryPoint(1.0)), 1.0},
       {Geodesic(BoundaryPoint(-2.0), BoundaryPoint(2.0)), 1.0}});
  FiniteMeasuredLamination far(
      {{Geodesic(BoundaryPoint(-1.0), BoundaryPoint(1.0)), 1.0},
       {Geodesic(BoundaryPoint(-8.0), BoundaryPoint(8.0)), 1.0}});
  bool exact = thurston_norm(single) == 0.7 && thurston_norm(close) == 2.0 &&
               thurston_norm(far) == 1.0;
  double worst_rel = 0;
  for (const auto* mu : {&single, &close}) {
    double chain = thurston_norm(*mu);
    double sampled = sample_norm(*mu, 10000, 404);
    worst_rel = std::max(worst_rel, (chain - sampled) / chain);
    if (sampled > chain + 1e-12) exact = false;
  }
  bool pass = exact && worst_rel < 0.05;
  char buf[96];
  std::snprintf(buf, sizeof buf, "sampled within %.2f%% of the chain norm",
                100.0 * worst_rel);
  report(4, "Thurston norm fixtures and sampled lower bound", pass, buf);
}

// 5. Barycentric extension: identity and Moebius maps reproduced within 1e-6
//    on the sample grid, conformal naturality within 1e-5 on 200 triples.
void criterion5() {
  bool pass = true;
  double worst_moebius = 0;
  std::vector<DPoint> grid = default_proxy_grid();
  CircleMap id = identity_circle_map();
  for (const DPoint& z : grid)
    worst_moebius = std::max(worst_moebius, std::abs(de_extend(id, z).z() - z.z()));
  Rng rng(505);
  auto mild = [&rng] {
    BoundaryPoint r = random_boundary_point(rng), a = random_boundary_point(rng);
    while (circle_gap(r, a) < 0.3) a = random_boundary_point(rng);
    return translation_along(r, a, uniform(rng, 0.2, 1.5));
  };
  for (int k = 0; k < 10; ++k) {
    MoebiusMap g = mild();
    CircleMap h = circle_map(g);
    for (const DPoint& z : {DPoint(0.0, 0.0), DPoint(0.4, 0.1), DPoint(-0.3, 0.5)}) {
      Complex expected = to_disk(g.apply(from_disk(z))).z();
      worst_moebius = std::max(worst_moebius, std::abs(de_extend(h, z).z() - expected));
    }
  }
  pass = pass && worst_moebius < 1e-6;

  FiniteMeasuredLamination mu(
      {{Geodesic(BoundaryPoint(-1.0), BoundaryPoint(1.0)), 0.4},
       {Geodesic(BoundaryPoint(2.0), BoundaryPoint(4.0)), 0.3}});
  CircleMap h = circle_map(build_earthquake(mu));
  double worst_nat = 0;
  for (int k = 0; k < 200; ++k) {
    MoebiusMap A = mild(), B = mild();
    CircleMap conj = compose(circle_map(A), compose(h, circle_map(B)));
    DPoint z(uniform(rng, -0.5, 0.5), uniform(rng, -0.5, 0.5));
    Complex lhs = de_extend(conj, z).z();
    Complex Bz = to_disk(B.apply(from_disk(z))).z();
    Complex rhs = to_disk(A.apply(from_disk(de_extend(h, DPoint(Bz))))).z();
    worst_nat = std::max(worst_nat, std::abs(lhs - rhs));
  }
  pass = pass && worst_nat < 1e-5;
  char buf[96];
  std::snprintf(buf, sizeof buf, "Moebius err %.2e, naturality err %.2e",
                worst_moebius, worst_nat);
  report(5, "barycentric extension reproduces Moebius maps naturally", pass, buf);
}

// 6. The distance proxy vanishes (< 1e-4) between h and A o h for Moebius A.
void criterion6() {
  FiniteMeasuredLamination mu(
      {{Geodesic(BoundaryPoint(0.0), BoundaryPoint::infinity()), 0.5}});
  CircleMap h = circle_map(build_earthquake(mu));
  Rng rng(606);
  double worst = 0;
  std::vector<DPoint> grid = {DPoint(0.0, 0.0), DPoint(0.4, 0.1),
                              DPoint(-0.3, 0.5), DPoint(0.1, -0.6)};
  for (int k = 0; k < 5; ++k) {
    BoundaryPoint r = random_boundary_point(rng), a = random_boundary_point(rng);
    while (circle_gap(r, a) < 0.3) a = random_boundary_point(rng);
    MoebiusMap A = translation_along(r, a, uniform(rng, 0.2, 1.0));
    CircleMap moved = compose(circle_map(A), h);
    worst = std::max(worst, distance_proxy(moved, h, grid));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "worst proxy %.2e", worst);
  report(6, "distance proxy ignores Moebius post-composition", worst < 1e-4, buf);
}

// 7. Scaling path: the proxy decreases strictly and falls below 1e-3 along
//    t = 1 - s for s in {0.2, 0.1, 0.05, 0.025, 0.0125}, for both fixtures.
void criterion7() {
  std::vector<double> t_list = {0.8, 0.9, 0.95, 0.975, 0.9875};
  FiniteMeasuredLamination single(
      {{Geodesic(BoundaryPoint(0.0), BoundaryPoint::infinity()), 0.2}});
  ExperimentReport a = run_scaling_path(single, 1.0, t_list);
  ExperimentReport b = run_scaling_path(five_leaf_fixture(), 1.0, t_list);
  bool pass = a.all_pass() && b.all_pass();
  double tail_a = a.rows.back()["proxy"].is_null()
                      ? 1.0 : a.rows.back()["proxy"].get<double>();
  double tail_b = b.rows.back()["proxy"].is_null()
                      ? 1.0 : b.rows.back()["proxy"].get<double>();
  char buf[96];
  std::snprintf(buf, sizeof buf, "tails %.2e / %.2e", tail_a, tail_b);
  report(7, "scaling path proxy decreases below 1e-3", pass, buf);
}

// 8. Asymptotics: the Beltrami sup of the decaying stack decreases along the
//    exhaustion; the constant stack stays above the decaying tail.
void criterion8() {
  std::vector<double> radii = {1.5, 2.0, 2.5, 3.0, 3.5};
  ExperimentReport dec =
      run_asymptotic_test("decaying", stack_decaying(12, 0.5, 0.5), radii);
  double dec_tail = dec.rows.back()["beltrami_sup"].is_null()
                        ? 1.0 : dec.rows.back()["beltrami_sup"].get<double>();
  ExperimentReport con = run_asymptotic_test(
      "constant", stack_constant(12, 0.5), radii, DEParams{}, dec_tail);
  bool pass = dec.all_pass() && con.all_pass();
  double con_min = 1e18;
  for (const auto& row : con.rows)
    if (!row["beltrami_sup"].is_null())
      con_min = std::min(con_min, row["beltrami_sup"].get<double>());
  char buf[96];
  std::snprintf(buf, sizeof buf, "decaying tail %.2e, constant min %.2e",
                dec_tail, con_min);
  report(8, "Beltrami decay tracks the exhaustion profile", pass, buf);
}

// 9. Circle-mass trend: the circle length matches the closed form within
//    1e-12 for n in 2..64; the alpha = 1.5 bound shrinks from n = 8 to 64
//    while the alpha = 0.5 bound grows.
void criterion9() {
  double worst_len = 0;
  FiniteMeasuredLamination empty;
  for (int n = 2; n <= 64; ++n) {
    auto [len, bound] = circle_mass_bound(empty, n);
    double expect = 4.0 * kPi * (n - 1) / (2.0 - 1.0 / n);
    worst_len = std::max(worst_len, std::abs(len - expect) / expect);
  }
  auto bound_at = [](double alpha, int n) {
    return circle_mass_bound(stack_power(16, 0.5, alpha), n).second;
  };
  bool shrink = bound_at(1.5, 64) < bound_at(1.5, 8);
  bool grow = bound_at(0.5, 64) > bound_at(0.5, 8);
  bool pass = worst_len < 1e-12 && shrink && grow;
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "length err %.2e, alpha 1.5 %s, alpha 0.5 %s", worst_len,
                shrink ? "shrinks" : "fails to shrink",
                grow ? "grows" : "fails to grow");
  report(9, "circle-mass bound trends by decay exponent", pass, buf);
}

// 10. Box functional: exactly zero on identical laminations; against the
//     empty lamination it equals the per-box direct sum within 1e-12.
void criterion10() {
  Rng rng(1010);
  FiniteMeasuredLamination mu = random_lamination(rng, 10);
  auto boxes = random_unit_boxes(200, 1011);
  BoxTestFunction phi = standard_bump();
  bool zero = box_functional(mu, mu, phi, boxes) == 0.0;

  FiniteMeasuredLamination empty;
  double direct = box_functional(mu, empty, phi, boxes);
  double expect = 0;
  for (const auto& Q : boxes) {
    MoebiusMap gq = moebius_from_box(Q, standard_box());
    double s = 0;
    for (const auto& l : mu.leaves()) s += l.w * phi(gq.apply(l.g));
    expect = std::max(expect, std::abs(s));
  }
  bool pass = zero && std::abs(direct - expect) < 1e-12;
  char buf[96];
  std::snprintf(buf, sizeof buf, "self %.1f, vs-empty err %.2e",
                box_functional(mu, mu, phi, boxes), std::abs(direct - expect));
  report(10, "box functional identities", pass, buf);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
