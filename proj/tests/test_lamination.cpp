#include <catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <string>

#include "eql/lamination.hpp"
#include "eql/lamination_io.hpp"
#include "eql/random.hpp"

using namespace eql;

static FiniteMeasuredLamination two_nested() {
  return FiniteMeasuredLamination(
      {{Geodesic(BoundaryPoint(-1.0), BoundaryPoint(1.0)), 0.5},
       {Geodesic(BoundaryPoint(-2.0), BoundaryPoint(2.0)), 0.3}});
}

TEST_CASE("lamination construction validates and merges") {
  CHECK_THROWS_AS(FiniteMeasuredLamination(
                      {{Geodesic(BoundaryPoint(0.0), BoundaryPoint(1.0)), 0.0}}),
                  ValidationError);
  CHECK_THROWS_AS(FiniteMeasuredLamination(
                      {{Geodesic(BoundaryPoint(0.0), BoundaryPoint(1.0)), -2.0}}),
                  ValidationError);
  // crossing leaves named by index
  try {
    FiniteMeasuredLamination(
        {{Geodesic(BoundaryPoint(-1.0), BoundaryPoint(1.0)), 1.0},
         {Geodesic(BoundaryPoint(0.0), BoundaryPoint(2.0)), 1.0}});
    FAIL("expected a crossing-leaf error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("0, 1") != std::string::npos);
  }
  CHECK_THROWS_AS(FiniteMeasuredLamination(
                      {{Geodesic(BoundaryPoint(0.0), BoundaryPoint(1.0)), 1.0},
                       {Geodesic(BoundaryPoint(1.0), BoundaryPoint(2.0)), 1.0}}),
                  ValidationError);
  // equal leaves merge by adding atoms
  FiniteMeasuredLamination merged(
      {{Geodesic(BoundaryPoint(0.0), BoundaryPoint(1.0)), 1.0},
       {Geodesic(BoundaryPoint(1.0), BoundaryPoint(0.0)), 0.25}});
  REQUIRE(merged.size() == 1);
  CHECK(merged.leaves()[0].w == 1.25);
}

TEST_CASE("transverse measure fixtures with explicit crossing heights") {
  FiniteMeasuredLamination mu = two_nested();
  // (-1,1) meets the imaginary axis at i, (-2,2) at 2i.
  CHECK_THAT(transverse_measure(mu, GeodesicArc(HPoint(0, 0.5), HPoint(0, 3))),
             Catch::Matchers::WithinAbs(0.8, 1e-14));
  CHECK(transverse_measure(mu, GeodesicArc(HPoint(0, 1.5), HPoint(0, 1.9))) == 0.0);
  CHECK(transverse_measure(FiniteMeasuredLamination(),
                           GeodesicArc(HPoint(0, 1), HPoint(1, 1))) == 0.0);
  // touching at a closed endpoint counts
  CHECK_THAT(transverse_measure(mu, GeodesicArc(HPoint(0, 1), HPoint(0, 1.5))),
             Catch::Matchers::WithinAbs(0.5, 1e-14));
}

// Independent crossing oracle: march densely along the arc and watch the
// sign of the distance to each leaf.
static double march_measure(const FiniteMeasuredLamination& mu,
                            const GeodesicArc& I) {
  Geodesic ext = geodesic_through(I.start, I.end);
  BoundaryPoint p = ext.p(), q = ext.q();
  if (detail::pdet(p, q) < 0) std::swap(p, q);
  MoebiusMap S(detail::orient(detail::to_zero_inf(p, q)));
  MoebiusMap Sinv = S.inverse();
  double y1 = S.apply(I.start).y, y2 = S.apply(I.end).y;
  double total = 0;
  const int N = 4000;
  for (const auto& leaf : mu.leaves()) {
    double prev = 0;
    bool hit = false;
    for (int k = 0; k <= N; ++k) {
      double u = (double)k / N;
      HPoint z = Sinv.apply(HPoint(0, y1 * std::pow(y2 / y1, u)));
      double s = geodesic_side(leaf.g, z);
      if (std::abs(s) < 1e-7 || (k > 0 && s * prev < 0)) {
        hit = true;
        break;
      }
      prev = s;
    }
    if (hit) total += leaf.w;
  }
  return total;
}

TEST_CASE("transverse measure agrees with the marching oracle") {
  Rng rng(41);
  for (int k = 0; k < 40; ++k) {
    FiniteMeasuredLamination mu = random_lamination(rng, 6);
    HPoint a = random_hpoint(rng);
    GeodesicArc I(a, flow_from(a, uniform(rng, 0, 2 * kPi), uniform(rng, 0.3, 2.0)));
    CHECK_THAT(transverse_measure(mu, I),
               Catch::Matchers::WithinAbs(march_measure(mu, I), 1e-12));
  }
}

TEST_CASE("transverse measure is a pushforward invariant") {
  Rng rng(43);
  for (int k = 0; k < 1000; ++k) {
    FiniteMeasuredLamination mu = random_lamination(rng, 5);
    MoebiusMap g = random_moebius(rng);
    HPoint a = random_hpoint(rng);
    GeodesicArc I(a, flow_from(a, uniform(rng, 0, 2 * kPi), 1.0));
    GeodesicArc gI(g.apply(I.start), g.apply(I.end));
    CHECK(transverse_measure(pushforward(mu, g), gI) == transverse_measure(mu, I));
  }
}

TEST_CASE("thurston norm fixtures") {
  FiniteMeasuredLamination single(
      {{Geodesic(BoundaryPoint(-1.0), BoundaryPoint(1.0)), 0.7}});
  CHECK(thurston_norm(single) == 0.7);

  FiniteMeasuredLamination close(
      {{Geodesic(BoundaryPoint(-1.0), BoundaryPoint(1.0)), 1.0},
       {Geodesic(BoundaryPoint(-2.0), BoundaryPoint(2.0)), 1.0}});
  CHECK(thurston_norm(close) == 2.0);  // distance log 2 <= 1

  FiniteMeasuredLamination far(
      {{Geodesic(BoundaryPoint(-1.0), BoundaryPoint(1.0)), 1.0},
       {Geodesic(BoundaryPoint(-8.0), BoundaryPoint(8.0)), 1.0}});
  CHECK(thurston_norm(far) == 1.0);  // distance log 8 > 1
}

TEST_CASE("thurston norm properties") {
  Rng rng(47);
  for (int k = 0; k < 30; ++k) {
    FiniteMeasuredLamination mu = random_lamination(rng, 8);
    double norm = thurston_norm(mu);
    CHECK(norm <= mu.total_weight() + 1e-12);
    CHECK(sample_norm(mu, 800, rng()) <= norm + 1e-12);
    MoebiusMap g = random_moebius(rng);
    CHECK_THAT(thurston_norm(pushforward(mu, g)),
               Catch::Matchers::WithinAbs(norm, 1e-10));
    double s = uniform(rng, 0.1, 3.0);
    CHECK_THAT(thurston_norm(scale(mu, s)),
               Catch::Matchers::WithinRel(s * norm, 1e-12));
  }
  // total weight is attained exactly on a single tight chain
  FiniteMeasuredLamination chain(
      {{Geodesic(BoundaryPoint(-1.0), BoundaryPoint(1.0)), 0.4},
       {Geodesic(BoundaryPoint(-1.5), BoundaryPoint(1.5)), 0.4},
       {Geodesic(BoundaryPoint(-2.0), BoundaryPoint(2.0)), 0.4}});
  CHECK_THAT(thurston_norm(chain), Catch::Matchers::WithinAbs(1.2, 1e-14));
}

TEST_CASE("scale and pushforward basics") {
  FiniteMeasuredLamination mu = two_nested();
  CHECK(scale(mu, 1.0).total_weight() == mu.total_weight());
  CHECK(scale(mu, 0.0).empty());
  CHECK_THROWS_AS(scale(mu, -1.0), ValidationError);
  CHECK(pushforward(mu, MoebiusMap()).leaves()[0].g.same_as(mu.leaves()[0].g));
  FiniteMeasuredLamination vert(
      {{Geodesic(BoundaryPoint(0.0), BoundaryPoint::infinity()), 0.9}});
  FiniteMeasuredLamination moved = pushforward(vert, MoebiusMap(1, 1, 0, 1));
  CHECK(moved.leaves()[0].g.same_as(
      Geodesic(BoundaryPoint(1.0), BoundaryPoint::infinity())));
  CHECK(moved.leaves()[0].w == 0.9);
}

TEST_CASE("depth profile estimator semantics") {
  CHECK(depth_profile(FiniteMeasuredLamination(), {0.5, 0.1}).entries[0].second == 0.0);
  FiniteMeasuredLamination single(
      {{Geodesic(BoundaryPoint(-0.2), BoundaryPoint(0.2)), 0.6}});
  double d = leaf_collar_depth(single.leaves()[0].g);
  DecayProfile prof = depth_profile(single, {2.0 * d, 0.5 * d});
  CHECK(prof.entries[0].second == 0.6);  // reachable at depth 2d
  CHECK(prof.entries[1].second == 0.0);  // not at depth d/2
  Rng rng(53);
  for (int k = 0; k < 10; ++k) {
    FiniteMeasuredLamination mu = random_lamination(rng, 8);
    DecayProfile p = depth_profile(mu, {1.0, 0.6, 0.3, 0.1, 0.03});
    for (size_t i = 0; i + 1 < p.entries.size(); ++i)
      CHECK(p.entries[i].second >= p.entries[i + 1].second);  // monotone in depth
  }
}

TEST_CASE("exhaustion profile estimator semantics") {
  CHECK(exhaustion_profile(FiniteMeasuredLamination(), {1.0}).entries[0].second == 0.0);
  // leaf through i: distance 0 from the basepoint
  FiniteMeasuredLamination through(
      {{Geodesic(BoundaryPoint(-1.0), BoundaryPoint(1.0)), 0.8}});
  DecayProfile prof = exhaustion_profile(through, {0.5, 1.5});
  CHECK(prof.entries[0].second == 0.8);
  CHECK(prof.entries[1].second == 0.0);
  Rng rng(59);
  for (int k = 0; k < 10; ++k) {
    FiniteMeasuredLamination mu = random_lamination(rng, 8);
    DecayProfile p = exhaustion_profile(mu, {0.5, 1.0, 2.0, 3.0, 4.0});
    for (size_t i = 0; i + 1 < p.entries.size(); ++i)
      CHECK(p.entries[i].second >= p.entries[i + 1].second);  // shrinking domain
  }
}

TEST_CASE("circle mass bound closed form") {
  auto [len2, bound2] = circle_mass_bound(FiniteMeasuredLamination(), 2);
  CHECK_THAT(len2, Catch::Matchers::WithinAbs(8.0 * kPi / 3.0, 1e-13));
  CHECK(bound2 == 0.0);
  double prev = 0;
  for (int n = 2; n <= 64; ++n) {
    auto [len, bound] = circle_mass_bound(FiniteMeasuredLamination(), n);
    CHECK(len > prev);
    prev = len;
  }
  auto [len64, b64] = circle_mass_bound(FiniteMeasuredLamination(), 64);
  CHECK_THAT(len64 / (2.0 * kPi * 64), Catch::Matchers::WithinAbs(1.0, 0.02));
  CHECK_THROWS_AS(circle_mass_bound(FiniteMeasuredLamination(), 1), ValidationError);
}

TEST_CASE("lamination file round trip") {
  FiniteMeasuredLamination mu(
      {{Geodesic(BoundaryPoint(-1.25), BoundaryPoint(1.75)), 0.511},
       {Geodesic(BoundaryPoint(2.0), BoundaryPoint::infinity()), 1.25}});
  std::string path = "roundtrip_lamination.txt";
  for (LaminationModel model : {LaminationModel::HalfPlane, LaminationModel::Disk}) {
    write_lamination(mu, path, model);
    FiniteMeasuredLamination back = read_lamination(path);
    REQUIRE(back.size() == mu.size());
    for (size_t i = 0; i < mu.size(); ++i) {
      CHECK(back.leaves()[i].g.same_as(mu.leaves()[i].g, 1e-12));
      CHECK_THAT(back.leaves()[i].w,
                 Catch::Matchers::WithinRel(mu.leaves()[i].w, 1e-15));
    }
  }
  std::remove(path.c_str());
}

static void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  out << body;
}

TEST_CASE("lamination file errors") {
  std::string path = "bad_lamination.txt";
  write_file(path, "model halfplane\nleaf -1 1 1\nleaf 0 2 1\n");
  try {
    read_lamination(path);
    FAIL("expected crossing error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("crossing") != std::string::npos);
  }
  write_file(path, "model halfplane\nleaf 0 1 0\n");
  CHECK_THROWS_AS(read_lamination(path), ValidationError);
  write_file(path, "model halfplane\nleaf 0 1\n");
  CHECK_THROWS_AS(read_lamination(path), ValidationError);
  write_file(path, "model disk\nleaf 0 inf 1\n");
  CHECK_THROWS_AS(read_lamination(path), ValidationError);
  write_file(path, "leaf 0 1 1\n");
  CHECK_THROWS_AS(read_lamination(path), ValidationError);
  write_file(path, "model torus\n");
  CHECK_THROWS_AS(read_lamination(path), ValidationError);
  CHECK_THROWS_AS(read_lamination("no_such_file.txt"), ValidationError);
  std::remove(path.c_str());
}
