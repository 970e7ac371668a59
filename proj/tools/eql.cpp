// Command-line harness around the earthquake laboratory.
//
// Exit codes: 0 success, 1 validation error, 2 numerical failure.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eql/eql.hpp"

namespace {

struct Globals {
  unsigned long long seed = 20260825;
  double tol = 1e-9;
  int quadrature = 512;
  std::string format = "json";
  std::string out = "-";

  eql::DEParams de() const { return {quadrature, tol}; }

  void stamp(eql::ExperimentReport& rep) const {
    rep.params["seed"] = seed;
    rep.params["tol"] = tol;
    rep.params["quadrature"] = quadrature;
  }
};

eql::BoundaryPoint parse_boundary(const std::string& tok) {
  if (tok == "inf") return eql::BoundaryPoint::infinity();
  try {
    size_t used = 0;
    double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return eql::BoundaryPoint(v);
  } catch (const std::exception&) {
    throw eql::ValidationError("bad boundary point: " + tok);
  }
}

eql::HPoint parse_interior(const std::string& tok) {
  auto comma = tok.find(',');
  if (comma == std::string::npos)
    throw eql::ValidationError("interior point must be x,y: " + tok);
  try {
    return eql::HPoint(std::stod(tok.substr(0, comma)),
                       std::stod(tok.substr(comma + 1)));
  } catch (const eql::ValidationError&) {
    throw;
  } catch (const std::exception&) {
    throw eql::ValidationError("bad interior point: " + tok);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for bounded earthquakes of the hyperbolic plane"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global flags after the subcommand too

  Globals g;
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--tol", g.tol, "numerical tolerance");
  app.add_option("--quadrature", g.quadrature, "quadrature node budget");
  app.add_option("--format", g.format, "report format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", g.out, "output path ('-' for stdout)");

  std::string lam_path, lam2_path, family = "decaying";
  double t0 = 1.0, threshold = 1e-3, c = 0.5, rho = 0.5, floor_thr = 1e-3;
  int boxes = 200, leaves = 12, stack_leaves = 16;
  bool right = false;
  std::vector<std::string> boundary_pts, interior_pts;
  std::vector<size_t> flips;
  std::vector<double> steps = {0.2, 0.1, 0.05, 0.025, 0.0125};
  std::vector<double> radii = {1.5, 2.0, 2.5, 3.0, 3.5};
  std::vector<double> alphas = {0.5, 1.0, 1.5};
  std::vector<int> n_list = {2, 4, 8, 16, 32, 64};

  auto* c_eval = app.add_subcommand("eval", "evaluate an earthquake on points");
  c_eval->add_option("--lamination", lam_path)->required();
  c_eval->add_option("--boundary", boundary_pts, "boundary points (reals or inf)");
  c_eval->add_option("--interior", interior_pts, "interior points x,y");

  auto* c_norm = app.add_subcommand("norm", "Thurston norm of a lamination");
  c_norm->add_option("--lamination", lam_path)->required();

  auto* c_recover = app.add_subcommand("recover", "measure round-trip report");
  c_recover->add_option("--lamination", lam_path)->required();

  auto* c_verify = app.add_subcommand("verify-left", "left-movement verification");
  c_verify->add_option("--lamination", lam_path)->required();
  c_verify->add_flag("--right", right, "build a right earthquake instead");
  c_verify->add_option("--flip-leaf", flips, "flip selected leaves (adversarial)");

  auto* c_box = app.add_subcommand("box-functional", "sampled S_phi between laminations");
  c_box->add_option("--lamination", lam_path)->required();
  c_box->add_option("--lamination2", lam2_path, "second lamination (default empty)");
  c_box->add_option("--boxes", boxes, "number of sampled boxes");

  auto* c_scale = app.add_subcommand("scaling-path", "earthquake scaling continuity");
  c_scale->add_option("--lamination", lam_path)->required();
  c_scale->add_option("--t0", t0);
  c_scale->add_option("--steps", steps, "|t - t0| offsets");
  c_scale->add_option("--threshold", threshold);

  auto* c_asym = app.add_subcommand("asymptotic-test", "exhaustion decay vs Beltrami decay");
  c_asym->add_option("--family", family)->check(CLI::IsMember({"decaying", "constant"}));
  c_asym->add_option("--leaves", leaves);
  c_asym->add_option("--c", c);
  c_asym->add_option("--rho", rho);
  c_asym->add_option("--radii", radii);
  c_asym->add_option("--floor", floor_thr);

  auto* c_odelta = app.add_subcommand("odelta-test", "circle-mass bound trends");
  c_odelta->add_option("--alpha", alphas);
  c_odelta->add_option("--n", n_list);
  c_odelta->add_option("--leaves", stack_leaves);
  c_odelta->add_option("--c", c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    eql::ExperimentReport rep;
    if (*c_eval) {
      eql::FiniteMeasuredLamination mu = eql::read_lamination(lam_path);
      eql::EarthquakeMap E = eql::build_earthquake(mu);
      rep.experiment = "eval";
      rep.params["lamination"] = lam_path;
      for (const auto& tok : boundary_pts) {
        eql::BoundaryPoint x = parse_boundary(tok);
        eql::BoundaryPoint y = E.eval_boundary(x);
        char img[32];
        if (y.is_infinite())
          std::snprintf(img, sizeof img, "inf");
        else
          std::snprintf(img, sizeof img, "%.17g", y.value());
        rep.rows.push_back({{"kind", "boundary"},
                            {"input", tok},
                            {"image", img},
                            {"image_angle", y.circle_angle()}});
      }
      for (const auto& tok : interior_pts) {
        eql::HPoint z = parse_interior(tok);
        eql::HPoint w = E.eval_interior(z);
        rep.rows.push_back(
            {{"kind", "interior"}, {"input", tok}, {"x", w.x}, {"y", w.y}});
      }
    } else if (*c_norm) {
      eql::FiniteMeasuredLamination mu = eql::read_lamination(lam_path);
      rep.experiment = "norm";
      rep.params["lamination"] = lam_path;
      rep.rows.push_back({{"thurston_norm", eql::thurston_norm(mu)},
                          {"sampled_norm", eql::sample_norm(mu, 10000, g.seed)}});
    } else if (*c_recover) {
      eql::FiniteMeasuredLamination mu = eql::read_lamination(lam_path);
      eql::FiniteMeasuredLamination back =
          eql::build_earthquake(mu).recover_measure();
      rep.experiment = "recover";
      rep.params["lamination"] = lam_path;
      double max_err = 0;
      for (const auto& in : mu.leaves()) {
        double err = 1e18;
        for (const auto& out : back.leaves())
          if (out.g.same_as(in.g, 1e-7)) err = std::abs(out.w - in.w);
        max_err = std::max(max_err, err);
        rep.rows.push_back({{"weight_in", in.w}, {"weight_error", err}});
      }
      rep.verdicts.push_back(
          {"round_trip_within_tol", max_err < g.tol, g.tol, ""});
    } else if (*c_verify) {
      eql::FiniteMeasuredLamination mu = eql::read_lamination(lam_path);
      eql::EarthquakeBuildOptions opts;
      opts.right = right;
      opts.flip_leaves = flips;
      auto lrep = eql::build_earthquake(mu, opts).verify_left(300, g.seed);
      rep.experiment = "verify-left";
      rep.params["lamination"] = lam_path;
      rep.params["right"] = right;
      for (const auto& v : lrep.violations)
        rep.rows.push_back({{"gap1", v.gap1}, {"gap2", v.gap2}, {"reason", v.reason}});
      rep.verdicts.push_back({"left_property", lrep.ok, 0.0,
                              std::to_string(lrep.violations.size()) + " violations"});
    } else if (*c_box) {
      eql::FiniteMeasuredLamination mu1 = eql::read_lamination(lam_path);
      eql::FiniteMeasuredLamination mu2;
      if (!lam2_path.empty()) mu2 = eql::read_lamination(lam2_path);
      double val = eql::box_functional(mu1, mu2, eql::standard_bump(),
                                       eql::random_unit_boxes(boxes, g.seed));
      rep.experiment = "box-functional";
      rep.params["lamination"] = lam_path;
      rep.params["lamination2"] = lam2_path;
      rep.params["boxes"] = boxes;
      rep.rows.push_back({{"sampled_S_phi", val}});
    } else if (*c_scale) {
      eql::FiniteMeasuredLamination mu = eql::read_lamination(lam_path);
      std::vector<double> t_list;
      for (double s : steps) t_list.push_back(std::max(0.0, std::min(1.0, t0 - s)));
      rep = eql::run_scaling_path(mu, t0, t_list, g.de(), threshold);
      rep.params["lamination"] = lam_path;
    } else if (*c_asym) {
      eql::FiniteMeasuredLamination mu = family == "decaying"
                                             ? eql::stack_decaying(leaves, c, rho)
                                             : eql::stack_constant(leaves, c);
      rep = eql::run_asymptotic_test(family, mu, radii, g.de(), floor_thr);
    } else if (*c_odelta) {
      rep = eql::run_odelta_test(alphas, n_list, stack_leaves, c);
    }
    g.stamp(rep);
    rep.write(g.out, g.format);
    return 0;
  } catch (const eql::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const eql::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
