#pragma once

// Text format for lamination files.
//
//   # comment lines and blank lines are ignored
//   model halfplane        (or: model disk)
//   leaf <a> <b> <weight>
//
// In the halfplane model endpoints are reals on the boundary line or the
// token "inf"; in the disk model they are angles (radians) on the unit
// circle. The writer emits 17 significant digits.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "eql/geometry.hpp"
#include "eql/lamination.hpp"

namespace eql {

enum class LaminationModel { HalfPlane, Disk };

namespace detail {

inline BoundaryPoint parse_endpoint(const std::string& tok, LaminationModel model,
                                    int line_no) {
  std::string where = " (line " + std::to_string(line_no) + ")";
  if (tok == "inf") {
    if (model == LaminationModel::Disk)
      throw ValidationError("lamination file: 'inf' is not a disk endpoint" + where);
    return BoundaryPoint::infinity();
  }
  try {
    size_t used = 0;
    double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    if (model == LaminationModel::Disk) return BoundaryPoint::from_circle_angle(v);
    return BoundaryPoint(v);
  } catch (const std::exception&) {
    throw ValidationError("lamination file: bad endpoint '" + tok + "'" + where);
  }
}

}  // namespace detail

inline FiniteMeasuredLamination read_lamination(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open lamination file: " + path);
  LaminationModel model = LaminationModel::HalfPlane;
  bool have_model = false;
  std::vector<WeightedLeaf> leaves;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head[0] == '#') continue;
    std::string where = " (line " + std::to_string(line_no) + ")";
    if (head == "model") {
      std::string tag;
      ls >> tag;
      if (tag == "halfplane")
        model = LaminationModel::HalfPlane;
      else if (tag == "disk")
        model = LaminationModel::Disk;
      else
        throw ValidationError("lamination file: unknown model '" + tag + "'" + where);
      have_model = true;
    } else if (head == "leaf") {
      if (!have_model)
        throw ValidationError("lamination file: leaf before model line" + where);
      std::string ta, tb;
      double w;
      if (!(ls >> ta >> tb >> w))
        throw ValidationError("lamination file: malformed leaf record" + where);
      if (!(w > 0))
        throw ValidationError("lamination file: leaf " + std::to_string(leaves.size()) +
                              " has nonpositive weight" + where);
      BoundaryPoint a = detail::parse_endpoint(ta, model, line_no);
      BoundaryPoint b = detail::parse_endpoint(tb, model, line_no);
      if (approx_equal(a, b))
        throw ValidationError("lamination file: degenerate leaf " +
                              std::to_string(leaves.size()) + where);
      leaves.push_back({Geodesic(a, b), w});
    } else {
      throw ValidationError("lamination file: unknown record '" + head + "'" + where);
    }
  }
  if (!have_model) throw ValidationError("lamination file: missing model line");
  return FiniteMeasuredLamination(std::move(leaves));  // validates disjointness
}

inline void write_lamination(const FiniteMeasuredLamination& mu, const std::string& path,
                             LaminationModel model = LaminationModel::HalfPlane) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write lamination file: " + path);
  char buf[128];
  auto fmt = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  auto endpoint = [&](const BoundaryPoint& p) -> std::string {
    if (model == LaminationModel::Disk) return fmt(p.circle_angle());
    return p.is_infinite() ? "inf" : fmt(p.value());
  };
  out << "model " << (model == LaminationModel::Disk ? "disk" : "halfplane") << "\n";
  for (const auto& l : mu.leaves())
    out << "leaf " << endpoint(l.g.p()) << " " << endpoint(l.g.q()) << " "
        << fmt(l.w) << "\n";
}

}  // namespace eql
