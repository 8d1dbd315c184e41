#include "emptytri/geometry.hpp"

#include <array>
#include <sstream>

#include "emptytri/errors.hpp"

namespace emptytri {

namespace {

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

}  // namespace

std::string to_string(const Point& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

Containment point_in_triangle(const Point& a, const Point& b, const Point& c, const Point& p) {
  const int abc = orient_sign(a, b, c);
  if (abc == 0) {
    throw GeometryError("degenerate triangle " + to_string(a) + to_string(b) + to_string(c));
  }
  const int s1 = orient_sign(a, b, p) * abc;
  const int s2 = orient_sign(b, c, p) * abc;
  const int s3 = orient_sign(c, a, p) * abc;
  if (s1 < 0 || s2 < 0 || s3 < 0) {
    return Containment::Outside;
  }
  if (s1 == 0 || s2 == 0 || s3 == 0) {
    // On an edge line but not strictly outside any edge: on the closed boundary.
    throw GeometryError("point " + to_string(p) + " on boundary of triangle " + to_string(a) +
                        to_string(b) + to_string(c));
  }
  return Containment::Inside;
}

bool angle_sum_exceeds_pi(const Point& x, const Point& a, const Point& b, const Point& c) {
  const int sb = orient_sign(x, a, b);
  const int sc = orient_sign(x, a, c);
  if (sb == 0 || sc == 0 || sb == sc) {
    throw GeometryError("angle_sum_exceeds_pi: " + to_string(b) + " and " + to_string(c) +
                        " not strictly on opposite sides of line " + to_string(x) +
                        to_string(a));
  }
  const Wide ux = a.x - x.x, uy = a.y - x.y;
  const Wide vx = b.x - x.x, vy = b.y - x.y;
  const Wide wx = c.x - x.x, wy = c.y - x.y;
  const Wide sin1 = wide_abs(vx * uy - vy * ux);
  const Wide cos1 = vx * ux + vy * uy;
  const Wide sin2 = wide_abs(ux * wy - uy * wx);
  const Wide cos2 = ux * wx + uy * wy;
  const Wide s = sin1 * cos2 + cos1 * sin2;
  if (s == 0) {
    throw GeometryError("angle sum exactly 180 degrees: " + to_string(b) + to_string(x) +
                        to_string(c) + " collinear");
  }
  return s < 0;
}

std::string ValidationReport::describe(std::span<const Point> points) const {
  std::ostringstream out;
  if (!out_of_bound.empty()) {
    const auto i = out_of_bound.front();
    out << "point " << i << " " << to_string(points[i]) << " exceeds coordinate bound "
        << kCoordinateBound;
  } else if (!duplicates.empty()) {
    const auto [i, j] = duplicates.front();
    out << "duplicate points " << i << " and " << j << " at " << to_string(points[i]);
  } else if (!collinear.empty()) {
    const auto& t = collinear.front();
    out << "collinear triple " << t[0] << " " << t[1] << " " << t[2] << ": "
        << to_string(points[t[0]]) << " " << to_string(points[t[1]]) << " "
        << to_string(points[t[2]]);
  } else {
    out << "valid";
  }
  return out.str();
}

ValidationReport validate_general_position(std::span<const Point> points) {
  ValidationReport report;
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!within_bound(points[i])) report.out_of_bound.push_back(i);
  }
  if (!report.out_of_bound.empty()) return report;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i] == points[j]) report.duplicates.emplace_back(i, j);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i] == points[j]) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (points[k] == points[i] || points[k] == points[j]) continue;
        if (orient(points[i], points[j], points[k]) == Orientation::Collinear) {
          report.collinear.push_back({i, j, k});
        }
      }
    }
  }
  return report;
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  const auto report = validate_general_position(points_);
  if (!report.valid()) throw GeometryError(report.describe(points_));
}

PointSet PointSet::without(std::size_t index) const {
  std::vector<Point> rest;
  rest.reserve(points_.size() - 1);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i != index) rest.push_back(points_[i]);
  }
  return PointSet(std::move(rest), Trusted{});
}

}  // namespace emptytri
