// Copyright 2026 The Multisurface Gripper Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gripper/geometry2d.hpp"

#include <algorithm>
#include <limits>

namespace gripper::geom {

double signed_area(std::span<const Vec2> poly) {
  double twice = 0.0;
  for (std::size_t i = 0, n = poly.size(); i < n; ++i) {
    twice += cross(poly[i], poly[(i + 1) % n]);
  }
  return 0.5 * twice;
}

void make_ccw(Polygon& poly) {
  if (signed_area(poly) < 0.0) std::reverse(poly.begin(), poly.end());
}

Vec2 closest_point_on_segment(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return a;
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return a + ab * t;
}

double boundary_distance(Vec2 p, std::span<const Vec2> poly) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0, n = poly.size(); i < n; ++i) {
    const Vec2 c = closest_point_on_segment(p, poly[i], poly[(i + 1) % n]);
    best = std::min(best, norm(p - c));
  }
  return best;
}

double polyline_distance(Vec2 p, std::span<const Vec2> line) {
  if (line.size() == 1) return norm(p - line[0]);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < line.size(); ++i) {
    const Vec2 c = closest_point_on_segment(p, line[i], line[i + 1]);
    best = std::min(best, norm(p - c));
  }
  return best;
}

bool contains(std::span<const Vec2> poly, Vec2 p) {
  bool inside = false;
  for (std::size_t i = 0, n = poly.size(), j = n - 1; i < n; j = i++) {
    const Vec2 a = poly[i];
    const Vec2 b = poly[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

bool segments_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double tol) {
  const double lab = norm(b - a);
  const double lcd = norm(d - c);
  if (lab == 0.0 || lcd == 0.0) return false;
  // Signed distances of each endpoint from the other segment's line.
  const double c_side = cross(b - a, c - a) / lab;
  const double d_side = cross(b - a, d - a) / lab;
  const double a_side = cross(d - c, a - c) / lcd;
  const double b_side = cross(d - c, b - c) / lcd;
  return ((c_side > tol && d_side < -tol) || (c_side < -tol && d_side > tol)) &&
         ((a_side > tol && b_side < -tol) || (a_side < -tol && b_side > tol));
}

namespace {

bool deep_inside(Vec2 p, std::span<const Vec2> poly, double tol) {
  return contains(poly, p) && boundary_distance(p, poly) > tol;
}

// Vertices, edge midpoints and the vertex mean of pts probed against poly.
// The extra probes catch overlaps whose boundaries coincide.
bool probe_inside(std::span<const Vec2> pts, std::span<const Vec2> poly,
                  double tol) {
  Vec2 mean;
  for (std::size_t i = 0, n = pts.size(); i < n; ++i) {
    if (deep_inside(pts[i], poly, tol)) return true;
    if (deep_inside((pts[i] + pts[(i + 1) % n]) * 0.5, poly, tol)) return true;
    mean = mean + pts[i];
  }
  if (pts.empty()) return false;
  mean = mean * (1.0 / static_cast<double>(pts.size()));
  return contains(pts, mean) && deep_inside(mean, poly, tol);
}

}  // namespace

bool polygons_interfere(std::span<const Vec2> a, std::span<const Vec2> b,
                        double tol) {
  Bounds ba;
  ba.add(a);
  Bounds bb;
  bb.add(b);
  if (ba.hi.x < bb.lo.x || bb.hi.x < ba.lo.x || ba.hi.y < bb.lo.y ||
      bb.hi.y < ba.lo.y) {
    return false;
  }
  if (probe_inside(a, b, tol) || probe_inside(b, a, tol)) return true;
  for (std::size_t i = 0, n = a.size(); i < n; ++i) {
    for (std::size_t j = 0, m = b.size(); j < m; ++j) {
      if (segments_cross(a[i], a[(i + 1) % n], b[j], b[(j + 1) % m], tol)) {
        return true;
      }
    }
  }
  return false;
}

bool circle_polygon_interfere(Vec2 center, double radius,
                              std::span<const Vec2> poly, double tol) {
  if (contains(poly, center)) return true;
  return boundary_distance(center, poly) < radius - tol;
}

Polygon transformed(std::span<const Vec2> poly, double angle, Vec2 offset) {
  Polygon out;
  out.reserve(poly.size());
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  for (const Vec2& p : poly) {
    out.push_back({c * p.x - s * p.y + offset.x, s * p.x + c * p.y + offset.y});
  }
  return out;
}

void Bounds::add(Vec2 p) {
  lo.x = std::min(lo.x, p.x);
  lo.y = std::min(lo.y, p.y);
  hi.x = std::max(hi.x, p.x);
  hi.y = std::max(hi.y, p.y);
}

void Bounds::add(std::span<const Vec2> pts) {
  for (const Vec2& p : pts) add(p);
}

}  // namespace gripper::geom
