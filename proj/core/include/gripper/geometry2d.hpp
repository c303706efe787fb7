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

#pragma once

// Minimal planar geometry for contact and clearance queries.

#include <cmath>
#include <span>
#include <vector>

namespace gripper::geom {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator-() const { return {-x, -y}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline Vec2 normalized(Vec2 a) {
  const double n = norm(a);
  return n > 0.0 ? a * (1.0 / n) : a;
}
inline Vec2 rotated(Vec2 a, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * a.x - s * a.y, s * a.x + c * a.y};
}
/// Left-hand perpendicular.
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

/// Closed polygon, counter-clockwise, last vertex not repeated.
using Polygon = std::vector<Vec2>;

double signed_area(std::span<const Vec2> poly);
void make_ccw(Polygon& poly);

Vec2 closest_point_on_segment(Vec2 p, Vec2 a, Vec2 b);

/// Distance from p to the polygon boundary.
double boundary_distance(Vec2 p, std::span<const Vec2> poly);
/// Distance from p to an open polyline.
double polyline_distance(Vec2 p, std::span<const Vec2> line);

/// Even-odd containment; points on the boundary may go either way.
bool contains(std::span<const Vec2> poly, Vec2 p);

/// True when the segments cross at a point interior to both, with each
/// endpoint more than tol away from the other segment's supporting line.
bool segments_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double tol);

/// Overlap deeper than tol. Touching polygons do not interfere.
bool polygons_interfere(std::span<const Vec2> a, std::span<const Vec2> b,
                        double tol);

/// Overlap of a disc with a polygon deeper than tol.
bool circle_polygon_interfere(Vec2 center, double radius,
                              std::span<const Vec2> poly, double tol);

Polygon transformed(std::span<const Vec2> poly, double angle, Vec2 offset);

struct Bounds {
  Vec2 lo{1e300, 1e300};
  Vec2 hi{-1e300, -1e300};

  void add(Vec2 p);
  void add(std::span<const Vec2> pts);
};

}  // namespace gripper::geom
