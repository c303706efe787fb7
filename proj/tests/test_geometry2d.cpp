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

#include <gtest/gtest.h>

#include <numbers>
#include <random>

namespace gripper::geom {
namespace {

Polygon square(double half, Vec2 c = {}) {
  return {{c.x - half, c.y - half}, {c.x + half, c.y - half},
          {c.x + half, c.y + half}, {c.x - half, c.y + half}};
}

TEST(Polygon, SignedAreaAndOrientation) {
  Polygon p = square(1.0);
  EXPECT_DOUBLE_EQ(signed_area(p), 4.0);
  std::reverse(p.begin(), p.end());
  EXPECT_DOUBLE_EQ(signed_area(p), -4.0);
  make_ccw(p);
  EXPECT_DOUBLE_EQ(signed_area(p), 4.0);
}

TEST(Polygon, ContainsAndDistance) {
  const Polygon p = square(1.0);
  EXPECT_TRUE(contains(p, {0.2, -0.3}));
  EXPECT_FALSE(contains(p, {1.5, 0.0}));
  EXPECT_DOUBLE_EQ(boundary_distance({0.0, 0.0}, p), 1.0);
  EXPECT_DOUBLE_EQ(boundary_distance({3.0, 0.0}, p), 2.0);
  EXPECT_DOUBLE_EQ(polyline_distance({0.0, 1.0}, std::vector<Vec2>{{-1, 0}, {1, 0}}), 1.0);
  EXPECT_DOUBLE_EQ(polyline_distance({3.0, 4.0}, std::vector<Vec2>{{0, 0}}), 5.0);
}

TEST(Segments, CrossOnlyProperly) {
  EXPECT_TRUE(segments_cross({-1, 0}, {1, 0}, {0, -1}, {0, 1}, 1e-9));
  EXPECT_FALSE(segments_cross({-1, 0}, {1, 0}, {0, 0}, {0, 1}, 1e-9));  // touching
  EXPECT_FALSE(segments_cross({-1, 0}, {1, 0}, {-1, 0}, {1, 0}, 1e-9));  // collinear
  EXPECT_FALSE(segments_cross({-1, 0}, {1, 0}, {2, -1}, {2, 1}, 1e-9));
}

TEST(Interference, TouchingIsNotInterference) {
  const Polygon a = square(1.0);
  EXPECT_FALSE(polygons_interfere(a, square(1.0, {2.0, 0.0}), 1e-9));
  EXPECT_FALSE(polygons_interfere(a, square(1.0, {2.0, 2.0}), 1e-9));
  EXPECT_TRUE(polygons_interfere(a, square(1.0, {1.9, 0.0}), 1e-9));
  EXPECT_TRUE(polygons_interfere(a, a, 1e-9));  // coincident boundaries
  EXPECT_TRUE(polygons_interfere(a, square(0.5), 1e-9));
  EXPECT_TRUE(polygons_interfere(square(0.5), a, 1e-9));
}

TEST(Interference, CrossShapeWithoutContainedVertices) {
  const Polygon wide = {{-3, -1}, {3, -1}, {3, 1}, {-3, 1}};
  const Polygon tall = {{-1, -3}, {1, -3}, {1, 3}, {-1, 3}};
  EXPECT_TRUE(polygons_interfere(wide, tall, 1e-9));
}

TEST(Interference, CircleAgainstPolygon) {
  const Polygon p = square(1.0);
  EXPECT_TRUE(circle_polygon_interfere({0, 0}, 0.1, p, 1e-9));
  EXPECT_TRUE(circle_polygon_interfere({1.5, 0}, 0.6, p, 1e-9));
  EXPECT_FALSE(circle_polygon_interfere({1.5, 0}, 0.5, p, 1e-9));
}

// Separating-axis penetration depth for convex polygons; negative when apart.
double sat_depth(const Polygon& a, const Polygon& b) {
  double depth = 1e300;
  for (const Polygon* p : {&a, &b}) {
    for (std::size_t i = 0; i < p->size(); ++i) {
      const Vec2 e = (*p)[(i + 1) % p->size()] - (*p)[i];
      const Vec2 axis = normalized(perp(e));
      double alo = 1e300, ahi = -1e300, blo = 1e300, bhi = -1e300;
      for (const Vec2& v : a) {
        alo = std::min(alo, dot(v, axis));
        ahi = std::max(ahi, dot(v, axis));
      }
      for (const Vec2& v : b) {
        blo = std::min(blo, dot(v, axis));
        bhi = std::max(bhi, dot(v, axis));
      }
      depth = std::min(depth, std::min(ahi, bhi) - std::max(alo, blo));
    }
  }
  return depth;
}

Polygon random_convex(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int n = 3 + static_cast<int>(u(rng) * 4);
  const Vec2 c{u(rng) * 6 - 3, u(rng) * 6 - 3};
  const double r = 0.5 + 2 * u(rng);
  const double phase = u(rng) * 2 * std::numbers::pi;
  Polygon p;
  for (int i = 0; i < n; ++i) {
    const double t = phase + 2 * std::numbers::pi * i / n;
    p.push_back({c.x + r * std::cos(t), c.y + r * std::sin(t)});
  }
  return p;
}

TEST(Interference, AgreesWithSeparatingAxisOnConvexPolygons) {
  std::mt19937 rng(7);
  int checked = 0;
  for (int i = 0; i < 5000; ++i) {
    const Polygon a = random_convex(rng);
    const Polygon b = random_convex(rng);
    const double depth = sat_depth(a, b);
    if (std::abs(depth) < 1e-6) continue;
    ++checked;
    EXPECT_EQ(polygons_interfere(a, b, 1e-9), depth > 0.0) << "case " << i;
  }
  EXPECT_GT(checked, 4900);
}

TEST(Transform, RotatesThenTranslates) {
  const Polygon p = transformed(std::vector<Vec2>{{1, 0}}, std::numbers::pi / 2, {1, 1});
  EXPECT_NEAR(p[0].x, 1.0, 1e-15);
  EXPECT_NEAR(p[0].y, 2.0, 1e-15);
  const Vec2 r = rotated({1, 0}, std::numbers::pi);
  EXPECT_NEAR(r.x, -1.0, 1e-15);
}

TEST(Bounds, Accumulates) {
  Bounds b;
  b.add(square(1.0, {2, 3}));
  EXPECT_EQ(b.lo, (Vec2{1, 2}));
  EXPECT_EQ(b.hi, (Vec2{3, 4}));
}

}  // namespace
}  // namespace gripper::geom
