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

#include "gripper/grasp_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "gripper/error.hpp"
#include "gripper/units.hpp"

namespace gripper {
namespace {

using geom::Polygon;
using geom::Vec2;

// Finger solid thickness behind the deepest point of its face.
constexpr double kCagingFingerDepth = 5.0;
constexpr int kBisectionIterations = 200;

double bounding_radius(const ObjectGeometry& g) {
  if (g.is_disc()) return std::get<double>(g.outline);
  double r = 0.0;
  for (const Vec2& p : std::get<Polygon>(g.outline)) r = std::max(r, geom::norm(p));
  return r;
}

bool object_interferes(const ObjectGeometry& g, const Polygon& finger,
                       double tol) {
  if (g.is_disc()) {
    return geom::circle_polygon_interfere({0.0, 0.0}, std::get<double>(g.outline),
                                          finger, tol);
  }
  return geom::polygons_interfere(std::get<Polygon>(g.outline), finger, tol);
}

// Face contour of a placed finger in world coordinates, ordered by y.
std::vector<Vec2> world_face(const SurfaceProfile& profile, FingerSide side,
                             double baseline) {
  std::vector<Vec2> out;
  out.reserve(profile.polyline.size());
  for (const Vec2& p : profile.polyline) {
    out.push_back(side == FingerSide::kLeft ? Vec2{baseline + p.y, p.x}
                                            : Vec2{baseline - p.y, p.x});
  }
  return out;
}

// Face normal at point c of segment a->b, pointing toward the object. Arc
// faces use the exact radial direction rather than the chord's.
Vec2 face_normal(const SurfaceProfile& profile, FingerSide side,
                 double baseline, Vec2 a, Vec2 b, Vec2 c) {
  if (profile.shape.is_curved()) {
    const double r = profile.shape.r_f;
    const double half = 0.5 * profile.width;
    const double base = std::sqrt(std::max(r * r - half * half, 0.0));
    const bool convex = profile.shape.kind == SurfaceKind::kConvex;
    const double cy = convex ? -base : base;
    const Vec2 center{side == FingerSide::kLeft ? baseline + cy : baseline - cy, 0.0};
    const Vec2 radial = geom::normalized(c - center);
    return convex ? radial : radial * -1.0;
  }
  const Vec2 d = geom::normalized(b - a);
  return side == FingerSide::kLeft ? Vec2{d.y, -d.x} : Vec2{-d.y, d.x};
}

// Composite-face bump profile: outward offset of a face at height y.
double face_bump(FaceShape face, double y, double height, double thickness) {
  const double half = 0.5 * height;
  switch (face) {
    case FaceShape::kFlat:
      return 0.0;
    case FaceShape::kConvex:
    case FaceShape::kConcave: {
      const double sag = face == FaceShape::kConvex
                             ? 0.25 * height
                             : std::min(0.25 * height, 0.25 * thickness);
      const double radius = (half * half + sag * sag) / (2.0 * sag);
      const double bump =
          std::sqrt(std::max(radius * radius - y * y, 0.0)) - (radius - sag);
      return face == FaceShape::kConvex ? bump : -bump;
    }
    case FaceShape::kComplex: {
      // Sawtooth: four teeth across the face.
      const double amp = std::min(1.0, 0.25 * thickness);
      const double phase = (y + half) / height * 4.0;
      const double frac = phase - std::floor(phase);
      return amp * (1.0 - std::abs(2.0 * frac - 1.0));
    }
  }
  return 0.0;
}

Polygon composite_polygon(const CompositeFaces& f) {
  constexpr int kSamples = 32;
  Polygon poly;
  const double half_t = 0.5 * f.thickness;
  for (int i = 0; i <= kSamples; ++i) {
    const double y = -0.5 * f.height + f.height * i / kSamples;
    poly.push_back({half_t + face_bump(f.right, y, f.height, f.thickness), y});
  }
  for (int i = kSamples; i >= 0; --i) {
    const double y = -0.5 * f.height + f.height * i / kSamples;
    poly.push_back({-half_t - face_bump(f.left, y, f.height, f.thickness), y});
  }
  geom::make_ccw(poly);
  return poly;
}

Polygon rectangle(double w, double h) {
  return {{-0.5 * w, -0.5 * h}, {0.5 * w, -0.5 * h}, {0.5 * w, 0.5 * h},
          {-0.5 * w, 0.5 * h}};
}

struct Cluster {
  Vec2 point_sum;
  Vec2 normal_sum;
  Vec2 first;
  int count = 0;
};

void add_to_clusters(std::vector<Cluster>& clusters, Vec2 point, Vec2 normal,
                     double radius) {
  for (Cluster& c : clusters) {
    if (geom::norm(point - c.first) <= radius) {
      c.point_sum = c.point_sum + point;
      c.normal_sum = c.normal_sum + normal;
      ++c.count;
      return;
    }
  }
  clusters.push_back({point, normal, point, 1});
}

void side_contacts(const ObjectGeometry& g, const SurfaceProfile& profile,
                   FingerSide side, double baseline, const GraspSetup& setup,
                   ContactSet& out) {
  const std::vector<Vec2> face = world_face(profile, side, baseline);
  const double tol = setup.contact_tol;
  // One contact on a sampled arc can touch two neighbouring facets.
  double merge = setup.merge_radius;
  if (profile.shape.is_curved()) {
    for (std::size_t i = 0; i + 1 < face.size(); ++i) {
      merge = std::max(merge, geom::norm(face[i + 1] - face[i]));
    }
  }
  std::vector<Cluster> clusters;

  if (g.is_disc()) {
    const double r = std::get<double>(g.outline);
    for (std::size_t i = 0; i + 1 < face.size(); ++i) {
      const Vec2 c = geom::closest_point_on_segment({0.0, 0.0}, face[i], face[i + 1]);
      const double dist = geom::norm(c);
      if (std::abs(dist - r) <= tol && dist > 0.0) {
        add_to_clusters(clusters, c, -c * (1.0 / dist), merge);
      }
    }
  } else {
    const Polygon& poly = std::get<Polygon>(g.outline);
    const std::size_t n = poly.size();
    // Face vertices resting on object edges the finger pushes against.
    const Vec2 push{side == FingerSide::kLeft ? 1.0 : -1.0, 0.0};
    for (const Vec2& v : face) {
      Vec2 normal_sum;
      bool touching = false;
      for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = poly[i];
        const Vec2 b = poly[(i + 1) % n];
        const Vec2 inward = geom::normalized(geom::perp(b - a));
        if (geom::dot(inward, push) > 1e-9 &&
            geom::norm(v - geom::closest_point_on_segment(v, a, b)) <= tol) {
          normal_sum = normal_sum + inward;
          touching = true;
        }
      }
      if (touching) {
        add_to_clusters(clusters, v, geom::normalized(normal_sum), merge);
      }
    }
    // Object vertices resting on face segments.
    for (const Vec2& o : poly) {
      Vec2 normal_sum;
      bool touching = false;
      for (std::size_t i = 0; i + 1 < face.size(); ++i) {
        if (geom::norm(o - geom::closest_point_on_segment(o, face[i], face[i + 1])) <=
            tol) {
          normal_sum = normal_sum + face_normal(profile, side, baseline, face[i],
                                                face[i + 1], o);
          touching = true;
        }
      }
      if (touching) {
        add_to_clusters(clusters, o, geom::normalized(normal_sum), merge);
      }
    }
  }

  for (const Cluster& c : clusters) {
    out.push_back({c.point_sum * (1.0 / c.count), geom::normalized(c.normal_sum),
                   side});
  }
}

double solid_depth(const ObjectGeometry& g) { return 2.0 * bounding_radius(g) + 5.0; }

// Baseline at which the finger first touches the object, approaching from
// outside along the closing axis.
double first_contact(const ObjectGeometry& g, const SurfaceProfile& profile,
                     FingerSide side, const GraspSetup& setup) {
  const double reach = bounding_radius(g) + profile.sagitta() + 1.0;
  const double sign = side == FingerSide::kLeft ? 1.0 : -1.0;
  const double depth = solid_depth(g);
  auto hits = [&](double baseline) {
    return object_interferes(
        g, finger_polygon(profile, side, baseline, depth), setup.contact_tol);
  };
  double far = -sign * reach;
  double near = sign * reach;
  if (hits(far) || !hits(near)) {
    throw GeometryError("no contact achievable between finger and object");
  }
  for (int i = 0; i < kBisectionIterations && std::abs(near - far) > 1e-10; ++i) {
    const double mid = 0.5 * (near + far);
    (hits(mid) ? near : far) = mid;
  }
  return far;
}

double min_object_width(const ObjectGeometry& g) {
  if (g.is_disc()) return 2.0 * std::get<double>(g.outline);
  const Polygon& poly = std::get<Polygon>(g.outline);
  double best = 1e300;
  for (int step = 0; step < 360; ++step) {
    const double angle = deg_to_rad(0.5 * step);
    double lo = 1e300;
    double hi = -1e300;
    for (const Vec2& p : poly) {
      const double x = geom::rotated(p, angle).x;
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    best = std::min(best, hi - lo);
  }
  return best;
}

double protrusion_at(const SurfaceProfile& p, double u) {
  const auto& pts = p.polyline;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (u >= pts[i].x && u <= pts[i + 1].x) {
      const double span = pts[i + 1].x - pts[i].x;
      const double t = span > 0.0 ? (u - pts[i].x) / span : 0.0;
      return pts[i].y + t * (pts[i + 1].y - pts[i].y);
    }
  }
  return 0.0;
}

}  // namespace

double face_touch_gap(const SurfaceProfile& left, const SurfaceProfile& right) {
  const double half = 0.5 * std::min(left.width, right.width);
  double gap = -1e300;
  for (const SurfaceProfile* p : {&left, &right}) {
    for (const Vec2& v : p->polyline) {
      const double u = std::clamp(v.x, -half, half);
      gap = std::max(gap, protrusion_at(left, u) + protrusion_at(right, u));
    }
  }
  return gap;
}

double SurfaceProfile::sagitta() const {
  double s = 0.0;
  for (const Vec2& p : polyline) s = std::max(s, std::abs(p.y));
  return s;
}

SurfaceProfile surface_profile(const SurfaceShape& shape, double width,
                               double resolution) {
  if (!(width > 0.0) || !(resolution > 0.0)) {
    throw InvalidArgument("face width and resolution must be > 0");
  }
  SurfaceProfile profile{shape, width, {}};
  const double half = 0.5 * width;
  if (!shape.is_curved()) {
    profile.polyline = {{-half, 0.0}, {half, 0.0}};
    return profile;
  }
  const double r = shape.r_f;
  if (!(r > 0.0)) throw InvalidArgument("surface radius must be > 0");
  if (width > 2.0 * r * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "face width " << width << " mm exceeds the arc diameter " << 2.0 * r
       << " mm";
    throw GeometryError(os.str());
  }
  const double beta = std::asin(std::min(half / r, 1.0));
  const double base = r * std::cos(beta);
  int segments = std::max(2, static_cast<int>(std::ceil(2.0 * beta * r / resolution)));
  segments += segments % 2;  // keep a vertex on the face centre
  const double sign = shape.kind == SurfaceKind::kConvex ? 1.0 : -1.0;
  for (int i = 0; i <= segments; ++i) {
    const double a = -beta + 2.0 * beta * i / segments;
    double x = r * std::sin(a);
    if (i == 0) x = -half;
    if (i == segments) x = half;
    const double y = (i == 0 || i == segments) ? 0.0 : sign * (r * std::cos(a) - base);
    profile.polyline.push_back({x, y});
  }
  return profile;
}

ObjectGeometry object_geometry(const ObjectSpec& obj) {
  obj.validate();
  return std::visit(
      [](const auto& s) -> ObjectGeometry {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Circle>) {
          return {s.radius};
        } else if constexpr (std::is_same_v<T, Box>) {
          return {rectangle(s.width, s.height)};
        } else if constexpr (std::is_same_v<T, ThinPlate>) {
          return {rectangle(s.thickness, s.length)};
        } else {
          return {composite_polygon(s)};
        }
      },
      obj.shape);
}

geom::Polygon finger_polygon(const SurfaceProfile& profile, FingerSide side,
                             double baseline, double depth) {
  Polygon poly = world_face(profile, side, baseline);
  const double half = 0.5 * profile.width;
  const double back_offset = profile.sagitta() + depth;
  const double back =
      side == FingerSide::kLeft ? baseline - back_offset : baseline + back_offset;
  poly.push_back({back, half});
  poly.push_back({back, -half});
  geom::make_ccw(poly);
  return poly;
}

ContactSet contacts_at(const ObjectSpec& obj, const SurfaceProfile& left,
                       const SurfaceProfile& right, double left_baseline,
                       double right_baseline, const GraspSetup& setup) {
  const ObjectGeometry g = object_geometry(obj);
  ContactSet out;
  side_contacts(g, left, FingerSide::kLeft, left_baseline, setup, out);
  side_contacts(g, right, FingerSide::kRight, right_baseline, setup, out);
  return out;
}

ContactResult compute_contacts(const ObjectSpec& obj,
                               const SurfaceProfile& left,
                               const SurfaceProfile& right,
                               const GraspSetup& setup) {
  const ObjectGeometry g = object_geometry(obj);
  if (obj.closing_width() > setup.max_opening) {
    std::ostringstream os;
    os << "object width " << obj.closing_width()
       << " mm exceeds the jaw opening " << setup.max_opening << " mm";
    throw GeometryError(os.str());
  }
  ContactResult result;
  result.left_baseline = first_contact(g, left, FingerSide::kLeft, setup);
  result.right_baseline = first_contact(g, right, FingerSide::kRight, setup);
  side_contacts(g, left, FingerSide::kLeft, result.left_baseline, setup,
                result.contacts);
  side_contacts(g, right, FingerSide::kRight, result.right_baseline, setup,
                result.contacts);
  return result;
}

WrenchSpace wrench_space_for(const ObjectSpec& obj) {
  return obj.is_circle() ? WrenchSpace::kForceOnly : WrenchSpace::kPlanar;
}

CagingResult caging_test(const ObjectSpec& obj, const SurfaceProfile& left,
                         const SurfaceProfile& right, double left_baseline,
                         double right_baseline, const GraspSetup& setup) {
  const ObjectGeometry g = object_geometry(obj);
  const double cell = setup.grid.cell_mm;
  if (!(cell > 0.0) || !(setup.grid.cell_deg > 0.0)) {
    throw InvalidArgument("caging grid cells must be > 0");
  }

  CagingResult result;
  result.clearance = (right_baseline - left_baseline) - min_object_width(g);
  if (result.clearance > 0.0 && result.clearance < 2.0 * cell) {
    std::ostringstream os;
    os << "caging grid too coarse: escape clearance " << result.clearance
       << " mm is below two " << cell << " mm cells";
    throw GeometryError(os.str());
  }

  // A coarser face sampling is plenty at grid resolution.
  const double res = std::max(setup.resolution, 0.5 * cell);
  const Polygon fl = finger_polygon(surface_profile(left.shape, left.width, res),
                                    FingerSide::kLeft, left_baseline,
                                    kCagingFingerDepth);
  const Polygon fr = finger_polygon(surface_profile(right.shape, right.width, res),
                                    FingerSide::kRight, right_baseline,
                                    kCagingFingerDepth);
  geom::Bounds region;
  region.add(fl);
  region.add(fr);

  const long ilo = static_cast<long>(std::floor(region.lo.x / cell)) - 1;
  const long ihi = static_cast<long>(std::ceil(region.hi.x / cell)) + 1;
  const long jlo = static_cast<long>(std::floor(region.lo.y / cell)) - 1;
  const long jhi = static_cast<long>(std::ceil(region.hi.y / cell)) + 1;
  const long nx = ihi - ilo + 1;
  const long ny = jhi - jlo + 1;
  const long nt =
      g.is_disc() ? 1
                  : std::max(1L, std::lround(360.0 / setup.grid.cell_deg));
  const double tol = setup.contact_tol;

  auto free_pose = [&](long i, long j, long k) {
    const Vec2 offset{static_cast<double>(i) * cell, static_cast<double>(j) * cell};
    if (g.is_disc()) {
      const double r = std::get<double>(g.outline);
      return !geom::circle_polygon_interfere(offset, r, fl, tol) &&
             !geom::circle_polygon_interfere(offset, r, fr, tol);
    }
    const Polygon placed = geom::transformed(
        std::get<Polygon>(g.outline),
        deg_to_rad(setup.grid.cell_deg * static_cast<double>(k)), offset);
    return !geom::polygons_interfere(placed, fl, tol) &&
           !geom::polygons_interfere(placed, fr, tol);
  };
  auto outside = [&](long i, long j) {
    const double x = static_cast<double>(i) * cell;
    const double y = static_cast<double>(j) * cell;
    return x < region.lo.x || x > region.hi.x || y < region.lo.y ||
           y > region.hi.y;
  };
  auto index = [&](long i, long j, long k) {
    return static_cast<std::size_t>(((i - ilo) * ny + (j - jlo)) * nt + k);
  };

  std::vector<unsigned char> seen(static_cast<std::size_t>(nx * ny * nt), 0);
  struct Cell {
    long i, j, k;
  };
  std::deque<Cell> queue;
  seen[index(0, 0, 0)] = 1;
  queue.push_back({0, 0, 0});
  // The rest pose may touch the fingers; it is the start regardless.
  while (!queue.empty()) {
    const Cell c = queue.front();
    queue.pop_front();
    ++result.explored;
    if (outside(c.i, c.j)) {
      result.caged = false;
      return result;
    }
    const Cell next[] = {{c.i + 1, c.j, c.k}, {c.i - 1, c.j, c.k},
                         {c.i, c.j + 1, c.k}, {c.i, c.j - 1, c.k},
                         {c.i, c.j, (c.k + 1) % nt},
                         {c.i, c.j, (c.k + nt - 1) % nt}};
    for (const Cell& n : next) {
      if (n.i < ilo || n.i > ihi || n.j < jlo || n.j > jhi) continue;
      const std::size_t id = index(n.i, n.j, n.k);
      if (seen[id]) continue;
      seen[id] = 1;
      if (free_pose(n.i, n.j, n.k)) queue.push_back(n);
    }
  }
  result.caged = true;
  return result;
}

std::string_view to_string(GraspClass cls) {
  switch (cls) {
    case GraspClass::kFormClosure:
      return "FormClosure";
    case GraspClass::kForceClosure:
      return "ForceClosure";
    case GraspClass::kCaging:
      return "Caging";
    case GraspClass::kFail:
      return "Fail";
  }
  return "?";
}

GraspReport classify_grasp(const ObjectSpec& obj, const ModePair& mode,
                           double mu, const GraspSetup& setup) {
  obj.validate();
  if (!(mu >= 0.0)) throw InvalidArgument("friction coefficient must be >= 0");
  const SurfaceProfile left =
      surface_profile(mode.s3, setup.face_width, setup.resolution);
  const SurfaceProfile right =
      surface_profile(mode.s4, setup.face_width, setup.resolution);
  const ObjectGeometry g = object_geometry(obj);

  GraspReport report;
  const ContactResult first = compute_contacts(obj, left, right, setup);
  report.left_baseline = first.left_baseline;
  report.right_baseline = first.right_baseline;
  report.contacts = first.contacts;

  // Parallel jaws stop early if the finger faces meet around the object.
  const double touch_gap = face_touch_gap(left, right);
  if (first.separation() < touch_gap - setup.contact_tol) {
    report.fingers_collide = true;
    const double mid = 0.5 * (first.left_baseline + first.right_baseline);
    report.left_baseline = mid - 0.5 * touch_gap;
    report.right_baseline = mid + 0.5 * touch_gap;
    report.contacts = contacts_at(obj, left, right, report.left_baseline,
                                  report.right_baseline, setup);
  }

  const WrenchSpace space = wrench_space_for(obj);
  const bool thin = obj.closing_width() < setup.thin_threshold;
  report.form = form_closure_test(report.contacts, {}, space, setup.closure_margin);
  report.force =
      force_closure_test(report.contacts, mu, {}, space, setup.closure_margin);

  if (thin && (left.deformable() || right.deformable())) {
    report.cls = GraspClass::kFail;
    report.note = "thin object against a deformable surface slips";
    return report;
  }
  if (report.form.closed) {
    report.cls = GraspClass::kFormClosure;
    return report;
  }
  if (thin && std::holds_alternative<ThinPlate>(obj.shape) &&
      (mode.s3.kind == SurfaceKind::kConcave ||
       mode.s4.kind == SurfaceKind::kConcave)) {
    report.cls = GraspClass::kCaging;
    report.posture_uncertain = true;
    report.note = "thin plate in a concave face: pinched at the tip or tilted";
    return report;
  }
  if (report.force.closed) {
    report.cls = GraspClass::kForceClosure;
    return report;
  }
  report.caging = caging_test(obj, left, right, report.left_baseline,
                              report.right_baseline, setup);
  report.cls = report.caging->caged ? GraspClass::kCaging : GraspClass::kFail;
  return report;
}

}  // namespace gripper
