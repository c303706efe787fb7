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

#include "gripper/wrench_closure.hpp"

#include <algorithm>
#include <cmath>

#include "gripper/error.hpp"

namespace gripper {
namespace {

using geom::Vec2;

Wrench sub(const Wrench& a, const Wrench& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Wrench cross3(const Wrench& a, const Wrench& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

double dot3(const Wrench& a, const Wrench& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double norm3(const Wrench& a) { return std::sqrt(dot3(a, a)); }

constexpr double kDegenerate = 1e-12;

// Unit normal of the hyperplane through the given dim points, or zero.
Wrench plane_normal(const std::vector<Wrench>& pts, int dim, std::size_t i,
                    std::size_t j, std::size_t k) {
  Wrench n{};
  if (dim == 2) {
    const Wrench e = sub(pts[j], pts[i]);
    n = {-e[1], e[0], 0.0};
  } else {
    n = cross3(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
  }
  const double len = norm3(n);
  if (len < kDegenerate) return {};
  return {n[0] / len, n[1] / len, n[2] / len};
}

bool full_rank(const std::vector<Wrench>& pts, int dim) {
  // Affine span of the points (the hull's dimension).
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dim == 2) {
        for (std::size_t k = j + 1; k < n; ++k) {
          const Wrench a = sub(pts[j], pts[i]);
          const Wrench b = sub(pts[k], pts[i]);
          if (std::abs(a[0] * b[1] - a[1] * b[0]) > kDegenerate) return true;
        }
      } else {
        for (std::size_t k = j + 1; k < n; ++k) {
          const Wrench c = cross3(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
          if (norm3(c) < kDegenerate) continue;
          for (std::size_t l = k + 1; l < n; ++l) {
            if (std::abs(dot3(c, sub(pts[l], pts[i]))) > kDegenerate) {
              return true;
            }
          }
        }
      }
    }
  }
  return false;
}

// Drops wrenches that coincide with an earlier one.
std::vector<Wrench> unique_wrenches(const std::vector<Wrench>& in) {
  std::vector<Wrench> out;
  for (const Wrench& w : in) {
    const bool dup = std::any_of(out.begin(), out.end(), [&](const Wrench& o) {
      return norm3(sub(w, o)) < 1e-9;
    });
    if (!dup) out.push_back(w);
  }
  return out;
}

double moment_scale(const ContactSet& contacts, Vec2 reference) {
  double scale = 0.0;
  for (const Contact& c : contacts) {
    scale = std::max(scale, geom::norm(c.point - reference));
  }
  return scale > 0.0 ? scale : 1.0;
}

Wrench make_wrench(Vec2 point, Vec2 force, Vec2 reference, double scale,
                   WrenchSpace space) {
  if (space == WrenchSpace::kForceOnly) return {force.x, force.y, 0.0};
  return {force.x, force.y, geom::cross(point - reference, force) / scale};
}

ClosureResult closure_of(const std::vector<Wrench>& raw, WrenchSpace space,
                         int min_wrenches, double margin) {
  const int dim = space == WrenchSpace::kPlanar ? 3 : 2;
  const std::vector<Wrench> pts = unique_wrenches(raw);
  ClosureResult r;
  r.wrenches = static_cast<int>(raw.size());
  r.effective_wrenches = static_cast<int>(pts.size());
  r.degenerate = pts.size() < raw.size();
  if (r.effective_wrenches < min_wrenches) return r;
  if (!full_rank(pts, dim)) {
    r.degenerate = true;
    return r;
  }
  r.closed = origin_strictly_inside_hull(pts, dim, margin);
  return r;
}

}  // namespace

bool origin_strictly_inside_hull(const std::vector<Wrench>& pts, int dim,
                                 double margin) {
  if (dim != 2 && dim != 3) {
    throw InvalidArgument("hull dimension must be 2 or 3");
  }
  const std::size_t n = pts.size();
  if (n < static_cast<std::size_t>(dim + 1) || !full_rank(pts, dim)) {
    return false;
  }
  // Every supporting hyperplane through dim of the points must keep the
  // origin strictly on the inner side. Facets are among these.
  auto origin_inside = [&](const Wrench& nrm, const Wrench& on_plane) {
    bool above = false;
    bool below = false;
    for (const Wrench& p : pts) {
      const double s = dot3(nrm, sub(p, on_plane));
      if (s > margin) above = true;
      if (s < -margin) below = true;
    }
    if (above && below) return true;  // not a supporting plane
    const double origin = -dot3(nrm, on_plane);
    return above ? origin > margin : -origin > margin;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dim == 2) {
        const Wrench nrm = plane_normal(pts, 2, i, j, j);
        if (nrm != Wrench{} && !origin_inside(nrm, pts[i])) return false;
        continue;
      }
      for (std::size_t k = j + 1; k < n; ++k) {
        const Wrench nrm = plane_normal(pts, 3, i, j, k);
        if (nrm != Wrench{} && !origin_inside(nrm, pts[i])) return false;
      }
    }
  }
  return true;
}

std::vector<Wrench> contact_wrenches(const ContactSet& contacts,
                                     geom::Vec2 reference, WrenchSpace space) {
  const double scale = moment_scale(contacts, reference);
  std::vector<Wrench> out;
  out.reserve(contacts.size());
  for (const Contact& c : contacts) {
    out.push_back(make_wrench(c.point, geom::normalized(c.normal), reference,
                              scale, space));
  }
  return out;
}

std::vector<Wrench> friction_edge_wrenches(const ContactSet& contacts,
                                           double mu, geom::Vec2 reference,
                                           WrenchSpace space) {
  if (!(mu >= 0.0)) throw InvalidArgument("friction coefficient must be >= 0");
  const double scale = moment_scale(contacts, reference);
  std::vector<Wrench> out;
  out.reserve(2 * contacts.size());
  for (const Contact& c : contacts) {
    const Vec2 n = geom::normalized(c.normal);
    const Vec2 t = geom::perp(n);
    for (double sign : {1.0, -1.0}) {
      out.push_back(make_wrench(c.point, geom::normalized(n + t * (sign * mu)),
                                reference, scale, space));
    }
  }
  return out;
}

ClosureResult form_closure_test(const ContactSet& contacts,
                                geom::Vec2 reference, WrenchSpace space,
                                double margin) {
  // Planar form closure needs dim + 1 frictionless contacts.
  const int min_contacts = space == WrenchSpace::kPlanar ? 4 : 3;
  return closure_of(contact_wrenches(contacts, reference, space), space,
                    min_contacts, margin);
}

ClosureResult force_closure_test(const ContactSet& contacts, double mu,
                                 geom::Vec2 reference, WrenchSpace space,
                                 double margin) {
  if (contacts.size() < 2) {
    ClosureResult r;
    r.wrenches = static_cast<int>(2 * contacts.size());
    r.effective_wrenches = contacts.empty() ? 0 : (mu > 0.0 ? 2 : 1);
    return r;
  }
  const int dim = space == WrenchSpace::kPlanar ? 3 : 2;
  return closure_of(friction_edge_wrenches(contacts, mu, reference, space),
                    space, dim + 1, margin);
}

}  // namespace gripper
