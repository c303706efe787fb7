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

#include "gripper/mech_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "gripper/error.hpp"
#include "gripper/units.hpp"

namespace gripper {
namespace {

constexpr double kRatioTolerance = 1e-9;

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    std::ostringstream os;
    os << name << " must be finite and > 0 (got " << value << ")";
    throw InvalidArgument(os.str());
  }
}

bool relatively_equal(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace

double GearGeometry::min_alpha() const { return std::min(alpha1(), alpha2()); }

void GearGeometry::validate() const {
  require_positive(r_is, "r_IS");
  require_positive(r_sp, "r_sp");
  require_positive(r_g1, "r_g1");
  require_positive(r_g2, "r_g2");
  require_positive(r_g3s, "r_g3S");
  require_positive(r_g4s, "r_g4S");
}

GearGeometry GearGeometry::prototype() {
  return GearGeometry{.r_is = 20.0,
                      .r_sp = 15.0,
                      .r_g1 = 10.0,
                      .r_g2 = 7.5,
                      .r_g3s = 12.0,
                      .r_g4s = 12.0};
}

void MagnetDetent::validate() const {
  require_positive(k_m, "k_m");
  require_positive(r_fb, "r_FB");
  require_positive(d_mg, "d_MG");
}

MagnetDetent MagnetDetent::prototype() {
  return MagnetDetent{.k_m = 1.07e-5, .r_fb = 14.0, .d_mg = 1.0};
}

void SurfaceCount::validate() const {
  if (n_b < 1 || n_a < n_b) {
    std::ostringstream os;
    os << "surface counts must satisfy n_a >= n_b >= 1 (got n_a=" << n_a
       << ", n_b=" << n_b << ")";
    throw InvalidArgument(os.str());
  }
}

double chain_tension(double tau_m, const GearGeometry& g) {
  return tau_m / g.r_is;
}

ForcePair grasp_forces(double tau_m, const GearGeometry& g) {
  const double f = chain_tension(tau_m, g);
  return {f, f};
}

TorquePair body_torques(double f_rc, const GearGeometry& g) {
  return {g.alpha1() * f_rc, g.alpha2() * f_rc};
}

DrivetrainForces drivetrain_forces(double tau_m, const GearGeometry& g) {
  DrivetrainForces out;
  out.f_rc = chain_tension(tau_m, g);
  out.f_g3s = out.f_g4s = out.f_rc;
  out.f_stp3s = out.f_stp4s = out.f_rc;
  out.tau_dr3s = out.tau_dr4s = g.r_sp * out.f_rc;
  out.tau_3s = g.r_g3s / g.r_g1 * out.tau_dr3s;
  out.tau_4s = g.r_g4s / g.r_g2 * out.tau_dr4s;
  return out;
}

double detent_torque(double theta_fb, const MagnetDetent& m) {
  const double r = m.r_fb;
  const double d = m.d_mg;
  // Squared magnet distance; bounded below by d^2 > 0.
  const double dist2 = d * d + 2.0 * r * r + 2.0 * d * r -
                       2.0 * r * (r + d) * std::cos(theta_fb);
  return m.k_m * r * (r + d) * std::sin(theta_fb) / std::pow(dist2, 1.5);
}

double detent_search_limit(int n_surfaces) {
  if (n_surfaces < 1) {
    throw InvalidArgument("finger needs at least one surface");
  }
  return kPi / n_surfaces;
}

DetentPeak detent_peak(const MagnetDetent& m, double search_limit) {
  m.validate();
  require_positive(search_limit, "detent search limit");

  const double grid = deg_to_rad(0.01);
  const auto samples = static_cast<long>(std::ceil(search_limit / grid));
  double best_theta = 0.0;
  double best_torque = 0.0;
  for (long i = 1; i < samples; ++i) {
    const double theta = grid * static_cast<double>(i);
    const double torque = detent_torque(theta, m);
    if (torque > best_torque) {
      best_torque = torque;
      best_theta = theta;
    }
  }
  if (!(best_torque > 0.0)) {
    throw InvalidArgument("detent torque is non-positive on the search interval");
  }

  // Golden-section refinement inside the neighbouring grid cells.
  double lo = std::max(best_theta - grid, 0.0);
  double hi = std::min(best_theta + grid, search_limit);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = detent_torque(x1, m);
  double f2 = detent_torque(x2, m);
  while (hi - lo > 1e-12) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = detent_torque(x2, m);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = detent_torque(x1, m);
    }
  }
  const double theta = 0.5 * (lo + hi);
  const double torque = detent_torque(theta, m);
  if (torque < best_torque) {
    return {best_theta, best_torque};
  }
  return {theta, torque};
}

DetentPeak detent_peak(const MagnetDetent& m, const SurfaceCount& s) {
  s.validate();
  return detent_peak(m, detent_search_limit(s.n_a));
}

double breakaway_motor_torque(const GearGeometry& g, const MagnetDetent& m,
                              const SurfaceCount& s) {
  g.validate();
  const DetentPeak peak = detent_peak(m, s);
  // Both finger bodies ride on the same chain, so the weaker lever decides.
  return g.r_is * peak.torque / g.min_alpha();
}

AnglePair finger_body_angles(double theta_m, const GearGeometry& g) {
  return {g.r_g1 * g.r_is / (g.r_g3s * g.r_sp) * theta_m,
          g.r_g2 * g.r_is / (g.r_g4s * g.r_sp) * theta_m};
}

GearingReport validate_antipodal_gearing(const GearGeometry& g,
                                         const SurfaceCount& s) {
  g.validate();
  s.validate();
  GearingReport report;
  report.ratio = (g.r_g1 / g.r_g3s) / (g.r_g2 / g.r_g4s);
  report.expected_ratio =
      static_cast<double>(s.n_a) / static_cast<double>(s.n_b);
  report.ok = relatively_equal(report.ratio, report.expected_ratio,
                               kRatioTolerance);
  std::ostringstream os;
  os.precision(12);
  if (report.ok) {
    os << "antipodal gearing ok: (r_g1/r_g3S):(r_g2/r_g4S) = " << report.ratio
       << " = n_a/n_b";
  } else {
    os << "antipodal gearing violated: (r_g1/r_g3S):(r_g2/r_g4S) = "
       << report.ratio << ", expected n_a/n_b = " << report.expected_ratio
       << " (" << s.n_a << ":" << s.n_b << ")";
  }
  report.message = os.str();
  return report;
}

double switch_interval(const GearGeometry& g, const SurfaceCount& s) {
  const GearingReport report = validate_antipodal_gearing(g, s);
  if (!report.ok) {
    throw InvalidArgument(report.message);
  }
  const double drive = g.r_is / g.r_sp;
  const double via_3s = (2.0 * kPi / s.n_b) / ((g.r_g1 / g.r_g3s) * drive);
  const double via_4s = (2.0 * kPi / s.n_a) / ((g.r_g2 / g.r_g4s) * drive);
  if (!relatively_equal(via_3s, via_4s, kRatioTolerance)) {
    std::ostringstream os;
    os.precision(12);
    os << "inconsistent gearing: switch interval " << rad_to_deg(via_3s)
       << " deg via 3S vs " << rad_to_deg(via_4s) << " deg via 4S";
    throw InvalidArgument(os.str());
  }
  return via_3s;
}

int gc_mode_count(const SurfaceCount& s) {
  s.validate();
  if (s.n_a % s.n_b == 0) {
    return s.n_a;
  }
  return std::lcm(s.n_a, s.n_b);
}

}  // namespace gripper
