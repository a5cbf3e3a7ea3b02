// Copyright 2026 The multicorr Authors
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

#include "multicorr/sphere_ascent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "multicorr/states.hpp"

namespace multicorr {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;

struct RestartOutcome {
  std::vector<Bloch> axes;
  double value;
  bool converged;
  std::size_t line_searches;
};

RestartOutcome ascend(const SphereObjective& objective, std::vector<Bloch> axes,
                      const SphereAscentOptions& options) {
  const std::size_t sites = objective.sites();
  std::vector<SphericalAngles> angles(sites);
  for (std::size_t s = 0; s < sites; ++s) {
    angles[s] = to_angles(axes[s]);
    axes[s] = from_angles(angles[s]);
  }
  double current = objective.value(axes);
  std::size_t line_searches = 0;

  for (std::size_t sweep = 0; sweep < options.max_sweeps; ++sweep) {
    const double before = current;
    for (std::size_t s = 0; s < sites; ++s) {
      const auto restricted = objective.restrict_to(s, axes);
      SphericalAngles& a = angles[s];

      a.theta = periodic_line_search(
          [&](double t) { return restricted(from_angles({t, a.phi})); }, a.theta,
          options.grid_points, options.coordinate_tol);
      a.phi = periodic_line_search(
          [&](double p) { return restricted(from_angles({a.theta, p})); }, a.phi,
          options.grid_points, options.coordinate_tol);
      line_searches += 2;
      axes[s] = from_angles(a);
    }
    current = objective.value(axes);
    if (current - before <= options.sweep_tol * std::max(1.0, std::abs(current))) {
      return {std::move(axes), current, true, line_searches};
    }
  }
  return {std::move(axes), current, false, line_searches};
}

}  // namespace

std::function<double(const Bloch&)> SphereObjective::restrict_to(
    std::size_t site, std::span<const Bloch> axes) const {
  std::vector<Bloch> frozen(axes.begin(), axes.end());
  return [this, site, frozen](const Bloch& axis) mutable {
    frozen[site] = axis;
    return value(frozen);
  };
}

SphericalAngles to_angles(const Bloch& axis) {
  const double norm = axis.norm();
  if (norm == 0.0) return {};
  const double z = std::clamp(axis.z() / norm, -1.0, 1.0);
  return {std::acos(z), std::atan2(axis.y(), axis.x())};
}

Bloch from_angles(const SphericalAngles& angles) {
  const double st = std::sin(angles.theta);
  return Bloch(st * std::cos(angles.phi), st * std::sin(angles.phi), std::cos(angles.theta));
}

double periodic_line_search(const std::function<double(double)>& f, double t0,
                            std::size_t grid_points, double tol) {
  const std::size_t grid = std::max<std::size_t>(grid_points, 3);
  const double step = kTwoPi / static_cast<double>(grid);
  double best_t = t0;
  double best_f = f(t0);
  for (std::size_t j = 1; j < grid; ++j) {
    const double t = t0 + step * static_cast<double>(j);
    const double v = f(t);
    if (v > best_f) {
      best_f = v;
      best_t = t;
    }
  }

  // Golden-section refinement on the cell around the best grid point.
  double lo = best_t - step;
  double hi = best_t + step;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    }
  }
  const double t_mid = 0.5 * (lo + hi);
  const double f_mid = f(t_mid);
  if (f_mid > best_f) {
    best_f = f_mid;
    best_t = t_mid;
  }
  return std::remainder(best_t, kTwoPi);
}

SphereAscentResult maximize_on_spheres(const SphereObjective& objective,
                                       const SphereAscentOptions& options,
                                       std::span<const std::vector<Bloch>> starts) {
  if (options.restarts < 1) throw std::invalid_argument("at least one restart is required");
  const std::size_t sites = objective.sites();
  for (const auto& start : starts) {
    if (start.size() != sites) throw std::invalid_argument("starting point has wrong arity");
  }

  Rng rng(options.seed);
  SphereAscentResult result;
  result.value = -std::numeric_limits<double>::infinity();

  auto consider = [&](RestartOutcome outcome) {
    result.converged = result.converged && outcome.converged;
    result.line_searches += outcome.line_searches;
    ++result.restarts_run;
    if (outcome.value > result.value) {
      result.value = outcome.value;
      result.axes = std::move(outcome.axes);
    }
  };

  for (const auto& start : starts) consider(ascend(objective, start, options));
  for (std::size_t r = 0; r < options.restarts; ++r) {
    std::vector<Bloch> axes(sites);
    for (auto& axis : axes) axis = random_unit_vector(rng);
    consider(ascend(objective, std::move(axes), options));
  }
  return result;
}

}  // namespace multicorr
