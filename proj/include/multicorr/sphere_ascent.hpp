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

// Derivative-free maximization over a product of unit spheres.
//
// Every site carries a unit axis parametrized by spherical angles
// (theta, phi). A sweep visits the sites in order and line-searches theta,
// then phi, with the other coordinates held fixed. Each line search samples
// a coarse grid over the full period and refines the best grid cell with a
// golden-section search down to `coordinate_tol` radians. Restarts draw
// fresh uniform starting axes; explicit starting points can be supplied and
// are always tried first.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "multicorr/qmat.hpp"

namespace multicorr {

/// Objective over one unit axis per site.
class SphereObjective {
 public:
  virtual ~SphereObjective() = default;

  virtual std::size_t sites() const = 0;
  virtual double value(std::span<const Bloch> axes) const = 0;

  /// The objective as a function of one site's axis with the others fixed.
  /// The default re-evaluates value(); objectives with structure (e.g.
  /// multilinear ones) override it with something cheaper.
  virtual std::function<double(const Bloch&)> restrict_to(std::size_t site,
                                                          std::span<const Bloch> axes) const;
};

struct SphereAscentOptions {
  std::size_t restarts = 32;
  std::uint64_t seed = 0;
  /// Golden-section bracket width at which a line search stops.
  double coordinate_tol = 1e-9;
  /// Grid points per period in the coarse stage of each line search.
  std::size_t grid_points = 12;
  std::size_t max_sweeps = 200;
  /// A sweep that improves the objective by no more than this (relative to
  /// max(1, |f|)) ends the restart as converged.
  double sweep_tol = 1e-13;
};

struct SphereAscentResult {
  std::vector<Bloch> axes;
  double value = 0.0;
  /// Every restart met the sweep tolerance before max_sweeps.
  bool converged = true;
  std::size_t restarts_run = 0;
  std::size_t line_searches = 0;
};

/// Spherical angles of a unit vector and back.
struct SphericalAngles {
  double theta = 0.0;
  double phi = 0.0;
};
SphericalAngles to_angles(const Bloch& axis);
Bloch from_angles(const SphericalAngles& angles);

/// Maximizes `objective`. `starts` are extra initial points tried before the
/// random restarts; each must have objective.sites() axes.
SphereAscentResult maximize_on_spheres(const SphereObjective& objective,
                                       const SphereAscentOptions& options,
                                       std::span<const std::vector<Bloch>> starts = {});

/// Maximizes a 2pi-periodic function of one angle starting from t0; never
/// returns a point worse than t0.
double periodic_line_search(const std::function<double(double)>& f, double t0,
                            std::size_t grid_points, double tol);

}  // namespace multicorr
