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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "multicorr/sphere_ascent.hpp"

namespace multicorr {
namespace {

// f(a_1..a_m) = prod_i <c_i, a_i>; maximum prod |c_i|.
class ProductOfLinear : public SphereObjective {
 public:
  explicit ProductOfLinear(std::vector<Bloch> c) : c_(std::move(c)) {}
  std::size_t sites() const override { return c_.size(); }
  double value(std::span<const Bloch> axes) const override {
    double v = 1.0;
    for (std::size_t i = 0; i < c_.size(); ++i) v *= c_[i].dot(axes[i]);
    return v;
  }

 private:
  std::vector<Bloch> c_;
};

// Quadratic form a^T M a on one sphere; maximum is the top eigenvalue.
class Rayleigh : public SphereObjective {
 public:
  explicit Rayleigh(Eigen::Matrix3d m) : m_(std::move(m)) {}
  std::size_t sites() const override { return 1; }
  double value(std::span<const Bloch> axes) const override { return axes[0].dot(m_ * axes[0]); }

 private:
  Eigen::Matrix3d m_;
};

TEST(Angles, RoundTrip) {
  for (const Bloch& v : {Bloch(1, 0, 0), Bloch(0, 0, 1), Bloch(0, 0, -1),
                         Bloch(0.3, -0.4, 0.5).normalized(), Bloch(-1, -1, 0).normalized()}) {
    EXPECT_LT((from_angles(to_angles(v)) - v).norm(), 1e-14);
  }
}

TEST(LineSearch, FindsPeriodicMaximum) {
  auto f = [](double t) { return std::cos(t - 2.0) + 0.3 * std::cos(2.0 * (t + 1.0)); };
  const double t = periodic_line_search(f, 0.0, 12, 1e-10);
  // Dense reference.
  double best = -1e9;
  for (int i = 0; i < 200000; ++i) best = std::max(best, f(2.0 * std::numbers::pi * i / 200000.0));
  EXPECT_NEAR(f(t), best, 1e-9);
}

TEST(LineSearch, NeverWorseThanStart) {
  auto f = [](double t) { return std::sin(40.0 * t); };
  const double t0 = std::numbers::pi / 80.0;
  EXPECT_GE(f(periodic_line_search(f, t0, 3, 1e-9)), f(t0) - 1e-15);
}

TEST(SphereAscent, ProductOfLinearForms) {
  const std::vector<Bloch> c = {Bloch(1, 2, 2), Bloch(0, -3, 4), Bloch(0.5, 0, 0)};
  const ProductOfLinear obj(c);
  SphereAscentOptions options;
  options.restarts = 4;
  const SphereAscentResult r = maximize_on_spheres(obj, options);
  EXPECT_NEAR(r.value, 3.0 * 5.0 * 0.5, 1e-9);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.restarts_run, 4U);
  for (const Bloch& a : r.axes) EXPECT_NEAR(a.norm(), 1.0, 1e-14);
}

TEST(SphereAscent, RayleighQuotient) {
  Eigen::Matrix3d m;
  m << 2, 1, 0, 1, 3, 1, 0, 1, 4;
  const Rayleigh obj(m);
  const SphereAscentResult r = maximize_on_spheres(obj, {});
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(m);
  EXPECT_NEAR(r.value, es.eigenvalues().maxCoeff(), 1e-9);
}

TEST(SphereAscent, ExplicitStartIsUsedAndDeterministic) {
  const ProductOfLinear obj({Bloch(0, 0, 1)});
  SphereAscentOptions options;
  options.restarts = 1;
  const std::vector<std::vector<Bloch>> starts = {{Bloch(0, 0, 1)}};
  const SphereAscentResult r = maximize_on_spheres(obj, options, starts);
  EXPECT_NEAR(r.value, 1.0, 1e-15);
  EXPECT_EQ(r.restarts_run, 2U);
  options.restarts = 0;
  EXPECT_THROW(maximize_on_spheres(obj, options), std::invalid_argument);

  options.restarts = 3;
  options.seed = 42;
  const SphereAscentResult a = maximize_on_spheres(obj, options);
  const SphereAscentResult b = maximize_on_spheres(obj, options);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.axes[0], b.axes[0]);
}

}  // namespace
}  // namespace multicorr
