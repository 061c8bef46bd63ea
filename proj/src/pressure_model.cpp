/*
 * Copyright 2026 The softgrip Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
*/

#include "softgrip/pressure_model.hpp"

#include <cmath>
#include <string>

#include "softgrip/error.hpp"
#include "softgrip/kernels.hpp"

namespace softgrip {
namespace {

void require_finite_non_negative(double v, const char* name) {
  if (!std::isfinite(v) || v < 0.0)
    throw DomainError(std::string(name) + " must be finite and non-negative");
}

void require_gravity(double g) {
  if (!std::isfinite(g) || g <= 0.0) throw DomainError("gravity must be finite and positive");
}

void require_intervals(std::size_t n) {
  if (n < 2) throw DomainError("quadrature needs at least 2 intervals");
}

}  // namespace

void SphericalObject::validate() const {
  require_finite_non_negative(mass, "mass");
  if (!std::isfinite(radius) || radius <= 0.0)
    throw DomainError("radius must be finite and positive");
}

void FrictionModel::validate() const {
  require_finite_non_negative(k, "friction coefficient");
  if (k >= 1.0) throw DomainError("friction coefficient must be below 1");
}

void PressureDistribution::validate() const {
  require_finite_non_negative(bottom, "bottom pressure");
  require_finite_non_negative(top, "top pressure");
}

PressureComponents PressureDistribution::bottom_at(double alpha) const {
  return pressure_components(bottom, alpha);
}

PressureComponents PressureDistribution::top_at(double alpha) const {
  return pressure_components(top, alpha);
}

double line_pressure_closed_form(const SphericalObject& obj, const FrictionModel& fric, double g) {
  obj.validate();
  fric.validate();
  require_gravity(g);
  return 3.0 * obj.mass * g / (4.0 * kPi * (1.0 + fric.k) * obj.radius * obj.radius);
}

double support_integral_quadrature(double radius, double k, std::size_t n_intervals) {
  require_intervals(n_intervals);
  if (!std::isfinite(radius) || radius <= 0.0) throw DomainError("radius must be finite and positive");
  require_finite_non_negative(k, "friction coefficient");
  const auto m = kernels::parallel::trapezoid_contact_moments(radius, n_intervals);
  return m.sine + k * m.cosine;
}

double line_pressure_quadrature(const SphericalObject& obj, const FrictionModel& fric, double g,
                                std::size_t n_intervals) {
  obj.validate();
  fric.validate();
  require_gravity(g);
  require_intervals(n_intervals);
  return obj.mass * g / (4.0 * kPi * support_integral_quadrature(obj.radius, fric.k, n_intervals));
}

PressureComponents pressure_components(double p, double alpha) {
  require_finite_non_negative(p, "line pressure");
  if (!std::isfinite(alpha) || alpha < 0.0 || alpha > kPi / 2.0)
    throw DomainError("contact angle must lie in [0, pi/2]");
  return {p * std::sin(alpha), p * std::cos(alpha)};
}

EquilibriumCheck equilibrium_residual(const SphericalObject& obj, const FrictionModel& fric,
                                      const PressureDistribution& dist, double g,
                                      std::size_t n_intervals) {
  obj.validate();
  fric.validate();
  dist.validate();
  require_gravity(g);
  require_intervals(n_intervals);

  const auto m = kernels::parallel::trapezoid_contact_moments(obj.radius, n_intervals);
  const double bottom_support = dist.bottom * (m.sine + fric.k * m.cosine);
  const double top_support = dist.top * (fric.k * m.cosine - m.sine);
  const double support = 4.0 * kPi * (bottom_support + top_support);
  return {g, obj.mass * g - support};
}

}  // namespace softgrip
