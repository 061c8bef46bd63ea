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

#include "softgrip/skin_spring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "softgrip/error.hpp"
#include "softgrip/kernels.hpp"

namespace softgrip {
namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

void require_strain(double strain) {
  if (!std::isfinite(strain) || strain < 0.0)
    throw DomainError("strain must be finite and non-negative");
}

double segment_load(double strain, double s1, double s2, double b) {
  return strain <= b ? s1 * strain : s1 * b + s2 * (strain - b);
}

// Exact continuous fit when the breakpoint falls strictly between samples
// `split` and `split + 1`: a line through the origin on the left, a free line
// on the right, intersected. Returns NaN when the intersection lies outside
// the interval or the lines are parallel.
double interval_breakpoint(std::span<const double> x, std::span<const double> y, std::size_t split) {
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i <= split; ++i) {
    sxy += x[i] * y[i];
    sxx += x[i] * x[i];
  }
  if (!(sxx > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  const double left_slope = sxy / sxx;

  const std::size_t m = x.size() - split - 1;
  if (m < 2) return std::numeric_limits<double>::quiet_NaN();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = split + 1; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(m);
  my /= static_cast<double>(m);
  double cxy = 0.0, cxx = 0.0;
  for (std::size_t i = split + 1; i < x.size(); ++i) {
    cxy += (x[i] - mx) * (y[i] - my);
    cxx += (x[i] - mx) * (x[i] - mx);
  }
  const double right_slope = cxy / cxx;
  const double intercept = my - right_slope * mx;

  const double denom = left_slope - right_slope;
  if (std::abs(denom) <= 1e-12 * std::max(std::abs(left_slope), std::abs(right_slope)))
    return std::numeric_limits<double>::quiet_NaN();
  const double b = intercept / denom;
  if (!(b > x[split] && b < x[split + 1])) return std::numeric_limits<double>::quiet_NaN();
  return b;
}

void scan(std::span<const double> x, std::span<const double> y,
          std::span<kernels::SegmentCandidate> candidates, bool parallel) {
  if (parallel)
    kernels::parallel::scan_breakpoints(x, y, candidates);
  else
    kernels::serial::scan_breakpoints(x, y, candidates);
}

// Lowest SSE, ties to the smaller breakpoint so the result is order independent.
const kernels::SegmentCandidate* best_of(std::span<const kernels::SegmentCandidate> candidates) {
  const kernels::SegmentCandidate* best = nullptr;
  for (const auto& c : candidates) {
    if (!c.solvable) continue;
    if (best == nullptr || c.sse < best->sse || (c.sse == best->sse && c.breakpoint < best->breakpoint))
      best = &c;
  }
  return best;
}

}  // namespace

SkinSpec SkinSpec::from_slopes(double slope1, double slope2, double transition_strain) {
  SkinSpec spec;
  spec.zone1_coeff = slope1;
  spec.zone2_coeff = slope2;
  spec.transition_strain = transition_strain;
  return spec;
}

void SkinSpec::validate() const {
  if (!positive_finite(skin_volume) || !positive_finite(skin_height) || !positive_finite(base_stiffness))
    throw DomainError("skin volume, height and base stiffness must be positive");
  if (!positive_finite(zone1_coeff) || !positive_finite(zone2_coeff))
    throw DomainError("zone coefficients must be positive");
  if (!(zone2_coeff > zone1_coeff)) throw DomainError("stable-zone coefficient must exceed the first zone's");
  if (!positive_finite(transition_strain)) throw DomainError("transition strain must be positive");
}

void PayloadCurve::validate() const {
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    if (!std::isfinite(s.strain) || !std::isfinite(s.load))
      throw ValidationError("sample " + std::to_string(i) + " is not finite");
    if (s.strain < 0.0) throw ValidationError("sample " + std::to_string(i) + " has negative strain");
    if (s.load < 0.0) throw ValidationError("sample " + std::to_string(i) + " has negative load");
    if (i > 0 && !(s.strain > samples[i - 1].strain))
      throw ValidationError("strain not strictly increasing at sample " + std::to_string(i));
  }
}

bool PayloadCurve::loads_non_decreasing() const {
  return std::is_sorted(samples.begin(), samples.end(),
                        [](const auto& a, const auto& b) { return a.load < b.load; });
}

LoadPrediction ZoneFit::predict(double strain) const {
  require_strain(strain);
  return {segment_load(strain, slope1, slope2, breakpoint), strain > max_strain};
}

SkinSpec ZoneFit::to_spec() const {
  if (degenerate) throw DomainError("degenerate fit has no reliable breakpoint");
  auto spec = SkinSpec::from_slopes(slope1, slope2, breakpoint);
  spec.validate();
  return spec;
}

double predict_load(double strain, const SkinSpec& spec) {
  require_strain(strain);
  spec.validate();
  return segment_load(strain, spec.slope1(), spec.slope2(), spec.transition_strain);
}

double predict_strain(double load, const SkinSpec& spec) {
  if (!std::isfinite(load) || load < 0.0) throw DomainError("load must be finite and non-negative");
  spec.validate();
  const double knee = spec.transition_load();
  if (load <= knee) return load / spec.slope1();
  return spec.transition_strain + (load - knee) / spec.slope2();
}

double estimate_object_mass(double strain, const SkinSpec& spec, double g) {
  if (!positive_finite(g)) throw DomainError("gravity must be positive");
  return predict_load(strain, spec) / g;
}

ZoneFit fit_zones(const PayloadCurve& curve, const FitOptions& options) {
  if (curve.samples.size() < 4) throw FitError("need at least 4 samples to fit two zones");
  curve.validate();

  double scale = 1.0;
  if (options.unit == StrainUnit::Meters) {
    if (!positive_finite(options.skin_height))
      throw DomainError("skin height is required to normalize absolute deformation");
    scale = 1.0 / options.skin_height;
  }

  const std::size_t n = curve.samples.size();
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = curve.samples[i].strain * scale;
    y[i] = curve.samples[i].load;
  }

  // Coarse pass: every interior sample strain as a breakpoint.
  std::vector<kernels::SegmentCandidate> coarse;
  for (std::size_t i = 1; i + 1 < n; ++i) coarse.push_back({.breakpoint = x[i]});
  scan(x, y, coarse, options.parallel);
  const auto* best = best_of(coarse);
  if (best == nullptr) throw FitError("no breakpoint candidate yields a solvable fit");

  // Refine on a finer grid spanning the neighbouring samples.
  std::vector<kernels::SegmentCandidate> fine;
  {
    const auto it = std::lower_bound(x.begin(), x.end(), best->breakpoint);
    const auto idx = static_cast<std::size_t>(it - x.begin());
    const double lo = x[idx - 1];
    const double hi = x[idx + 1];
    const int steps = std::max(1, options.refinement) * 2;
    for (int k = 0; k <= steps; ++k) fine.push_back({.breakpoint = lo + (hi - lo) * k / steps});
    for (std::size_t split = 0; split + 1 < n; ++split) {
      const double b = interval_breakpoint(x, y, split);
      if (std::isfinite(b)) fine.push_back({.breakpoint = b});
    }
    fine.push_back(*best);
  }
  scan(x, y, fine, options.parallel);
  best = best_of(fine);

  ZoneFit fit;
  fit.slope1 = best->slope1;
  fit.slope2 = best->slope2;
  fit.breakpoint = best->breakpoint;
  fit.sse = best->sse;
  fit.sample_count = n;
  fit.max_strain = x.back();

  const double spread = std::abs(fit.slope1 - fit.slope2);
  const double ref = std::max(std::abs(fit.slope1), std::abs(fit.slope2));
  if (spread <= options.degenerate_tolerance * ref) {
    fit.degenerate = true;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sxy += x[i] * y[i];
      sxx += x[i] * x[i];
    }
    fit.slope1 = fit.slope2 = sxy / sxx;
    fit.sse = 0.0;
    for (std::size_t i = 0; i < n; ++i) fit.sse += std::pow(y[i] - fit.slope1 * x[i], 2);
  } else if (!(fit.slope1 > 0.0) || !(fit.slope2 > 0.0)) {
    throw FitError("fit produced a non-positive zone slope");
  }

  double acc = 0.0;
  std::size_t counted = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(y[i] > 0.0)) continue;
    const double rel = (segment_load(x[i], fit.slope1, fit.slope2, fit.breakpoint) - y[i]) / y[i];
    acc += rel * rel;
    ++counted;
  }
  fit.rms_relative_error = counted > 0 ? std::sqrt(acc / static_cast<double>(counted)) : 0.0;
  return fit;
}

PayloadCurve sample_payload_curve(const SkinSpec& spec, std::size_t count, double max_strain,
                                  double relative_noise, std::uint64_t seed) {
  spec.validate();
  if (count < 2) throw DomainError("need at least 2 samples");
  if (!positive_finite(max_strain)) throw DomainError("max strain must be positive");
  if (!std::isfinite(relative_noise) || relative_noise < 0.0) throw DomainError("noise must be >= 0");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  PayloadCurve curve;
  curve.source = relative_noise > 0.0 ? "synthetic (noisy)" : "synthetic";
  curve.samples.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double e = max_strain * static_cast<double>(i) / static_cast<double>(count - 1);
    double p = predict_load(e, spec);
    if (relative_noise > 0.0) p = std::max(0.0, p * (1.0 + relative_noise * gauss(rng)));
    curve.samples.push_back({e, p});
  }
  return curve;
}

}  // namespace softgrip
