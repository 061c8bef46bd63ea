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

#pragma once

// Data-parallel inner loops. Every kernel has an OpenMP version in
// `kernels::parallel` and a plain loop in `kernels::serial`; the serial ones
// are kept as the reference the tests and benchmarks compare against.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace softgrip::kernels {

/// Trapezoid sums over x in [0, r] of the two moments of the sphere contact
/// integrand:
///   sine   = integral of x * sqrt(r^2 - x^2) / r dx   (exact r^2 / 3)
///   cosine = integral of x * x / r dx                 (exact r^2 / 3)
struct ContactMoments {
  double sine = 0.0;
  double cosine = 0.0;
};

/// One candidate of the two-segment fit: the least-squares slopes for a fixed
/// breakpoint and the resulting residual sum of squares.
struct SegmentCandidate {
  double breakpoint = 0.0;
  double slope1 = 0.0;
  double slope2 = 0.0;
  double sse = 0.0;
  bool solvable = false;
};

struct Disc {
  double x = 0.0;  // center, pixels
  double y = 0.0;
  double radius = 0.0;
};

struct Shading {
  std::uint8_t background = 20;
  std::uint8_t foreground = 230;
  int supersample = 4;  // sub-samples per pixel edge
};

struct PixelNoise {
  double sigma = 0.0;
  std::uint64_t seed = 0;
};

namespace serial {

ContactMoments trapezoid_contact_moments(double radius, std::size_t n_intervals);

void scan_breakpoints(std::span<const double> strain, std::span<const double> load,
                      std::span<SegmentCandidate> candidates);

void render_discs(std::span<const Disc> discs, int width, int height, const Shading& shading,
                  const PixelNoise& noise, std::span<std::uint8_t> out);

void threshold(std::span<const std::uint8_t> in, std::uint8_t level, std::span<std::uint8_t> out);

}  // namespace serial

namespace parallel {

/// Fixed-block reduction: the result does not depend on the thread count.
ContactMoments trapezoid_contact_moments(double radius, std::size_t n_intervals);

void scan_breakpoints(std::span<const double> strain, std::span<const double> load,
                      std::span<SegmentCandidate> candidates);

/// Bit-identical to serial::render_discs; noise is drawn from a per-row stream.
void render_discs(std::span<const Disc> discs, int width, int height, const Shading& shading,
                  const PixelNoise& noise, std::span<std::uint8_t> out);

void threshold(std::span<const std::uint8_t> in, std::uint8_t level, std::span<std::uint8_t> out);

}  // namespace parallel

/// Fits P = s1 * min(x, b) + s2 * max(0, x - b) for the candidate's breakpoint.
/// Shared by both scan variants.
void solve_segment_candidate(std::span<const double> strain, std::span<const double> load,
                             SegmentCandidate& candidate);

}  // namespace softgrip::kernels
