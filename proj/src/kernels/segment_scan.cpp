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

#include "softgrip/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace softgrip::kernels {

void solve_segment_candidate(std::span<const double> strain, std::span<const double> load,
                             SegmentCandidate& candidate) {
  const double b = candidate.breakpoint;
  double a11 = 0.0, a12 = 0.0, a22 = 0.0, r1 = 0.0, r2 = 0.0;
  for (std::size_t i = 0; i < strain.size(); ++i) {
    const double f1 = std::min(strain[i], b);
    const double f2 = std::max(0.0, strain[i] - b);
    a11 += f1 * f1;
    a12 += f1 * f2;
    a22 += f2 * f2;
    r1 += f1 * load[i];
    r2 += f2 * load[i];
  }
  const double det = a11 * a22 - a12 * a12;
  if (!(a11 > 0.0) || !(a22 > 0.0) || !(det > 1e-14 * a11 * a22)) {
    candidate.solvable = false;
    return;
  }
  candidate.slope1 = (r1 * a22 - r2 * a12) / det;
  candidate.slope2 = (a11 * r2 - a12 * r1) / det;

  double sse = 0.0;
  for (std::size_t i = 0; i < strain.size(); ++i) {
    const double fit = candidate.slope1 * std::min(strain[i], b) +
                       candidate.slope2 * std::max(0.0, strain[i] - b);
    const double e = load[i] - fit;
    sse += e * e;
  }
  candidate.sse = sse;
  candidate.solvable = true;
}

namespace serial {

void scan_breakpoints(std::span<const double> strain, std::span<const double> load,
                      std::span<SegmentCandidate> candidates) {
  for (auto& c : candidates) solve_segment_candidate(strain, load, c);
}

}  // namespace serial

namespace parallel {

void scan_breakpoints(std::span<const double> strain, std::span<const double> load,
                      std::span<SegmentCandidate> candidates) {
  const auto n = static_cast<long long>(candidates.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i)
    solve_segment_candidate(strain, load, candidates[static_cast<std::size_t>(i)]);
}

}  // namespace parallel
}  // namespace softgrip::kernels
