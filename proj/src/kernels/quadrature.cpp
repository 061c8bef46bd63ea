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
#include <array>
#include <cmath>

namespace softgrip::kernels {
namespace {

constexpr std::size_t kBlocks = 256;

struct MomentTerms {
  double r;
  double h;

  // Trapezoid weight is 1/2 at both endpoints. The sine term vanishes at
  // both ends (x = 0 and x = r), so only the cosine endpoint at x = r needs it.
  void accumulate(std::size_t i, ContactMoments& acc) const {
    const double x = static_cast<double>(i) * h;
    const double rem = std::max(0.0, r * r - x * x);
    acc.sine += x * std::sqrt(rem) / r;
    acc.cosine += x * x / r;
  }
};

ContactMoments finish(ContactMoments sum, double radius, double h) {
  // Remove half of the x = r cosine term that was accumulated at full weight.
  sum.cosine -= 0.5 * radius;
  sum.sine *= h;
  sum.cosine *= h;
  return sum;
}

}  // namespace

namespace serial {

ContactMoments trapezoid_contact_moments(double radius, std::size_t n_intervals) {
  const MomentTerms terms{radius, radius / static_cast<double>(n_intervals)};
  ContactMoments sum;
  for (std::size_t i = 1; i <= n_intervals; ++i) terms.accumulate(i, sum);
  return finish(sum, radius, terms.h);
}

}  // namespace serial

namespace parallel {

ContactMoments trapezoid_contact_moments(double radius, std::size_t n_intervals) {
  const MomentTerms terms{radius, radius / static_cast<double>(n_intervals)};
  std::array<ContactMoments, kBlocks> partial{};
  const auto n = static_cast<long long>(n_intervals);

#pragma omp parallel for schedule(static)
  for (long long b = 0; b < static_cast<long long>(kBlocks); ++b) {
    const long long lo = 1 + b * n / static_cast<long long>(kBlocks);
    const long long hi = 1 + (b + 1) * n / static_cast<long long>(kBlocks);
    ContactMoments acc;
    for (long long i = lo; i < hi; ++i) terms.accumulate(static_cast<std::size_t>(i), acc);
    partial[static_cast<std::size_t>(b)] = acc;
  }

  ContactMoments sum;
  for (const auto& p : partial) {
    sum.sine += p.sine;
    sum.cosine += p.cosine;
  }
  return finish(sum, radius, terms.h);
}

}  // namespace parallel
}  // namespace softgrip::kernels
