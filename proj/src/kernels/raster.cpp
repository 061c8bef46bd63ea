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
#include <random>

namespace softgrip::kernels {
namespace {

void render_row(std::span<const Disc> discs, int width, int row, const Shading& shading,
                const PixelNoise& noise, std::vector<double>& coverage, std::uint8_t* out) {
  std::fill(coverage.begin(), coverage.end(), 0.0);
  const int ss = std::max(1, shading.supersample);
  const double step = 1.0 / ss;
  const double weight = 1.0 / (ss * ss);

  for (const auto& d : discs) {
    if (std::abs(row - d.y) > d.radius + 1.0) continue;
    const int x0 = std::max(0, static_cast<int>(std::floor(d.x - d.radius - 1.0)));
    const int x1 = std::min(width - 1, static_cast<int>(std::ceil(d.x + d.radius + 1.0)));
    const double r2 = d.radius * d.radius;
    for (int px = x0; px <= x1; ++px) {
      int inside = 0;
      for (int sy = 0; sy < ss; ++sy) {
        const double dy = row - 0.5 + (sy + 0.5) * step - d.y;
        for (int sx = 0; sx < ss; ++sx) {
          const double dx = px - 0.5 + (sx + 0.5) * step - d.x;
          inside += (dx * dx + dy * dy <= r2) ? 1 : 0;
        }
      }
      coverage[static_cast<std::size_t>(px)] += inside * weight;
    }
  }

  const double bg = shading.background;
  const double span = static_cast<double>(shading.foreground) - bg;
  if (noise.sigma > 0.0) {
    std::seed_seq seq{static_cast<std::uint32_t>(noise.seed),
                      static_cast<std::uint32_t>(noise.seed >> 32), static_cast<std::uint32_t>(row)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> gauss(0.0, noise.sigma);
    for (int px = 0; px < width; ++px) {
      const double v = bg + span * std::min(1.0, coverage[static_cast<std::size_t>(px)]) + gauss(rng);
      out[px] = static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
    }
  } else {
    for (int px = 0; px < width; ++px) {
      const double v = bg + span * std::min(1.0, coverage[static_cast<std::size_t>(px)]);
      out[px] = static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
    }
  }
}

}  // namespace

namespace serial {

void render_discs(std::span<const Disc> discs, int width, int height, const Shading& shading,
                  const PixelNoise& noise, std::span<std::uint8_t> out) {
  std::vector<double> coverage(static_cast<std::size_t>(width));
  for (int y = 0; y < height; ++y)
    render_row(discs, width, y, shading, noise, coverage, out.data() + static_cast<std::size_t>(y) * width);
}

void threshold(std::span<const std::uint8_t> in, std::uint8_t level, std::span<std::uint8_t> out) {
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = in[i] >= level ? 255 : 0;
}

}  // namespace serial

namespace parallel {

void render_discs(std::span<const Disc> discs, int width, int height, const Shading& shading,
                  const PixelNoise& noise, std::span<std::uint8_t> out) {
#pragma omp parallel
  {
    std::vector<double> coverage(static_cast<std::size_t>(width));
#pragma omp for schedule(static)
    for (int y = 0; y < height; ++y)
      render_row(discs, width, y, shading, noise, coverage,
                 out.data() + static_cast<std::size_t>(y) * width);
  }
}

void threshold(std::span<const std::uint8_t> in, std::uint8_t level, std::span<std::uint8_t> out) {
  const std::uint8_t* src = in.data();
  std::uint8_t* dst = out.data();
  const auto n = static_cast<std::ptrdiff_t>(in.size());
#pragma omp parallel for simd schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) dst[i] = src[i] >= level ? 255 : 0;
}

}  // namespace parallel
}  // namespace softgrip::kernels
