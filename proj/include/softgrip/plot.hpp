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

// Minimal SVG line plots, byte-for-byte reproducible.

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace softgrip {

struct PlotSeries {
  std::vector<double> x;
  std::vector<double> y;
  std::string label;
  bool show_points = false;
};

struct PlotAxes {
  std::string title;
  std::string x_label;
  std::string y_label;
  int width = 640;
  int height = 420;
};

/// Throws DomainError for an empty series list or mismatched x/y lengths.
std::string render_svg(std::span<const PlotSeries> series, const PlotAxes& axes);

void emit_plot(std::span<const PlotSeries> series, const PlotAxes& axes, const std::filesystem::path& path);

}  // namespace softgrip
