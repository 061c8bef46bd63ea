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

#include "softgrip/tactile.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "softgrip/error.hpp"
#include "softgrip/kernels.hpp"
#include "softgrip/units.hpp"

namespace softgrip {

void MarkerLayout::validate() const {
  if (!(marker_diameter > 0.0) || !std::isfinite(marker_diameter))
    throw ValidationError("marker diameter must be positive");
  std::set<int> ids;
  for (const auto& m : markers) {
    if (!ids.insert(m.id).second) throw ValidationError("duplicate marker id " + std::to_string(m.id));
    const auto& p = m.position;
    if (!(p.x >= 0.0 && p.x <= 1.0 && p.y >= 0.0 && p.y <= 1.0))
      throw ValidationError("marker " + std::to_string(m.id) + " lies outside [0,1]^2");
  }
}

MarkerLayout MarkerLayout::grid(int rows, int cols, double marker_diameter) {
  MarkerLayout layout;
  layout.marker_diameter = marker_diameter;
  int id = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      layout.markers.push_back({id++, {(c + 0.5) / cols, (r + 0.5) / rows}});
  return layout;
}

TactileFrame::TactileFrame(int w, int h, std::uint8_t fill, std::int64_t ts)
    : width(w), height(h), pixels(static_cast<std::size_t>(std::max(0, w)) * std::max(0, h), fill),
      timestamp(ts) {}

void TactileFrame::validate() const {
  if (width <= 0 || height <= 0) throw ValidationError("frame dimensions must be positive");
  if (pixels.size() != static_cast<std::size_t>(width) * height)
    throw ValidationError("pixel buffer does not match frame dimensions");
}

void CameraModel::validate() const {
  if (width <= 0 || height <= 0) throw ValidationError("camera dimensions must be positive");
  if (!(pixels_per_meter > 0.0) || !std::isfinite(pixels_per_meter))
    throw ValidationError("pixels per meter must be positive");
}

Vec2 CameraModel::to_pixels(const Vec2& n) const {
  return {n.x * (width - 1), n.y * (height - 1)};
}

double CameraModel::marker_diameter_px(const MarkerLayout& layout) const {
  return layout.marker_diameter * pixels_per_meter;
}

double CameraModel::marker_area_px(const MarkerLayout& layout) const {
  const double r = 0.5 * marker_diameter_px(layout);
  return kPi * r * r;
}

Deformation Deformation::uniform_shift(std::size_t count, Vec2 shift) {
  return {std::vector<Vec2>(count, shift), {}};
}

RenderedFrame render_frame(const MarkerLayout& layout, const Deformation& deformation,
                           const CameraModel& camera, const NoiseModel& noise,
                           const RenderOptions& options) {
  layout.validate();
  camera.validate();
  const std::size_t n = layout.markers.size();
  if (!deformation.displacement.empty() && deformation.displacement.size() != n)
    throw ValidationError("displacement count does not match the layout");
  if (!deformation.occluded.empty() && deformation.occluded.size() != n)
    throw ValidationError("occlusion mask size does not match the layout");
  if (!std::isfinite(noise.sigma) || noise.sigma < 0.0) throw DomainError("noise sigma must be >= 0");

  const double radius = 0.5 * camera.marker_diameter_px(layout);
  RenderedFrame out;
  out.frame = TactileFrame(camera.width, camera.height, options.background);
  std::vector<kernels::Disc> discs;

  for (std::size_t i = 0; i < n; ++i) {
    MarkerTruth t;
    t.id = layout.markers[i].id;
    t.center = camera.to_pixels(layout.markers[i].position);
    if (!deformation.displacement.empty()) {
      const auto& d = deformation.displacement[i];
      if (!std::isfinite(d.x) || !std::isfinite(d.y)) throw DomainError("displacement must be finite");
      t.center.x += d.x;
      t.center.y += d.y;
    }
    t.occluded = !deformation.occluded.empty() && deformation.occluded[i];
    t.clipped = t.center.x + radius < -0.5 || t.center.x - radius > camera.width - 0.5 ||
                t.center.y + radius < -0.5 || t.center.y - radius > camera.height - 0.5;
    if (t.visible()) discs.push_back({t.center.x, t.center.y, radius});
    out.truth.push_back(t);
  }

  const kernels::Shading shading{options.background, options.foreground, options.supersample};
  const kernels::PixelNoise pixel_noise{noise.sigma, noise.seed};
  if (options.parallel)
    kernels::parallel::render_discs(discs, camera.width, camera.height, shading, pixel_noise,
                                    out.frame.pixels);
  else
    kernels::serial::render_discs(discs, camera.width, camera.height, shading, pixel_noise,
                                  out.frame.pixels);
  return out;
}

TactileFrame binarize(const TactileFrame& frame, int threshold, bool parallel) {
  frame.validate();
  if (threshold < 0 || threshold > 255) throw DomainError("threshold must lie in [0, 255]");
  TactileFrame out(frame.width, frame.height, 0, frame.timestamp);
  const auto level = static_cast<std::uint8_t>(threshold);
  if (parallel)
    kernels::parallel::threshold(frame.pixels, level, out.pixels);
  else
    kernels::serial::threshold(frame.pixels, level, out.pixels);
  return out;
}

MarkerSet detect_markers(const TactileFrame& binary, const DetectOptions& options) {
  binary.validate();
  if (std::any_of(binary.pixels.begin(), binary.pixels.end(), [](auto v) { return v != 0 && v != 255; }))
    throw ValidationError("detection expects a binary frame (0/255)");
  const int w = binary.width;
  const int h = binary.height;
  std::vector<int> label(binary.pixels.size(), -1);
  std::vector<std::size_t> stack;

  struct Component {
    double sx = 0.0;
    double sy = 0.0;
    std::size_t area = 0;
  };
  std::vector<Component> components;

  for (std::size_t start = 0; start < binary.pixels.size(); ++start) {
    if (binary.pixels[start] == 0 || label[start] >= 0) continue;
    const int id = static_cast<int>(components.size());
    Component comp;
    label[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t p = stack.back();
      stack.pop_back();
      const int px = static_cast<int>(p % w);
      const int py = static_cast<int>(p / w);
      comp.sx += px;
      comp.sy += py;
      ++comp.area;
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          const int nx = px + dx;
          const int ny = py + dy;
          if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
          const std::size_t q = static_cast<std::size_t>(ny) * w + nx;
          if (binary.pixels[q] == 0 || label[q] >= 0) continue;
          label[q] = id;
          stack.push_back(q);
        }
      }
    }
    components.push_back(comp);
  }

  std::vector<const Component*> kept;
  for (const auto& c : components)
    if (c.area >= options.min_area) kept.push_back(&c);

  double expected = options.expected_area;
  if (!(expected > 0.0) && !kept.empty()) {
    std::vector<std::size_t> areas;
    for (const auto* c : kept) areas.push_back(c->area);
    std::nth_element(areas.begin(), areas.begin() + areas.size() / 2, areas.end());
    expected = static_cast<double>(areas[areas.size() / 2]);
  }

  MarkerSet set;
  for (const auto* c : kept) {
    Detection d;
    d.area = c->area;
    d.centroid = {c->sx / c->area, c->sy / c->area};
    d.merged = expected > 0.0 && static_cast<double>(c->area) > options.merge_factor * expected;
    set.detections.push_back(d);
  }
  return set;
}

DisplacementField track(const MarkerSet& previous, const MarkerSet& current, double gate) {
  if (!(gate > 0.0) || !std::isfinite(gate)) throw DomainError("gate radius must be positive");
  const auto& a = previous.detections;
  const auto& b = current.detections;

  std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
  const double gate2 = gate * gate;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double dx = b[j].centroid.x - a[i].centroid.x;
      const double dy = b[j].centroid.y - a[i].centroid.y;
      const double d2 = dx * dx + dy * dy;
      if (d2 <= gate2) pairs.emplace_back(d2, i, j);
    }
  }
  std::sort(pairs.begin(), pairs.end());

  std::vector<bool> used_a(a.size(), false), used_b(b.size(), false);
  DisplacementField field;
  for (const auto& [d2, i, j] : pairs) {
    if (used_a[i] || used_b[j]) continue;
    used_a[i] = used_b[j] = true;
    field.matches.push_back(
        {i, j, {b[j].centroid.x - a[i].centroid.x, b[j].centroid.y - a[i].centroid.y}});
  }
  std::sort(field.matches.begin(), field.matches.end(),
            [](const Match& l, const Match& r) { return l.previous < r.previous; });
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!used_a[i]) field.unmatched_previous.push_back(i);
  for (std::size_t j = 0; j < b.size(); ++j)
    if (!used_b[j]) field.unmatched_current.push_back(j);
  return field;
}

double default_gate(const CameraModel& camera, const MarkerLayout& layout) {
  return 3.0 * camera.marker_diameter_px(layout);
}

std::string_view to_string(ContactLabel label) {
  switch (label) {
    case ContactLabel::Idle: return "idle";
    case ContactLabel::Contact: return "contact";
    case ContactLabel::ContactWithAir: return "contact-with-air";
  }
  return "idle";
}

ContactSummary contact_summary(const DisplacementField& field, double air_support_kpa,
                               const ContactThresholds& thresholds) {
  if (!std::isfinite(air_support_kpa) || air_support_kpa < 0.0)
    throw DomainError("air support must be >= 0");
  ContactSummary s;
  s.visible_count = field.matches.size() + field.unmatched_current.size();
  s.reference_count = field.matches.size() + field.unmatched_previous.size();

  if (!field.matches.empty()) {
    std::vector<double> mags;
    for (const auto& m : field.matches) mags.push_back(std::hypot(m.displacement.x, m.displacement.y));
    double sum = 0.0;
    for (double v : mags) sum += v;
    s.mean_magnitude = sum / static_cast<double>(mags.size());
    double var = 0.0;
    for (double v : mags) var += (v - s.mean_magnitude) * (v - s.mean_magnitude);
    s.magnitude_variance = var / static_cast<double>(mags.size());
  }

  const bool moved = s.mean_magnitude >= thresholds.contact_mean_px;
  const bool occluded = s.reference_count > 0 &&
                        static_cast<double>(s.visible_count) <
                            thresholds.min_visible_fraction * static_cast<double>(s.reference_count);
  if (moved || occluded)
    s.label = air_support_kpa > 0.0 ? ContactLabel::ContactWithAir : ContactLabel::Contact;
  return s;
}

}  // namespace softgrip
