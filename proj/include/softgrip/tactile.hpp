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

// Marker-based tactile sensing on synthetic camera frames: render, binarize,
// detect blobs, track them between frames, summarize the contact state.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace softgrip {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

struct Marker {
  int id = 0;
  Vec2 position;  // normalized, [0,1]^2 over the frame
};

struct MarkerLayout {
  std::vector<Marker> markers;
  double marker_diameter = 0.002;  // m

  void validate() const;

  /// rows x cols grid with a margin of half a cell; ids row-major from 0.
  static MarkerLayout grid(int rows, int cols, double marker_diameter = 0.002);
};

struct TactileFrame {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major
  std::int64_t timestamp = 0;

  TactileFrame() = default;
  TactileFrame(int w, int h, std::uint8_t fill = 0, std::int64_t ts = 0);

  std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
  void validate() const;

  friend bool operator==(const TactileFrame&, const TactileFrame&) = default;
};

struct CameraModel {
  int width = 256;
  int height = 256;
  double pixels_per_meter = 4000.0;  // 2 mm markers -> 8 px

  void validate() const;
  Vec2 to_pixels(const Vec2& normalized) const;
  double marker_diameter_px(const MarkerLayout& layout) const;
  double marker_area_px(const MarkerLayout& layout) const;
};

/// Per-marker pixel displacement and occlusion. Empty vectors mean no
/// displacement / nothing occluded; otherwise sizes must match the layout.
struct Deformation {
  std::vector<Vec2> displacement;
  std::vector<bool> occluded;

  static Deformation uniform_shift(std::size_t count, Vec2 shift);
};

struct NoiseModel {
  double sigma = 0.0;  // gaussian, intensity units
  std::uint64_t seed = 0;
};

struct RenderOptions {
  std::uint8_t background = 20;
  std::uint8_t foreground = 230;
  int supersample = 4;
  bool parallel = true;
};

struct MarkerTruth {
  int id = 0;
  Vec2 center;  // pixels
  bool occluded = false;
  bool clipped = false;  // disc lies entirely outside the frame

  bool visible() const { return !occluded && !clipped; }
};

struct RenderedFrame {
  TactileFrame frame;
  std::vector<MarkerTruth> truth;
};

RenderedFrame render_frame(const MarkerLayout& layout, const Deformation& deformation,
                           const CameraModel& camera, const NoiseModel& noise,
                           const RenderOptions& options = {});

inline constexpr std::uint8_t kDefaultThreshold = 128;

/// pixel >= threshold -> 255, else 0.
TactileFrame binarize(const TactileFrame& frame, int threshold = kDefaultThreshold, bool parallel = true);

struct Detection {
  Vec2 centroid;  // pixels, mean of member pixel coordinates
  std::size_t area = 0;
  bool merged = false;
};

struct MarkerSet {
  std::vector<Detection> detections;
};

struct DetectOptions {
  std::size_t min_area = 4;
  /// Expected single-marker area in pixels. 0 uses the median component area.
  double expected_area = 0.0;
  /// A component larger than this many single markers is flagged merged.
  double merge_factor = 1.5;
};

/// 8-connected component labeling of a binary frame. Components are ordered
/// by their first pixel in raster order.
MarkerSet detect_markers(const TactileFrame& binary, const DetectOptions& options = {});

struct Match {
  std::size_t previous = 0;
  std::size_t current = 0;
  Vec2 displacement;
};

struct DisplacementField {
  std::vector<Match> matches;
  std::vector<std::size_t> unmatched_previous;
  std::vector<std::size_t> unmatched_current;
};

/// Greedy mutual-nearest matching: candidate pairs within `gate` pixels are
/// accepted in order of increasing distance while both ends are free.
DisplacementField track(const MarkerSet& previous, const MarkerSet& current, double gate);

/// Three times the marker pixel diameter.
double default_gate(const CameraModel& camera, const MarkerLayout& layout);

enum class ContactLabel { Idle, Contact, ContactWithAir };

std::string_view to_string(ContactLabel label);

struct ContactThresholds {
  double contact_mean_px = 1.0;
  /// Contact is also declared when fewer than this fraction of the previously
  /// visible markers are still visible.
  double min_visible_fraction = 0.9;
};

struct ContactSummary {
  double mean_magnitude = 0.0;
  double magnitude_variance = 0.0;
  std::size_t visible_count = 0;
  std::size_t reference_count = 0;
  ContactLabel label = ContactLabel::Idle;
};

ContactSummary contact_summary(const DisplacementField& field, double air_support_kpa,
                               const ContactThresholds& thresholds = {});

}  // namespace softgrip
