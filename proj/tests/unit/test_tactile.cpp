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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "../oracles.hpp"
#include "softgrip/error.hpp"
#include "softgrip/tactile.hpp"

namespace softgrip {
namespace {

MarkerLayout single(double u, double v) {
  MarkerLayout l;
  l.markers.push_back({0, {u, v}});
  return l;
}

MarkerSet detect(const RenderedFrame& r) { return detect_markers(binarize(r.frame)); }

TEST(Render, EmptyLayoutIsUniformBackground) {
  const auto r = render_frame({}, {}, {}, {});
  EXPECT_EQ(r.frame.width, 256);
  EXPECT_EQ(r.frame.height, 256);
  for (auto v : r.frame.pixels) ASSERT_EQ(v, 20);
  EXPECT_TRUE(detect(r).detections.empty());
}

TEST(Render, SingleMarkerCentroidMatchesTruth) {
  const CameraModel cam;
  for (Vec2 p : {Vec2{0.5, 0.5}, Vec2{0.3137, 0.71}, Vec2{0.123, 0.456}}) {
    const auto r = render_frame(single(p.x, p.y), {}, cam, {});
    const auto c = oracle::weighted_centroid(r.frame.pixels, r.frame.width, r.frame.height, 20);
    EXPECT_NEAR(c.x, r.truth[0].center.x, 0.1);
    EXPECT_NEAR(c.y, r.truth[0].center.y, 0.1);
    const auto set = detect(r);
    ASSERT_EQ(set.detections.size(), 1u);
    EXPECT_NEAR(set.detections[0].centroid.x, r.truth[0].center.x, 0.5);
    EXPECT_NEAR(set.detections[0].centroid.y, r.truth[0].center.y, 0.5);
  }
}

TEST(Render, DiscAreaNearGeometricArea) {
  for (double diam : {0.002, 0.003, 0.005}) {
    MarkerLayout l = single(0.5, 0.5);
    l.marker_diameter = diam;
    const CameraModel cam;
    const auto set = detect(render_frame(l, {}, cam, {}));
    ASSERT_EQ(set.detections.size(), 1u);
    const double expected = cam.marker_area_px(l);
    EXPECT_NEAR(static_cast<double>(set.detections[0].area), expected, 0.1 * expected) << diam;
  }
}

TEST(Render, DeterministicAndThreadIndependent) {
  const auto l = MarkerLayout::grid(5, 5);
  const NoiseModel noise{8.0, 42};
  RenderOptions serial;
  serial.parallel = false;
  const auto a = render_frame(l, {}, {}, noise);
  const auto b = render_frame(l, {}, {}, noise);
  const auto c = render_frame(l, {}, {}, noise, serial);
  EXPECT_EQ(a.frame, b.frame);
  EXPECT_EQ(a.frame, c.frame);
  const auto d = render_frame(l, {}, {}, {8.0, 43});
  EXPECT_NE(a.frame, d.frame);
}

TEST(Render, ClippedMarkersAreNotDrawn) {
  const auto l = single(0.5, 0.5);
  const auto r = render_frame(l, Deformation::uniform_shift(1, {500.0, 0.0}), {}, {});
  EXPECT_TRUE(r.truth[0].clipped);
  EXPECT_FALSE(r.truth[0].visible());
  EXPECT_TRUE(detect(r).detections.empty());
}

TEST(Render, PartiallyVisibleAtEdge) {
  const auto r = render_frame(single(0.0, 0.5), {}, {}, {});
  EXPECT_FALSE(r.truth[0].clipped);
  EXPECT_EQ(detect(r).detections.size(), 1u);
}

TEST(Render, Validation) {
  MarkerLayout dup;
  dup.markers = {{1, {0.2, 0.2}}, {1, {0.7, 0.7}}};
  EXPECT_THROW(render_frame(dup, {}, {}, {}), ValidationError);
  EXPECT_THROW(render_frame(single(1.2, 0.5), {}, {}, {}), ValidationError);
  Deformation bad;
  bad.displacement.resize(3);
  EXPECT_THROW(render_frame(single(0.5, 0.5), bad, {}, {}), ValidationError);
  EXPECT_THROW(render_frame(single(0.5, 0.5), {}, {}, {-1.0, 0}), DomainError);
  CameraModel cam;
  cam.width = 0;
  EXPECT_THROW(render_frame(single(0.5, 0.5), {}, cam, {}), ValidationError);
}

TEST(Binarize, ThresholdEdges) {
  TactileFrame f(4, 1);
  f.pixels = {0, 127, 128, 255};
  EXPECT_EQ(binarize(f).pixels, (std::vector<std::uint8_t>{0, 0, 255, 255}));
  EXPECT_EQ(binarize(f, 0).pixels, (std::vector<std::uint8_t>{255, 255, 255, 255}));
  EXPECT_EQ(binarize(f, 255).pixels, (std::vector<std::uint8_t>{0, 0, 0, 255}));
  EXPECT_EQ(binarize(f, 128, false), binarize(f, 128, true));
  EXPECT_THROW(binarize(f, 256), DomainError);
  EXPECT_THROW(binarize(f, -1), DomainError);
  TactileFrame empty;
  EXPECT_THROW(binarize(empty), ValidationError);
}

TEST(Detect, RejectsNonBinary) {
  TactileFrame f(3, 3, 7);
  EXPECT_THROW(detect_markers(f), ValidationError);
}

TEST(Detect, EightConnectivityAndMinArea) {
  TactileFrame f(6, 6, 0);
  auto set = [&](int x, int y) { f.pixels[y * 6 + x] = 255; };
  // diagonal chain forms one component
  set(0, 0), set(1, 1), set(2, 2), set(3, 3);
  // isolated speck below min area
  set(5, 0);
  const auto m = detect_markers(f);
  ASSERT_EQ(m.detections.size(), 1u);
  EXPECT_EQ(m.detections[0].area, 4u);
  EXPECT_DOUBLE_EQ(m.detections[0].centroid.x, 1.5);
  EXPECT_DOUBLE_EQ(m.detections[0].centroid.y, 1.5);
}

TEST(Detect, GridRecoversAllMarkers) {
  const auto l = MarkerLayout::grid(5, 5);
  const auto r = render_frame(l, {}, {}, {});
  const auto m = detect(r);
  ASSERT_EQ(m.detections.size(), 25u);
  for (const auto& t : r.truth) {
    double best = 1e9;
    for (const auto& d : m.detections)
      best = std::min(best, std::hypot(d.centroid.x - t.center.x, d.centroid.y - t.center.y));
    EXPECT_LE(best, 0.5);
  }
  for (const auto& d : m.detections) EXPECT_FALSE(d.merged);
}

TEST(Detect, OverlappingPairIsMerged) {
  // Two 8 px discs whose rims overlap by one pixel (centres 7 px apart)
  // next to a few isolated singles that set the median area.
  const CameraModel cam;
  MarkerLayout l;
  const double step = 1.0 / (cam.width - 1);
  l.markers = {{0, {0.3, 0.3}}, {1, {0.3 + 7 * step, 0.3}}, {2, {0.7, 0.7}}, {3, {0.2, 0.8}},
               {4, {0.8, 0.2}}};
  const auto m = detect(render_frame(l, {}, cam, {}));
  ASSERT_EQ(m.detections.size(), 4u);
  int merged = 0;
  for (const auto& d : m.detections) {
    merged += d.merged;
    if (d.merged) EXPECT_NEAR(d.centroid.x, 0.3 * (cam.width - 1) + 3.5, 0.5);
  }
  EXPECT_EQ(merged, 1);
}

MarkerSet points(std::vector<Vec2> ps) {
  MarkerSet s;
  for (auto p : ps) s.detections.push_back({p, 50, false});
  return s;
}

TEST(Track, IdentityGivesZeroField) {
  const auto m = detect(render_frame(MarkerLayout::grid(5, 5), {}, {}, {}));
  const auto f = track(m, m, 24.0);
  ASSERT_EQ(f.matches.size(), 25u);
  for (std::size_t i = 0; i < f.matches.size(); ++i) {
    EXPECT_EQ(f.matches[i].previous, i);
    EXPECT_EQ(f.matches[i].current, i);
    EXPECT_EQ(f.matches[i].displacement.x, 0.0);
    EXPECT_EQ(f.matches[i].displacement.y, 0.0);
  }
  EXPECT_TRUE(f.unmatched_previous.empty());
  EXPECT_TRUE(f.unmatched_current.empty());
  const auto s = contact_summary(f, 0.0);
  EXPECT_EQ(s.label, ContactLabel::Idle);
  EXPECT_EQ(s.mean_magnitude, 0.0);
}

TEST(Track, RecoversUniformShift) {
  const auto l = MarkerLayout::grid(5, 5);
  const CameraModel cam;
  const auto a = detect(render_frame(l, {}, cam, {}));
  const auto b = detect(render_frame(l, Deformation::uniform_shift(25, {3.0, -2.0}), cam, {}));
  const auto f = track(a, b, default_gate(cam, l));
  ASSERT_EQ(f.matches.size(), 25u);
  for (const auto& m : f.matches) {
    EXPECT_NEAR(m.displacement.x, 3.0, 0.5);
    EXPECT_NEAR(m.displacement.y, -2.0, 0.5);
  }
  const auto s = contact_summary(f, 0.0);
  EXPECT_EQ(s.label, ContactLabel::Contact);
  EXPECT_NEAR(s.mean_magnitude, std::hypot(3.0, 2.0), 0.5);
  EXPECT_EQ(contact_summary(f, 5.0).label, ContactLabel::ContactWithAir);
}

TEST(Track, OccludedMarkersAreUnmatched) {
  const auto l = MarkerLayout::grid(5, 5);
  Deformation d;
  d.occluded.assign(25, false);
  for (int i : {0, 6, 12, 18, 24}) d.occluded[i] = true;
  const auto a = detect(render_frame(l, {}, {}, {}));
  const auto b = detect(render_frame(l, d, {}, {}));
  const auto f = track(a, b, 24.0);
  EXPECT_EQ(f.matches.size(), 20u);
  EXPECT_EQ(f.unmatched_previous.size(), 5u);
  EXPECT_TRUE(f.unmatched_current.empty());
  const auto s = contact_summary(f, 0.0);
  EXPECT_EQ(s.visible_count, 20u);
  EXPECT_EQ(s.reference_count, 25u);
  EXPECT_EQ(s.label, ContactLabel::Contact);  // 80% visible < 90%
}

TEST(Track, GreedyPrefersCloserPair) {
  const auto a = points({{0, 0}, {10, 0}});
  const auto b = points({{9, 0}});
  const auto f = track(a, b, 20.0);
  ASSERT_EQ(f.matches.size(), 1u);
  EXPECT_EQ(f.matches[0].previous, 1u);
  EXPECT_EQ(f.unmatched_previous, std::vector<std::size_t>{0});
}

TEST(Track, GateExcludesFarPairs) {
  const auto f = track(points({{0, 0}}), points({{10, 0}}), 5.0);
  EXPECT_TRUE(f.matches.empty());
  EXPECT_THROW(track({}, {}, 0.0), DomainError);
}

TEST(TrackProperties, SwappingFramesNegatesField) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> pos(0, 200), jit(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Vec2> pa, pb;
    for (int i = 0; i < 20; ++i) {
      pa.push_back({pos(rng), pos(rng)});
      pb.push_back({pa.back().x + jit(rng), pa.back().y + jit(rng)});
    }
    const auto a = points(pa), b = points(pb);
    const auto fwd = track(a, b, 10.0);
    const auto back = track(b, a, 10.0);
    ASSERT_EQ(fwd.matches.size(), back.matches.size());
    for (const auto& m : fwd.matches) {
      const auto it = std::find_if(back.matches.begin(), back.matches.end(),
                                   [&](const Match& r) { return r.previous == m.current; });
      ASSERT_NE(it, back.matches.end());
      EXPECT_EQ(it->current, m.previous);
      EXPECT_EQ(it->displacement.x, -m.displacement.x);
      EXPECT_EQ(it->displacement.y, -m.displacement.y);
    }
  }
}

TEST(ContactSummary, EmptyFieldIsIdleAndAirMustBeNonNegative) {
  const auto s = contact_summary({}, 0.0);
  EXPECT_EQ(s.label, ContactLabel::Idle);
  EXPECT_EQ(s.visible_count, 0u);
  EXPECT_THROW(contact_summary({}, -1.0), DomainError);
  EXPECT_EQ(to_string(ContactLabel::ContactWithAir), "contact-with-air");
}

TEST(ContactSummary, VarianceOfMagnitudes) {
  DisplacementField f;
  f.matches = {{0, 0, {3, 4}}, {1, 1, {0, 1}}};
  const auto s = contact_summary(f, 0.0);
  EXPECT_DOUBLE_EQ(s.mean_magnitude, 3.0);
  EXPECT_DOUBLE_EQ(s.magnitude_variance, 4.0);
}

}  // namespace
}  // namespace softgrip
