// Copyright 2026 The kernelbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "kernelbench/detectors.hpp"
#include "oracle.hpp"

namespace kb = kernelbench;

namespace {

constexpr kb::BorderPolicy kBorders[] = {kb::BorderPolicy::ClampToEdge,
                                         kb::BorderPolicy::ZeroPad};

kb::ImageBuffer from_function(std::size_t w, std::size_t h, auto f) {
  std::vector<float> s;
  for (std::size_t y = 0; y < h; ++y)
    for (std::size_t x = 0; x < w; ++x) s.push_back(static_cast<float>(f(x, y)));
  return kb::ImageBuffer(w, h, 1, std::move(s));
}

double oracle_sobel(const kb::ImageBuffer& img, kb::BorderPolicy border, long x, long y) {
  const double gx = kb::oracle::correlate_at(img, kb::presets::sobel_gx(), border, x, y, 0);
  const double gy = kb::oracle::correlate_at(img, kb::presets::sobel_gy(), border, x, y, 0);
  return std::sqrt(gx * gx + gy * gy);
}

double oracle_frei_chen(const kb::ImageBuffer& img, kb::BorderPolicy border,
                        std::size_t first, std::size_t last, long x, long y) {
  const auto basis = kb::presets::frei_chen();
  double m = 0.0, s = 0.0;
  for (std::size_t k = 0; k < 9; ++k) {
    const double r = kb::oracle::correlate_at(img, basis[k], border, x, y, 0);
    s += r * r;
    if (k >= first && k < last) m += r * r;
  }
  return s < 1e-12 ? 0.0 : std::sqrt(m / s);
}

}  // namespace

TEST(Sobel, ConstantImageIsExactlyZero) {
  std::mt19937 rng(8);
  std::uniform_real_distribution<float> dist(-10.0f, 10.0f);
  std::vector<float> values = {0.0f, 0.25f, 1.0f, 0.1f, 1.0f / 3.0f, 128.0f / 255.0f};
  for (int i = 0; i < 50; ++i) values.push_back(dist(rng));
  for (float c : values) {
    const auto out = kb::sobel_magnitude(kb::ImageBuffer::filled(7, 5, 1, c));
    for (float v : out.samples()) ASSERT_EQ(v, 0.0f) << "c=" << c;
  }
}

TEST(Sobel, RampInteriorIsEight) {
  const auto ramp = from_function(9, 7, [](auto x, auto) { return x; });
  EXPECT_EQ(oracle_sobel(ramp, kb::BorderPolicy::ClampToEdge, 4, 3), 8.0);
  const auto out = kb::sobel_magnitude(ramp);
  for (std::size_t y = 1; y + 1 < 7; ++y)
    for (std::size_t x = 1; x + 1 < 9; ++x) EXPECT_EQ(out.at(x, y), 8.0f);
}

TEST(Sobel, ImpulseResponse) {
  const auto img = from_function(5, 5, [](auto x, auto y) { return x == 2 && y == 2; });
  const auto out = kb::sobel_magnitude(img, kb::BorderPolicy::ZeroPad);
  for (long y = 0; y < 5; ++y) {
    for (long x = 0; x < 5; ++x) {
      EXPECT_NEAR(out.at(x, y), oracle_sobel(img, kb::BorderPolicy::ZeroPad, x, y), 1e-6);
    }
  }
  EXPECT_EQ(oracle_sobel(img, kb::BorderPolicy::ZeroPad, 2, 1), 2.0);
  EXPECT_EQ(out.at(2, 1), 2.0f);
  EXPECT_EQ(out.at(1, 2), 2.0f);
  EXPECT_EQ(out.at(3, 2), 2.0f);
  EXPECT_EQ(out.at(2, 3), 2.0f);
  EXPECT_FLOAT_EQ(out.at(1, 1), std::sqrt(2.0f));
  EXPECT_FLOAT_EQ(out.at(3, 3), std::sqrt(2.0f));
}

TEST(Sobel, RejectsRgbAndRgbVariantRejectsGray) {
  EXPECT_THROW(kb::sobel_magnitude(kb::ImageBuffer::filled(3, 3, 3, 0.0f)), kb::FormatError);
  EXPECT_THROW(kb::sobel_magnitude_rgb(kb::ImageBuffer::filled(3, 3, 1, 0.0f)),
               kb::FormatError);
}

TEST(SobelRgb, ConstantColorIsZero) {
  const kb::ImageBuffer img(4, 4, 3, [] {
    std::vector<float> s;
    for (int i = 0; i < 16; ++i) s.insert(s.end(), {0.2f, 0.9f, 0.4f});
    return s;
  }());
  const auto out = kb::sobel_magnitude_rgb(img);
  for (float v : out.samples()) EXPECT_EQ(v, 0.0f);
}

TEST(SobelRgb, EdgeOnlyInRedMatchesGraySobel) {
  std::mt19937 rng(9);
  const auto red = kb::oracle::random_image(rng, 8, 6, 1);
  std::vector<float> s;
  for (float v : red.samples()) s.insert(s.end(), {v, 0.5f, 0.5f});
  const kb::ImageBuffer img(8, 6, 3, s);
  EXPECT_EQ(kb::sobel_magnitude_rgb(img), kb::sobel_magnitude(red));
}

TEST(SobelRgb, MaxOfChannels) {
  std::mt19937 rng(10);
  const auto img = kb::oracle::random_image(rng, 8, 8, 3);
  const auto combined = kb::sobel_magnitude_rgb(img);
  std::vector<float> expected(64, 0.0f);
  for (std::size_t c = 0; c < 3; ++c) {
    const auto m = kb::sobel_magnitude(kb::extract_channel(img, c));
    for (std::size_t i = 0; i < 64; ++i) expected[i] = std::max(expected[i], m.samples()[i]);
  }
  EXPECT_EQ(std::vector<float>(combined.samples().begin(), combined.samples().end()),
            expected);
}

TEST(Sobel, InvariantUnderOffsetAndHomogeneous) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto img = kb::oracle::random_image(rng, 12, 10, 1);
    std::vector<float> shifted, scaled;
    const float offset = 0.3f, a = 2.5f;
    for (float v : img.samples()) {
      shifted.push_back(v + offset);
      scaled.push_back(a * v);
    }
    for (auto border : kBorders) {
      const auto base = kb::sobel_magnitude(img, border);
      const auto off = kb::sobel_magnitude(kb::with_samples(img, shifted), border);
      const auto mul = kb::sobel_magnitude(kb::with_samples(img, scaled), border);
      for (std::size_t y = 1; y + 1 < 10; ++y) {
        for (std::size_t x = 1; x + 1 < 12; ++x) {
          EXPECT_NEAR(off.at(x, y), base.at(x, y), 1e-5);
        }
      }
      for (std::size_t i = 0; i < base.samples().size(); ++i) {
        const double expected = a * base.samples()[i];
        EXPECT_NEAR(mul.samples()[i], expected, 1e-5 * std::max(1.0, expected));
      }
    }
  }
}

TEST(FreiChen, ConstantImageHasNoEdges) {
  for (auto subset : {kb::FreiChenSubset::Edge, kb::FreiChenSubset::Line,
                      kb::FreiChenSubset::EdgeAndLine}) {
    const auto out = kb::frei_chen(kb::ImageBuffer::filled(6, 6, 1, 0.6f), subset);
    for (float v : out.samples()) EXPECT_NEAR(v, 0.0f, 1e-3);
  }
  const auto edge = kb::frei_chen(kb::ImageBuffer::filled(6, 6, 1, 0.6f),
                                  kb::FreiChenSubset::Edge);
  // Interior response of the edge masks to a flat patch is float rounding
  // only; S = 9c^2 dominates.
  for (float v : edge.samples()) EXPECT_LT(v, 1e-3f);
}

TEST(FreiChen, BlackImageHitsGuard) {
  const auto out = kb::frei_chen(kb::ImageBuffer::filled(5, 5, 1, 0.0f),
                                 kb::FreiChenSubset::Edge);
  for (float v : out.samples()) EXPECT_EQ(v, 0.0f);
}

TEST(FreiChen, StepEdge) {
  const auto step = from_function(10, 6, [](auto x, auto) { return x >= 5 ? 1.0 : 0.0; });
  const auto out = kb::frei_chen(step, kb::FreiChenSubset::Edge);
  for (long y = 0; y < 6; ++y) {
    for (long x = 0; x < 10; ++x) {
      EXPECT_NEAR(out.at(x, y),
                  oracle_frei_chen(step, kb::BorderPolicy::ClampToEdge, 0, 4, x, y), 1e-6);
    }
  }
  for (std::size_t x : {4u, 5u}) {
    const float adjacent = out.at(x, 3);
    EXPECT_GT(adjacent, 0.0f);
    EXPECT_LE(adjacent, 1.0f);
    EXPECT_GT(adjacent, out.at(x - 2, 3) + 0.1f);
    EXPECT_GT(adjacent, out.at(x + 2, 3) + 0.1f);
  }
}

TEST(FreiChen, MatchesBruteForceForEverySubset) {
  std::mt19937 rng(12);
  const auto img = kb::oracle::random_image(rng, 9, 7, 1);
  const std::pair<kb::FreiChenSubset, std::pair<std::size_t, std::size_t>> cases[] = {
      {kb::FreiChenSubset::Edge, {0, 4}},
      {kb::FreiChenSubset::Line, {4, 8}},
      {kb::FreiChenSubset::EdgeAndLine, {0, 8}}};
  for (const auto& [subset, range] : cases) {
    for (auto border : kBorders) {
      const auto out = kb::frei_chen(img, subset, border);
      for (long y = 0; y < 7; ++y)
        for (long x = 0; x < 9; ++x)
          EXPECT_NEAR(out.at(x, y),
                      oracle_frei_chen(img, border, range.first, range.second, x, y), 1e-5);
    }
  }
}

TEST(FreiChen, BoundedAndScaleInvariant) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto img = kb::oracle::random_image(rng, 10, 10, 1);
    std::vector<float> scaled;
    for (float v : img.samples()) scaled.push_back(3.0f * v);
    const auto a = kb::frei_chen(img, kb::FreiChenSubset::EdgeAndLine);
    const auto b = kb::frei_chen(kb::with_samples(img, scaled), kb::FreiChenSubset::EdgeAndLine);
    for (std::size_t i = 0; i < a.samples().size(); ++i) {
      EXPECT_GE(a.samples()[i], 0.0f);
      EXPECT_LE(a.samples()[i], 1.0f);
      EXPECT_NEAR(a.samples()[i], b.samples()[i], 1e-5);
    }
  }
}

TEST(FreiChen, RejectsRgb) {
  EXPECT_THROW(kb::frei_chen(kb::ImageBuffer::filled(3, 3, 3, 0.0f), kb::FreiChenSubset::Edge),
               kb::FormatError);
}

TEST(Threshold, StrictComparison) {
  const kb::ImageBuffer img(3, 1, 1, {0.2f, 0.5f, 0.8f});
  const auto out = kb::threshold(img, 0.5f);
  EXPECT_EQ(std::vector<float>(out.samples().begin(), out.samples().end()),
            (std::vector<float>{0.0f, 0.0f, 1.0f}));
}

TEST(Threshold, OneGivesZerosOnUnitRangeInput) {
  std::mt19937 rng(14);
  const auto img = kb::oracle::random_image(rng, 8, 8, 1);
  const auto out = kb::threshold(img, 1.0f);
  for (float v : out.samples()) EXPECT_EQ(v, 0.0f);
}

TEST(Threshold, BinaryAndIdempotent) {
  std::mt19937 rng(15);
  for (float t : {0.0f, 0.1f, 0.5f, 0.9f}) {
    const auto img = kb::oracle::random_image(rng, 8, 8, 1, -0.5f, 1.5f);
    const auto once = kb::threshold(img, t);
    for (float v : once.samples()) EXPECT_TRUE(v == 0.0f || v == 1.0f);
    EXPECT_EQ(kb::threshold(once, 0.5f), once);
  }
}

TEST(Threshold, RangeAndFormatErrors) {
  const auto img = kb::ImageBuffer::filled(2, 2, 1, 0.5f);
  EXPECT_THROW(kb::threshold(img, -0.01f), kb::RangeError);
  EXPECT_THROW(kb::threshold(img, 1.5f), kb::RangeError);
  EXPECT_THROW(kb::threshold(img, std::nanf("")), kb::RangeError);
  EXPECT_THROW(kb::threshold(kb::ImageBuffer::filled(2, 2, 3, 0.5f), 0.5f), kb::FormatError);
}
