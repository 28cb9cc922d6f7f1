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

#include <cstdint>
#include <random>
#include <vector>

#include "kernelbench/image.hpp"
#include "oracle.hpp"

namespace kb = kernelbench;

TEST(ImageBuffer, RejectsBadShape) {
  EXPECT_THROW(kb::ImageBuffer(2, 2, 1, std::vector<float>(3)), kb::SizeError);
  EXPECT_THROW(kb::ImageBuffer(2, 2, 2, std::vector<float>(8)), kb::FormatError);
  EXPECT_THROW(kb::ImageBuffer(0, 2, 1, {}), kb::SizeError);
  EXPECT_NO_THROW(kb::ImageBuffer(2, 2, 3, std::vector<float>(12)));
}

TEST(DecodeBytes, GrayDividesBy255) {
  const std::vector<std::uint8_t> bytes = {0, 255, 128};
  const auto img = kb::decode_bytes(bytes, 3, 1, kb::PixelFormat::Gray8);
  ASSERT_EQ(img.channels(), 1u);
  EXPECT_EQ(img.samples()[0], 0.0f);
  EXPECT_EQ(img.samples()[1], 1.0f);
  EXPECT_EQ(img.samples()[2], 128.0f / 255.0f);
}

TEST(DecodeBytes, WhiteRgbPixel) {
  const std::vector<std::uint8_t> bytes = {255, 255, 255};
  const auto img = kb::decode_bytes(bytes, 1, 1, kb::PixelFormat::RGB24);
  EXPECT_EQ(img.channels(), 3u);
  for (float v : img.samples()) EXPECT_EQ(v, 1.0f);
}

TEST(DecodeBytes, LengthMismatch) {
  const std::vector<std::uint8_t> bytes = {1, 2};
  EXPECT_THROW(kb::decode_bytes(bytes, 3, 1, kb::PixelFormat::Gray8), kb::SizeError);
}

TEST(EncodeBytes, RoundsHalfAwayFromZero) {
  const kb::ImageBuffer img(1, 1, 1, {0.5f});
  EXPECT_EQ(kb::encode_bytes(img, kb::PixelFormat::Gray8),
            std::vector<std::uint8_t>{128});
}

TEST(EncodeBytes, Clamps) {
  const kb::ImageBuffer img(2, 1, 1, {-0.2f, 1.7f});
  EXPECT_EQ(kb::encode_bytes(img, kb::PixelFormat::Gray8),
            (std::vector<std::uint8_t>{0, 255}));
}

TEST(EncodeBytes, ChannelMismatch) {
  const kb::ImageBuffer img(1, 1, 3, {1.0f, 0.0f, 0.0f});
  EXPECT_THROW(kb::encode_bytes(img, kb::PixelFormat::Gray8), kb::FormatError);
}

TEST(EncodeBytes, DecodeEncodeRoundTripIsIdentity) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t w = 1 + rng() % 17, h = 1 + rng() % 9;
    const auto format = trial % 2 ? kb::PixelFormat::RGB24 : kb::PixelFormat::Gray8;
    std::vector<std::uint8_t> bytes(w * h * kb::channels_of(format));
    for (auto& b : bytes) b = static_cast<std::uint8_t>(byte(rng));
    const auto img = kb::decode_bytes(bytes, w, h, format);
    EXPECT_EQ(kb::encode_bytes(img, format), bytes);
  }
  // Every byte value individually.
  std::vector<std::uint8_t> all(256);
  for (int i = 0; i < 256; ++i) all[i] = static_cast<std::uint8_t>(i);
  EXPECT_EQ(kb::encode_bytes(kb::decode_bytes(all, 256, 1, kb::PixelFormat::Gray8),
                             kb::PixelFormat::Gray8),
            all);
}

TEST(ToLuminance, Rec601Weights) {
  const kb::ImageBuffer img(3, 1, 3, {1, 1, 1, 1, 0, 0, 0, 0, 0});
  const auto gray = kb::to_luminance(img);
  ASSERT_EQ(gray.channels(), 1u);
  EXPECT_FLOAT_EQ(gray.samples()[0], 1.0f);
  EXPECT_FLOAT_EQ(gray.samples()[1], 0.299f);
  EXPECT_EQ(gray.samples()[2], 0.0f);
}

TEST(ToLuminance, RejectsGray) {
  EXPECT_THROW(kb::to_luminance(kb::ImageBuffer::filled(2, 2, 1, 0.5f)),
               kb::FormatError);
}

TEST(ToLuminance, StaysInUnitRange) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto img = kb::oracle::random_image(rng, 13, 7, 3);
    const auto gray = kb::to_luminance(img);
    for (float v : gray.samples()) {
      EXPECT_GE(v, 0.0f);
      EXPECT_LE(v, 1.0f);
    }
  }
  const auto white = kb::to_luminance(kb::ImageBuffer::filled(4, 4, 3, 1.0f));
  for (float v : white.samples()) EXPECT_LE(v, 1.0f);
}
