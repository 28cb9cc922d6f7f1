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

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kernelbench/error.hpp"

namespace kernelbench {

enum class PixelFormat { Gray8, RGB24 };

constexpr std::size_t channels_of(PixelFormat format) noexcept {
  return format == PixelFormat::Gray8 ? 1 : 3;
}

/// Row-major, channel-interleaved float samples. Values are nominally in
/// [0,1] but nothing clamps them until the image is encoded back to bytes,
/// so intermediate detector responses (a Sobel magnitude can reach ~5.7)
/// survive a chain untouched.
class ImageBuffer {
 public:
  ImageBuffer(std::size_t width, std::size_t height, std::size_t channels,
              std::vector<float> samples)
      : width_(width), height_(height), channels_(channels),
        samples_(std::move(samples)) {
    if (width_ < 1 || height_ < 1) {
      throw SizeError("image dimensions must be at least 1x1");
    }
    if (channels_ != 1 && channels_ != 3) {
      throw FormatError("image must have 1 or 3 channels, got " +
                        std::to_string(channels_));
    }
    if (samples_.size() != width_ * height_ * channels_) {
      throw SizeError("sample count " + std::to_string(samples_.size()) +
                      " does not match " + std::to_string(width_) + "x" +
                      std::to_string(height_) + "x" +
                      std::to_string(channels_));
    }
  }

  /// Image filled with a single value.
  static ImageBuffer filled(std::size_t width, std::size_t height,
                            std::size_t channels, float value) {
    return ImageBuffer(width, height, channels,
                       std::vector<float>(width * height * channels, value));
  }

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t channels() const noexcept { return channels_; }
  std::size_t pixel_count() const noexcept { return width_ * height_; }
  std::span<const float> samples() const& noexcept { return samples_; }
  // A span into a temporary would dangle, e.g. in a range-for.
  std::span<const float> samples() const&& = delete;

  float at(std::size_t x, std::size_t y, std::size_t c = 0) const {
    return samples_[(y * width_ + x) * channels_ + c];
  }

  /// Moves the storage out; the buffer is left empty and must not be reused.
  std::vector<float> release() && { return std::move(samples_); }

  friend bool operator==(const ImageBuffer&, const ImageBuffer&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::size_t channels_;
  std::vector<float> samples_;
};

/// Same shape as `like`, different samples.
inline ImageBuffer with_samples(const ImageBuffer& like,
                                std::vector<float> samples) {
  return ImageBuffer(like.width(), like.height(), like.channels(),
                     std::move(samples));
}

/// Each sample becomes byte / 255.
inline ImageBuffer decode_bytes(std::span<const std::uint8_t> bytes,
                                std::size_t width, std::size_t height,
                                PixelFormat format) {
  const std::size_t channels = channels_of(format);
  if (bytes.size() != width * height * channels) {
    throw SizeError("expected " + std::to_string(width * height * channels) +
                    " bytes for " + std::to_string(width) + "x" +
                    std::to_string(height) + ", got " +
                    std::to_string(bytes.size()));
  }
  std::vector<float> samples(bytes.size());
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    samples[i] = static_cast<float>(bytes[i]) / 255.0f;
  }
  return ImageBuffer(width, height, channels, std::move(samples));
}

/// Clamp to [0,1], scale by 255, round half away from zero.
inline std::uint8_t encode_sample(float sample) noexcept {
  if (!(sample > 0.0f)) return 0;  // also maps NaN to 0
  if (sample >= 1.0f) return 255;
  return static_cast<std::uint8_t>(std::lround(sample * 255.0f));
}

inline std::vector<std::uint8_t> encode_bytes(const ImageBuffer& image,
                                              PixelFormat format) {
  if (image.channels() != channels_of(format)) {
    throw FormatError("image has " + std::to_string(image.channels()) +
                      " channels, format expects " +
                      std::to_string(channels_of(format)));
  }
  const auto samples = image.samples();
  std::vector<std::uint8_t> bytes(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    bytes[i] = encode_sample(samples[i]);
  }
  return bytes;
}

inline PixelFormat format_of(const ImageBuffer& image) noexcept {
  return image.channels() == 1 ? PixelFormat::Gray8 : PixelFormat::RGB24;
}

// Rec. 601 luma weights.
inline constexpr double kLumaR = 0.299;
inline constexpr double kLumaG = 0.587;
inline constexpr double kLumaB = 0.114;

inline ImageBuffer to_luminance(const ImageBuffer& image) {
  if (image.channels() != 3) {
    throw FormatError("to_luminance expects an RGB image");
  }
  const auto src = image.samples();
  std::vector<float> gray(image.pixel_count());
  for (std::size_t i = 0; i < gray.size(); ++i) {
    gray[i] = static_cast<float>(kLumaR * src[3 * i] +
                                 kLumaG * src[3 * i + 1] +
                                 kLumaB * src[3 * i + 2]);
  }
  return ImageBuffer(image.width(), image.height(), 1, std::move(gray));
}

/// Splits out one channel as a gray image.
inline ImageBuffer extract_channel(const ImageBuffer& image,
                                   std::size_t channel) {
  if (channel >= image.channels()) {
    throw FormatError("channel index out of range");
  }
  const auto src = image.samples();
  const std::size_t stride = image.channels();
  std::vector<float> out(image.pixel_count());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = src[i * stride + channel];
  }
  return ImageBuffer(image.width(), image.height(), 1, std::move(out));
}

}  // namespace kernelbench
