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

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "kernelbench/error.hpp"
#include "kernelbench/image.hpp"
#include "kernelbench/kernel.hpp"

namespace kernelbench {

enum class FreiChenSubset {
  Edge,         // G1..G4
  Line,         // G5..G8
  EdgeAndLine,  // G1..G8
};

namespace detail {

inline void require_gray(const ImageBuffer& image, const char* op) {
  if (image.channels() != 1) {
    throw FormatError(std::string(op) + " expects a single-channel image");
  }
}

}  // namespace detail

/// sqrt((Gx*I)^2 + (Gy*I)^2) per pixel, unnormalized and unclamped.
inline ImageBuffer sobel_magnitude(const ImageBuffer& image,
                                   BorderPolicy border = BorderPolicy::ClampToEdge) {
  detail::require_gray(image, "sobel_magnitude");
  const auto gx = correlate(image, presets::sobel_gx(), border, false);
  const auto gy = correlate(image, presets::sobel_gy(), border, false);
  const auto a = gx.samples();
  const auto b = gy.samples();
  std::vector<float> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::sqrt(a[i] * a[i] + b[i] * b[i]);
  }
  return with_samples(image, std::move(out));
}

/// Per-channel Sobel magnitude, combined with max over R, G, B.
inline ImageBuffer sobel_magnitude_rgb(const ImageBuffer& image,
                                       BorderPolicy border = BorderPolicy::ClampToEdge) {
  if (image.channels() != 3) {
    throw FormatError("sobel_magnitude_rgb expects an RGB image");
  }
  std::vector<float> out;
  for (std::size_t c = 0; c < 3; ++c) {
    auto mag = std::move(sobel_magnitude(extract_channel(image, c), border))
                   .release();
    if (c == 0) {
      out = std::move(mag);
    } else {
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = std::max(out[i], mag[i]);
      }
    }
  }
  return ImageBuffer(image.width(), image.height(), 1, std::move(out));
}

/// Below this total energy a pixel's Frei-Chen measure is defined as 0.
inline constexpr double kFreiChenEpsilon = 1e-12;

namespace detail {

inline std::pair<std::size_t, std::size_t> subset_range(FreiChenSubset subset) {
  switch (subset) {
    case FreiChenSubset::Edge: return {0, 4};
    case FreiChenSubset::Line: return {4, 8};
    case FreiChenSubset::EdgeAndLine: return {0, 8};
  }
  return {0, 8};
}

/// sqrt(M / S) from the nine mask responses of one image.
inline std::vector<float> frei_chen_combine(
    const std::array<std::vector<float>, 9>& responses, FreiChenSubset subset) {
  const auto [first, last] = subset_range(subset);
  const std::size_t n = responses[0].size();
  std::vector<float> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double subset_energy = 0.0;
    double total_energy = 0.0;
    for (std::size_t k = 0; k < 9; ++k) {
      const double r = responses[k][i];
      total_energy += r * r;
      if (k >= first && k < last) subset_energy += r * r;
    }
    if (total_energy < kFreiChenEpsilon) {
      out[i] = 0.0f;
    } else {
      out[i] = static_cast<float>(
          std::sqrt(std::min(1.0, subset_energy / total_energy)));
    }
  }
  return out;
}

}  // namespace detail

/// Projection of each 3x3 neighbourhood onto the chosen Frei-Chen subspace,
/// returned as the cosine sqrt(M / S): M is the energy in the subset's
/// masks, S the energy over all nine. Always in [0, 1].
inline ImageBuffer frei_chen(const ImageBuffer& image, FreiChenSubset subset,
                             BorderPolicy border = BorderPolicy::ClampToEdge) {
  detail::require_gray(image, "frei_chen");
  const auto basis = presets::frei_chen();
  std::array<std::vector<float>, 9> responses;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    responses[k] = std::move(correlate(image, basis[k], border, false)).release();
  }
  return with_samples(image, detail::frei_chen_combine(responses, subset));
}

/// 1 where the sample is strictly above `t`, else 0.
inline ImageBuffer threshold(const ImageBuffer& image, float t) {
  detail::require_gray(image, "threshold");
  if (!(t >= 0.0f && t <= 1.0f)) {
    throw RangeError("threshold must lie in [0, 1]");
  }
  const auto src = image.samples();
  std::vector<float> out(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    out[i] = src[i] > t ? 1.0f : 0.0f;
  }
  return with_samples(image, std::move(out));
}

}  // namespace kernelbench
