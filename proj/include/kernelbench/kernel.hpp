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
#include <cstddef>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "kernelbench/error.hpp"
#include "kernelbench/image.hpp"

namespace kernelbench {

/// Odd-sided square coefficient matrix, row-major. Entry (row, col) weighs
/// the neighbour at offset (col - side/2, row - side/2) from the output
/// pixel: the kernel is applied as written, never flipped.
class Kernel {
 public:
  Kernel(std::size_t side, std::vector<float> coefficients)
      : side_(side), coefficients_(std::move(coefficients)) {
    if (side_ < 1 || side_ % 2 == 0) {
      throw RangeError("kernel side must be odd and >= 1, got " +
                       std::to_string(side_));
    }
    if (coefficients_.size() != side_ * side_) {
      throw SizeError("kernel of side " + std::to_string(side_) + " needs " +
                      std::to_string(side_ * side_) + " coefficients, got " +
                      std::to_string(coefficients_.size()));
    }
  }

  /// 3x3 kernel from nine row-major values scaled by `factor`.
  static Kernel scaled3(double factor, const std::array<double, 9>& entries) {
    std::vector<float> c(9);
    for (std::size_t i = 0; i < 9; ++i) {
      c[i] = static_cast<float>(factor * entries[i]);
    }
    return Kernel(3, std::move(c));
  }

  static Kernel identity(std::size_t side = 3) {
    std::vector<float> c(side * side, 0.0f);
    if (side % 2 == 1) c[(side * side) / 2] = 1.0f;
    return Kernel(side, std::move(c));
  }

  static Kernel box(std::size_t side = 3) {
    return Kernel(side, std::vector<float>(side * side, 1.0f));
  }

  std::size_t side() const noexcept { return side_; }
  std::size_t radius() const noexcept { return side_ / 2; }
  std::span<const float> coefficients() const noexcept { return coefficients_; }
  float operator()(std::size_t row, std::size_t col) const {
    return coefficients_[row * side_ + col];
  }

  /// Sum of coefficients in row-major order, in float, as a shader would.
  float weight() const noexcept {
    float w = 0.0f;
    for (float v : coefficients_) w += v;
    return w;
  }

  /// Divisor used when normalizing: the weight, or 1 for non-positive sums.
  float normalizer() const noexcept {
    const float w = weight();
    return w <= 0.0f ? 1.0f : w;
  }

  /// Embeds this kernel at the centre of a larger zero kernel.
  Kernel padded_to(std::size_t side) const {
    if (side < side_ || side % 2 == 0) {
      throw RangeError("cannot pad kernel to side " + std::to_string(side));
    }
    std::vector<float> c(side * side, 0.0f);
    const std::size_t off = (side - side_) / 2;
    for (std::size_t r = 0; r < side_; ++r) {
      for (std::size_t col = 0; col < side_; ++col) {
        c[(r + off) * side + col + off] = (*this)(r, col);
      }
    }
    return Kernel(side, std::move(c));
  }

  friend bool operator==(const Kernel&, const Kernel&) = default;

 private:
  std::size_t side_;
  std::vector<float> coefficients_;
};

enum class BorderPolicy {
  ClampToEdge,  // replicate nearest valid pixel, like a GL clamp sampler
  ZeroPad,
};

namespace presets {

// Names follow the published masks. Note SOBEL_GX responds to variation
// along y (rows) and SOBEL_GY to variation along x; the magnitude is the
// same either way.
inline Kernel sobel_gx() {
  return Kernel::scaled3(1.0, {-1, -2, -1, 0, 0, 0, 1, 2, 1});
}

inline Kernel sobel_gy() {
  return Kernel::scaled3(1.0, {-1, 0, 1, -2, 0, 2, -1, 0, 1});
}

/// The nine Frei-Chen masks G1..G9 (index 0..8). G1-G4 span edges,
/// G5-G8 lines, G9 the mean.
inline std::array<Kernel, 9> frei_chen() {
  const double r2 = std::sqrt(2.0);
  const double edge = 1.0 / (2.0 * r2);
  return {
      Kernel::scaled3(edge, {1, r2, 1, 0, 0, 0, -1, -r2, -1}),
      Kernel::scaled3(edge, {1, 0, -1, r2, 0, -r2, 1, 0, -1}),
      Kernel::scaled3(edge, {0, -1, r2, 1, 0, -1, -r2, 1, 0}),
      Kernel::scaled3(edge, {r2, -1, 0, -1, 0, 1, 0, 1, -r2}),
      Kernel::scaled3(0.5, {0, 1, 0, -1, 0, -1, 0, 1, 0}),
      Kernel::scaled3(0.5, {-1, 0, 1, 0, 0, 0, 1, 0, -1}),
      Kernel::scaled3(1.0 / 6.0, {1, -2, 1, -2, 4, -2, 1, -2, 1}),
      Kernel::scaled3(1.0 / 6.0, {-2, 1, -2, 1, 4, 1, -2, 1, -2}),
      Kernel::scaled3(1.0 / 3.0, {1, 1, 1, 1, 1, 1, 1, 1, 1}),
  };
}

}  // namespace presets

namespace detail {

inline std::size_t clamp_index(std::ptrdiff_t i, std::size_t n) noexcept {
  if (i < 0) return 0;
  if (i >= static_cast<std::ptrdiff_t>(n)) return n - 1;
  return static_cast<std::size_t>(i);
}

/// Correlates `src` (width x height x channels) into `dst`, which must not
/// alias `src`. Each output sample accumulates its taps in row-major kernel
/// order in double precision, starting from 0, is divided by the normalizer
/// if requested, and is rounded to float once. Products of float samples
/// and coefficients are exact in double, so a zero-sum kernel with small
/// integer coefficients yields exactly 0 on a flat neighbourhood.
/// Every public entry point goes through here, so results are bit-identical
/// regardless of which one produced them.
inline void correlate_into(std::span<const float> src, std::size_t width,
                           std::size_t height, std::size_t channels,
                           const Kernel& kernel, BorderPolicy border,
                           bool normalize, std::span<float> dst) {
  const std::size_t side = kernel.side();
  const auto r = static_cast<std::ptrdiff_t>(kernel.radius());
  const auto w = static_cast<std::ptrdiff_t>(width);
  const auto c = static_cast<std::ptrdiff_t>(channels);
  const std::size_t row_len = width * channels;
  const auto coef = kernel.coefficients();
  const double divisor = normalize ? kernel.normalizer() : 1.0;
  std::vector<double> acc(row_len);

  for (std::size_t y = 0; y < height; ++y) {
    std::fill(acc.begin(), acc.end(), 0.0);
    for (std::size_t ky = 0; ky < side; ++ky) {
      const std::ptrdiff_t sy = static_cast<std::ptrdiff_t>(y + ky) - r;
      const bool row_inside = sy >= 0 && sy < static_cast<std::ptrdiff_t>(height);
      if (!row_inside && border == BorderPolicy::ZeroPad) continue;
      const float* srow = src.data() + clamp_index(sy, height) * row_len;
      for (std::size_t kx = 0; kx < side; ++kx) {
        const double k = coef[ky * side + kx];
        const std::ptrdiff_t dx = static_cast<std::ptrdiff_t>(kx) - r;
        // Columns whose tap lands inside the row.
        const std::ptrdiff_t lo = std::clamp<std::ptrdiff_t>(-dx, 0, w);
        const std::ptrdiff_t hi = std::clamp<std::ptrdiff_t>(w - dx, lo, w);
        const std::ptrdiff_t shift = dx * c;
        for (std::ptrdiff_t i = lo * c, end = hi * c; i < end; ++i) {
          acc[i] += k * srow[i + shift];
        }
        if (border == BorderPolicy::ClampToEdge) {
          const float* last = srow + (width - 1) * channels;
          for (std::ptrdiff_t x = 0; x < lo; ++x) {
            for (std::ptrdiff_t ch = 0; ch < c; ++ch) acc[x * c + ch] += k * srow[ch];
          }
          for (std::ptrdiff_t x = hi; x < w; ++x) {
            for (std::ptrdiff_t ch = 0; ch < c; ++ch) acc[x * c + ch] += k * last[ch];
          }
        }
      }
    }
    float* out = dst.data() + y * row_len;
    if (normalize) {
      for (std::size_t i = 0; i < row_len; ++i) {
        out[i] = static_cast<float>(acc[i] / divisor);
      }
    } else {
      for (std::size_t i = 0; i < row_len; ++i) out[i] = static_cast<float>(acc[i]);
    }
  }
}

}  // namespace detail

/// Applies `kernel` to every pixel and channel without flipping it:
/// out(x,y) = sum over (row,col) of kernel(row,col) * in(x+col-r, y+row-r).
/// With `normalize`, the sum is divided by the kernel weight (or by 1 when
/// the weight is not positive). Output has the input's dimensions.
inline ImageBuffer correlate(const ImageBuffer& image, const Kernel& kernel,
                             BorderPolicy border = BorderPolicy::ClampToEdge,
                             bool normalize = false) {
  std::vector<float> out(image.samples().size());
  detail::correlate_into(image.samples(), image.width(), image.height(),
                         image.channels(), kernel, border, normalize, out);
  return with_samples(image, std::move(out));
}

/// Kernel K with correlate(correlate(I, first), second) == correlate(I, K)
/// away from the borders. K has side first.side() + second.side() - 1 and
/// K[c] = sum over a + b = c of first[a] * second[b] (offsets add).
inline Kernel compose(const Kernel& first, const Kernel& second) {
  const std::size_t s1 = first.side();
  const std::size_t s2 = second.side();
  const std::size_t side = s1 + s2 - 1;
  std::vector<double> acc(side * side, 0.0);
  for (std::size_t ay = 0; ay < s1; ++ay) {
    for (std::size_t ax = 0; ax < s1; ++ax) {
      const double a = first(ay, ax);
      for (std::size_t by = 0; by < s2; ++by) {
        for (std::size_t bx = 0; bx < s2; ++bx) {
          acc[(ay + by) * side + ax + bx] += a * second(by, bx);
        }
      }
    }
  }
  return Kernel(side, std::vector<float>(acc.begin(), acc.end()));
}

/// Parses "<side> c0 c1 ..." (whitespace separated, row-major).
inline Kernel parse_kernel(const std::string& text) {
  std::istringstream in(text);
  long long side = 0;
  if (!(in >> side)) throw RangeError("kernel text must start with its side");
  if (side < 1 || side % 2 == 0 || side > 99) {
    throw RangeError("kernel side must be odd and in [1, 99]");
  }
  std::vector<float> coefficients;
  float v = 0.0f;
  while (in >> v) coefficients.push_back(v);
  if (!in.eof()) throw RangeError("kernel text contains a non-number");
  return Kernel(static_cast<std::size_t>(side), std::move(coefficients));
}

inline std::string format_kernel(const Kernel& kernel) {
  std::ostringstream out;
  out << kernel.side();
  out.precision(9);
  for (float v : kernel.coefficients()) out << ' ' << v;
  return out.str();
}

}  // namespace kernelbench
