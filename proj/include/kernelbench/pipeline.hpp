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
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "kernelbench/clock.hpp"
#include "kernelbench/detectors.hpp"
#include "kernelbench/error.hpp"
#include "kernelbench/image.hpp"
#include "kernelbench/kernel.hpp"
#include "kernelbench/shadergen.hpp"

namespace kernelbench {

enum class SyntheticPattern {
  // R, G and B ramps drifting by 4, 2 and 1 levels per frame; repeats every
  // 256 frames.
  MovingGradient,
  // Two seed-derived colours in 16-pixel cells, scrolling right one pixel
  // per frame; repeats every 32 frames.
  Checkerboard,
};

inline constexpr std::size_t kGradientCycle = 256;
inline constexpr std::size_t kCheckerCell = 16;
inline constexpr std::size_t kCheckerCycle = 2 * kCheckerCell;

struct SyntheticSource {
  std::size_t width = 640;
  std::size_t height = 480;
  SyntheticPattern pattern = SyntheticPattern::MovingGradient;
  std::uint64_t seed = 0;
};

/// Headerless concatenated RGB24 frames, row-major, top-left origin.
class RawStreamSource {
 public:
  RawStreamSource(std::filesystem::path path, std::size_t width,
                  std::size_t height)
      : path_(std::move(path)), width_(width), height_(height),
        in_(std::make_unique<std::ifstream>(path_, std::ios::binary)) {
    if (width_ < 1 || height_ < 1) throw SizeError("raw stream needs W, H >= 1");
    if (!*in_) throw IoError("cannot open " + path_.string());
    std::error_code ec;
    const auto size = std::filesystem::file_size(path_, ec);
    if (ec) throw IoError("cannot stat " + path_.string());
    if (size % frame_bytes() != 0) {
      throw SizeError(path_.string() + ": length " + std::to_string(size) +
                      " is not a multiple of the " +
                      std::to_string(frame_bytes()) + "-byte frame size");
    }
    frame_count_ = static_cast<std::size_t>(size / frame_bytes());
  }

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t frame_count() const noexcept { return frame_count_; }
  std::size_t frame_bytes() const noexcept { return width_ * height_ * 3; }

  std::vector<std::uint8_t> read_frame(std::size_t index) {
    if (index >= frame_count_) {
      throw EndOfStream("frame " + std::to_string(index) + " is past the end (" +
                        std::to_string(frame_count_) + " frames)");
    }
    std::vector<std::uint8_t> bytes(frame_bytes());
    in_->clear();
    in_->seekg(static_cast<std::streamoff>(index * frame_bytes()));
    in_->read(reinterpret_cast<char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!*in_) throw IoError("short read from " + path_.string());
    return bytes;
  }

 private:
  std::filesystem::path path_;
  std::size_t width_;
  std::size_t height_;
  std::size_t frame_count_ = 0;
  std::unique_ptr<std::ifstream> in_;
};

using FrameSource = std::variant<SyntheticSource, RawStreamSource>;

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::vector<std::uint8_t> synthesize(const SyntheticSource& s,
                                            std::size_t index) {
  if (s.width < 1 || s.height < 1) throw SizeError("synthetic source needs W, H >= 1");
  std::vector<std::uint8_t> bytes(s.width * s.height * 3);
  std::uint8_t* p = bytes.data();
  if (s.pattern == SyntheticPattern::MovingGradient) {
    const std::uint64_t base = splitmix64(s.seed);
    const auto r0 = static_cast<std::size_t>(base & 0xff) + 4 * index;
    const auto g0 = static_cast<std::size_t>((base >> 8) & 0xff) + 2 * index;
    const auto b0 = static_cast<std::size_t>((base >> 16) & 0xff) + index;
    for (std::size_t y = 0; y < s.height; ++y) {
      for (std::size_t x = 0; x < s.width; ++x) {
        *p++ = static_cast<std::uint8_t>((x + r0) & 0xff);
        *p++ = static_cast<std::uint8_t>((y + g0) & 0xff);
        *p++ = static_cast<std::uint8_t>(((x + y) / 2 + b0) & 0xff);
      }
    }
  } else {
    const std::uint64_t a = splitmix64(s.seed);
    const std::uint64_t b = splitmix64(a);
    const std::array<std::uint8_t, 3> colors[2] = {
        {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(a >> 8),
         static_cast<std::uint8_t>(a >> 16)},
        {static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(b >> 8),
         static_cast<std::uint8_t>(b >> 16)}};
    const std::size_t shift = index % kCheckerCycle;
    for (std::size_t y = 0; y < s.height; ++y) {
      for (std::size_t x = 0; x < s.width; ++x) {
        // x + cycle - shift keeps the scroll direction rightward.
        const std::size_t cx = (x + kCheckerCycle - shift) / kCheckerCell;
        const auto& c = colors[(cx + y / kCheckerCell) & 1];
        *p++ = c[0];
        *p++ = c[1];
        *p++ = c[2];
      }
    }
  }
  return bytes;
}

}  // namespace detail

/// Frame `index` of the source, staged as float samples. Synthetic frames
/// depend only on (pattern, seed, index, dimensions).
inline ImageBuffer next_frame(FrameSource& source, std::size_t index) {
  return std::visit(
      [index](auto& s) -> ImageBuffer {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SyntheticSource>) {
          return decode_bytes(detail::synthesize(s, index), s.width, s.height,
                              PixelFormat::RGB24);
        } else {
          return decode_bytes(s.read_frame(index), s.width(), s.height(),
                              PixelFormat::RGB24);
        }
      },
      source);
}

// Detector workloads a run can execute besides plain chains.
struct SobelOp {
  bool per_channel = false;  // max-combined RGB instead of luminance
};

struct FreiChenOp {
  FreiChenSubset subset = FreiChenSubset::Edge;
};

using Operator = std::variant<ChainSpec, SobelOp, FreiChenOp>;

enum class Engine {
  Cpu,             // direct correlate()/detector calls, one buffer per pass
  ChainReference,  // shader-equivalent chain executor
};

namespace detail {

inline ImageBuffer gray_input(const ImageBuffer& frame) {
  return frame.channels() == 3 ? to_luminance(frame) : frame;
}

inline ImageBuffer single_kernel_chain(const ImageBuffer& image,
                                       const Kernel& k) {
  return execute_chain_reference(image, ChainSpec{{ChainPass{k, false, 1}}});
}

inline ImageBuffer apply_cpu(const ImageBuffer& frame, const Operator& op) {
  if (const auto* chain = std::get_if<ChainSpec>(&op)) {
    if (chain->passes.empty()) throw EmptyChain("chain has no passes");
    ImageBuffer current = frame;
    for (const auto& pass : chain->passes) {
      for (std::size_t r = 0; r < pass.repeat; ++r) {
        current = correlate(current, pass.kernel, BorderPolicy::ClampToEdge,
                            pass.normalize);
      }
    }
    return current;
  }
  if (const auto* sobel = std::get_if<SobelOp>(&op)) {
    if (sobel->per_channel && frame.channels() == 3) {
      return sobel_magnitude_rgb(frame);
    }
    return sobel_magnitude(gray_input(frame));
  }
  return frei_chen(gray_input(frame), std::get<FreiChenOp>(op).subset);
}

inline ImageBuffer apply_chain_reference(const ImageBuffer& frame,
                                         const Operator& op) {
  if (const auto* chain = std::get_if<ChainSpec>(&op)) {
    return execute_chain_reference(frame, *chain);
  }
  if (const auto* sobel = std::get_if<SobelOp>(&op)) {
    const ImageBuffer input =
        sobel->per_channel && frame.channels() == 3 ? frame : gray_input(frame);
    const auto gx = single_kernel_chain(input, presets::sobel_gx());
    const auto gy = single_kernel_chain(input, presets::sobel_gy());
    const auto a = gx.samples();
    const auto b = gy.samples();
    const std::size_t c = input.channels();
    std::vector<float> out(input.pixel_count(), 0.0f);
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t ch = 0; ch < c; ++ch) {
        const std::size_t j = i * c + ch;
        out[i] = std::max(out[i], std::sqrt(a[j] * a[j] + b[j] * b[j]));
      }
    }
    return ImageBuffer(input.width(), input.height(), 1, std::move(out));
  }
  const auto gray = gray_input(frame);
  const auto basis = presets::frei_chen();
  std::array<std::vector<float>, 9> responses;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    responses[k] = std::move(single_kernel_chain(gray, basis[k])).release();
  }
  return with_samples(
      gray, frei_chen_combine(responses, std::get<FreiChenOp>(op).subset));
}

}  // namespace detail

/// Runs one operator on one frame with the chosen engine.
inline ImageBuffer apply_operator(const ImageBuffer& frame, const Operator& op,
                                  Engine engine) {
  return engine == Engine::Cpu ? detail::apply_cpu(frame, op)
                               : detail::apply_chain_reference(frame, op);
}

struct FrameStats {
  double acquisition_ms = 0.0;
  double processing_ms = 0.0;

  friend bool operator==(const FrameStats&, const FrameStats&) = default;
};

struct RunReport {
  std::size_t frame_count = 0;
  std::size_t warmup_frames = 0;  // executed but excluded from per_frame
  bool partial = false;           // source ended before the requested count
  std::vector<FrameStats> per_frame;
  double mean_acquisition_ms = 0.0;
  double mean_processing_ms = 0.0;
  double p50_processing_ms = 0.0;
  double p95_processing_ms = 0.0;
  double fps_uncapped = 0.0;
  double fps_capped = 0.0;
  double vsync_hz = 60.0;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

// Floor for the mean frame time so that fps stays finite; one nanosecond.
inline constexpr double kMinFrameMs = 1e-6;

/// Nearest-rank percentile: the ceil(p/100 * n)-th smallest value.
inline double nearest_rank(std::vector<double> values, double percent) {
  if (values.empty()) throw SizeError("percentile of an empty sample");
  std::sort(values.begin(), values.end());
  const auto n = static_cast<double>(values.size());
  auto rank = static_cast<std::size_t>(std::ceil(percent / 100.0 * n));
  rank = std::clamp<std::size_t>(rank, 1, values.size());
  return values[rank - 1];
}

/// Fills every aggregate of a report from its per-frame list.
inline RunReport summarize(std::vector<FrameStats> per_frame, double vsync_hz) {
  if (per_frame.empty()) throw SizeError("cannot summarize zero frames");
  if (!(vsync_hz > 0.0)) throw RangeError("vsync_hz must be positive");
  RunReport report;
  report.frame_count = per_frame.size();
  report.vsync_hz = vsync_hz;
  double acq = 0.0;
  double proc = 0.0;
  std::vector<double> processing;
  processing.reserve(per_frame.size());
  for (const auto& f : per_frame) {
    acq += f.acquisition_ms;
    proc += f.processing_ms;
    processing.push_back(f.processing_ms);
  }
  const auto n = static_cast<double>(per_frame.size());
  report.mean_acquisition_ms = acq / n;
  report.mean_processing_ms = proc / n;
  report.p50_processing_ms = nearest_rank(processing, 50.0);
  report.p95_processing_ms = nearest_rank(processing, 95.0);
  const double frame_ms =
      std::max(kMinFrameMs, report.mean_acquisition_ms + report.mean_processing_ms);
  report.fps_uncapped = 1000.0 / frame_ms;
  report.fps_capped = std::min(vsync_hz, report.fps_uncapped);
  report.per_frame = std::move(per_frame);
  return report;
}

struct RunOptions {
  std::size_t frames = 120;
  double vsync_hz = 60.0;
  Engine engine = Engine::Cpu;
  std::size_t warmup = 0;
};

/// The display loop: per frame, acquisition (fetch and stage into floats)
/// and processing (operator execution) are timed separately.
inline RunReport run(FrameSource& source, const Operator& op,
                     const RunOptions& options) {
  if (options.frames < 1) throw RangeError("frames must be >= 1");
  if (!(options.vsync_hz > 0.0)) throw RangeError("vsync_hz must be positive");
  std::vector<FrameStats> stats;
  stats.reserve(options.frames);
  bool partial = false;
  volatile float sink = 0.0f;
  const std::size_t total = options.warmup + options.frames;
  for (std::size_t i = 0; i < total; ++i) {
    const Timestamp t0 = now();
    std::optional<ImageBuffer> frame;
    try {
      frame.emplace(next_frame(source, i));
    } catch (const EndOfStream&) {
      partial = true;
      break;
    }
    const Timestamp t1 = now();
    const ImageBuffer out = apply_operator(*frame, op, options.engine);
    const Timestamp t2 = now();
    sink = out.samples()[0];
    if (i >= options.warmup) {
      stats.push_back({elapsed_ms(t0, t1), elapsed_ms(t1, t2)});
    }
  }
  (void)sink;
  if (stats.empty()) {
    throw EndOfStream("source ended before any measured frame");
  }
  RunReport report = summarize(std::move(stats), options.vsync_hz);
  report.warmup_frames = options.warmup;
  report.partial = partial;
  return report;
}

}  // namespace kernelbench
