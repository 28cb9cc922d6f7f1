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

// The two sensitivity sweeps: frame size and operator count.

#include <cstdlib>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "kernelbench/error.hpp"
#include "kernelbench/pipeline.hpp"

namespace kernelbench {

enum class Scenario { ResolutionSweep, OperatorSweep };

struct ScenarioRow {
  std::string label;
  RunReport report;

  friend bool operator==(const ScenarioRow&, const ScenarioRow&) = default;
};

struct ScenarioReport {
  static constexpr int kSchemaVersion = 1;

  Scenario scenario = Scenario::ResolutionSweep;
  Engine engine = Engine::Cpu;
  std::vector<ScenarioRow> rows;
  std::string host_note;
  int schema_version = kSchemaVersion;

  friend bool operator==(const ScenarioReport&, const ScenarioReport&) = default;
};

struct Resolution {
  std::size_t width;
  std::size_t height;
};

inline constexpr std::size_t kScenarioWarmupFrames = 5;
inline constexpr std::size_t kDefaultScenarioFrames = 120;
inline constexpr double kDefaultVsyncHz = 60.0;

inline const std::vector<Resolution>& sweep_resolutions() {
  static const std::vector<Resolution> r = {
      {320, 240}, {640, 480}, {1280, 720}, {1920, 1080}};
  return r;
}

inline const std::vector<std::size_t>& sweep_operator_counts() {
  static const std::vector<std::size_t> counts = {2, 10, 20, 50, 100, 500};
  return counts;
}

/// Normalized 3x3 box blur, the operator repeated in the operator sweep.
inline ChainPass smoothing_pass(std::size_t repeat) {
  return ChainPass{Kernel::box(3), true, repeat};
}

/// KERNELBENCH_VSYNC if set to a positive number, else 60.
inline double default_vsync_hz() {
  if (const char* env = std::getenv("KERNELBENCH_VSYNC")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0) return v;
  }
  return kDefaultVsyncHz;
}

inline std::string host_note() {
  std::string note = "threads=" + std::to_string(std::thread::hardware_concurrency());
#if defined(__clang__)
  note += "; compiler=clang " __clang_version__;
#elif defined(__GNUC__)
  note += "; compiler=gcc " __VERSION__;
#endif
  note += "; first " + std::to_string(kScenarioWarmupFrames) +
          " frames of every row discarded as warm-up";
  return note;
}

inline std::string resolution_label(const Resolution& r) {
  return std::to_string(r.width) + "x" + std::to_string(r.height);
}

/// Sobel (on luminance) over synthetic frames at each sweep resolution.
inline ScenarioReport scenario_resolutions(Engine engine,
                                           std::size_t frames = kDefaultScenarioFrames,
                                           double vsync_hz = kDefaultVsyncHz) {
  ScenarioReport report;
  report.scenario = Scenario::ResolutionSweep;
  report.engine = engine;
  report.host_note = host_note();
  for (const auto& res : sweep_resolutions()) {
    FrameSource source = SyntheticSource{res.width, res.height,
                                         SyntheticPattern::MovingGradient, 0};
    RunOptions options{frames, vsync_hz, engine, kScenarioWarmupFrames};
    report.rows.push_back(
        {resolution_label(res), run(source, SobelOp{}, options)});
  }
  return report;
}

/// The smoothing pass repeated 2..500 times on frames of one size.
inline ScenarioReport scenario_operators(Engine engine,
                                         std::size_t frames = kDefaultScenarioFrames,
                                         double vsync_hz = kDefaultVsyncHz,
                                         Resolution resolution = {320, 240}) {
  ScenarioReport report;
  report.scenario = Scenario::OperatorSweep;
  report.engine = engine;
  report.host_note = host_note() + "; resolution=" + resolution_label(resolution);
  for (const std::size_t count : sweep_operator_counts()) {
    FrameSource source = SyntheticSource{resolution.width, resolution.height,
                                         SyntheticPattern::MovingGradient, 0};
    RunOptions options{frames, vsync_hz, engine, kScenarioWarmupFrames};
    const Operator op = ChainSpec{{smoothing_pass(count)}};
    report.rows.push_back({std::to_string(count), run(source, op, options)});
  }
  return report;
}

}  // namespace kernelbench
