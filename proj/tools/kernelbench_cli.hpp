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

// kernelbench command line. Exit codes: 0 success, 1 runtime or I/O
// failure, 2 usage error.

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kernelbench/kernelbench.hpp"
#include "kernelbench/report_json.hpp"

namespace kernelbench::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Bad argument value detected after CLI11 parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Either "<side> c0 c1 ..." or a preset name.
inline Kernel kernel_from_arg(const std::string& spec) {
  static const std::map<std::string, int> frei_chen_names = {
      {"freichen-1", 0}, {"freichen-2", 1}, {"freichen-3", 2},
      {"freichen-4", 3}, {"freichen-5", 4}, {"freichen-6", 5},
      {"freichen-7", 6}, {"freichen-8", 7}, {"freichen-9", 8}};
  if (spec == "identity") return Kernel::identity(3);
  if (spec == "box3") return Kernel::box(3);
  if (spec == "sobel-gx") return presets::sobel_gx();
  if (spec == "sobel-gy") return presets::sobel_gy();
  if (auto it = frei_chen_names.find(spec); it != frei_chen_names.end()) {
    return presets::frei_chen()[static_cast<std::size_t>(it->second)];
  }
  try {
    return parse_kernel(spec);
  } catch (const Error& e) {
    throw UsageError("bad --kernel '" + spec + "': " + e.what());
  }
}

inline void print_table(std::ostream& out, const ScenarioReport& report) {
  out << (report.scenario == Scenario::ResolutionSweep ? "resolution sweep"
                                                       : "operator sweep")
      << " (" << (report.engine == Engine::Cpu ? "cpu" : "chainref")
      << " engine)\n";
  out << std::left << std::setw(11) << "row" << std::right << std::setw(8)
      << "frames" << std::setw(11) << "acq ms" << std::setw(11) << "proc ms"
      << std::setw(11) << "p50 ms" << std::setw(11) << "p95 ms"
      << std::setw(11) << "fps" << std::setw(11) << "fps@vsync" << "\n";
  out << std::fixed << std::setprecision(3);
  for (const auto& row : report.rows) {
    const auto& r = row.report;
    out << std::left << std::setw(11) << row.label << std::right
        << std::setw(8) << r.frame_count << std::setw(11)
        << r.mean_acquisition_ms << std::setw(11) << r.mean_processing_ms
        << std::setw(11) << r.p50_processing_ms << std::setw(11)
        << r.p95_processing_ms << std::setw(11) << r.fps_uncapped
        << std::setw(11) << r.fps_capped << "\n";
  }
  out.unsetf(std::ios::floatfield);
  out << report.host_note << "\n";
}

inline ImageBuffer binarize(const ImageBuffer& image,
                            const std::optional<float>& t) {
  if (!t) return image;
  if (!(*t >= 0.0f && *t <= 1.0f)) {
    throw UsageError("--threshold must lie in [0, 1]");
  }
  return threshold(image, *t);
}

/// Runs the CLI on `args` (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Kernel convolution, edge detection, shader generation and "
               "frame-pipeline benchmarks"};
  app.name("kernelbench");
  app.require_subcommand(1);

  std::string in_path, out_path, border = "clamp", subset = "edge";
  std::vector<std::string> kernel_specs;
  bool normalize = false;
  bool per_channel = false;
  std::optional<float> threshold_value;
  std::size_t repeat = 1;

  auto* convolve = app.add_subcommand("convolve", "correlate an image with a kernel");
  convolve->add_option("--in", in_path, "input PGM/PPM")->required();
  convolve->add_option("--out", out_path, "output PGM/PPM")->required();
  convolve->add_option("--kernel", kernel_specs,
                       "\"<side> c0 c1 ...\" or identity|box3|sobel-gx|sobel-gy|freichen-N")
      ->required()->expected(1);
  convolve->add_flag("--normalize", normalize, "divide by the kernel weight");
  convolve->add_option("--border", border, "clamp|zero")
      ->check(CLI::IsMember({"clamp", "zero"}));

  auto* sobel = app.add_subcommand("sobel", "Sobel gradient magnitude");
  sobel->add_option("--in", in_path, "input PGM/PPM")->required();
  sobel->add_option("--out", out_path, "output PGM")->required();
  sobel->add_option("--threshold", threshold_value, "binarize above t");
  sobel->add_flag("--rgb", per_channel,
                  "max of per-channel magnitudes instead of luminance");

  auto* freichen = app.add_subcommand("freichen", "Frei-Chen projection measure");
  freichen->add_option("--in", in_path, "input PGM/PPM")->required();
  freichen->add_option("--out", out_path, "output PGM")->required();
  freichen->add_option("--subset", subset, "edge|line|both")
      ->required()->check(CLI::IsMember({"edge", "line", "both"}));
  freichen->add_option("--threshold", threshold_value, "binarize above t");

  auto* gen = app.add_subcommand("gen-shader", "emit GLSL ES shaders for a chain");
  gen->add_option("--kernel", kernel_specs,
                  "3x3 kernel; repeat the flag for a multi-pass chain")
      ->required();
  gen->add_flag("--normalize", normalize, "divide by the kernel weight");
  gen->add_option("--repeat", repeat, "in-shader repetitions per pass")
      ->check(CLI::PositiveNumber);
  gen->add_option("--out", out_path, "output stem")->required();

  std::string scenario_name, engine_name = "cpu", json_path, resolution = "320x240";
  std::size_t frames = kDefaultScenarioFrames;
  double vsync = default_vsync_hz();
  auto* bench = app.add_subcommand("bench", "run a benchmark sweep");
  bench->add_option("scenario", scenario_name, "resolutions|operators")
      ->required()->check(CLI::IsMember({"resolutions", "operators"}));
  bench->add_option("--engine", engine_name, "cpu|chainref")
      ->check(CLI::IsMember({"cpu", "chainref"}));
  bench->add_option("--frames", frames, "measured frames per row")
      ->check(CLI::PositiveNumber);
  bench->add_option("--vsync", vsync, "refresh cap in Hz")->check(CLI::PositiveNumber);
  bench->add_option("--json", json_path, "write the report as JSON");
  bench->add_option("--resolution", resolution, "WxH for the operator sweep");

  std::string raw_path, op_name;
  std::size_t width = 0, height = 0;
  auto* pipeline = app.add_subcommand("pipeline", "time an operator over a raw RGB24 stream");
  pipeline->add_option("--raw", raw_path, "headerless RGB24 frames")->required();
  pipeline->add_option("--width", width, "frame width")->required()->check(CLI::PositiveNumber);
  pipeline->add_option("--height", height, "frame height")->required()->check(CLI::PositiveNumber);
  pipeline->add_option("--op", op_name, "sobel|freichen")
      ->required()->check(CLI::IsMember({"sobel", "freichen"}));
  pipeline->add_option("--frames", frames, "frames to process")
      ->required()->check(CLI::PositiveNumber);
  pipeline->add_option("--subset", subset, "Frei-Chen subset: edge|line|both")
      ->check(CLI::IsMember({"edge", "line", "both"}));
  pipeline->add_option("--engine", engine_name, "cpu|chainref")
      ->check(CLI::IsMember({"cpu", "chainref"}));
  pipeline->add_option("--vsync", vsync, "refresh cap in Hz")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  const auto subset_of = [](const std::string& s) {
    if (s == "line") return FreiChenSubset::Line;
    if (s == "both") return FreiChenSubset::EdgeAndLine;
    return FreiChenSubset::Edge;
  };
  const Engine engine = engine_name == "chainref" ? Engine::ChainReference : Engine::Cpu;

  try {
    if (convolve->parsed()) {
      const Kernel kernel = kernel_from_arg(kernel_specs.front());
      const auto policy = border == "zero" ? BorderPolicy::ZeroPad
                                           : BorderPolicy::ClampToEdge;
      write_pnm(correlate(read_pnm(in_path), kernel, policy, normalize), out_path);
    } else if (sobel->parsed()) {
      const auto image = read_pnm(in_path);
      const ImageBuffer magnitude =
          image.channels() == 1 ? sobel_magnitude(image)
          : per_channel         ? sobel_magnitude_rgb(image)
                                : sobel_magnitude(to_luminance(image));
      write_pnm(binarize(magnitude, threshold_value), out_path);
    } else if (freichen->parsed()) {
      const auto image = read_pnm(in_path);
      const auto gray = image.channels() == 1 ? image : to_luminance(image);
      write_pnm(binarize(frei_chen(gray, subset_of(subset)), threshold_value),
                out_path);
    } else if (gen->parsed()) {
      ChainSpec chain;
      for (const auto& spec : kernel_specs) {
        chain.passes.push_back({kernel_from_arg(spec), normalize, repeat});
      }
      GeneratedProgram program;
      try {
        program = generate_program(chain);
      } catch (const UnsupportedKernel& e) {
        throw UsageError(e.what());
      }
      const std::string stem = out_path;
      const auto base = [](const std::string& p) {
        return std::filesystem::path(p).filename().string();
      };
      std::vector<std::string> frag_files;
      for (std::size_t i = 0; i < program.fragment_sources.size(); ++i) {
        frag_files.push_back(program.fragment_sources.size() == 1
                                 ? stem + ".frag"
                                 : stem + "." + std::to_string(i) + ".frag");
      }
      std::vector<std::string> frag_names;
      for (const auto& f : frag_files) frag_names.push_back(base(f));
      write_text_atomic(stem + ".vert", program.vertex_source);
      for (std::size_t i = 0; i < frag_files.size(); ++i) {
        write_text_atomic(frag_files[i], program.fragment_sources[i]);
      }
      write_text_atomic(stem + ".json",
                        program_metadata(program, base(stem + ".vert"), frag_names)
                                .dump(2) + "\n");
    } else if (bench->parsed()) {
      ScenarioReport report;
      if (scenario_name == "resolutions") {
        report = scenario_resolutions(engine, frames, vsync);
      } else {
        unsigned w = 0, h = 0;
        char x = 0;
        std::istringstream res(resolution);
        if (!(res >> w >> x >> h) || x != 'x' || w == 0 || h == 0 || !res.eof()) {
          throw UsageError("--resolution must look like 320x240");
        }
        report = scenario_operators(engine, frames, vsync, {w, h});
      }
      print_table(out, report);
      if (!json_path.empty()) {
        write_text_atomic(json_path, json(report).dump(2) + "\n");
      }
    } else if (pipeline->parsed()) {
      FrameSource source = RawStreamSource(raw_path, width, height);
      const Operator op = op_name == "sobel" ? Operator{SobelOp{}}
                                             : Operator{FreiChenOp{subset_of(subset)}};
      const RunReport report = kernelbench::run(source, op, {frames, vsync, engine, 0});
      out << json(report).dump(2) << "\n";
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace kernelbench::cli
