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

// JSON forms of run reports, scenario reports and shader binding metadata.

#include <string>
#include <vector>

#include "json.hpp"
#include "kernelbench/pipeline.hpp"
#include "kernelbench/scenarios.hpp"
#include "kernelbench/shadergen.hpp"

namespace kernelbench {

using nlohmann::json;

NLOHMANN_JSON_SERIALIZE_ENUM(Scenario, {
                                           {Scenario::ResolutionSweep, "resolutions"},
                                           {Scenario::OperatorSweep, "operators"},
                                       })

NLOHMANN_JSON_SERIALIZE_ENUM(Engine, {
                                         {Engine::Cpu, "cpu"},
                                         {Engine::ChainReference, "chainref"},
                                     })

inline void to_json(json& j, const FrameStats& f) {
  j = json{{"acquisition_ms", f.acquisition_ms}, {"processing_ms", f.processing_ms}};
}

inline void from_json(const json& j, FrameStats& f) {
  j.at("acquisition_ms").get_to(f.acquisition_ms);
  j.at("processing_ms").get_to(f.processing_ms);
}

inline void to_json(json& j, const RunReport& r) {
  j = json{{"frame_count", r.frame_count},
           {"warmup_frames", r.warmup_frames},
           {"partial", r.partial},
           {"mean_acquisition_ms", r.mean_acquisition_ms},
           {"mean_processing_ms", r.mean_processing_ms},
           {"p50_processing_ms", r.p50_processing_ms},
           {"p95_processing_ms", r.p95_processing_ms},
           {"fps_uncapped", r.fps_uncapped},
           {"fps_capped", r.fps_capped},
           {"vsync_hz", r.vsync_hz},
           {"per_frame", r.per_frame}};
}

inline void from_json(const json& j, RunReport& r) {
  j.at("frame_count").get_to(r.frame_count);
  j.at("warmup_frames").get_to(r.warmup_frames);
  j.at("partial").get_to(r.partial);
  j.at("mean_acquisition_ms").get_to(r.mean_acquisition_ms);
  j.at("mean_processing_ms").get_to(r.mean_processing_ms);
  j.at("p50_processing_ms").get_to(r.p50_processing_ms);
  j.at("p95_processing_ms").get_to(r.p95_processing_ms);
  j.at("fps_uncapped").get_to(r.fps_uncapped);
  j.at("fps_capped").get_to(r.fps_capped);
  j.at("vsync_hz").get_to(r.vsync_hz);
  j.at("per_frame").get_to(r.per_frame);
}

inline void to_json(json& j, const ScenarioRow& row) {
  j = json{{"label", row.label}, {"report", row.report}};
}

inline void from_json(const json& j, ScenarioRow& row) {
  j.at("label").get_to(row.label);
  j.at("report").get_to(row.report);
}

inline void to_json(json& j, const ScenarioReport& s) {
  j = json{{"schema_version", s.schema_version},
           {"scenario", s.scenario},
           {"engine", s.engine},
           {"host_note", s.host_note},
           {"rows", s.rows}};
}

inline void from_json(const json& j, ScenarioReport& s) {
  j.at("schema_version").get_to(s.schema_version);
  j.at("scenario").get_to(s.scenario);
  j.at("engine").get_to(s.engine);
  j.at("host_note").get_to(s.host_note);
  j.at("rows").get_to(s.rows);
}

/// Sidecar describing how to bind a generated program. `fragment_files`
/// names the fragment source of each pass, in order.
inline json program_metadata(const GeneratedProgram& program,
                             const std::string& vertex_file,
                             const std::vector<std::string>& fragment_files) {
  json passes = json::array();
  for (std::size_t i = 0; i < program.passes.size(); ++i) {
    const auto& pass = program.passes[i];
    json uniforms = json::array();
    for (const auto& u : pass.uniforms) {
      uniforms.push_back({{"name", u.name},
                          {"type", u.type},
                          {"array_length", u.array_length}});
    }
    passes.push_back({{"index", i},
                      {"fragment", fragment_files.at(i)},
                      {"uniforms", uniforms},
                      {"kernel", std::vector<float>(pass.kernel.coefficients().begin(),
                                                    pass.kernel.coefficients().end())},
                      {"normalize", pass.normalize},
                      {"repeat", pass.repeat}});
  }
  return json{{"schema_version", 1},
              {"dialect", "GLSL ES 1.00"},
              {"vertex", vertex_file},
              {"attributes", program.attributes},
              {"varyings", {"v_texCoord"}},
              {"passes", passes}};
}

}  // namespace kernelbench
