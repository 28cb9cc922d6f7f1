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

// GLSL ES 1.00 code generation for 3x3 convolution chains, plus a CPU
// executor with the same arithmetic.

#include <array>
#include <charconv>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "kernelbench/error.hpp"
#include "kernelbench/image.hpp"
#include "kernelbench/kernel.hpp"

namespace kernelbench {

struct ChainPass {
  Kernel kernel = Kernel::identity(3);
  bool normalize = false;
  std::size_t repeat = 1;

  friend bool operator==(const ChainPass&, const ChainPass&) = default;
};

struct ChainSpec {
  std::vector<ChainPass> passes;

  friend bool operator==(const ChainSpec&, const ChainSpec&) = default;
};

struct UniformBinding {
  std::string name;
  std::string type;
  std::size_t array_length = 0;  // 0 for non-array uniforms

  friend bool operator==(const UniformBinding&, const UniformBinding&) = default;
};

struct PassBinding {
  std::vector<UniformBinding> uniforms;
  Kernel kernel = Kernel::identity(3);  // value to upload into u_kernel
  bool normalize = false;
  std::size_t repeat = 1;
};

struct GeneratedProgram {
  std::string vertex_source;
  std::vector<std::string> fragment_sources;  // one per pass, in order
  std::vector<PassBinding> passes;
  std::vector<std::string> attributes;  // vertex attributes, in order
};

inline constexpr std::size_t kShaderTaps = 9;

/// Shortest round-trip decimal for `value` as a float, always carrying a
/// decimal point ("1.0", "-0.5", "0.70710677").
inline std::string glsl_float(float value) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  std::string text(buf.data(), res.ptr);
  if (text.find_first_of(".en") != std::string::npos) {
    const auto e = text.find('e');
    if (e != std::string::npos && text.find('.') == std::string::npos) {
      text.insert(e, ".0");
    }
    return text;
  }
  return text + ".0";
}

namespace detail {

inline void validate_pass(const ChainPass& pass) {
  if (pass.kernel.side() != 3) {
    throw UnsupportedKernel("shader passes need a 3x3 kernel, got side " +
                            std::to_string(pass.kernel.side()));
  }
  if (pass.repeat < 1) throw RangeError("pass repeat must be >= 1");
}

inline void validate_chain(const ChainSpec& chain) {
  if (chain.passes.empty()) throw EmptyChain("chain has no passes");
  for (const auto& pass : chain.passes) detail::validate_pass(pass);
}

/// "vec2(dx, dy)" for tap i; taps run row-major from the top-left.
inline std::string tap_offset(std::size_t tap) {
  const auto dx = static_cast<float>(static_cast<int>(tap % 3) - 1);
  const auto dy = static_cast<float>(static_cast<int>(tap / 3) - 1);
  return "vec2(" + glsl_float(dx) + ", " + glsl_float(dy) + ")";
}

inline std::string texture_tap(std::size_t tap) {
  return "texture2D(u_image, v_texCoord + onePixel * " + tap_offset(tap) +
         ") * u_kernel[" + std::to_string(tap) + "]";
}

inline std::vector<UniformBinding> pass_uniforms() {
  return {
      {"u_image", "sampler2D", 0},
      {"u_textureSize", "vec2", 0},
      {"u_kernel", "float", kShaderTaps},
  };
}

}  // namespace detail

inline std::string generate_vertex_shader() {
  return "attribute vec2 a_position;\n"
         "attribute vec2 a_texCoord;\n"
         "varying vec2 v_texCoord;\n"
         "void main() {\n"
         "  gl_Position = vec4(a_position, 0.0, 1.0);\n"
         "  v_texCoord = a_texCoord;\n"
         "}\n";
}

/// Fragment shader applying one pass. Taps are summed row-major from the
/// top-left, offset (col - 1, row - 1) in texels, which matches correlate()
/// when the image's first row is uploaded at t = 0.
///
/// With repeat > 1 the nine-tap stencil is unrolled `repeat` times per
/// fragment. A fragment cannot read its neighbours' intermediate results,
/// so stencils after the first weight the running color at the centre tap
/// and re-read the source texture for the other eight. That reproduces the
/// per-fragment workload of `repeat` applications; the exact iterated
/// result is what execute_chain_reference() computes.
inline std::string generate_fragment_shader(const ChainPass& pass) {
  detail::validate_pass(pass);
  std::string src;
  src += "precision mediump float;\n";
  for (const auto& u : detail::pass_uniforms()) {
    src += "uniform " + u.type + " " + u.name;
    if (u.array_length > 0) src += "[" + std::to_string(u.array_length) + "]";
    src += ";\n";
  }
  src += "varying vec2 v_texCoord;\n";
  src += "void main() {\n";
  src += "  vec2 onePixel = vec2(1.0, 1.0) / u_textureSize;\n";
  if (pass.normalize) {
    src += "  float kernelWeight = u_kernel[0]";
    for (std::size_t i = 1; i < kShaderTaps; ++i) {
      src += " + u_kernel[" + std::to_string(i) + "]";
    }
    src += ";\n";
    src += "  if (kernelWeight <= 0.0) kernelWeight = 1.0;\n";
  }
  src += "  vec4 colorSum = vec4(0.0, 0.0, 0.0, 0.0);\n";
  const std::string count = std::to_string(pass.repeat);
  for (std::size_t r = 0; r < pass.repeat; ++r) {
    src += "  // stencil " + std::to_string(r + 1) + " of " + count + "\n";
    src += "  colorSum =";
    for (std::size_t tap = 0; tap < kShaderTaps; ++tap) {
      src += tap == 0 ? "\n      " : "\n    + ";
      if (r > 0 && tap == kShaderTaps / 2) {
        src += "colorSum * u_kernel[" + std::to_string(tap) + "]";
      } else {
        src += detail::texture_tap(tap);
      }
    }
    src += ";\n";
    if (pass.normalize) src += "  colorSum = colorSum / kernelWeight;\n";
  }
  src += "  gl_FragColor = vec4(colorSum.rgb, 1.0);\n";
  src += "}\n";
  return src;
}

inline GeneratedProgram generate_program(const ChainSpec& chain) {
  detail::validate_chain(chain);
  GeneratedProgram program;
  program.vertex_source = generate_vertex_shader();
  program.attributes = {"a_position", "a_texCoord"};
  for (const auto& pass : chain.passes) {
    program.fragment_sources.push_back(generate_fragment_shader(pass));
    program.passes.push_back(
        {detail::pass_uniforms(), pass.kernel, pass.normalize, pass.repeat});
  }
  return program;
}

/// CPU execution of a chain with the shader's sampling rules: every pass
/// is applied `repeat` times in sequence with clamp-to-edge borders, per
/// channel. Uses the same correlation core as correlate(), so a single
/// non-repeated pass reproduces correlate(..., ClampToEdge, ...) bit for bit.
inline ImageBuffer execute_chain_reference(const ImageBuffer& image,
                                           const ChainSpec& chain) {
  detail::validate_chain(chain);
  std::vector<float> current(image.samples().begin(), image.samples().end());
  std::vector<float> next(current.size());
  for (const auto& pass : chain.passes) {
    for (std::size_t r = 0; r < pass.repeat; ++r) {
      detail::correlate_into(current, image.width(), image.height(),
                             image.channels(), pass.kernel,
                             BorderPolicy::ClampToEdge, pass.normalize, next);
      current.swap(next);
    }
  }
  return with_samples(image, std::move(current));
}

}  // namespace kernelbench
