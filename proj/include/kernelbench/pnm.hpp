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

// Binary netpbm: P5 (gray) and P6 (RGB), maxval 255 only.

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "kernelbench/error.hpp"
#include "kernelbench/image.hpp"
#include "kernelbench/io.hpp"

namespace kernelbench {

namespace detail {

class PnmHeaderReader {
 public:
  explicit PnmHeaderReader(std::span<const std::uint8_t> data) : data_(data) {}

  std::string token() {
    skip_space_and_comments();
    std::string tok;
    while (pos_ < data_.size() && !std::isspace(data_[pos_]) &&
           data_[pos_] != '#') {
      tok.push_back(static_cast<char>(data_[pos_++]));
    }
    if (tok.empty()) throw SizeError("truncated PNM header");
    return tok;
  }

  std::size_t number() {
    const std::string tok = token();
    std::size_t value = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9') {
        throw UnsupportedFormat("bad PNM header field '" + tok + "'");
      }
      value = value * 10 + static_cast<std::size_t>(ch - '0');
      if (value > (1u << 30)) throw UnsupportedFormat("PNM dimension too large");
    }
    return value;
  }

  /// Consumes the single whitespace byte that separates header from raster.
  std::size_t body_offset() {
    if (pos_ >= data_.size() || !std::isspace(data_[pos_])) {
      throw SizeError("missing whitespace before PNM raster");
    }
    return pos_ + 1;
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < data_.size()) {
      if (std::isspace(data_[pos_])) {
        ++pos_;
      } else if (data_[pos_] == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ImageBuffer parse_pnm(std::span<const std::uint8_t> data) {
  if (data.size() < 2 || data[0] != 'P' || (data[1] != '5' && data[1] != '6')) {
    throw UnsupportedFormat("only binary P5/P6 netpbm files are supported");
  }
  const PixelFormat format = data[1] == '5' ? PixelFormat::Gray8
                                            : PixelFormat::RGB24;
  detail::PnmHeaderReader header(data.subspan(2));
  const std::size_t width = header.number();
  const std::size_t height = header.number();
  const std::size_t maxval = header.number();
  if (maxval != 255) {
    throw UnsupportedFormat("maxval " + std::to_string(maxval) +
                            " is not supported (only 255)");
  }
  if (width == 0 || height == 0) throw SizeError("PNM has zero dimension");
  const std::size_t offset = 2 + header.body_offset();
  const std::size_t body = width * height * channels_of(format);
  if (data.size() < offset + body) {
    throw SizeError("PNM raster truncated: need " + std::to_string(body) +
                    " bytes, have " + std::to_string(data.size() - offset));
  }
  return decode_bytes(data.subspan(offset, body), width, height, format);
}

/// Canonical form: "P5\n<w> <h>\n255\n" followed by the raster.
inline std::vector<std::uint8_t> serialize_pnm(const ImageBuffer& image) {
  const PixelFormat format = format_of(image);
  const std::string header = std::string(format == PixelFormat::Gray8 ? "P5"
                                                                      : "P6") +
                             "\n" + std::to_string(image.width()) + " " +
                             std::to_string(image.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  const auto raster = encode_bytes(image, format);
  out.insert(out.end(), raster.begin(), raster.end());
  return out;
}

inline ImageBuffer read_pnm(const std::filesystem::path& path) {
  const auto raw = read_file(path);
  return parse_pnm(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()));
}

inline void write_pnm(const ImageBuffer& image,
                      const std::filesystem::path& path) {
  const auto bytes = serialize_pnm(image);
  write_file_atomic(path, std::span<const char>(
                              reinterpret_cast<const char*>(bytes.data()),
                              bytes.size()));
}

}  // namespace kernelbench
