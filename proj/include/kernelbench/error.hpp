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

#include <stdexcept>
#include <string>

namespace kernelbench {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Buffer or file length does not match the declared dimensions.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Channel count does not match what the operation expects.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// File magic or maxval we do not read.
class UnsupportedFormat : public Error {
 public:
  using Error::Error;
};

/// Scalar parameter outside its documented domain.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Shader generation only targets 3x3 kernels.
class UnsupportedKernel : public Error {
 public:
  using Error::Error;
};

class EmptyChain : public Error {
 public:
  using Error::Error;
};

class EndOfStream : public Error {
 public:
  using Error::Error;
};

/// Filesystem failure (open, read, write, rename).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace kernelbench
