// Copyright 2026 The pbpseg Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace pbp {

enum class ErrorKind {
  kIo,           // file missing, unreadable, unsupported encoding
  kParameter,    // a user-supplied knob is out of range or malformed
  kConsistency,  // two inputs disagree (dimensions, bounds, grids)
  kDimension,    // vector length does not match the variable count
  kParse,        // malformed serialized polynomial
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& what)
      : Error(ErrorKind::kParameter, what) {}
};

class ConsistencyError : public Error {
 public:
  explicit ConsistencyError(const std::string& what)
      : Error(ErrorKind::kConsistency, what) {}
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what)
      : Error(ErrorKind::kDimension, what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what)
      : Error(ErrorKind::kParse, what) {}
};

// Image loading distinguishes why a file could not be used.
enum class ImageFailure {
  kUnreadable,
  kUnsupportedFormat,
  kUnsupportedBitDepth,
  kZeroDimensions,
  kWriteFailed,
};

class ImageIoError : public Error {
 public:
  ImageIoError(ImageFailure failure, const std::string& what)
      : Error(ErrorKind::kIo, what), failure_(failure) {}

  ImageFailure failure() const noexcept { return failure_; }

 private:
  ImageFailure failure_;
};

}  // namespace pbp
