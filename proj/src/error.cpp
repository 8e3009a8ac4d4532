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

#include "pbp/error.hpp"

namespace pbp {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIo:
      return "io";
    case ErrorKind::kParameter:
      return "parameter";
    case ErrorKind::kConsistency:
      return "consistency";
    case ErrorKind::kDimension:
      return "dimension";
    case ErrorKind::kParse:
      return "parse";
  }
  return "unknown";
}

}  // namespace pbp
