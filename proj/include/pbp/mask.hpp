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

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace pbp {

enum class PatchClass { kBlob, kEdge };

std::string_view to_string(PatchClass c);

/// Per-patch classification laid out on the patch grid.
struct MaskImage {
  std::size_t grid_rows = 0;
  std::size_t grid_cols = 0;
  std::vector<PatchClass> cells;                   // raster order
  std::vector<std::optional<std::size_t>> groups;  // empty or one per cell

  PatchClass at(std::size_t row, std::size_t col) const {
    return cells[row * grid_cols + col];
  }
};

}  // namespace pbp
