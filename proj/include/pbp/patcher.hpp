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
#include <string>
#include <string_view>
#include <vector>

#include "pbp/cost_matrix.hpp"
#include "pbp/image.hpp"

namespace pbp {

inline constexpr std::size_t kMinPatchSide = 2;
inline constexpr std::size_t kMaxPatchSide = 64;

struct PatchSpec {
  std::size_t height = 4;
  std::size_t width = 4;

  /// Throws ParameterError when a side is outside [2, 64].
  void validate() const;

  friend bool operator==(const PatchSpec&, const PatchSpec&) = default;
};

/// Parses "HxW", e.g. "4x4" or "6x8".
PatchSpec parse_patch_spec(std::string_view text);
std::string to_string(const PatchSpec& spec);

struct PatchRect {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t width = 0;
  std::size_t height = 0;

  friend bool operator==(const PatchRect&, const PatchRect&) = default;
};

/// Non-overlapping tiling of an image, rects in raster order.
struct PatchGrid {
  std::size_t image_width = 0;
  std::size_t image_height = 0;
  std::size_t grid_rows = 0;
  std::size_t grid_cols = 0;
  std::vector<PatchRect> rects;

  std::size_t size() const noexcept { return rects.size(); }
  const PatchRect& at(std::size_t row, std::size_t col) const {
    return rects[row * grid_cols + col];
  }
};

/// Ceil-division tiling. A trailing strip only one pixel thick is folded into
/// the previous row or column of patches, so that strip never becomes a
/// degenerate one-row cost matrix.
PatchGrid plan_grid(std::size_t width, std::size_t height, const PatchSpec& spec);

/// Rows of the cost matrix follow image rows. Throws ConsistencyError when the
/// rect leaves the image.
CostMatrix extract(const QuantizedImage& img, const PatchRect& rect);

CostMatrix transpose(const CostMatrix& c);

}  // namespace pbp
