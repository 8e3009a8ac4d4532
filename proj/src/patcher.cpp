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

#include "pbp/patcher.hpp"

#include <charconv>

#include "pbp/error.hpp"

namespace pbp {

void PatchSpec::validate() const {
  const auto ok = [](std::size_t side) {
    return side >= kMinPatchSide && side <= kMaxPatchSide;
  };
  if (!ok(height) || !ok(width)) {
    throw ParameterError("patch size " + to_string(*this) +
                         " outside 2x2 .. 64x64");
  }
}

PatchSpec parse_patch_spec(std::string_view text) {
  const auto sep = text.find_first_of("xX");
  if (sep == std::string_view::npos) {
    throw ParameterError("patch size '" + std::string(text) + "' is not HxW");
  }
  const auto parse = [&](std::string_view part) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
      throw ParameterError("patch size '" + std::string(text) + "' is not HxW");
    }
    return value;
  };
  PatchSpec spec{parse(text.substr(0, sep)), parse(text.substr(sep + 1))};
  spec.validate();
  return spec;
}

std::string to_string(const PatchSpec& spec) {
  return std::to_string(spec.height) + "x" + std::to_string(spec.width);
}

namespace {

// Start offsets and extents of the patches along one axis.
std::vector<std::pair<std::size_t, std::size_t>> split_axis(std::size_t length,
                                                            std::size_t side) {
  std::size_t count = (length + side - 1) / side;
  const std::size_t remainder = length % side;
  if (remainder == 1 && count > 1) --count;

  std::vector<std::pair<std::size_t, std::size_t>> spans;
  spans.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t start = i * side;
    const std::size_t extent = i + 1 == count ? length - start : side;
    spans.emplace_back(start, extent);
  }
  return spans;
}

}  // namespace

PatchGrid plan_grid(std::size_t width, std::size_t height, const PatchSpec& spec) {
  spec.validate();
  if (width < spec.width || height < spec.height) {
    throw ParameterError("image " + std::to_string(height) + "x" +
                         std::to_string(width) + " is smaller than one " +
                         to_string(spec) + " patch");
  }
  const auto rows = split_axis(height, spec.height);
  const auto cols = split_axis(width, spec.width);

  PatchGrid grid{width, height, rows.size(), cols.size(), {}};
  grid.rects.reserve(rows.size() * cols.size());
  for (const auto& [y, h] : rows) {
    for (const auto& [x, w] : cols) grid.rects.push_back({x, y, w, h});
  }
  return grid;
}

CostMatrix extract(const QuantizedImage& img, const PatchRect& rect) {
  if (rect.width == 0 || rect.height == 0 || rect.x + rect.width > img.width() ||
      rect.y + rect.height > img.height()) {
    throw ConsistencyError("patch rect outside the image");
  }
  std::vector<Cost> cells;
  cells.reserve(rect.width * rect.height);
  for (std::size_t r = 0; r < rect.height; ++r) {
    for (std::size_t c = 0; c < rect.width; ++c) {
      cells.push_back(img.at(rect.x + c, rect.y + r));
    }
  }
  return CostMatrix(rect.height, rect.width, std::move(cells));
}

CostMatrix transpose(const CostMatrix& c) {
  std::vector<Cost> cells;
  cells.reserve(c.rows() * c.cols());
  for (std::size_t j = 0; j < c.cols(); ++j) {
    for (std::size_t i = 0; i < c.rows(); ++i) cells.push_back(c(i, j));
  }
  return CostMatrix(c.cols(), c.rows(), std::move(cells));
}

}  // namespace pbp
