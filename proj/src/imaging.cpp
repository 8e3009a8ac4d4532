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

#include <algorithm>
#include <cmath>
#include <string>

#include "pbp/error.hpp"
#include "pbp/imaging.hpp"

namespace pbp {

std::string_view to_string(PatchClass c) {
  return c == PatchClass::kBlob ? "blob" : "edge";
}

std::vector<double> gaussian_kernel(int kernel_size) {
  if (kernel_size < 1 || kernel_size % 2 == 0) {
    throw ParameterError("Gaussian kernel size must be a positive odd integer, got " +
                         std::to_string(kernel_size));
  }
  const int radius = kernel_size / 2;
  const double sigma = kernel_size / 6.0;
  std::vector<double> taps(static_cast<std::size_t>(kernel_size));
  double total = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    const double w = std::exp(-(i * i) / (2.0 * sigma * sigma));
    taps[static_cast<std::size_t>(i + radius)] = w;
    total += w;
  }
  for (double& w : taps) w /= total;
  return taps;
}

GrayImage gaussian_blur(const GrayImage& img, int kernel_size) {
  const std::vector<double> taps = gaussian_kernel(kernel_size);
  if (static_cast<std::size_t>(kernel_size) > std::min(img.width(), img.height())) {
    throw ParameterError("Gaussian kernel " + std::to_string(kernel_size) +
                         " larger than the image");
  }
  if (kernel_size == 1) return img;

  const auto w = static_cast<std::ptrdiff_t>(img.width());
  const auto h = static_cast<std::ptrdiff_t>(img.height());
  const std::ptrdiff_t radius = kernel_size / 2;
  const auto clamp = [](std::ptrdiff_t v, std::ptrdiff_t hi) {
    return static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(v, 0, hi - 1));
  };

  std::vector<double> horizontal(img.pixels().size());
  for (std::ptrdiff_t y = 0; y < h; ++y) {
    for (std::ptrdiff_t x = 0; x < w; ++x) {
      double acc = 0.0;
      for (std::ptrdiff_t t = -radius; t <= radius; ++t) {
        acc += taps[static_cast<std::size_t>(t + radius)] *
               img.at(clamp(x + t, w), static_cast<std::size_t>(y));
      }
      horizontal[static_cast<std::size_t>(y * w + x)] = acc;
    }
  }

  std::vector<std::uint8_t> out(img.pixels().size());
  for (std::ptrdiff_t y = 0; y < h; ++y) {
    for (std::ptrdiff_t x = 0; x < w; ++x) {
      double acc = 0.0;
      for (std::ptrdiff_t t = -radius; t <= radius; ++t) {
        acc += taps[static_cast<std::size_t>(t + radius)] *
               horizontal[clamp(y + t, h) * img.width() + static_cast<std::size_t>(x)];
      }
      out[static_cast<std::size_t>(y * w + x)] =
          static_cast<std::uint8_t>(std::clamp(std::floor(acc + 0.5), 0.0, 255.0));
    }
  }
  return GrayImage(img.width(), img.height(), std::move(out));
}

QuantizedImage quantize(const GrayImage& img, int bin_width) {
  if (bin_width < 1 || bin_width > 255) {
    throw ParameterError("bin width must be in [1, 255], got " + std::to_string(bin_width));
  }
  std::vector<std::uint8_t> levels(img.pixels().size());
  std::transform(img.pixels().begin(), img.pixels().end(), levels.begin(),
                 [bin_width](std::uint8_t x) {
                   return static_cast<std::uint8_t>(x / bin_width);
                 });
  return QuantizedImage(img.width(), img.height(), bin_width, std::move(levels));
}

RenderedMasks render_masks(const MaskImage& mask, const PatchGrid& grid,
                           const GrayImage& base) {
  if (mask.grid_rows != grid.grid_rows || mask.grid_cols != grid.grid_cols ||
      mask.cells.size() != grid.size()) {
    throw ConsistencyError("mask does not match the patch grid");
  }
  if (grid.image_width != base.width() || grid.image_height != base.height()) {
    throw ConsistencyError("patch grid does not match the base image");
  }
  RenderedMasks out{RgbImage(base.width(), base.height()),
                    RgbImage(base.width(), base.height())};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const PatchRect& rect = grid.rects[i];
    const Rgb colour = mask.cells[i] == PatchClass::kBlob ? kBlobColour : kEdgeColour;
    for (std::size_t y = rect.y; y < rect.y + rect.height; ++y) {
      for (std::size_t x = rect.x; x < rect.x + rect.width; ++x) {
        out.mask.at(x, y) = colour;
        const unsigned g = base.at(x, y);
        Rgb& blended = out.overlay.at(x, y);
        for (std::size_t ch = 0; ch < 3; ++ch) {
          blended[ch] = static_cast<std::uint8_t>((colour[ch] + g + 1) / 2);
        }
      }
    }
  }
  return out;
}

}  // namespace pbp
