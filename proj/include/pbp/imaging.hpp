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

#include <filesystem>
#include <utility>

#include "pbp/image.hpp"
#include "pbp/mask.hpp"
#include "pbp/patcher.hpp"

namespace pbp {

/// Reads an 8-bit PNG (gray, gray+alpha, RGB, RGBA, palette) or a binary
/// PGM (P5, maxval <= 255). Colour is collapsed with the 0.299/0.587/0.114
/// luminance weights, rounded half up; alpha is ignored.
///
/// Throws ImageIoError whose failure() tells missing/unreadable files,
/// unsupported formats, unsupported bit depths and empty images apart.
GrayImage load_image(const std::filesystem::path& path);

std::uint8_t luminance(std::uint8_t r, std::uint8_t g, std::uint8_t b);

/// Writes are atomic: the image goes to a sibling temp file first and is
/// renamed over the target.
void write_png(const std::filesystem::path& path, const RgbImage& img);
void write_png(const std::filesystem::path& path, const GrayImage& img);
void write_pgm(const std::filesystem::path& path, const GrayImage& img);

/// Separable Gaussian, sigma = kernel_size / 6, replicated borders, a single
/// rounding at the end. kernel_size 1 returns the input.
GrayImage gaussian_blur(const GrayImage& img, int kernel_size);

/// Normalized taps of the 1-D kernel used by gaussian_blur.
std::vector<double> gaussian_kernel(int kernel_size);

/// floor(x / bin_width) per pixel; bin_width in [1, 255].
QuantizedImage quantize(const GrayImage& img, int bin_width);

inline constexpr Rgb kBlobColour{0, 0, 255};
inline constexpr Rgb kEdgeColour{255, 255, 255};

struct RenderedMasks {
  RgbImage mask;
  RgbImage overlay;
};

/// Paints each patch rect blue (blob) or white (edge) at full resolution and
/// blends that mask 50/50 over the base image.
RenderedMasks render_masks(const MaskImage& mask, const PatchGrid& grid,
                           const GrayImage& base);

}  // namespace pbp
