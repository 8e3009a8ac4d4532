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

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pbp {

/// 8-bit single-channel image, row-major.
class GrayImage {
 public:
  /// Throws ConsistencyError on zero dimensions or a size mismatch.
  GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels);
  GrayImage(std::size_t width, std::size_t height, std::uint8_t fill);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::uint8_t at(std::size_t x, std::size_t y) const noexcept {
    return pixels_[y * width_ + x];
  }
  std::uint8_t& at(std::size_t x, std::size_t y) noexcept {
    return pixels_[y * width_ + x];
  }
  const std::vector<std::uint8_t>& pixels() const noexcept { return pixels_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> pixels_;
};

/// Intensities mapped to bin labels 0..255/bin_width.
class QuantizedImage {
 public:
  QuantizedImage(std::size_t width, std::size_t height, int bin_width,
                 std::vector<std::uint8_t> levels);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  int bin_width() const noexcept { return bin_width_; }
  int max_level() const noexcept { return 255 / bin_width_; }
  std::uint8_t at(std::size_t x, std::size_t y) const noexcept {
    return levels_[y * width_ + x];
  }
  const std::vector<std::uint8_t>& levels() const noexcept { return levels_; }

  friend bool operator==(const QuantizedImage&, const QuantizedImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  int bin_width_;
  std::vector<std::uint8_t> levels_;
};

using Rgb = std::array<std::uint8_t, 3>;

class RgbImage {
 public:
  RgbImage(std::size_t width, std::size_t height, Rgb fill = {0, 0, 0});

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  const Rgb& at(std::size_t x, std::size_t y) const noexcept {
    return pixels_[y * width_ + x];
  }
  Rgb& at(std::size_t x, std::size_t y) noexcept { return pixels_[y * width_ + x]; }
  const std::vector<Rgb>& pixels() const noexcept { return pixels_; }

  friend bool operator==(const RgbImage&, const RgbImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<Rgb> pixels_;
};

}  // namespace pbp
