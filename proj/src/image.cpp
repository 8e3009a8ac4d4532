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

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <memory>
#include <string>
#include <system_error>

#include "pbp/error.hpp"
#include "pbp/imaging.hpp"

namespace pbp {

GrayImage::GrayImage(std::size_t width, std::size_t height,
                     std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width_ == 0 || height_ == 0) throw ConsistencyError("image has zero size");
  if (pixels_.size() != width_ * height_) {
    throw ConsistencyError("pixel count does not match image dimensions");
  }
}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::uint8_t fill)
    : GrayImage(width, height, std::vector<std::uint8_t>(width * height, fill)) {}

QuantizedImage::QuantizedImage(std::size_t width, std::size_t height,
                               int bin_width, std::vector<std::uint8_t> levels)
    : width_(width), height_(height), bin_width_(bin_width), levels_(std::move(levels)) {
  if (bin_width_ < 1 || bin_width_ > 255) {
    throw ParameterError("bin width must be in [1, 255]");
  }
  if (width_ == 0 || height_ == 0 || levels_.size() != width_ * height_) {
    throw ConsistencyError("quantized image dimensions do not match its levels");
  }
  for (std::uint8_t v : levels_) {
    if (v > max_level()) throw ConsistencyError("quantized level above 255 / bin width");
  }
}

RgbImage::RgbImage(std::size_t width, std::size_t height, Rgb fill)
    : width_(width), height_(height), pixels_(width * height, fill) {
  if (width_ == 0 || height_ == 0) throw ConsistencyError("image has zero size");
}

std::uint8_t luminance(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  // Integer weights keep the half-up rounding exact.
  return static_cast<std::uint8_t>((299u * r + 587u * g + 114u * b + 500u) / 1000u);
}

namespace {

[[noreturn]] void fail(ImageFailure why, const std::filesystem::path& path,
                       const std::string& detail) {
  throw ImageIoError(why, path.string() + ": " + detail);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ImageFailure::kUnreadable, path, "cannot open file");
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) fail(ImageFailure::kUnreadable, path, "read error");
  return bytes;
}

GrayImage decode_pgm(const std::string& bytes, const std::filesystem::path& path) {
  std::size_t pos = 2;
  auto next_token = [&]() -> std::size_t {
    while (pos < bytes.size()) {
      if (bytes[pos] == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(bytes[pos]))) {
        ++pos;
      } else {
        break;
      }
    }
    std::size_t value = 0;
    std::size_t digits = 0;
    while (pos < bytes.size() && std::isdigit(static_cast<unsigned char>(bytes[pos]))) {
      value = value * 10 + static_cast<std::size_t>(bytes[pos++] - '0');
      if (++digits > 9) fail(ImageFailure::kUnreadable, path, "PGM header value too large");
    }
    if (digits == 0) fail(ImageFailure::kUnreadable, path, "malformed PGM header");
    return value;
  };
  const std::size_t width = next_token();
  const std::size_t height = next_token();
  const std::size_t maxval = next_token();
  if (pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[pos]))) {
    fail(ImageFailure::kUnreadable, path, "malformed PGM header");
  }
  ++pos;
  if (width == 0 || height == 0) fail(ImageFailure::kZeroDimensions, path, "image has zero size");
  if (maxval == 0 || maxval > 255) {
    fail(ImageFailure::kUnsupportedBitDepth, path,
         "PGM maxval " + std::to_string(maxval) + " is not 8-bit");
  }
  if (bytes.size() - pos < width * height) {
    fail(ImageFailure::kUnreadable, path, "truncated PGM pixel data");
  }
  std::vector<std::uint8_t> pixels(bytes.begin() + static_cast<std::ptrdiff_t>(pos),
                                   bytes.begin() + static_cast<std::ptrdiff_t>(pos + width * height));
  return GrayImage(width, height, std::move(pixels));
}

struct PngImageFree {
  void operator()(png_image* img) const { png_image_free(img); }
};

GrayImage decode_png(const std::string& bytes, const std::filesystem::path& path) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  std::unique_ptr<png_image, PngImageFree> guard(&image);
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    fail(ImageFailure::kUnreadable, path, image.message);
  }
  if (image.width == 0 || image.height == 0) {
    fail(ImageFailure::kZeroDimensions, path, "image has zero size");
  }
  if (image.format & PNG_FORMAT_FLAG_LINEAR) {
    fail(ImageFailure::kUnsupportedBitDepth, path, "16-bit PNG is not supported");
  }
  const bool colour = image.format & PNG_FORMAT_FLAG_COLOR;
  const bool alpha = image.format & PNG_FORMAT_FLAG_ALPHA;
  image.format = colour ? (alpha ? PNG_FORMAT_RGBA : PNG_FORMAT_RGB)
                        : (alpha ? PNG_FORMAT_GA : PNG_FORMAT_GRAY);
  const std::size_t channels = PNG_IMAGE_SAMPLE_CHANNELS(image.format);
  std::vector<std::uint8_t> raw(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, raw.data(), 0, nullptr)) {
    fail(ImageFailure::kUnreadable, path, image.message);
  }
  const std::size_t count = std::size_t{image.width} * image.height;
  std::vector<std::uint8_t> pixels(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint8_t* px = &raw[i * channels];
    pixels[i] = colour ? luminance(px[0], px[1], px[2]) : px[0];
  }
  return GrayImage(image.width, image.height, std::move(pixels));
}

// Writes through a temp file in the target directory and renames it in place.
template <typename Writer>
void write_atomically(const std::filesystem::path& path, Writer&& writer) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  try {
    writer(tmp);
    std::filesystem::rename(tmp, path);
  } catch (const std::filesystem::filesystem_error& e) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    fail(ImageFailure::kWriteFailed, path, e.what());
  } catch (...) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw;
  }
}

void write_png_raw(const std::filesystem::path& path, std::size_t width,
                   std::size_t height, png_uint_32 format, const void* data) {
  write_atomically(path, [&](const std::filesystem::path& tmp) {
    png_image image{};
    image.version = PNG_IMAGE_VERSION;
    image.width = static_cast<png_uint_32>(width);
    image.height = static_cast<png_uint_32>(height);
    image.format = format;
    if (!png_image_write_to_file(&image, tmp.c_str(), 0, data, 0, nullptr)) {
      const std::string why = image.message;
      png_image_free(&image);
      fail(ImageFailure::kWriteFailed, path, why);
    }
    png_image_free(&image);
  });
}

}  // namespace

GrayImage load_image(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    fail(ImageFailure::kUnreadable, path, "no such file");
  }
  const std::string bytes = read_file(path);
  static constexpr unsigned char kPngMagic[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  if (bytes.size() >= 8 && std::equal(kPngMagic, kPngMagic + 8, bytes.begin(),
                                      [](unsigned char a, char b) {
                                        return a == static_cast<unsigned char>(b);
                                      })) {
    return decode_png(bytes, path);
  }
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '5') {
    return decode_pgm(bytes, path);
  }
  fail(ImageFailure::kUnsupportedFormat, path, "not a PNG or binary PGM file");
}

void write_png(const std::filesystem::path& path, const RgbImage& img) {
  std::vector<std::uint8_t> raw;
  raw.reserve(img.pixels().size() * 3);
  for (const Rgb& px : img.pixels()) raw.insert(raw.end(), px.begin(), px.end());
  write_png_raw(path, img.width(), img.height(), PNG_FORMAT_RGB, raw.data());
}

void write_png(const std::filesystem::path& path, const GrayImage& img) {
  write_png_raw(path, img.width(), img.height(), PNG_FORMAT_GRAY, img.pixels().data());
}

void write_pgm(const std::filesystem::path& path, const GrayImage& img) {
  write_atomically(path, [&](const std::filesystem::path& tmp) {
    std::ofstream out(tmp, std::ios::binary);
    out << "P5\n" << img.width() << ' ' << img.height() << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels().data()),
              static_cast<std::streamsize>(img.pixels().size()));
    if (!out) fail(ImageFailure::kWriteFailed, path, "write error");
  });
}

}  // namespace pbp
