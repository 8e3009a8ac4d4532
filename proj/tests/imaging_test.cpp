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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include <png.h>

#include "pbp/error.hpp"
#include "pbp/imaging.hpp"
#include "support/oracles.hpp"

namespace pbp {
namespace {

namespace fs = std::filesystem;

class ImagingFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("pbp_imaging_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write_bytes(const std::string& name, const std::string& bytes) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << bytes;
    return p;
  }

  fs::path dir_;
};

ImageFailure failure_of(const fs::path& p) {
  try {
    load_image(p);
  } catch (const ImageIoError& e) {
    return e.failure();
  }
  ADD_FAILURE() << "no error for " << p;
  return ImageFailure::kWriteFailed;
}

TEST_F(ImagingFiles, LoadsTinyPgm) {
  const auto p = write_bytes("one.pgm", std::string("P5\n# comment\n1 1\n255\n") + char(77));
  EXPECT_EQ(load_image(p), GrayImage(1, 1, std::uint8_t{77}));
}

TEST_F(ImagingFiles, DistinctLoadFailures) {
  EXPECT_EQ(failure_of(dir_ / "missing.png"), ImageFailure::kUnreadable);
  EXPECT_EQ(failure_of(write_bytes("junk.bin", "hello world")), ImageFailure::kUnsupportedFormat);
  EXPECT_EQ(failure_of(write_bytes("deep.pgm", "P5\n1 1\n65535\n\x01\x02")),
            ImageFailure::kUnsupportedBitDepth);
  EXPECT_EQ(failure_of(write_bytes("empty.pgm", "P5\n0 3\n255\n")), ImageFailure::kZeroDimensions);
  EXPECT_EQ(failure_of(write_bytes("short.pgm", "P5\n4 4\n255\nab")), ImageFailure::kUnreadable);
  EXPECT_EQ(failure_of(write_bytes("bad.png", "\x89PNG\r\n\x1a\nnot really")),
            ImageFailure::kUnreadable);
}

TEST_F(ImagingFiles, RgbPngCollapsesToLuminance) {
  RgbImage rgb(3, 1);
  rgb.at(0, 0) = {255, 255, 255};
  rgb.at(1, 0) = {255, 0, 0};
  rgb.at(2, 0) = {10, 20, 30};
  const auto path = dir_ / "rgb.png";
  write_png(path, rgb);
  const GrayImage g = load_image(path);
  EXPECT_EQ(g.at(0, 0), 255);
  EXPECT_EQ(g.at(1, 0), 76);  // round(0.299 * 255) = round(76.245)
  EXPECT_EQ(g.at(2, 0), 18);  // 2.99 + 11.74 + 3.42 = 18.15
}

TEST_F(ImagingFiles, GrayRoundTripsThroughPngAndPgm) {
  const GrayImage img = testing::noise_image(17, 9, 3);
  write_png(dir_ / "g.png", img);
  write_pgm(dir_ / "g.pgm", img);
  EXPECT_EQ(load_image(dir_ / "g.png"), img);
  EXPECT_EQ(load_image(dir_ / "g.pgm"), img);
  EXPECT_FALSE(fs::exists(dir_ / "g.png.tmp"));
}

TEST_F(ImagingFiles, SixteenBitPngRejected) {
  // Minimal 1x1 16-bit grayscale PNG produced by libpng's own writer.
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  image.width = 1;
  image.height = 1;
  image.format = PNG_FORMAT_LINEAR_Y;
  const std::uint16_t px = 1000;
  const auto path = dir_ / "deep.png";
  ASSERT_TRUE(png_image_write_to_file(&image, path.c_str(), 0, &px, 0, nullptr));
  EXPECT_EQ(failure_of(path), ImageFailure::kUnsupportedBitDepth);
}

TEST(LuminanceTest, Weights) {
  EXPECT_EQ(luminance(255, 255, 255), 255);
  EXPECT_EQ(luminance(0, 0, 0), 0);
  EXPECT_EQ(luminance(255, 0, 0), 76);
  EXPECT_EQ(luminance(0, 255, 0), 150);  // 149.685
  EXPECT_EQ(luminance(0, 0, 255), 29);   // 29.07
}

TEST(GaussianTest, KernelOneIsIdentity) {
  const GrayImage img = testing::noise_image(8, 8, 1);
  EXPECT_EQ(gaussian_blur(img, 1), img);
}

TEST(GaussianTest, ConstantImagePreserved) {
  const GrayImage img(12, 7, std::uint8_t{93});
  for (int k : {3, 5, 7}) EXPECT_EQ(gaussian_blur(img, k), img);
}

TEST(GaussianTest, ImpulseResponseMatchesHandKernel) {
  // sigma = 0.5: taps e^-2, 1, e^-2 normalized. Frozen from
  // w0 = 1 / (1 + 2 e^-2) = 0.786986, w1 = 0.106507:
  // centre 255 w0^2 = 157.93, side 255 w0 w1 = 21.37, corner 255 w1^2 = 2.89.
  GrayImage img(5, 5, std::uint8_t{0});
  img.at(2, 2) = 255;
  const GrayImage out = gaussian_blur(img, 3);
  EXPECT_EQ(out.at(2, 2), 158);
  EXPECT_EQ(out.at(1, 2), 21);
  EXPECT_EQ(out.at(2, 3), 21);
  EXPECT_EQ(out.at(1, 1), 3);
  EXPECT_EQ(out.at(3, 3), 3);
  EXPECT_EQ(out.at(0, 0), 0);
  EXPECT_EQ(out.at(4, 2), 0);
}

TEST(GaussianTest, RejectsBadKernels) {
  const GrayImage img(6, 4, std::uint8_t{0});
  EXPECT_THROW(gaussian_blur(img, 2), ParameterError);
  EXPECT_THROW(gaussian_blur(img, 0), ParameterError);
  EXPECT_THROW(gaussian_blur(img, 5), ParameterError);
  EXPECT_NO_THROW(gaussian_blur(img, 3));
}

TEST(GaussianTest, OutputStaysWithinInputRange) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> lo(0, 200);
  for (int trial = 0; trial < 40; ++trial) {
    const int a = lo(rng);
    std::uniform_int_distribution<int> px(a, a + 55);
    std::vector<std::uint8_t> pixels(20 * 15);
    for (auto& p : pixels) p = static_cast<std::uint8_t>(px(rng));
    const GrayImage img(20, 15, pixels);
    const auto [mn, mx] = std::minmax_element(pixels.begin(), pixels.end());
    for (int k : {3, 5, 9}) {
      const GrayImage out = gaussian_blur(img, k);
      for (std::uint8_t v : out.pixels()) {
        EXPECT_GE(int{v}, int{*mn} - 1);
        EXPECT_LE(int{v}, int{*mx} + 1);
      }
    }
  }
}

TEST(QuantizeTest, Examples) {
  GrayImage img(4, 1, std::uint8_t{0});
  img.at(1, 0) = 7;
  img.at(2, 0) = 255;
  img.at(3, 0) = 251;
  const auto q5 = quantize(img, 5);
  EXPECT_EQ(q5.at(0, 0), 0);
  EXPECT_EQ(q5.at(1, 0), 1);
  EXPECT_EQ(q5.at(2, 0), 51);
  EXPECT_EQ(q5.at(3, 0), 50);
  EXPECT_EQ(quantize(img, 40).at(2, 0), 6);
  EXPECT_EQ(quantize(img, 40).max_level(), 6);
  EXPECT_THROW(quantize(img, 0), ParameterError);
  EXPECT_THROW(quantize(img, 256), ParameterError);
}

TEST(QuantizeTest, MonotoneAndIdentityAtWidthOne) {
  std::vector<std::uint8_t> ramp(256);
  for (int i = 0; i < 256; ++i) ramp[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  const GrayImage img(256, 1, ramp);
  for (int w = 1; w <= 255; ++w) {
    const auto q = quantize(img, w);
    for (std::size_t x = 1; x < 256; ++x) ASSERT_LE(q.at(x - 1, 0), q.at(x, 0));
  }
  EXPECT_EQ(quantize(img, 1).levels(), ramp);
  // Re-quantizing already binned labels with width 1 keeps them.
  const auto q = quantize(img, 40);
  const GrayImage labels(256, 1, q.levels());
  EXPECT_EQ(quantize(labels, 1).levels(), q.levels());
}

MaskImage uniform_mask(const PatchGrid& grid, PatchClass c) {
  return MaskImage{grid.grid_rows, grid.grid_cols, std::vector<PatchClass>(grid.size(), c), {}};
}

TEST(RenderMasksTest, UniformMasks) {
  const GrayImage base(16, 12, std::uint8_t{100});
  const PatchGrid grid = plan_grid(16, 12, PatchSpec{4, 4});
  const auto blob = render_masks(uniform_mask(grid, PatchClass::kBlob), grid, base);
  EXPECT_EQ(blob.mask, RgbImage(16, 12, kBlobColour));
  EXPECT_EQ(blob.overlay, RgbImage(16, 12, Rgb{50, 50, 178}));
  const auto edge = render_masks(uniform_mask(grid, PatchClass::kEdge), grid, base);
  EXPECT_EQ(edge.mask, RgbImage(16, 12, kEdgeColour));
  EXPECT_EQ(edge.overlay.width(), base.width());
  EXPECT_EQ(edge.overlay.height(), base.height());
}

TEST(RenderMasksTest, SingleEdgePatchPaintsOneSquare) {
  const GrayImage base(16, 16, std::uint8_t{0});
  const PatchGrid grid = plan_grid(16, 16, PatchSpec{4, 4});
  MaskImage mask = uniform_mask(grid, PatchClass::kBlob);
  mask.cells[1 * 4 + 2] = PatchClass::kEdge;  // row 1, col 2 -> x 8..11, y 4..7
  const auto out = render_masks(mask, grid, base);
  for (std::size_t y = 0; y < 16; ++y) {
    for (std::size_t x = 0; x < 16; ++x) {
      const bool inside = x >= 8 && x < 12 && y >= 4 && y < 8;
      EXPECT_EQ(out.mask.at(x, y), inside ? kEdgeColour : kBlobColour) << x << "," << y;
    }
  }
}

TEST(RenderMasksTest, DimensionMismatch) {
  const GrayImage base(16, 16, std::uint8_t{0});
  const PatchGrid grid = plan_grid(16, 16, PatchSpec{4, 4});
  const PatchGrid other = plan_grid(16, 16, PatchSpec{8, 8});
  EXPECT_THROW(render_masks(uniform_mask(other, PatchClass::kBlob), grid, base),
               ConsistencyError);
  EXPECT_THROW(render_masks(uniform_mask(grid, PatchClass::kBlob), grid,
                            GrayImage(20, 16, std::uint8_t{0})),
               ConsistencyError);
}

}  // namespace
}  // namespace pbp
