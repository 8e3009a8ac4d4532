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

// pbpseg: edge/blob segmentation from reduced pseudo-Boolean polynomials.
//
//   pbpseg segment IMAGE [--patch 4x4 --bin 40 --gaussian 0 --threshold 1 ...]
//   pbpseg inspect IMAGE --at ROW,COL [...]
//   pbpseg sweep   IMAGE --patches 4x4,8x8 [--bins ...] [--gaussians ...] [--thresholds ...]
//
// Common flags may also come from a key=value file given with --config;
// flags on the command line win.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "pbp/app.hpp"

namespace {

struct Flags {
  std::string patch = "4x4";
  int bin = 40;
  int gaussian = 0;
  std::size_t threshold = 1;
  std::string refine = "none";
  int refine_k = 3;
  std::string grouping = "modconst";
  unsigned workers = 0;
  std::string out = ".";
};

pbp::RunConfig to_config(const Flags& f, const std::string& input) {
  pbp::RunConfig cfg;
  cfg.input = input;
  cfg.output_dir = f.out;
  cfg.kernel_size = f.gaussian;
  cfg.bin_width = f.bin;
  cfg.patch = pbp::parse_patch_spec(f.patch);
  cfg.threshold = f.threshold;
  cfg.refine = pbp::parse_refine_mode(f.refine);
  cfg.refine_k = f.refine_k;
  cfg.grouping = pbp::parse_grouping_mode(f.grouping);
  cfg.workers = f.workers;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge detection and coarse segmentation with pseudo-Boolean polynomials"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file with the same keys as the flags");

  Flags flags;
  app.add_option("--patch", flags.patch, "Patch size HxW")->capture_default_str();
  app.add_option("--bin", flags.bin, "Pixel-set bin width")->capture_default_str();
  app.add_option("--gaussian", flags.gaussian, "Gaussian kernel size (odd, 0 = off)")
      ->capture_default_str();
  app.add_option("--threshold", flags.threshold, "Degree threshold p")->capture_default_str();
  app.add_option("--refine", flags.refine, "none | favor-edge | favor-blob")
      ->capture_default_str();
  app.add_option("--refine-k", flags.refine_k, "Neighbour votes needed to flip a patch")
      ->capture_default_str();
  app.add_option("--grouping", flags.grouping, "strict | modconst | connect")
      ->capture_default_str();
  app.add_option("--workers", flags.workers, "Classification workers (0 = auto)")
      ->capture_default_str();
  app.add_option("--out", flags.out, "Output directory")->capture_default_str();

  std::string input;
  auto* segment = app.add_subcommand("segment", "Write mask.png, overlay.png and result.json");
  segment->fallthrough();
  segment->add_option("input", input, "PNG or PGM image")->required();

  auto* inspect = app.add_subcommand("inspect", "Print every reduction step for one patch");
  inspect->fallthrough();
  inspect->add_option("input", input, "PNG or PGM image")->required();
  std::vector<std::size_t> at;
  inspect->add_option("--at", at, "Patch grid position ROW,COL")
      ->delimiter(',')
      ->expected(2)
      ->required();

  auto* sweep = app.add_subcommand("sweep", "Run a grid of parameter combinations");
  sweep->fallthrough();
  sweep->add_option("input", input, "PNG or PGM image")->required();
  std::vector<std::string> patches;
  std::vector<int> bins;
  std::vector<int> gaussians;
  std::vector<std::size_t> thresholds;
  sweep->add_option("--patches", patches, "Patch sizes, e.g. 4x4,8x8")->delimiter(',');
  sweep->add_option("--bins", bins, "Bin widths")->delimiter(',');
  sweep->add_option("--gaussians", gaussians, "Gaussian kernel sizes")->delimiter(',');
  sweep->add_option("--thresholds", thresholds, "Degree thresholds")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::FileError& e) {
    app.exit(e);
    return pbp::kExitIo;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return pbp::kExitParameter;
  }

  try {
    const pbp::RunConfig cfg = to_config(flags, input);
    if (*segment) return pbp::cmd_segment(cfg, std::cout, std::cerr);
    if (*inspect) return pbp::cmd_inspect(cfg, at[0], at[1], std::cout, std::cerr);

    pbp::SweepRanges ranges;
    // Unset ranges fall back to the single value of the common flag.
    for (const auto& p : patches) ranges.patches.push_back(pbp::parse_patch_spec(p));
    if (patches.empty()) ranges.patches.push_back(cfg.patch);
    ranges.bins = bins.empty() ? std::vector<int>{cfg.bin_width} : bins;
    ranges.kernels = gaussians.empty() ? std::vector<int>{cfg.kernel_size} : gaussians;
    ranges.thresholds =
        thresholds.empty() ? std::vector<std::size_t>{cfg.threshold} : thresholds;
    return pbp::cmd_sweep(cfg, ranges, std::cout, std::cerr);
  } catch (const pbp::Error& e) {
    std::cerr << "pbpseg: " << e.what() << '\n';
    return pbp::exit_code_for(e.kind());
  }
}
