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

#include "pbp/app.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "pbp/imaging.hpp"
#include "pbp/reduction.hpp"

namespace pbp {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIo:
      return kExitIo;
    case ErrorKind::kParameter:
    case ErrorKind::kParse:
      return kExitParameter;
    case ErrorKind::kConsistency:
    case ErrorKind::kDimension:
      return kExitConsistency;
  }
  return kExitConsistency;
}

void RunConfig::validate() const {
  if (kernel_size < 0 || (kernel_size > 0 && kernel_size % 2 == 0)) {
    throw ParameterError("--gaussian must be 0 or a positive odd integer");
  }
  if (bin_width < 1 || bin_width > 255) throw ParameterError("--bin must be in [1, 255]");
  patch.validate();
  if (threshold < 1) throw ParameterError("--threshold must be >= 1");
  if (refine_k < 1 || refine_k > 4) throw ParameterError("--refine-k must be in [1, 4]");
}

namespace {

using Clock = std::chrono::steady_clock;

// Re-tags an error with the pipeline stage it came from.
template <typename Fn>
auto stage(const char* name, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.kind(), std::string("[") + name + "] " + e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    throw Error(ErrorKind::kIo, std::string("[") + name + "] " + e.what());
  }
}

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

struct Written {
  std::vector<std::filesystem::path> files;

  void rollback() {
    std::error_code ignored;
    for (const auto& f : files) std::filesystem::remove(f, ignored);
    files.clear();
  }
};

void write_text_atomically(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << text;
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error(ErrorKind::kIo, "cannot write " + path.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

struct Staged {
  GrayImage input;
  PatchGrid grid;
  SegmentationResult result;
};

Staged run_stages(const RunConfig& cfg) {
  cfg.validate();
  GrayImage input = stage("load", [&] { return load_image(cfg.input); });
  const GrayImage blurred = stage("blur", [&] {
    return cfg.kernel_size > 0 ? gaussian_blur(input, cfg.kernel_size) : input;
  });
  const QuantizedImage quantized =
      stage("quantize", [&] { return quantize(blurred, cfg.bin_width); });
  PatchGrid grid = stage(
      "grid", [&] { return plan_grid(quantized.width(), quantized.height(), cfg.patch); });
  SegmentationResult result = stage("segment", [&] {
    SegmentOptions options;
    options.threshold = cfg.threshold;
    options.grouping = cfg.grouping;
    options.workers = cfg.workers;
    options.kernel_size = cfg.kernel_size;
    options.patch = cfg.patch;
    return segment(quantized, grid, options);
  });
  result = stage("refine", [&] { return refine(result, cfg.refine, cfg.refine_k); });
  return {std::move(input), std::move(grid), std::move(result)};
}

// Runs the pipeline and writes its three outputs; throws on failure after
// removing whatever it had already written.
SegmentRun segment_to_dir(const RunConfig& cfg) {
  const auto start = Clock::now();
  Staged staged = run_stages(cfg);
  SegmentRun run{std::move(staged.result), 0.0};
  const PatchGrid& grid = staged.grid;
  const GrayImage& input = staged.input;

  Written written;
  try {
    stage("write", [&] {
      std::filesystem::create_directories(cfg.output_dir);
      const RenderedMasks masks = render_masks(run.result.mask(), grid, input);
      const auto mask_path = cfg.output_dir / "mask.png";
      const auto overlay_path = cfg.output_dir / "overlay.png";
      const auto json_path = cfg.output_dir / "result.json";
      write_png(mask_path, masks.mask);
      written.files.push_back(mask_path);
      write_png(overlay_path, masks.overlay);
      written.files.push_back(overlay_path);
      write_text_atomically(json_path, to_json(run.result).dump(2) + "\n");
      written.files.push_back(json_path);
    });
  } catch (...) {
    written.rollback();
    throw;
  }
  run.wall_ms = elapsed_ms(start);
  return run;
}

template <typename Fmt>
void print_grid(std::ostream& out, const char* title, std::size_t rows, std::size_t cols,
                Fmt&& cell) {
  out << title << ":\n";
  std::vector<std::string> text(rows * cols);
  std::size_t width = 1;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      text[r * cols + c] = cell(r, c);
      width = std::max(width, text[r * cols + c].size());
    }
  }
  for (std::size_t r = 0; r < rows; ++r) {
    out << ' ';
    for (std::size_t c = 0; c < cols; ++c) {
      out << ' ' << std::setw(static_cast<int>(width)) << text[r * cols + c];
    }
    out << '\n';
  }
}

std::string term_text(const Term& t) {
  if (t.empty()) return "1";
  std::string s;
  for (std::uint32_t row : t.rows()) s += "y" + std::to_string(row + 1);
  return s;
}

}  // namespace

SegmentRun run_pipeline(const RunConfig& cfg) {
  const auto start = Clock::now();
  SegmentRun run{run_stages(cfg).result, 0.0};
  run.wall_ms = elapsed_ms(start);
  return run;
}

int cmd_segment(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const SegmentRun run = segment_to_dir(cfg);
    out << "patches=" << run.result.records.size() << " edge=" << std::fixed
        << std::setprecision(2) << 100.0 * run.result.edge_fraction()
        << "% groups=" << run.result.groups.members.size() << " time="
        << std::setprecision(1) << run.wall_ms << "ms\n";
    out.unsetf(std::ios::floatfield);
    return kExitOk;
  } catch (const Error& e) {
    err << "pbpseg segment: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "pbpseg segment: internal error: " << e.what() << '\n';
    return kExitConsistency;
  }
}

int cmd_inspect(const RunConfig& cfg, std::size_t grid_row, std::size_t grid_col,
                std::ostream& out, std::ostream& err) {
  try {
    cfg.validate();
    GrayImage img = stage("load", [&] { return load_image(cfg.input); });
    if (cfg.kernel_size > 0) {
      img = stage("blur", [&] { return gaussian_blur(img, cfg.kernel_size); });
    }
    const QuantizedImage quantized = stage("quantize", [&] { return quantize(img, cfg.bin_width); });
    const PatchGrid grid =
        stage("grid", [&] { return plan_grid(quantized.width(), quantized.height(), cfg.patch); });
    if (grid_row >= grid.grid_rows || grid_col >= grid.grid_cols) {
      throw ParameterError("patch (" + std::to_string(grid_row) + "," +
                           std::to_string(grid_col) + ") outside the " +
                           std::to_string(grid.grid_rows) + "x" +
                           std::to_string(grid.grid_cols) + " grid");
    }
    const PatchRect& rect = grid.at(grid_row, grid_col);
    const CostMatrix c = extract(quantized, rect);
    const PermutationMatrix pi = permutation_matrix(c);
    const Grid<Cost> sorted = sorted_matrix(c, pi);
    const DeltaMatrix delta = delta_matrix(c, pi);
    const TermsMatrix terms = terms_matrix(pi);
    const PseudoBooleanPolynomial poly = aggregate(delta, terms);
    const PatchRecord record = classify_patch(c, cfg.threshold);

    out << "patch (" << grid_row << "," << grid_col << ") at x=" << rect.x
        << " y=" << rect.y << " size " << rect.height << "x" << rect.width << '\n';
    const auto num = [](auto v) { return std::to_string(v); };
    print_grid(out, "cost matrix C", c.rows(), c.cols(),
                     [&](std::size_t r, std::size_t j) { return num(c(r, j)); });
    print_grid(out, "permutation matrix Pi", c.rows(), c.cols(),
                     [&](std::size_t r, std::size_t j) { return num(pi(r, j) + 1); });
    print_grid(out, "sorted C", c.rows(), c.cols(),
                     [&](std::size_t r, std::size_t j) { return num(sorted(r, j)); });
    print_grid(out, "delta C", c.rows(), c.cols(),
                     [&](std::size_t r, std::size_t j) { return num(delta(r, j)); });
    print_grid(out, "terms matrix", c.rows(), c.cols(),
                     [&](std::size_t r, std::size_t j) { return term_text(terms(r, j)); });
    out << "polynomial: " << to_text(poly) << '\n';
    out << "packed columns: " << column_pack(poly).columns.size() << '\n';
    out << "degree: normal=" << record.degree_normal
        << " transposed=" << record.degree_transposed
        << " effective=" << record.effective_degree << '\n';
    out << "class (p=" << cfg.threshold << "): " << to_string(record.patch_class) << '\n';
    return kExitOk;
  } catch (const Error& e) {
    err << "pbpseg inspect: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "pbpseg inspect: internal error: " << e.what() << '\n';
    return kExitConsistency;
  }
}

std::string sweep_dir_name(const RunConfig& cfg) {
  return "patch" + to_string(cfg.patch) + "_bin" + std::to_string(cfg.bin_width) +
         "_gauss" + std::to_string(cfg.kernel_size) + "_p" + std::to_string(cfg.threshold);
}

int cmd_sweep(const RunConfig& base, const SweepRanges& ranges, std::ostream& out,
              std::ostream& err) {
  try {
    if (ranges.patches.empty() || ranges.bins.empty() || ranges.kernels.empty() ||
        ranges.thresholds.empty()) {
      throw ParameterError("every sweep range needs at least one value");
    }
    const std::size_t combos = ranges.patches.size() * ranges.bins.size() *
                               ranges.kernels.size() * ranges.thresholds.size();
    if (combos > kMaxSweepCombinations) {
      throw ParameterError("sweep has " + std::to_string(combos) +
                           " combinations; the cap is " +
                           std::to_string(kMaxSweepCombinations));
    }

    std::vector<RunConfig> configs;
    for (const PatchSpec& patch : ranges.patches) {
      for (int bin : ranges.bins) {
        for (int kernel : ranges.kernels) {
          for (std::size_t p : ranges.thresholds) {
            RunConfig cfg = base;
            cfg.patch = patch;
            cfg.bin_width = bin;
            cfg.kernel_size = kernel;
            cfg.threshold = p;
            cfg.output_dir = base.output_dir / sweep_dir_name(cfg);
            cfg.validate();
            configs.push_back(std::move(cfg));
          }
        }
      }
    }

    std::ostringstream csv;
    csv << "patch,bin,gaussian,threshold,patches,edge_percent,groups,wall_ms\n";
    for (const RunConfig& cfg : configs) {
      const SegmentRun run = segment_to_dir(cfg);
      csv << to_string(cfg.patch) << ',' << cfg.bin_width << ',' << cfg.kernel_size
          << ',' << cfg.threshold << ',' << run.result.records.size() << ','
          << std::fixed << std::setprecision(4) << 100.0 * run.result.edge_fraction()
          << ',' << run.result.groups.members.size() << ',' << std::setprecision(3)
          << run.wall_ms << '\n';
      csv.unsetf(std::ios::floatfield);
      out << sweep_dir_name(cfg) << ": patches=" << run.result.records.size()
          << " groups=" << run.result.groups.members.size() << '\n';
    }
    stage("write", [&] {
      std::filesystem::create_directories(base.output_dir);
      write_text_atomically(base.output_dir / "sweep.csv", csv.str());
    });
    return kExitOk;
  } catch (const Error& e) {
    err << "pbpseg sweep: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "pbpseg sweep: internal error: " << e.what() << '\n';
    return kExitConsistency;
  }
}

}  // namespace pbp
