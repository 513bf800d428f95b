#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ptfopt/criteria.hpp"
#include "ptfopt/grid.hpp"
#include "ptfopt/radial_profile.hpp"

namespace ptfopt {

// Sidecar metadata accompanying every binary grid file.
struct GridSidecar {
  int grid_size = 0;
  double freq_extent = 0.0;
  double defocus_m = 0.0;
  std::uint64_t pattern_mask = 0;
  int bit_depth = 0;
};

// Deterministic shortest-round-trip-ish formatting used by every text
// artifact ("%.12g"); identical inputs give identical bytes.
std::string format_double(double value);

// Writes stem + ".f32" (raw little-endian float32, row-major) and
// stem + ".json" (the sidecar).
void write_grid(const std::string& stem, const Grid2D& grid, const GridSidecar& sidecar);

// Reads the pair back (values carry float32 precision).
Grid2D read_grid(const std::string& stem, GridSidecar* sidecar_out = nullptr);

// Checks that the payload and sidecar of stem are mutually consistent:
// sidecar parses, fields are valid, payload size equals grid_size^2 floats.
// Throws validation_error describing the first mismatch.
void verify_grid_pair(const std::string& stem);

// Two-column CSV "u_norm,value".
void write_profile_csv(const std::string& path, const RadialProfile& profile);

// CSV rows "mask,bit_depth,cutoff,crossings,mean_abs" with that header.
void write_reports_csv(const std::string& path, const std::vector<CriteriaReport>& reports);
std::string reports_csv_text(const std::vector<CriteriaReport>& reports);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace ptfopt
