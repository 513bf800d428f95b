#pragma once

#include <vector>

#include "ptfopt/grid.hpp"
#include "ptfopt/optics_config.hpp"

namespace ptfopt {

// Azimuthal average of a grid over annular bins one grid cell wide.
// radii[b] = b*cell(); a cell at radius r lands in bin floor(r/cell + 0.5).
// Cells beyond freq_extent (grid corners) are outside the profile domain.
struct RadialProfile {
  std::vector<double> radii;
  std::vector<double> values;
  // Azimuthal anisotropy diagnostic, one entry per bin: half the spread of
  // the bin's eight azimuthal sector means (0 where fewer than two sectors
  // are populated). Sector means estimate the azimuthal dependence at the
  // bin's radius; cell-level scatter inside a bin is dominated by the radial
  // slope across the bin's width and would not measure anisotropy.
  std::vector<double> sector_dev;
  double max_azimuthal_dev = 0.0;  // max of sector_dev
};

RadialProfile profile_from_grid(const Grid2D& g, const OpticsConfig& cfg);

}  // namespace ptfopt
