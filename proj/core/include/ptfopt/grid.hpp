#pragma once

#include <cstddef>
#include <vector>

namespace ptfopt {

// Square row-major grid of doubles; element (ix, iy) is v[iy*size + ix],
// so ix walks the x (column) axis and iy the y (row) axis.
struct Grid2D {
  int size = 0;
  std::vector<double> v;

  Grid2D() = default;
  explicit Grid2D(int n) : size(n), v(static_cast<std::size_t>(n) * n, 0.0) {}

  double& at(int ix, int iy) { return v[static_cast<std::size_t>(iy) * size + ix]; }
  double at(int ix, int iy) const { return v[static_cast<std::size_t>(iy) * size + ix]; }
};

}  // namespace ptfopt
