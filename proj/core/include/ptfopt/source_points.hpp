#pragma once

#include <cstddef>
#include <vector>

#include "ptfopt/ring_pattern.hpp"

namespace ptfopt {

struct SourcePoint {
  double x = 0.0;
  double y = 0.0;
};

// Discrete point sources (normalized source-frequency coordinates) realizing
// a pattern. Built so that for every point the exact negation is also in the
// set: the second half of each circle is stored as the elementwise negation
// of the first half.
struct SourcePointSet {
  std::vector<SourcePoint> points;
  std::size_t total_count() const { return points.size(); }
};

// Sampling circles for one ring: cell-centered radii (i + (j+0.5)/M)/N for
// j = 0..M-1, each with an even azimuthal count 2*max(1, ceil(pi*r/h)) where
// h = 1/(N*M), which keeps arc spacing <= radial spacing (uniform areal
// density across rings).
std::vector<std::pair<double, int>> ring_sampling_circles(int ring_index, int bit_depth,
                                                          int samples_per_ring);

SourcePointSet ring_source_points(int ring_index, int bit_depth, int samples_per_ring);

// Union of the active rings' point sets, rings in ascending index order.
SourcePointSet discretize_pattern(const RingPattern& pattern, int samples_per_ring);

}  // namespace ptfopt
