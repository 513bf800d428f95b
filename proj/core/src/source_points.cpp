#include "ptfopt/source_points.hpp"

#include <cmath>
#include <numbers>

#include "ptfopt/errors.hpp"

namespace ptfopt {

std::vector<std::pair<double, int>> ring_sampling_circles(int ring_index, int bit_depth,
                                                          int samples_per_ring) {
  if (ring_index < 0 || ring_index >= bit_depth) {
    throw validation_error("ring index out of range");
  }
  if (samples_per_ring < 1) {
    throw validation_error("samples_per_ring must be at least 1");
  }
  double h = 1.0 / (static_cast<double>(bit_depth) * samples_per_ring);
  std::vector<std::pair<double, int>> out;
  out.reserve(samples_per_ring);
  for (int j = 0; j < samples_per_ring; ++j) {
    double r = (ring_index + (j + 0.5) / samples_per_ring) / bit_depth;
    int n = 2 * std::max(1, static_cast<int>(std::ceil(std::numbers::pi * r / h)));
    out.emplace_back(r, n);
  }
  return out;
}

SourcePointSet ring_source_points(int ring_index, int bit_depth, int samples_per_ring) {
  SourcePointSet set;
  for (const auto& [r, n] : ring_sampling_circles(ring_index, bit_depth, samples_per_ring)) {
    std::size_t base = set.points.size();
    set.points.resize(base + n);
    int half = n / 2;
    for (int t = 0; t < half; ++t) {
      double th = 2.0 * std::numbers::pi * t / n;
      set.points[base + t] = {r * std::cos(th), r * std::sin(th)};
    }
    // second half by exact negation, so inversion symmetry holds bitwise
    for (int t = 0; t < half; ++t) {
      const SourcePoint& p = set.points[base + t];
      set.points[base + half + t] = {-p.x, -p.y};
    }
  }
  return set;
}

SourcePointSet discretize_pattern(const RingPattern& pattern, int samples_per_ring) {
  if (pattern.mask == 0) {
    throw validation_error("empty pattern");
  }
  SourcePointSet set;
  for (int i : pattern.active_rings()) {
    SourcePointSet ring = ring_source_points(i, pattern.bit_depth, samples_per_ring);
    set.points.insert(set.points.end(), ring.points.begin(), ring.points.end());
  }
  return set;
}

}  // namespace ptfopt
