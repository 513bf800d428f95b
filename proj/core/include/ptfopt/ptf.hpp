#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "ptfopt/grid.hpp"
#include "ptfopt/optics_config.hpp"
#include "ptfopt/ring_pattern.hpp"
#include "ptfopt/source_points.hpp"

namespace ptfopt {

// Phase transfer function sampled on the frequency grid. `values` is the
// normalized PTF unless a function documents otherwise; `source_count` is the
// number of point sources behind the normalization.
struct PTFGrid {
  Grid2D values;
  OpticsConfig config;
  std::size_t source_count = 0;
};

// Adds the single-source term
//   |P(u - rho_s)| * sin( k*z * ( sqrt(1 - NA^2*|u - rho_s|^2) - sqrt(1 - NA^2*|rho_s|^2) ) )
// to g over the binary pupil |u - rho_s| <= 1. The square roots are real
// precisely because the pupil bound caps |u - rho_s|; configurations with
// NA > 1 would make the argument negative inside the pupil and are rejected
// rather than clamped.
void accumulate_point_kernel(Grid2D& g, double sx, double sy, const OpticsConfig& cfg);

Grid2D point_kernel(double sx, double sy, const OpticsConfig& cfg);

// Unnormalized sum of point kernels; parallel over points with a
// deterministic per-chunk reduction.
Grid2D ptf_from_points(const SourcePointSet& points, const OpticsConfig& cfg);

struct RingPtf {
  Grid2D grid;              // unnormalized sum over the ring's points
  std::size_t count = 0;    // number of points summed
};

RingPtf ring_ptf(int ring_index, int bit_depth, const OpticsConfig& cfg,
                 int samples_per_ring);

// Per-ring PTF grids for one (bit_depth, config, sampling) triple. Rings are
// built lazily, once each, and are safe to request from concurrent readers.
// Patterns then reduce to weighted sums of at most bit_depth grids.
class RingPtfCache {
 public:
  RingPtfCache(int bit_depth, const OpticsConfig& cfg, int samples_per_ring);

  const RingPtf& ring(int ring_index) const;
  int bit_depth() const { return bit_depth_; }
  const OpticsConfig& config() const { return cfg_; }
  int samples_per_ring() const { return samples_per_ring_; }

 private:
  int bit_depth_;
  OpticsConfig cfg_;
  int samples_per_ring_;
  mutable std::vector<std::unique_ptr<RingPtf>> rings_;
  mutable std::unique_ptr<std::once_flag[]> built_;
};

// Normalized PTF of a pattern: (sum of active ring grids) / (sum of active
// ring point counts). O(grid^2) per pattern on top of the cache; agrees with
// the direct per-point sum to ~1e-12 relative (floating-point reassociation
// is the only difference).
PTFGrid pattern_ptf(const RingPattern& pattern, const RingPtfCache& cache);

// Same quantity computed by brute force from the pattern's full point set.
PTFGrid pattern_ptf_direct(const RingPattern& pattern, const OpticsConfig& cfg,
                           int samples_per_ring);

// 0.5*(H(u) + H(-u)) with the grid's exact index negation ix -> (size-ix) % size.
// An inversion-symmetric source makes H even in u up to point-placement
// rounding; symmetrizing restores exact evenness so that intensity spectra
// assembled from H are conjugate symmetric.
Grid2D symmetrized(const Grid2D& g);

}  // namespace ptfopt
