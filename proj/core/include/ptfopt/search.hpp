#pragma once

#include <cstdint>
#include <vector>

#include "ptfopt/criteria.hpp"
#include "ptfopt/ptf.hpp"
#include "ptfopt/radial_profile.hpp"

namespace ptfopt {

struct ScanOptions {
  double amp_eps = 1e-3;
  MeanWeighting weighting = MeanWeighting::uniform;
};

// Radial bin sums of every ring's unnormalized PTF grid. Azimuthal binning is
// linear in the grid, so a pattern's profile is the per-ring bin-sum total
// divided by cell counts and the pattern's point count — O(bit_depth * nbins)
// per pattern instead of O(grid^2). This is what makes the exhaustive scan a
// few milliseconds of ranking after the per-ring grids are built once.
class RingProfileCache {
 public:
  explicit RingProfileCache(const RingPtfCache& rings);

  RadialProfile pattern_profile(const RingPattern& pattern) const;
  int bit_depth() const { return bit_depth_; }
  const OpticsConfig& config() const { return cfg_; }

 private:
  int bit_depth_;
  OpticsConfig cfg_;
  std::vector<double> radii_;
  std::vector<double> bin_cells_;                  // cells per bin
  std::vector<std::vector<double>> ring_bin_sums_; // [ring][bin]
  std::vector<std::size_t> ring_counts_;           // points per ring
};

struct SearchResult {
  std::vector<CriteriaReport> reports;            // all masks, ascending
  std::vector<std::uint64_t> survivors_stage1;    // cutoff >= threshold, ascending
  std::vector<std::uint64_t> survivors_stage2;    // stage 1 with zero crossings, ascending
  std::vector<CriteriaReport> ranked;             // stage 2 by (mean_abs desc, mask asc)
  std::uint64_t optimal = 0;
  double stage1_threshold = 0.0;                  // (1 + (N-1)/N) - one radial bin
};

// Scores every mask in [1, 2^bit_depth - 1] and applies the filter cascade:
// keep maximal-cutoff patterns (within one radial bin of the theoretical
// maximum 1 + (N-1)/N), then zero-crossing-free ones, then rank by mean
// response. bit_depth is capped at 20 — the pattern count doubles per bit.
SearchResult exhaustive_scan(int bit_depth, const OpticsConfig& cfg,
                             int samples_per_ring, const ScanOptions& opts = {});

// Same cascade on a prebuilt profile cache (cheap to rerun with different
// thresholds or weighting).
SearchResult exhaustive_scan(const RingProfileCache& profiles,
                             const ScanOptions& opts = {});

// Reports (and optionally profiles) for a hand-picked mask list, e.g. the
// ring-position, ring-width and superposition sweeps.
std::vector<CriteriaReport> compare_patterns(const std::vector<RingPattern>& patterns,
                                             const RingPtfCache& cache,
                                             const ScanOptions& opts = {},
                                             std::vector<RadialProfile>* profiles_out = nullptr);

}  // namespace ptfopt
