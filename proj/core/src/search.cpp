#include "ptfopt/search.hpp"

#include <algorithm>
#include <cmath>

#include "ptfopt/errors.hpp"
#include "ptfopt/parallel.hpp"

namespace ptfopt {

RingProfileCache::RingProfileCache(const RingPtfCache& rings)
    : bit_depth_(rings.bit_depth()), cfg_(rings.config()) {
  const int n = cfg_.grid_size;
  const int ic = n / 2;
  const double du = cfg_.cell();
  const int nb = cfg_.nbins();

  radii_.resize(nb);
  for (int b = 0; b < nb; ++b) {
    radii_[b] = b * du;
  }
  // bin index of every cell, reused across rings
  std::vector<int> cell_bin(static_cast<std::size_t>(n) * n);
  bin_cells_.assign(nb, 0.0);
  for (int iy = 0; iy < n; ++iy) {
    const double uy = (iy - ic) * du;
    for (int ix = 0; ix < n; ++ix) {
      const double ux = (ix - ic) * du;
      const int b = static_cast<int>(std::floor(std::sqrt(ux * ux + uy * uy) / du + 0.5));
      cell_bin[static_cast<std::size_t>(iy) * n + ix] = b < nb ? b : -1;
      if (b < nb) {
        bin_cells_[b] += 1.0;
      }
    }
  }

  ring_bin_sums_.resize(bit_depth_);
  ring_counts_.resize(bit_depth_);
  for (int i = 0; i < bit_depth_; ++i) {
    const RingPtf& r = rings.ring(i);
    ring_counts_[i] = r.count;
    std::vector<double>& sums = ring_bin_sums_[i];
    sums.assign(nb, 0.0);
    for (std::size_t k = 0; k < r.grid.v.size(); ++k) {
      const int b = cell_bin[k];
      if (b >= 0) {
        sums[b] += r.grid.v[k];
      }
    }
  }
}

RadialProfile RingProfileCache::pattern_profile(const RingPattern& pattern) const {
  if (pattern.bit_depth != bit_depth_) {
    throw validation_error("pattern bit depth does not match the profile cache");
  }
  if (pattern.mask == 0) {
    throw validation_error("empty pattern");
  }
  const int nb = static_cast<int>(radii_.size());
  RadialProfile out;
  out.radii = radii_;
  out.values.assign(nb, 0.0);
  std::size_t total = 0;
  for (int i = 0; i < bit_depth_; ++i) {
    if (!pattern.ring_active(i)) {
      continue;
    }
    const std::vector<double>& sums = ring_bin_sums_[i];
    for (int b = 0; b < nb; ++b) {
      out.values[b] += sums[b];
    }
    total += ring_counts_[i];
  }
  const double inv = 1.0 / static_cast<double>(total);
  for (int b = 0; b < nb; ++b) {
    out.values[b] *= inv / bin_cells_[b];
  }
  return out;
}

namespace {

SearchResult cascade(std::vector<CriteriaReport> reports, int bit_depth,
                     const OpticsConfig& cfg) {
  SearchResult res;
  res.reports = std::move(reports);
  res.stage1_threshold =
      1.0 + static_cast<double>(bit_depth - 1) / bit_depth - cfg.cell();

  for (const CriteriaReport& r : res.reports) {
    if (r.cutoff >= res.stage1_threshold - 1e-12) {
      res.survivors_stage1.push_back(r.mask);
      if (r.zero_crossings == 0) {
        res.survivors_stage2.push_back(r.mask);
        res.ranked.push_back(r);
      }
    }
  }
  if (res.ranked.empty()) {
    throw numerical_error("filter cascade left no survivors");
  }
  std::sort(res.ranked.begin(), res.ranked.end(),
            [](const CriteriaReport& a, const CriteriaReport& b) {
              if (a.mean_abs != b.mean_abs) {
                return a.mean_abs > b.mean_abs;
              }
              return a.mask < b.mask;
            });
  res.optimal = res.ranked.front().mask;
  return res;
}

}  // namespace

SearchResult exhaustive_scan(const RingProfileCache& profiles, const ScanOptions& opts) {
  const int bits = profiles.bit_depth();
  const std::size_t total = (std::size_t{1} << bits) - 1;
  std::vector<CriteriaReport> reports(total);
  parallel_for(total, [&](std::size_t begin, std::size_t end, int) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const std::uint64_t mask = idx + 1;
      RingPattern p;
      p.bit_depth = bits;
      p.mask = mask;
      RadialProfile prof = profiles.pattern_profile(p);
      reports[idx] = evaluate_profile(prof, mask, bits, opts.amp_eps, opts.weighting);
    }
  });
  return cascade(std::move(reports), bits, profiles.config());
}

SearchResult exhaustive_scan(int bit_depth, const OpticsConfig& cfg,
                             int samples_per_ring, const ScanOptions& opts) {
  if (bit_depth < 2 || bit_depth > 20) {
    throw validation_error("scan bit_depth must be in [2, 20] (cost doubles per bit)");
  }
  if (cfg.defocus == 0.0) {
    throw validation_error("scan at zero defocus: every transfer function vanishes");
  }
  RingPtfCache rings(bit_depth, cfg, samples_per_ring);
  RingProfileCache profiles(rings);
  return exhaustive_scan(profiles, opts);
}

std::vector<CriteriaReport> compare_patterns(const std::vector<RingPattern>& patterns,
                                             const RingPtfCache& cache,
                                             const ScanOptions& opts,
                                             std::vector<RadialProfile>* profiles_out) {
  std::vector<CriteriaReport> out;
  out.reserve(patterns.size());
  if (profiles_out) {
    profiles_out->clear();
  }
  for (const RingPattern& p : patterns) {
    PTFGrid grid = pattern_ptf(p, cache);
    RadialProfile prof = profile_from_grid(grid.values, cache.config());
    out.push_back(evaluate_profile(prof, p.mask, p.bit_depth, opts.amp_eps, opts.weighting));
    if (profiles_out) {
      profiles_out->push_back(std::move(prof));
    }
  }
  return out;
}

}  // namespace ptfopt
