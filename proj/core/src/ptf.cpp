#include "ptfopt/ptf.hpp"

#include <algorithm>
#include <cmath>

#include "ptfopt/errors.hpp"
#include "ptfopt/parallel.hpp"

namespace ptfopt {

void accumulate_point_kernel(Grid2D& g, double sx, double sy, const OpticsConfig& cfg) {
  if (g.size != cfg.grid_size) {
    throw validation_error("kernel target grid does not match the configured grid size");
  }
  if (cfg.objective_na > 1.0) {
    throw numerical_error(
        "objective_na > 1 puts part of the pupil in the evanescent regime; "
        "the defocus kernel is undefined there");
  }
  double s2 = sx * sx + sy * sy;
  if (s2 > 1.0 + 1e-9) {
    throw validation_error("source point lies outside the pupil (|rho_s| > 1)");
  }
  const double na2 = cfg.objective_na * cfg.objective_na;
  double cs_arg = 1.0 - na2 * s2;
  if (cs_arg < 0.0) {
    // |rho_s| passed the tolerance check above, so this is rounding at s = 1, NA = 1.
    cs_arg = 0.0;
  }
  const double cs = std::sqrt(cs_arg);
  const double kz = cfg.wavenumber() * cfg.defocus;
  const int n = cfg.grid_size;
  const int ic = n / 2;
  const double du = cfg.cell();

  // Only cells inside the shifted pupil |u - rho_s| <= 1 contribute.
  const int rad = static_cast<int>(std::ceil(1.0 / du)) + 1;
  const int jx = static_cast<int>(std::lround(sx / du));
  const int jy = static_cast<int>(std::lround(sy / du));
  const int x0 = std::max(0, ic + jx - rad);
  const int x1 = std::min(n, ic + jx + rad + 1);
  const int y0 = std::max(0, ic + jy - rad);
  const int y1 = std::min(n, ic + jy + rad + 1);

  for (int iy = y0; iy < y1; ++iy) {
    const double dy = (iy - ic) * du - sy;
    const double dy2 = dy * dy;
    double* row = g.v.data() + static_cast<std::size_t>(iy) * n;
    for (int ix = x0; ix < x1; ++ix) {
      const double dx = (ix - ic) * du - sx;
      const double d2 = dx * dx + dy2;
      if (d2 <= 1.0) {
        row[ix] += std::sin(kz * (std::sqrt(1.0 - na2 * d2) - cs));
      }
    }
  }
}

Grid2D point_kernel(double sx, double sy, const OpticsConfig& cfg) {
  Grid2D g(cfg.grid_size);
  accumulate_point_kernel(g, sx, sy, cfg);
  return g;
}

Grid2D ptf_from_points(const SourcePointSet& points, const OpticsConfig& cfg) {
  const std::size_t n = points.points.size();
  if (n == 0) {
    throw validation_error("source point set is empty");
  }
  const int workers = std::min<std::size_t>(thread_count(), n);
  if (workers <= 1) {
    Grid2D g(cfg.grid_size);
    for (const SourcePoint& p : points.points) {
      accumulate_point_kernel(g, p.x, p.y, cfg);
    }
    return g;
  }
  std::vector<Grid2D> partial(workers);
  parallel_for(n, [&](std::size_t begin, std::size_t end, int chunk) {
    Grid2D local(cfg.grid_size);
    for (std::size_t i = begin; i < end; ++i) {
      accumulate_point_kernel(local, points.points[i].x, points.points[i].y, cfg);
    }
    partial[chunk] = std::move(local);
  });
  // chunk-ordered reduction keeps the summation order fixed
  Grid2D g = std::move(partial[0]);
  for (int c = 1; c < workers; ++c) {
    if (partial[c].size == 0) {
      continue;
    }
    for (std::size_t i = 0; i < g.v.size(); ++i) {
      g.v[i] += partial[c].v[i];
    }
  }
  return g;
}

RingPtf ring_ptf(int ring_index, int bit_depth, const OpticsConfig& cfg,
                 int samples_per_ring) {
  SourcePointSet pts = ring_source_points(ring_index, bit_depth, samples_per_ring);
  RingPtf out;
  out.grid = ptf_from_points(pts, cfg);
  out.count = pts.total_count();
  return out;
}

RingPtfCache::RingPtfCache(int bit_depth, const OpticsConfig& cfg, int samples_per_ring)
    : bit_depth_(bit_depth), cfg_(cfg), samples_per_ring_(samples_per_ring) {
  if (bit_depth < 1 || bit_depth > 63) {
    throw validation_error("bit_depth must be in [1, 63]");
  }
  if (samples_per_ring < 1) {
    throw validation_error("samples_per_ring must be at least 1");
  }
  rings_.resize(bit_depth);
  built_ = std::make_unique<std::once_flag[]>(bit_depth);
}

const RingPtf& RingPtfCache::ring(int ring_index) const {
  if (ring_index < 0 || ring_index >= bit_depth_) {
    throw validation_error("ring index out of range");
  }
  std::call_once(built_[ring_index], [&] {
    rings_[ring_index] =
        std::make_unique<RingPtf>(ring_ptf(ring_index, bit_depth_, cfg_, samples_per_ring_));
  });
  return *rings_[ring_index];
}

PTFGrid pattern_ptf(const RingPattern& pattern, const RingPtfCache& cache) {
  if (pattern.bit_depth != cache.bit_depth()) {
    throw validation_error("pattern bit depth does not match the ring cache");
  }
  if (pattern.mask == 0) {
    throw validation_error("empty pattern");
  }
  PTFGrid out;
  out.config = cache.config();
  out.values = Grid2D(out.config.grid_size);
  std::size_t total = 0;
  for (int i : pattern.active_rings()) {
    const RingPtf& r = cache.ring(i);
    for (std::size_t k = 0; k < out.values.v.size(); ++k) {
      out.values.v[k] += r.grid.v[k];
    }
    total += r.count;
  }
  const double inv = 1.0 / static_cast<double>(total);
  for (double& v : out.values.v) {
    v *= inv;
  }
  out.source_count = total;
  return out;
}

PTFGrid pattern_ptf_direct(const RingPattern& pattern, const OpticsConfig& cfg,
                           int samples_per_ring) {
  SourcePointSet pts = discretize_pattern(pattern, samples_per_ring);
  PTFGrid out;
  out.config = cfg;
  out.values = ptf_from_points(pts, cfg);
  out.source_count = pts.total_count();
  const double inv = 1.0 / static_cast<double>(out.source_count);
  for (double& v : out.values.v) {
    v *= inv;
  }
  return out;
}

Grid2D symmetrized(const Grid2D& g) {
  const int n = g.size;
  Grid2D out(n);
  for (int iy = 0; iy < n; ++iy) {
    const int my = (n - iy) % n;
    for (int ix = 0; ix < n; ++ix) {
      const int mx = (n - ix) % n;
      out.at(ix, iy) = 0.5 * (g.at(ix, iy) + g.at(mx, my));
    }
  }
  return out;
}

}  // namespace ptfopt
