#include "ptfopt/radial_profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ptfopt/errors.hpp"

namespace ptfopt {

RadialProfile profile_from_grid(const Grid2D& g, const OpticsConfig& cfg) {
  if (g.size != cfg.grid_size) {
    throw validation_error("grid does not match the configured grid size");
  }
  const int n = g.size;
  const int ic = n / 2;
  const double du = cfg.cell();
  const int nb = cfg.nbins();
  constexpr int kSectors = 8;

  std::vector<double> sum(nb, 0.0);
  std::vector<long> cnt(nb, 0);
  std::vector<double> sector_sum(static_cast<std::size_t>(nb) * kSectors, 0.0);
  std::vector<long> sector_cnt(static_cast<std::size_t>(nb) * kSectors, 0);

  for (int iy = 0; iy < n; ++iy) {
    const double uy = (iy - ic) * du;
    for (int ix = 0; ix < n; ++ix) {
      const double ux = (ix - ic) * du;
      const double r = std::sqrt(ux * ux + uy * uy);
      const int b = static_cast<int>(std::floor(r / du + 0.5));
      if (b >= nb) {
        continue;  // grid corners beyond freq_extent
      }
      const double v = g.at(ix, iy);
      sum[b] += v;
      cnt[b] += 1;
      double th = std::atan2(uy, ux);
      int s = static_cast<int>((th + std::numbers::pi) / (2.0 * std::numbers::pi) * kSectors);
      s = std::clamp(s, 0, kSectors - 1);
      sector_sum[static_cast<std::size_t>(b) * kSectors + s] += v;
      sector_cnt[static_cast<std::size_t>(b) * kSectors + s] += 1;
    }
  }

  RadialProfile out;
  out.radii.resize(nb);
  out.values.resize(nb);
  out.sector_dev.assign(nb, 0.0);
  for (int b = 0; b < nb; ++b) {
    out.radii[b] = b * du;
    out.values[b] = cnt[b] > 0 ? sum[b] / cnt[b] : 0.0;
    double lo = 0.0, hi = 0.0;
    int populated = 0;
    for (int s = 0; s < kSectors; ++s) {
      if (sector_cnt[static_cast<std::size_t>(b) * kSectors + s] == 0) {
        continue;
      }
      double m = sector_sum[static_cast<std::size_t>(b) * kSectors + s] /
                 sector_cnt[static_cast<std::size_t>(b) * kSectors + s];
      if (populated == 0) {
        lo = hi = m;
      } else {
        lo = std::min(lo, m);
        hi = std::max(hi, m);
      }
      ++populated;
    }
    if (populated >= 2) {
      out.sector_dev[b] = 0.5 * (hi - lo);
      out.max_azimuthal_dev = std::max(out.max_azimuthal_dev, out.sector_dev[b]);
    }
  }
  return out;
}

}  // namespace ptfopt
