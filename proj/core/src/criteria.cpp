#include "ptfopt/criteria.hpp"

#include <cmath>

#include "ptfopt/errors.hpp"

namespace ptfopt {

namespace {

double peak_magnitude(const RadialProfile& p) {
  double peak = 0.0;
  for (double v : p.values) {
    peak = std::max(peak, std::fabs(v));
  }
  return peak;
}

// Index of the outermost bin above the relative threshold, or -1.
int cutoff_bin(const RadialProfile& p, double amp_eps_rel) {
  const double peak = peak_magnitude(p);
  if (peak == 0.0) {
    return -1;
  }
  const double eps = amp_eps_rel * peak;
  for (int b = static_cast<int>(p.values.size()) - 1; b >= 0; --b) {
    if (std::fabs(p.values[b]) > eps) {
      return b;
    }
  }
  return -1;
}

}  // namespace

double cutoff_frequency(const RadialProfile& profile, double amp_eps_rel) {
  if (!(amp_eps_rel > 0.0)) {
    throw validation_error("amp_eps must be positive");
  }
  const int b = cutoff_bin(profile, amp_eps_rel);
  return b < 0 ? 0.0 : profile.radii[b];
}

int count_zero_crossings(const RadialProfile& profile, double amp_eps_rel) {
  if (!(amp_eps_rel > 0.0)) {
    throw validation_error("amp_eps must be positive");
  }
  const int bcut = cutoff_bin(profile, amp_eps_rel);
  if (bcut < 1) {
    return 0;
  }
  const double eps = amp_eps_rel * peak_magnitude(profile);
  int last = 0;
  int crossings = 0;
  for (int b = 1; b <= bcut; ++b) {
    if (std::fabs(profile.values[b]) <= eps) {
      continue;
    }
    const int sign = profile.values[b] > 0.0 ? 1 : -1;
    if (last != 0 && sign != last) {
      ++crossings;
    }
    last = sign;
  }
  return crossings;
}

double mean_abs_response(const RadialProfile& profile, double cutoff,
                         MeanWeighting weighting) {
  if (!(cutoff > 0.0)) {
    throw numerical_error("cutoff is zero: mean response is undefined");
  }
  if (profile.radii.size() < 2) {
    throw validation_error("profile has too few bins");
  }
  const double du = profile.radii[1] - profile.radii[0];
  int bcut = static_cast<int>(std::lround(cutoff / du));
  bcut = std::min(bcut, static_cast<int>(profile.values.size()) - 1);
  double acc = 0.0;
  double wsum = 0.0;
  for (int b = 1; b <= bcut; ++b) {
    const double w = weighting == MeanWeighting::area ? profile.radii[b] : 1.0;
    acc += w * std::fabs(profile.values[b]);
    wsum += w;
  }
  return acc / wsum;
}

CriteriaReport evaluate_profile(const RadialProfile& profile, std::uint64_t mask,
                                int bit_depth, double amp_eps_rel,
                                MeanWeighting weighting) {
  CriteriaReport r;
  r.mask = mask;
  r.bit_depth = bit_depth;
  r.cutoff = cutoff_frequency(profile, amp_eps_rel);
  r.zero_crossings = count_zero_crossings(profile, amp_eps_rel);
  r.mean_abs = mean_abs_response(profile, r.cutoff, weighting);
  return r;
}

CriteriaReport evaluate(const RingPattern& pattern, const RingPtfCache& cache,
                        double amp_eps_rel, MeanWeighting weighting) {
  PTFGrid grid = pattern_ptf(pattern, cache);
  RadialProfile profile = profile_from_grid(grid.values, cache.config());
  return evaluate_profile(profile, pattern.mask, pattern.bit_depth, amp_eps_rel, weighting);
}

}  // namespace ptfopt
