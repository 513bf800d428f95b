#pragma once

#include <cstdint>

#include "ptfopt/ptf.hpp"
#include "ptfopt/radial_profile.hpp"
#include "ptfopt/ring_pattern.hpp"

namespace ptfopt {

// The three per-pattern quality figures: passband cutoff, zero-crossing
// count inside the passband, and mean absolute response over the passband.
struct CriteriaReport {
  std::uint64_t mask = 0;
  int bit_depth = 0;
  double cutoff = 0.0;
  int zero_crossings = 0;
  double mean_abs = 0.0;
};

// Radial weighting of the passband mean. Uniform is the default; area
// weighting (weight proportional to radius) exists to check that the ranking
// of patterns does not hinge on the choice.
enum class MeanWeighting { uniform, area };

// Largest bin-center radius where |profile| exceeds amp_eps_rel * peak
// magnitude; 0 when the profile is identically zero. The relative threshold
// makes the cutoff insensitive to sampling density.
double cutoff_frequency(const RadialProfile& profile, double amp_eps_rel = 1e-3);

// Strict sign changes of the profile over (0, cutoff]: bins at or below the
// amplitude threshold are skipped (tangential zeros and numerical noise are
// not crossings), and a crossing is counted when consecutive above-threshold
// bins have opposite signs. The DC zero never counts.
int count_zero_crossings(const RadialProfile& profile, double amp_eps_rel = 1e-3);

// Mean of |profile| over bins in (0, cutoff]. Throws numerical_error when
// cutoff is 0 (score undefined).
double mean_abs_response(const RadialProfile& profile, double cutoff,
                         MeanWeighting weighting = MeanWeighting::uniform);

CriteriaReport evaluate_profile(const RadialProfile& profile, std::uint64_t mask,
                                int bit_depth, double amp_eps_rel = 1e-3,
                                MeanWeighting weighting = MeanWeighting::uniform);

// pattern -> PTF -> radial profile -> report.
CriteriaReport evaluate(const RingPattern& pattern, const RingPtfCache& cache,
                        double amp_eps_rel = 1e-3,
                        MeanWeighting weighting = MeanWeighting::uniform);

}  // namespace ptfopt
