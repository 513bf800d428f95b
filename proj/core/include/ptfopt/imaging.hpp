#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "ptfopt/grid.hpp"
#include "ptfopt/optics_config.hpp"
#include "ptfopt/ptf.hpp"
#include "ptfopt/ring_pattern.hpp"

namespace ptfopt {

struct PhaseField {
  Grid2D values;             // radians
  double pixel_pitch = 0.0;  // meters
};

// Weak object: amplitude a0 + delta_a(r), phase phi(r). Only the pure-phase
// mode (delta_a identically zero) has a forward model here; the flag records
// whether |phi| exceeded the weak-object comfort zone (0.5 rad) at build time.
struct WeakObject {
  double a0 = 1.0;
  Grid2D delta_a;           // empty or all-zero in pure-phase mode
  PhaseField phase;
  bool weak_warning = false;
};

struct IntensityPlane {
  double z = 0.0;       // meters
  Grid2D intensity;
};

struct IntensityStack {
  std::vector<IntensityPlane> planes;
  double background = 1.0;  // B = a0^2
};

// Weak-object intensity at each requested defocus:
//   I_z = B + IFFT( FFT(phi) * H_z )   with H_z the pattern's symmetrized PTF.
// Planes at +z and -z share one PTF evaluation with the sign flipped, so the
// model's antisymmetry in z is exact by construction. Pure-phase mode only.
IntensityStack forward_intensity(const WeakObject& object, const RingPattern& pattern,
                                 const std::vector<double>& z_list,
                                 const OpticsConfig& cfg, int samples_per_ring);

// Same model with a caller-supplied PTF for the plane at +|z| (normalized,
// symmetrized internally). Avoids rebuilding ring grids when many stacks are
// simulated under one pattern.
IntensityStack forward_intensity(const WeakObject& object, const PTFGrid& ptf_at_plus_z,
                                 const std::vector<double>& z_list);

// FFT of I(+z) - I(-z); requires the stack to hold a +-z pair of equal |z|.
// In the forward model this equals 2 * FFT(phi) * H_z, and its DC sample is
// exactly zero (the background cancels).
std::vector<std::complex<double>> difference_spectrum(const IntensityStack& stack);

// Tikhonov inversion of the two-plane difference:
//   phi_rec(u) = D(u) * H(u) / (2 * (H(u)^2 + beta)),
// inverse-transformed, real part, mean anchored to zero (DC is unobservable).
// beta defaults to 1e-3 * max|H|^2 when not supplied; a supplied beta must be
// positive.
PhaseField reconstruct_phase(const std::vector<std::complex<double>>& diff_spectrum,
                             const PTFGrid& ptf, std::optional<double> beta = std::nullopt);

// Root-mean-square of (rec - truth) after restriction to the PTF passband
// (|H| > band_eps * max|H|) and removal of the truth's mean. The passband
// restriction scores only frequencies the pattern can actually transfer.
double in_passband_rmse(const PhaseField& rec, const PhaseField& truth,
                        const PTFGrid& ptf, double band_eps = 1e-3);

enum class TestObjectKind { bead, resolution_bars, smooth_random };

struct TestObjectParams {
  // bead: sphere of index n in a medium of index medium_n; projected
  // thickness 2*sqrt(R^2 - r^2) gives the phase map.
  double bead_diameter = 8e-6;
  double bead_n = 1.59;
  double bead_medium_n = 1.58;
  // resolution_bars: three vertical bars of the given width (center-to-center
  // period 2*width) and height, index n against medium_n.
  double bar_width = 0.274e-6;
  double bar_height = 200e-9;
  double bar_n = 1.52;
  double bar_medium_n = 1.0;
  // smooth_random: Gaussian random field band-limited to the annulus
  // [band_lo, band_hi] (normalized frequency, linear taper band_taper wide),
  // scaled to the given peak. Deterministic in the seed.
  double phase_peak = 0.2;
  double band_lo = 0.2;
  double band_hi = 1.2;
  double band_taper = 0.1;
  unsigned seed = 12345;
};

WeakObject make_test_object(TestObjectKind kind, const TestObjectParams& params,
                            const OpticsConfig& cfg);

}  // namespace ptfopt
