#include "ptfopt/imaging.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "ptfopt/errors.hpp"
#include "ptfopt/fft.hpp"
#include "ptfopt/source_points.hpp"

namespace ptfopt {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_pure_phase(const WeakObject& object, int grid_size) {
  if (object.a0 <= 0.0) {
    throw validation_error("object background amplitude must be positive");
  }
  if (!object.delta_a.v.empty()) {
    for (double a : object.delta_a.v) {
      if (a != 0.0) {
        throw validation_error(
            "amplitude contrast is not supported by the phase-only forward model");
      }
    }
  }
  if (object.phase.values.size != grid_size ||
      object.phase.values.v.size() !=
          static_cast<std::size_t>(grid_size) * grid_size) {
    throw validation_error("object phase grid does not match the configured grid size");
  }
}

// I_z = B + Re IFFT( FFT(phi) * sign * H ), with H in DFT order.
Grid2D intensity_plane(const std::vector<std::complex<double>>& phase_spectrum,
                       const std::vector<double>& h_dft, double sign,
                       double background, int n) {
  std::vector<std::complex<double>> prod(phase_spectrum.size());
  for (std::size_t i = 0; i < prod.size(); ++i) {
    prod[i] = phase_spectrum[i] * (sign * h_dft[i]);
  }
  Grid2D img = ifft2_real(prod, n);
  for (double& v : img.v) {
    v += background;
  }
  return img;
}

Grid2D flat_plane(int n, double background) {
  Grid2D img(n);
  std::fill(img.v.begin(), img.v.end(), background);
  return img;
}

std::vector<double> normalized_symmetric_dft(const PTFGrid& ptf) {
  return centered_to_dft_order(symmetrized(ptf.values));
}

}  // namespace

IntensityStack forward_intensity(const WeakObject& object, const RingPattern& pattern,
                                 const std::vector<double>& z_list,
                                 const OpticsConfig& cfg, int samples_per_ring) {
  const int n = cfg.grid_size;
  check_pure_phase(object, n);
  if (z_list.empty()) {
    throw validation_error("forward model needs at least one defocus plane");
  }

  const double background = object.a0 * object.a0;
  IntensityStack stack;
  stack.background = background;
  stack.planes.reserve(z_list.size());

  const SourcePointSet points = discretize_pattern(pattern, samples_per_ring);

  std::vector<std::complex<double>> phase_spectrum;
  // One symmetrized PTF per distinct |z|; the +-z pair shares it with the
  // sign flipped, so antisymmetry of the model in z is exact by construction.
  std::vector<std::pair<double, std::vector<double>>> h_by_absz;

  for (double z : z_list) {
    if (z == 0.0) {
      stack.planes.push_back({z, flat_plane(n, background)});
      continue;
    }
    if (phase_spectrum.empty()) {
      phase_spectrum = fft2(object.phase.values);
    }
    const double az = std::abs(z);
    const std::vector<double>* h = nullptr;
    for (const auto& entry : h_by_absz) {
      if (entry.first == az) {
        h = &entry.second;
        break;
      }
    }
    if (!h) {
      OpticsConfig cfg_z = cfg;
      cfg_z.defocus = az;
      Grid2D sum = ptf_from_points(points, cfg_z);
      const double inv = 1.0 / static_cast<double>(points.total_count());
      for (double& v : sum.v) {
        v *= inv;
      }
      h_by_absz.emplace_back(az, centered_to_dft_order(symmetrized(sum)));
      h = &h_by_absz.back().second;
    }
    const double sign = z > 0.0 ? 1.0 : -1.0;
    stack.planes.push_back({z, intensity_plane(phase_spectrum, *h, sign, background, n)});
  }
  return stack;
}

IntensityStack forward_intensity(const WeakObject& object, const PTFGrid& ptf_at_plus_z,
                                 const std::vector<double>& z_list) {
  const OpticsConfig& cfg = ptf_at_plus_z.config;
  const int n = cfg.grid_size;
  check_pure_phase(object, n);
  if (z_list.empty()) {
    throw validation_error("forward model needs at least one defocus plane");
  }
  const double zp = cfg.defocus;
  if (zp <= 0.0) {
    throw validation_error(
        "the supplied transfer function must be evaluated at a positive defocus");
  }
  if (ptf_at_plus_z.values.size != n) {
    throw validation_error("transfer function grid does not match its configuration");
  }

  const double background = object.a0 * object.a0;
  IntensityStack stack;
  stack.background = background;
  stack.planes.reserve(z_list.size());

  std::vector<std::complex<double>> phase_spectrum;
  std::vector<double> h_dft;

  for (double z : z_list) {
    if (z == 0.0) {
      stack.planes.push_back({z, flat_plane(n, background)});
      continue;
    }
    if (std::abs(std::abs(z) - zp) > 1e-12 * zp) {
      throw validation_error(
          "requested plane is not at the transfer function's defocus");
    }
    if (phase_spectrum.empty()) {
      phase_spectrum = fft2(object.phase.values);
      h_dft = normalized_symmetric_dft(ptf_at_plus_z);
    }
    const double sign = z > 0.0 ? 1.0 : -1.0;
    stack.planes.push_back({z, intensity_plane(phase_spectrum, h_dft, sign, background, n)});
  }
  return stack;
}

std::vector<std::complex<double>> difference_spectrum(const IntensityStack& stack) {
  const IntensityPlane* plus = nullptr;
  const IntensityPlane* minus = nullptr;
  for (const IntensityPlane& p : stack.planes) {
    if (p.z <= 0.0) {
      continue;
    }
    for (const IntensityPlane& q : stack.planes) {
      if (q.z < 0.0 && std::abs(q.z + p.z) <= 1e-12 * p.z) {
        plus = &p;
        minus = &q;
        break;
      }
    }
    if (plus) {
      break;
    }
  }
  if (!plus) {
    throw validation_error("difference spectrum needs planes at +z and -z of equal |z|");
  }
  const int n = plus->intensity.size;
  if (minus->intensity.size != n) {
    throw validation_error("defocus pair was recorded on mismatched grids");
  }
  Grid2D diff(n);
  for (std::size_t i = 0; i < diff.v.size(); ++i) {
    diff.v[i] = plus->intensity.v[i] - minus->intensity.v[i];
  }
  return fft2(diff);
}

PhaseField reconstruct_phase(const std::vector<std::complex<double>>& diff_spectrum,
                             const PTFGrid& ptf, std::optional<double> beta) {
  const int n = ptf.config.grid_size;
  if (ptf.values.size != n) {
    throw validation_error("transfer function grid does not match its configuration");
  }
  if (diff_spectrum.size() != static_cast<std::size_t>(n) * n) {
    throw validation_error("difference spectrum does not match the configured grid size");
  }

  const std::vector<double> h_dft = normalized_symmetric_dft(ptf);
  double max_h2 = 0.0;
  for (double h : h_dft) {
    max_h2 = std::max(max_h2, h * h);
  }
  if (max_h2 == 0.0) {
    throw numerical_error("transfer function is identically zero; nothing to invert");
  }
  double b;
  if (beta.has_value()) {
    if (!(*beta > 0.0)) {
      throw validation_error("regularization strength must be positive");
    }
    b = *beta;
  } else {
    b = 1e-3 * max_h2;
  }

  std::vector<std::complex<double>> phase_spectrum(diff_spectrum.size());
  for (std::size_t i = 0; i < phase_spectrum.size(); ++i) {
    const double h = h_dft[i];
    phase_spectrum[i] = diff_spectrum[i] * (h / (2.0 * (h * h + b)));
  }
  Grid2D rec = ifft2_real(phase_spectrum, n);

  // The DC component is unobservable (H(0) = 0): anchor the mean at zero.
  double mean = 0.0;
  for (double v : rec.v) {
    mean += v;
  }
  mean /= static_cast<double>(rec.v.size());
  for (double& v : rec.v) {
    v -= mean;
  }

  PhaseField out;
  out.values = std::move(rec);
  out.pixel_pitch = ptf.config.pixel_pitch();
  return out;
}

double in_passband_rmse(const PhaseField& rec, const PhaseField& truth,
                        const PTFGrid& ptf, double band_eps) {
  const int n = ptf.config.grid_size;
  if (rec.values.size != n || truth.values.size != n) {
    throw validation_error("phase grids do not match the transfer function grid");
  }
  if (!(band_eps > 0.0)) {
    throw validation_error("passband threshold must be positive");
  }

  double truth_mean = 0.0;
  for (double v : truth.values.v) {
    truth_mean += v;
  }
  truth_mean /= static_cast<double>(truth.values.v.size());

  Grid2D err(n);
  for (std::size_t i = 0; i < err.v.size(); ++i) {
    err.v[i] = rec.values.v[i] - (truth.values.v[i] - truth_mean);
  }

  const std::vector<double> h_dft = normalized_symmetric_dft(ptf);
  double max_abs = 0.0;
  for (double h : h_dft) {
    max_abs = std::max(max_abs, std::abs(h));
  }
  std::vector<std::complex<double>> err_spec = fft2(err);
  for (std::size_t i = 0; i < err_spec.size(); ++i) {
    if (std::abs(h_dft[i]) <= band_eps * max_abs) {
      err_spec[i] = 0.0;
    }
  }
  Grid2D err_pb = ifft2_real(err_spec, n);
  double acc = 0.0;
  for (double v : err_pb.v) {
    acc += v * v;
  }
  return std::sqrt(acc / static_cast<double>(err_pb.v.size()));
}

namespace {

Grid2D bead_phase(const TestObjectParams& p, const OpticsConfig& cfg) {
  const int n = cfg.grid_size;
  const double pitch = cfg.pixel_pitch();
  if (!(p.bead_diameter > 0.0)) {
    throw validation_error("bead diameter must be positive");
  }
  if (p.bead_diameter >= n * pitch) {
    throw validation_error("test feature is larger than the field of view");
  }
  const double radius = 0.5 * p.bead_diameter;
  const double dn = p.bead_n - p.bead_medium_n;
  const double k = cfg.wavenumber();
  const int c = n / 2;
  Grid2D phase(n);
  for (int iy = 0; iy < n; ++iy) {
    const double dy = (iy - c) * pitch;
    for (int ix = 0; ix < n; ++ix) {
      const double dx = (ix - c) * pitch;
      const double r2 = dx * dx + dy * dy;
      if (r2 < radius * radius) {
        phase.at(ix, iy) = k * dn * 2.0 * std::sqrt(radius * radius - r2);
      }
    }
  }
  return phase;
}

Grid2D bars_phase(const TestObjectParams& p, const OpticsConfig& cfg) {
  const int n = cfg.grid_size;
  const double pitch = cfg.pixel_pitch();
  if (!(p.bar_width > 0.0) || p.bar_height < 0.0) {
    throw validation_error("bar width must be positive and height non-negative");
  }
  const int w = std::max<int>(1, std::lround(p.bar_width / pitch));
  if (5 * w > n || 8 * w > n) {
    throw validation_error("test feature is larger than the field of view");
  }
  const double phi0 = cfg.wavenumber() * (p.bar_n - p.bar_medium_n) * p.bar_height;
  const int x0 = n / 2 - (5 * w) / 2;
  const int y0 = n / 2 - 4 * w;
  Grid2D phase(n);
  for (int bar = 0; bar < 3; ++bar) {
    const int bx = x0 + 2 * bar * w;
    for (int iy = y0; iy < y0 + 8 * w; ++iy) {
      for (int ix = bx; ix < bx + w; ++ix) {
        phase.at(ix, iy) = phi0;
      }
    }
  }
  return phase;
}

Grid2D smooth_random_phase(const TestObjectParams& p, const OpticsConfig& cfg) {
  const int n = cfg.grid_size;
  if (!(p.phase_peak > 0.0)) {
    throw validation_error("phase peak must be positive");
  }
  if (!(p.band_lo >= 0.0) || !(p.band_hi > p.band_lo) || !(p.band_taper > 0.0)) {
    throw validation_error("band-limit parameters must satisfy 0 <= lo < hi, taper > 0");
  }
  if (p.band_hi > cfg.freq_extent) {
    throw validation_error("band limit exceeds the frequency extent of the grid");
  }

  // White Gaussian field, deterministic in the seed.
  std::mt19937 rng(p.seed);
  Grid2D noise(n);
  auto uniform01 = [&rng]() {
    return (static_cast<double>(rng()) + 0.5) / 4294967296.0;
  };
  for (std::size_t i = 0; i < noise.v.size(); ++i) {
    const double u1 = uniform01();
    const double u2 = uniform01();
    noise.v[i] = std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

  // Band-limit to the annulus [band_lo, band_hi] with a linear taper.
  const double du = cfg.cell();
  const int c = n / 2;
  Grid2D band(n);
  auto clip01 = [](double x) { return std::clamp(x, 0.0, 1.0); };
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      const double r = std::hypot((ix - c) * du, (iy - c) * du);
      band.at(ix, iy) = clip01((r - p.band_lo) / p.band_taper) *
                        clip01((p.band_hi - r) / p.band_taper);
    }
  }
  const std::vector<double> band_dft = centered_to_dft_order(band);

  std::vector<std::complex<double>> spec = fft2(noise);
  for (std::size_t i = 0; i < spec.size(); ++i) {
    spec[i] *= band_dft[i];
  }
  Grid2D phase = ifft2_real(spec, n);

  double max_abs = 0.0;
  for (double v : phase.v) {
    max_abs = std::max(max_abs, std::abs(v));
  }
  if (max_abs == 0.0) {
    throw numerical_error("band-limited field vanished; widen the band");
  }
  const double scale = p.phase_peak / max_abs;
  for (double& v : phase.v) {
    v *= scale;
  }
  return phase;
}

}  // namespace

WeakObject make_test_object(TestObjectKind kind, const TestObjectParams& params,
                            const OpticsConfig& cfg) {
  WeakObject obj;
  obj.a0 = 1.0;
  switch (kind) {
    case TestObjectKind::bead:
      obj.phase.values = bead_phase(params, cfg);
      break;
    case TestObjectKind::resolution_bars:
      obj.phase.values = bars_phase(params, cfg);
      break;
    case TestObjectKind::smooth_random:
      obj.phase.values = smooth_random_phase(params, cfg);
      break;
  }
  obj.phase.pixel_pitch = cfg.pixel_pitch();
  double max_abs = 0.0;
  for (double v : obj.phase.values.v) {
    max_abs = std::max(max_abs, std::abs(v));
  }
  obj.weak_warning = max_abs > 0.5;
  return obj;
}

}  // namespace ptfopt
