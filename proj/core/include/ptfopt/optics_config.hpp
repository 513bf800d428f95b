#pragma once

#include <string>

namespace ptfopt {

// Physical and numerical parameters shared by every stage of the pipeline.
// All frequencies inside the library are NA-normalized: the objective pupil
// edge sits at radius 1 and the incoherent limit at radius 2. Conversion to
// physical cycles/m happens only at the I/O boundary.
struct OpticsConfig {
  double wavelength = 530e-9;  // lambda [m]
  double objective_na = 0.75;  // NA of the objective; pupil radius 1 in normalized units
  double defocus = 0.5e-6;     // z [m], signed
  int grid_size = 256;         // samples per side of the square frequency grid
  double freq_extent = 2.0;    // half-width of the normalized-frequency grid, >= 2

  double wavenumber() const;  // k = 2*pi/lambda
  double cell() const;        // grid step in normalized frequency
  // u at a grid index; index grid_size/2 maps exactly to u = 0.
  double freq_at(int idx) const;
  int nbins() const;  // radial bins with centers k*cell() covering [0, freq_extent]

  double to_physical(double u_norm) const;    // cycles/m
  double from_physical(double f_phys) const;  // normalized
  // Real-space sampling implied by the frequency grid: lambda/(2*freq_extent*NA).
  double pixel_pitch() const;
};

// Validates every field invariant; throws validation_error with the failing field.
OpticsConfig make_config(double wavelength, double objective_na, double defocus,
                         int grid_size, double freq_extent);

// JSON object with exactly the keys wavelength_m, objective_na, defocus_m,
// grid_size, freq_extent. Unknown or missing keys are rejected.
OpticsConfig config_from_json_text(const std::string& text);
OpticsConfig config_from_json_file(const std::string& path);
std::string config_to_json_text(const OpticsConfig& cfg);

}  // namespace ptfopt
