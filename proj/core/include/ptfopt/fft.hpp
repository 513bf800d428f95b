#pragma once

#include <complex>
#include <vector>

#include "ptfopt/grid.hpp"

namespace ptfopt {

// Thin wrappers over the system FFT with the usual DFT conventions:
// forward is unnormalized, the inverse applies the 1/size^2 factor.
// Spectra are in DFT index order (DC at index 0).

std::vector<std::complex<double>> fft2(const Grid2D& real_input);

std::vector<std::complex<double>> fft2(const std::vector<std::complex<double>>& input,
                                       int size);

std::vector<std::complex<double>> ifft2(const std::vector<std::complex<double>>& input,
                                        int size);

// Real part of the scaled inverse transform.
Grid2D ifft2_real(const std::vector<std::complex<double>>& spectrum, int size);

// Centered grid (u = 0 at index size/2) -> DFT order (u = 0 at index 0):
// out[(iy - c) mod n][(ix - c) mod n] = in[iy][ix].
std::vector<double> centered_to_dft_order(const Grid2D& centered);

}  // namespace ptfopt
