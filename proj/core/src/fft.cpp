#include "ptfopt/fft.hpp"

#include <fftw3.h>

#include <mutex>

#include "ptfopt/errors.hpp"

namespace ptfopt {

namespace {

// FFTW planner functions are not thread-safe; execution of a plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

void run_transform(std::vector<std::complex<double>>& buf, int size, int sign) {
  fftw_complex* data = reinterpret_cast<fftw_complex*>(buf.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_2d(size, size, data, data, sign, FFTW_ESTIMATE);
  }
  if (!plan) {
    throw numerical_error("FFT planning failed");
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
}

}  // namespace

std::vector<std::complex<double>> fft2(const std::vector<std::complex<double>>& in,
                                       int size) {
  if (static_cast<std::size_t>(size) * size != in.size()) {
    throw validation_error("FFT input size does not match grid dimensions");
  }
  std::vector<std::complex<double>> buf = in;
  run_transform(buf, size, FFTW_FORWARD);
  return buf;
}

std::vector<std::complex<double>> fft2(const Grid2D& in) {
  std::vector<std::complex<double>> buf(in.v.size());
  for (std::size_t i = 0; i < in.v.size(); ++i) {
    buf[i] = std::complex<double>(in.v[i], 0.0);
  }
  run_transform(buf, in.size, FFTW_FORWARD);
  return buf;
}

std::vector<std::complex<double>> ifft2(const std::vector<std::complex<double>>& in,
                                        int size) {
  if (static_cast<std::size_t>(size) * size != in.size()) {
    throw validation_error("FFT input size does not match grid dimensions");
  }
  std::vector<std::complex<double>> buf = in;
  run_transform(buf, size, FFTW_BACKWARD);
  const double scale = 1.0 / (static_cast<double>(size) * size);
  for (std::complex<double>& c : buf) {
    c *= scale;
  }
  return buf;
}

Grid2D ifft2_real(const std::vector<std::complex<double>>& in, int size) {
  std::vector<std::complex<double>> full = ifft2(in, size);
  Grid2D out;
  out.size = size;
  out.v.resize(full.size());
  for (std::size_t i = 0; i < full.size(); ++i) {
    out.v[i] = full[i].real();
  }
  return out;
}

std::vector<double> centered_to_dft_order(const Grid2D& in) {
  const int n = in.size;
  const int c = n / 2;
  std::vector<double> out(in.v.size());
  for (int fy = 0; fy < n; ++fy) {
    for (int fx = 0; fx < n; ++fx) {
      out[static_cast<std::size_t>(fy) * n + fx] = in.at((fx + c) % n, (fy + c) % n);
    }
  }
  return out;
}

}  // namespace ptfopt
