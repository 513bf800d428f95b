#include <doctest.h>

#include <cmath>
#include <random>

#include "ptfopt/errors.hpp"
#include "ptfopt/ptf.hpp"
#include "ptfopt/radial_profile.hpp"
#include "test_fixtures.hpp"

using namespace ptfopt;

namespace {

double max_abs(const Grid2D& g) {
  double m = 0.0;
  for (double v : g.v) {
    m = std::max(m, std::fabs(v));
  }
  return m;
}

double max_abs_diff(const Grid2D& a, const Grid2D& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.v.size(); ++i) {
    m = std::max(m, std::fabs(a.v[i] - b.v[i]));
  }
  return m;
}

}  // namespace

TEST_SUITE("transfer_function") {

TEST_CASE("on-axis point kernel matches the closed form inside the pupil") {
  const OpticsConfig& cfg = testfix::default_cfg();
  Grid2D g = point_kernel(0.0, 0.0, cfg);
  const double kz = cfg.wavenumber() * cfg.defocus;
  const double na2 = cfg.objective_na * cfg.objective_na;
  const int c = cfg.grid_size / 2;
  const double du = cfg.cell();

  // center: u = rho_s = 0, so the phase difference vanishes identically
  CHECK(g.at(c, c) == 0.0);

  for (int ix : {c + 10, c + 40, c + 63, c + 64, c + 65, c + 100}) {
    const double u = (ix - c) * du;
    const double d2 = u * u;
    double expected = 0.0;
    if (d2 <= 1.0) {
      expected = std::sin(kz * (std::sqrt(1.0 - na2 * d2) - 1.0));
    }
    CHECK(g.at(ix, c) == doctest::Approx(expected).epsilon(1e-14));
  }
  // |u| = 1 is the last column inside the pupil: 64 cells of 0.015625
  CHECK(g.at(c + 64, c) != 0.0);
  CHECK(g.at(c + 65, c) == 0.0);
}

TEST_CASE("kernel pupil bound: H(0) = 0 for any source point") {
  const OpticsConfig& cfg = testfix::default_cfg();
  Grid2D g = point_kernel(0.7, -0.3, cfg);
  CHECK(g.at(cfg.grid_size / 2, cfg.grid_size / 2) == 0.0);
}

TEST_CASE("evanescent and out-of-pupil configurations are rejected, not clamped") {
  OpticsConfig cfg = make_config(530e-9, 1.2, 0.5e-6, 128, 2.0);
  Grid2D g(cfg.grid_size);
  CHECK_THROWS_AS(accumulate_point_kernel(g, 0.0, 0.0, cfg), numerical_error);

  const OpticsConfig& ok = testfix::default_cfg();
  Grid2D h(ok.grid_size);
  CHECK_THROWS_AS(accumulate_point_kernel(h, 1.1, 0.0, ok), validation_error);
  CHECK_NOTHROW(accumulate_point_kernel(h, 1.0, 0.0, ok));
  Grid2D wrong(64);
  CHECK_THROWS_AS(accumulate_point_kernel(wrong, 0.0, 0.0, ok), validation_error);
}

TEST_CASE("kernel is antisymmetric in defocus") {
  OpticsConfig plus = testfix::default_cfg();
  OpticsConfig minus = plus;
  minus.defocus = -plus.defocus;
  Grid2D gp = point_kernel(0.93, 0.11, plus);
  Grid2D gm = point_kernel(0.93, 0.11, minus);
  for (std::size_t i = 0; i < gp.v.size(); ++i) {
    gm.v[i] += gp.v[i];
  }
  CHECK(max_abs(gm) <= 1e-13);
}

TEST_CASE("zero defocus kills the transfer function identically") {
  OpticsConfig cfg = testfix::default_cfg();
  cfg.defocus = 0.0;
  Grid2D g = point_kernel(0.9, 0.0, cfg);
  CHECK(max_abs(g) == 0.0);
}

TEST_CASE("cached ring combination equals the direct per-point sum") {
  const RingPtfCache& cache = testfix::rings12();
  for (std::uint64_t mask : {std::uint64_t{2048}, std::uint64_t{3072}, std::uint64_t{1723}}) {
    RingPattern p = pattern_from_index(mask, 12);
    PTFGrid from_cache = pattern_ptf(p, cache);
    PTFGrid direct = pattern_ptf_direct(p, cache.config(), cache.samples_per_ring());
    REQUIRE(from_cache.source_count == direct.source_count);
    const double scale = max_abs(direct.values);
    CHECK(max_abs_diff(from_cache.values, direct.values) <= 1e-12 * scale);
  }
}

TEST_CASE("cache-vs-direct agreement holds across 20 random masks (small grid)") {
  OpticsConfig cfg = make_config(530e-9, 0.75, 0.5e-6, 128, 2.0);
  RingPtfCache cache(12, cfg, 4);
  std::mt19937 rng(20240817);
  for (int t = 0; t < 20; ++t) {
    const std::uint64_t mask = 1 + rng() % 4095;
    RingPattern p = pattern_from_index(mask, 12);
    PTFGrid a = pattern_ptf(p, cache);
    PTFGrid b = pattern_ptf_direct(p, cfg, 4);
    CHECK(max_abs_diff(a.values, b.values) <= 1e-10 * max_abs(b.values));
  }
}

TEST_CASE("pattern PTF validates inputs") {
  const RingPtfCache& cache = testfix::rings12();
  RingPattern bad;
  bad.bit_depth = 8;
  bad.mask = 128;
  CHECK_THROWS_AS(pattern_ptf(bad, cache), validation_error);
  RingPattern empty;
  empty.bit_depth = 12;
  empty.mask = 0;
  CHECK_THROWS_WITH_AS(pattern_ptf(empty, cache), doctest::Contains("empty"),
                       validation_error);
}

TEST_CASE("symmetrized grids are exactly even under index negation") {
  const RingPtfCache& cache = testfix::rings12();
  PTFGrid g = pattern_ptf(pattern_from_index(2048, 12), cache);
  Grid2D s = symmetrized(g.values);
  const int n = s.size;
  double worst = 0.0;
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      worst = std::max(worst,
                       std::fabs(s.at(ix, iy) - s.at((n - ix) % n, (n - iy) % n)));
    }
  }
  CHECK(worst == 0.0);
  // and symmetrization is a small correction for an inversion-symmetric source
  CHECK(max_abs_diff(s, g.values) <= 1e-3 * max_abs(g.values));
}

TEST_CASE("quadrant convention: annular pattern at positive defocus is positive") {
  // With the phase difference written as sqrt(1-NA^2|u-rho|^2)-sqrt(1-NA^2|rho|^2),
  // the outermost annulus at z > 0 responds positively at low frequency; the
  // z < 0 half-space mirrors it.
  const RingPtfCache& cache = testfix::rings12();
  const OpticsConfig& cfg = cache.config();
  PTFGrid g = pattern_ptf(pattern_from_index(2048, 12), cache);
  RadialProfile prof = profile_from_grid(g.values, cfg);
  const double du = cfg.cell();
  int checked = 0;
  for (std::size_t b = 1; b < prof.radii.size(); ++b) {
    if (prof.radii[b] > 0.0 && prof.radii[b] < 0.2) {
      CHECK(prof.values[b] > 0.0);
      ++checked;
    }
    if (prof.radii[b] >= 1.5 && prof.radii[b] <= 1.8) {
      CHECK(prof.values[b] > 0.0);
      ++checked;
    }
  }
  CHECK(checked > 10);

  // negative defocus flips every sign exactly
  OpticsConfig neg = cfg;
  neg.defocus = -cfg.defocus;
  PTFGrid gn = pattern_ptf_direct(pattern_from_index(2048, 12), neg, 8);
  RadialProfile pn = profile_from_grid(gn.values, neg);
  for (std::size_t b = 1; b < pn.radii.size(); ++b) {
    if (pn.radii[b] > du / 2 && pn.radii[b] < 0.2) {
      CHECK(pn.values[b] < 0.0);
    }
  }
}

TEST_CASE("thin-ring response scales linearly with weak defocus") {
  OpticsConfig a = make_config(530e-9, 0.75, 2e-8, 128, 2.0);
  OpticsConfig b = make_config(530e-9, 0.75, 1e-8, 128, 2.0);
  Grid2D ga = point_kernel(0.95, 0.0, a);
  Grid2D gb = point_kernel(0.95, 0.0, b);
  const double ratio = max_abs(ga) / max_abs(gb);
  CHECK(ratio > 1.995);
  CHECK(ratio < 2.0 + 1e-6);
}

}  // TEST_SUITE
