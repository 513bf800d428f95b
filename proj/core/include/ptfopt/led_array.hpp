#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ptfopt/optics_config.hpp"
#include "ptfopt/ptf.hpp"
#include "ptfopt/ring_pattern.hpp"
#include "ptfopt/source_points.hpp"

namespace ptfopt {

// Geometry of the LED board fraction used for illumination. The normalized
// source frequency of the LED at integer offset (i, j) from the center is
// na_per_led * (i, j); the default na_per_led puts the outermost on-axis LED
// of a 15x15 patch exactly at the pupil edge (s = 1).
struct LedArrayConfig {
  double pitch = 1.25e-3;        // board spacing [m], bookkeeping only
  int used_extent = 15;          // LEDs per side, odd (a central LED exists)
  double na_per_led = 1.0 / 7.0; // illumination-NA step per LED, NA-normalized
};

LedArrayConfig make_led_config(double pitch, int used_extent, double na_per_led);

// On/off grid over the used patch; (i, j) are offsets from the center LED,
// each in [-(used_extent-1)/2, +(used_extent-1)/2].
struct LedMask {
  int extent = 0;
  std::vector<std::uint8_t> on;  // row-major, index ((j+half)*extent + (i+half))

  int half() const { return (extent - 1) / 2; }
  bool at(int i, int j) const {
    return on[static_cast<std::size_t>(j + half()) * extent + (i + half())] != 0;
  }
  int count() const;
};

// LED (i, j) is ON iff its radial bin round(sqrt(i^2 + j^2)) is an active
// ring of the pattern AND its source radius na_per_led*sqrt(i^2+j^2) is
// inside the pupil (diagonal members of the outermost bin fall slightly
// outside s = 1 and are clipped by the condenser aperture). Requires
// pattern.bit_depth == (used_extent + 1)/2.
LedMask ring_to_led_mask(const RingPattern& pattern, const LedArrayConfig& led_cfg);

SourcePointSet led_points(const LedMask& mask, const LedArrayConfig& led_cfg);

// Normalized PTF of the mask, one point source per LED.
PTFGrid led_ptf(const LedMask& mask, const LedArrayConfig& led_cfg,
                const OpticsConfig& cfg);

// One text row per LED row, '1'/'0' characters, origin top-left = (-half, -half).
std::string led_ascii(const LedMask& mask);

// {"used_extent": ..., "na_per_led": ..., "pitch_m": ..., "leds": [[i, j], ...]}
std::string led_json(const LedMask& mask, const LedArrayConfig& led_cfg);

}  // namespace ptfopt
