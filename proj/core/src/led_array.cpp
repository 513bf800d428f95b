#include "ptfopt/led_array.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "ptfopt/errors.hpp"

namespace ptfopt {

namespace {

constexpr double kPupilSlack = 1.0 + 1e-12;

}  // namespace

LedArrayConfig make_led_config(double pitch, int used_extent, double na_per_led) {
  if (!(pitch > 0.0)) {
    throw validation_error("LED pitch must be positive");
  }
  if (used_extent < 1 || used_extent % 2 == 0) {
    throw validation_error("used_extent must be odd so a central LED exists");
  }
  if (!(na_per_led > 0.0)) {
    throw validation_error("na_per_led must be positive");
  }
  if (na_per_led * ((used_extent - 1) / 2) > kPupilSlack) {
    throw validation_error(
        "on-axis LEDs of the used patch would fall outside the pupil; shrink "
        "used_extent or na_per_led");
  }
  LedArrayConfig cfg;
  cfg.pitch = pitch;
  cfg.used_extent = used_extent;
  cfg.na_per_led = na_per_led;
  return cfg;
}

int LedMask::count() const {
  int c = 0;
  for (std::uint8_t b : on) {
    c += b != 0;
  }
  return c;
}

LedMask ring_to_led_mask(const RingPattern& pattern, const LedArrayConfig& led_cfg) {
  const int bins = (led_cfg.used_extent + 1) / 2;
  if (pattern.bit_depth != bins) {
    throw validation_error("pattern bit depth must equal (used_extent + 1) / 2");
  }
  if (pattern.mask == 0) {
    throw validation_error("empty pattern");
  }
  LedMask mask;
  mask.extent = led_cfg.used_extent;
  mask.on.assign(static_cast<std::size_t>(mask.extent) * mask.extent, 0);
  const int half = mask.half();
  for (int j = -half; j <= half; ++j) {
    for (int i = -half; i <= half; ++i) {
      const double rho = std::hypot(static_cast<double>(i), static_cast<double>(j));
      const int bin = static_cast<int>(std::lround(rho));
      if (bin >= bins || !pattern.ring_active(bin)) {
        continue;
      }
      // Diagonal members of a bin can sit slightly outside the pupil even
      // when the bin's on-axis LED is inside; the condenser clips them.
      if (led_cfg.na_per_led * rho > kPupilSlack) {
        continue;
      }
      mask.on[static_cast<std::size_t>(j + half) * mask.extent + (i + half)] = 1;
    }
  }
  return mask;
}

SourcePointSet led_points(const LedMask& mask, const LedArrayConfig& led_cfg) {
  const int half = mask.half();
  SourcePointSet points;
  for (int j = -half; j <= half; ++j) {
    for (int i = -half; i <= half; ++i) {
      if (mask.at(i, j)) {
        points.points.push_back({led_cfg.na_per_led * i, led_cfg.na_per_led * j});
      }
    }
  }
  return points;
}

PTFGrid led_ptf(const LedMask& mask, const LedArrayConfig& led_cfg,
                const OpticsConfig& cfg) {
  SourcePointSet points = led_points(mask, led_cfg);
  if (points.points.empty()) {
    throw validation_error("no LEDs are on");
  }
  PTFGrid out;
  out.values = ptf_from_points(points, cfg);
  out.config = cfg;
  out.source_count = points.points.size();
  const double inv = 1.0 / static_cast<double>(out.source_count);
  for (double& v : out.values.v) {
    v *= inv;
  }
  return out;
}

std::string led_ascii(const LedMask& mask) {
  const int half = mask.half();
  std::string out;
  out.reserve(static_cast<std::size_t>(mask.extent) * (mask.extent + 1));
  for (int j = -half; j <= half; ++j) {
    for (int i = -half; i <= half; ++i) {
      out.push_back(mask.at(i, j) ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

std::string led_json(const LedMask& mask, const LedArrayConfig& led_cfg) {
  nlohmann::ordered_json j;
  j["used_extent"] = led_cfg.used_extent;
  j["na_per_led"] = led_cfg.na_per_led;
  j["pitch_m"] = led_cfg.pitch;
  nlohmann::ordered_json leds = nlohmann::ordered_json::array();
  const int half = mask.half();
  for (int jj = -half; jj <= half; ++jj) {
    for (int ii = -half; ii <= half; ++ii) {
      if (mask.at(ii, jj)) {
        leds.push_back({ii, jj});
      }
    }
  }
  j["leds"] = std::move(leds);
  return j.dump(2) + "\n";
}

}  // namespace ptfopt
