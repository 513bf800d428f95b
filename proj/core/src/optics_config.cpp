#include "ptfopt/optics_config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "ptfopt/errors.hpp"

namespace ptfopt {

double OpticsConfig::wavenumber() const { return 2.0 * std::numbers::pi / wavelength; }

double OpticsConfig::cell() const { return 2.0 * freq_extent / grid_size; }

double OpticsConfig::freq_at(int idx) const { return (idx - grid_size / 2) * cell(); }

int OpticsConfig::nbins() const { return static_cast<int>(std::lround(freq_extent / cell())) + 1; }

double OpticsConfig::to_physical(double u_norm) const { return u_norm * objective_na / wavelength; }

double OpticsConfig::from_physical(double f_phys) const { return f_phys * wavelength / objective_na; }

double OpticsConfig::pixel_pitch() const { return wavelength / (2.0 * freq_extent * objective_na); }

OpticsConfig make_config(double wavelength, double objective_na, double defocus,
                         int grid_size, double freq_extent) {
  if (!(wavelength > 0.0)) {
    throw validation_error("wavelength must be positive");
  }
  if (!(objective_na > 0.0 && objective_na < 1.5)) {
    throw validation_error("objective_na must be in (0, 1.5)");
  }
  if (!std::isfinite(defocus)) {
    throw validation_error("defocus must be finite");
  }
  if (grid_size < 64 || grid_size % 2 != 0) {
    throw validation_error("grid_size must be even and at least 64");
  }
  if (!(freq_extent >= 2.0)) {
    throw validation_error("freq_extent below 2 clips the incoherent passband");
  }
  OpticsConfig cfg;
  cfg.wavelength = wavelength;
  cfg.objective_na = objective_na;
  cfg.defocus = defocus;
  cfg.grid_size = grid_size;
  cfg.freq_extent = freq_extent;
  return cfg;
}

namespace {

OpticsConfig config_from_json(const nlohmann::json& j) {
  static const char* const kKeys[] = {"wavelength_m", "objective_na", "defocus_m",
                                      "grid_size", "freq_extent"};
  if (!j.is_object()) {
    throw validation_error("config JSON must be an object");
  }
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : kKeys) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw validation_error("config JSON has unknown key '" + item.key() + "'");
    }
  }
  for (const char* key : kKeys) {
    if (!j.contains(key)) {
      throw validation_error(std::string("config JSON is missing key '") + key + "'");
    }
  }
  return make_config(j.at("wavelength_m").get<double>(), j.at("objective_na").get<double>(),
                     j.at("defocus_m").get<double>(), j.at("grid_size").get<int>(),
                     j.at("freq_extent").get<double>());
}

}  // namespace

OpticsConfig config_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(std::string("config JSON parse failure: ") + e.what());
  }
  return config_from_json(j);
}

OpticsConfig config_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw validation_error("cannot open config file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return config_from_json_text(buf.str());
}

std::string config_to_json_text(const OpticsConfig& cfg) {
  nlohmann::ordered_json j;
  j["wavelength_m"] = cfg.wavelength;
  j["objective_na"] = cfg.objective_na;
  j["defocus_m"] = cfg.defocus;
  j["grid_size"] = cfg.grid_size;
  j["freq_extent"] = cfg.freq_extent;
  return j.dump(2);
}

}  // namespace ptfopt
