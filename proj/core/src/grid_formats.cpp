#include "ptfopt/grid_formats.hpp"

#include <bit>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "ptfopt/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "grid payloads are written little-endian without byte swapping");

namespace ptfopt {

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

namespace {

std::string sidecar_json_text(const GridSidecar& s) {
  nlohmann::ordered_json j;
  j["grid_size"] = s.grid_size;
  j["freq_extent"] = s.freq_extent;
  j["defocus_m"] = s.defocus_m;
  j["pattern_mask"] = s.pattern_mask;
  j["bit_depth"] = s.bit_depth;
  return j.dump(2) + "\n";
}

GridSidecar sidecar_from_json_text(const std::string& text, const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(origin + ": sidecar is not valid JSON: " + e.what());
  }
  GridSidecar s;
  try {
    s.grid_size = j.at("grid_size").get<int>();
    s.freq_extent = j.at("freq_extent").get<double>();
    s.defocus_m = j.at("defocus_m").get<double>();
    s.pattern_mask = j.at("pattern_mask").get<std::uint64_t>();
    s.bit_depth = j.at("bit_depth").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(origin + ": sidecar is missing a required field: " + e.what());
  }
  return s;
}

}  // namespace

void write_grid(const std::string& stem, const Grid2D& grid, const GridSidecar& sidecar) {
  if (grid.size <= 0 ||
      grid.v.size() != static_cast<std::size_t>(grid.size) * grid.size) {
    throw validation_error("grid to write is malformed");
  }
  if (sidecar.grid_size != grid.size) {
    throw validation_error("sidecar grid_size does not match the grid being written");
  }
  std::vector<float> payload(grid.v.size());
  for (std::size_t i = 0; i < grid.v.size(); ++i) {
    payload[i] = static_cast<float>(grid.v[i]);
  }
  {
    std::ofstream f(stem + ".f32", std::ios::binary | std::ios::trunc);
    if (!f) {
      throw validation_error("cannot open " + stem + ".f32 for writing");
    }
    f.write(reinterpret_cast<const char*>(payload.data()),
            static_cast<std::streamsize>(payload.size() * sizeof(float)));
    if (!f) {
      throw validation_error("write failed for " + stem + ".f32");
    }
  }
  write_text_file(stem + ".json", sidecar_json_text(sidecar));
}

Grid2D read_grid(const std::string& stem, GridSidecar* sidecar_out) {
  const GridSidecar s = sidecar_from_json_text(read_text_file(stem + ".json"), stem + ".json");
  if (s.grid_size <= 0) {
    throw validation_error(stem + ".json: grid_size must be positive");
  }
  const std::size_t expected = static_cast<std::size_t>(s.grid_size) * s.grid_size;
  std::ifstream f(stem + ".f32", std::ios::binary);
  if (!f) {
    throw validation_error("cannot open " + stem + ".f32 for reading");
  }
  std::vector<float> payload(expected);
  f.read(reinterpret_cast<char*>(payload.data()),
         static_cast<std::streamsize>(expected * sizeof(float)));
  if (static_cast<std::size_t>(f.gcount()) != expected * sizeof(float)) {
    throw validation_error(stem + ".f32 is shorter than grid_size^2 float32 values");
  }
  Grid2D grid(s.grid_size);
  for (std::size_t i = 0; i < expected; ++i) {
    grid.v[i] = payload[i];
  }
  if (sidecar_out) {
    *sidecar_out = s;
  }
  return grid;
}

void verify_grid_pair(const std::string& stem) {
  namespace fs = std::filesystem;
  if (!fs::exists(stem + ".json")) {
    throw validation_error(stem + ".json does not exist");
  }
  if (!fs::exists(stem + ".f32")) {
    throw validation_error(stem + ".f32 does not exist");
  }
  const GridSidecar s = sidecar_from_json_text(read_text_file(stem + ".json"), stem + ".json");
  if (s.grid_size <= 0) {
    throw validation_error(stem + ".json: grid_size must be positive");
  }
  if (!(s.freq_extent > 0.0)) {
    throw validation_error(stem + ".json: freq_extent must be positive");
  }
  if (s.bit_depth < 0 || s.bit_depth > 63) {
    throw validation_error(stem + ".json: bit_depth out of range");
  }
  if (s.bit_depth > 0 && s.pattern_mask >= (std::uint64_t{1} << s.bit_depth)) {
    throw validation_error(stem + ".json: pattern_mask does not fit in bit_depth bits");
  }
  const std::uintmax_t expected =
      static_cast<std::uintmax_t>(s.grid_size) * s.grid_size * sizeof(float);
  const std::uintmax_t actual = fs::file_size(stem + ".f32");
  if (actual != expected) {
    throw validation_error(stem + ".f32 holds " + std::to_string(actual) +
                           " bytes; sidecar implies " + std::to_string(expected));
  }
}

void write_profile_csv(const std::string& path, const RadialProfile& profile) {
  std::string text = "u_norm,value\n";
  for (std::size_t i = 0; i < profile.radii.size(); ++i) {
    text += format_double(profile.radii[i]);
    text += ',';
    text += format_double(profile.values[i]);
    text += '\n';
  }
  write_text_file(path, text);
}

std::string reports_csv_text(const std::vector<CriteriaReport>& reports) {
  std::string text = "mask,bit_depth,cutoff,crossings,mean_abs\n";
  for (const CriteriaReport& r : reports) {
    text += std::to_string(r.mask);
    text += ',';
    text += std::to_string(r.bit_depth);
    text += ',';
    text += format_double(r.cutoff);
    text += ',';
    text += std::to_string(r.zero_crossings);
    text += ',';
    text += format_double(r.mean_abs);
    text += '\n';
  }
  return text;
}

void write_reports_csv(const std::string& path, const std::vector<CriteriaReport>& reports) {
  write_text_file(path, reports_csv_text(reports));
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    throw validation_error("cannot open " + path + " for writing");
  }
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!f) {
    throw validation_error("write failed for " + path);
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    throw validation_error("cannot open " + path + " for reading");
  }
  std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  return text;
}

}  // namespace ptfopt
