#include "ptfopt/manifest.hpp"

#include <json.hpp>

#include "ptfopt/errors.hpp"
#include "ptfopt/grid_formats.hpp"

namespace ptfopt {

std::string manifest_json_text(const RunManifest& manifest) {
  nlohmann::ordered_json j;
  j["command"] = manifest.command;
  j["config"] = nlohmann::ordered_json::parse(config_to_json_text(manifest.config));
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : manifest.parameters) {
    params[key] = value;
  }
  j["parameters"] = std::move(params);
  j["output_dir"] = manifest.output_dir;
  return j.dump(2) + "\n";
}

void write_manifest(const RunManifest& manifest, const std::string& path) {
  write_text_file(path, manifest_json_text(manifest));
}

RunManifest read_manifest(const std::string& path) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(path + " is not valid JSON: " + e.what());
  }
  RunManifest m;
  try {
    m.command = j.at("command").get<std::string>();
    m.config = config_from_json_text(j.at("config").dump());
    for (const auto& [key, value] : j.at("parameters").items()) {
      if (!value.is_string()) {
        throw validation_error(path + ": parameter \"" + key + "\" must be a string");
      }
      m.parameters.emplace_back(key, value.get<std::string>());
    }
    m.output_dir = j.at("output_dir").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(path + " is missing a required field: " + e.what());
  }
  return m;
}

std::string manifest_parameter(const RunManifest& manifest, const std::string& key) {
  for (const auto& [k, v] : manifest.parameters) {
    if (k == key) {
      return v;
    }
  }
  throw validation_error("manifest has no parameter \"" + key + "\"");
}

}  // namespace ptfopt
