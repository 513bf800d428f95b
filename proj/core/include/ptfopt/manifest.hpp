#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ptfopt/optics_config.hpp"

namespace ptfopt {

// Everything that determined a command's outputs: the optics configuration,
// the command name, and its specific parameters (pre-formatted, in a fixed
// order). Written next to the artifacts as manifest.json; identical manifests
// must reproduce identical outputs, so no timestamps or host details belong
// here.
struct RunManifest {
  OpticsConfig config;
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string output_dir;
};

std::string manifest_json_text(const RunManifest& manifest);
void write_manifest(const RunManifest& manifest, const std::string& path);

// Reads back a manifest written by write_manifest (used by commands that
// chain on a previous command's output directory).
RunManifest read_manifest(const std::string& path);

// Convenience for chaining: fetch a parameter by key, throwing
// validation_error when missing.
std::string manifest_parameter(const RunManifest& manifest, const std::string& key);

}  // namespace ptfopt
