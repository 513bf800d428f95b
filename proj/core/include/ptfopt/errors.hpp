#pragma once

#include <stdexcept>
#include <string>

namespace ptfopt {

// Error taxonomy mirrored by the CLI exit codes:
//   usage_error      -> 1  (bad command line)
//   validation_error -> 2  (inputs that fail domain invariants, bad files)
//   numerical_error  -> 3  (math that cannot proceed: undefined scores, evanescent regime)
struct usage_error : std::runtime_error {
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

struct numerical_error : std::runtime_error {
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ptfopt
