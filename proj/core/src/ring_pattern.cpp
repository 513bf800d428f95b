#include "ptfopt/ring_pattern.hpp"

#include <cctype>
#include <sstream>

#include "ptfopt/errors.hpp"

namespace ptfopt {

std::vector<int> RingPattern::active_rings() const {
  std::vector<int> out;
  for (int i = 0; i < bit_depth; ++i) {
    if (ring_active(i)) {
      out.push_back(i);
    }
  }
  return out;
}

double RingPattern::outer_radius() const {
  for (int i = bit_depth - 1; i >= 0; --i) {
    if (ring_active(i)) {
      return ring_outer(i);
    }
  }
  return 0.0;
}

namespace {

void check_bit_depth(int bit_depth) {
  if (bit_depth < 1 || bit_depth > 63) {
    throw validation_error("bit_depth must be in [1, 63]");
  }
}

}  // namespace

RingPattern pattern_from_index(std::uint64_t index, int bit_depth) {
  check_bit_depth(bit_depth);
  if (index == 0) {
    throw validation_error("index 0 is an empty pattern (no active rings)");
  }
  std::uint64_t limit = (std::uint64_t{1} << bit_depth) - 1;
  if (index > limit) {
    std::ostringstream msg;
    msg << "pattern index " << index << " exceeds " << limit << " for bit depth " << bit_depth;
    throw validation_error(msg.str());
  }
  RingPattern p;
  p.bit_depth = bit_depth;
  p.mask = index;
  return p;
}

RingPattern parse_pattern_spec(const std::string& spec, int bit_depth) {
  check_bit_depth(bit_depth);
  if (spec.empty()) {
    throw validation_error("empty pattern spec");
  }
  std::uint64_t mask = 0;
  if (spec[0] == 'R' || spec[0] == 'r') {
    // comma-separated ring list, e.g. "R7,R11"
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.size() < 2 || (item[0] != 'R' && item[0] != 'r')) {
        throw validation_error("bad ring item '" + item + "' in pattern spec");
      }
      std::size_t pos = 0;
      int ring = 0;
      try {
        ring = std::stoi(item.substr(1), &pos);
      } catch (...) {
        throw validation_error("bad ring item '" + item + "' in pattern spec");
      }
      if (pos != item.size() - 1 || ring < 0 || ring >= bit_depth) {
        throw validation_error("ring index out of range in '" + item + "'");
      }
      mask |= std::uint64_t{1} << ring;
    }
  } else if (spec.size() > 2 && spec[0] == '0' && (spec[1] == 'b' || spec[1] == 'B')) {
    for (std::size_t i = 2; i < spec.size(); ++i) {
      if (spec[i] != '0' && spec[i] != '1') {
        throw validation_error("binary pattern spec must contain only 0/1 digits");
      }
      mask = (mask << 1) | static_cast<std::uint64_t>(spec[i] - '0');
    }
  } else {
    std::size_t pos = 0;
    try {
      mask = std::stoull(spec, &pos);
    } catch (...) {
      throw validation_error("cannot parse pattern spec '" + spec + "'");
    }
    if (pos != spec.size()) {
      throw validation_error("trailing characters in pattern spec '" + spec + "'");
    }
  }
  return pattern_from_index(mask, bit_depth);
}

}  // namespace ptfopt
