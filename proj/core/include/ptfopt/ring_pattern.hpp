#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ptfopt {

// Illumination pattern as a bitmask over N concentric source annuli.
// Bit i (LSB = i = 0) activates ring Ri spanning normalized source radius
// [i/N, (i+1)/N); the outermost ring additionally includes radius 1 so the
// matched condition s = 1 is reachable.
struct RingPattern {
  int bit_depth = 12;
  std::uint64_t mask = 0;

  bool ring_active(int i) const { return (mask >> i) & 1u; }
  std::vector<int> active_rings() const;
  double ring_inner(int i) const { return static_cast<double>(i) / bit_depth; }
  double ring_outer(int i) const { return static_cast<double>(i + 1) / bit_depth; }
  // Outer radius of the highest active ring (the coherence parameter of the
  // pattern's outer edge).
  double outer_radius() const;
};

// The decimal pattern index is the mask itself. Index 0 (no light) and
// indices >= 2^bit_depth are invalid.
RingPattern pattern_from_index(std::uint64_t index, int bit_depth);

// Accepts a decimal index ("2048"), a binary literal ("0b100000000000"),
// or a ring list ("R11", "R7,R11").
RingPattern parse_pattern_spec(const std::string& spec, int bit_depth);

}  // namespace ptfopt
