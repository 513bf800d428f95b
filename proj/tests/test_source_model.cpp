#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "ptfopt/errors.hpp"
#include "ptfopt/ring_pattern.hpp"
#include "ptfopt/source_points.hpp"

using namespace ptfopt;

TEST_SUITE("ring_pattern") {

TEST_CASE("index decoding follows the LSB-innermost convention") {
  RingPattern p = pattern_from_index(2048, 12);
  CHECK(p.active_rings() == std::vector<int>{11});
  CHECK(p.ring_inner(11) == doctest::Approx(11.0 / 12.0));
  CHECK(p.ring_outer(11) == doctest::Approx(1.0));
  CHECK(p.outer_radius() == doctest::Approx(1.0));

  RingPattern full = pattern_from_index(4095, 12);
  CHECK(full.active_rings().size() == 12);
  CHECK(full.outer_radius() == doctest::Approx(1.0));

  RingPattern inner = pattern_from_index(1, 12);
  CHECK(inner.active_rings() == std::vector<int>{0});
  CHECK(inner.ring_inner(0) == 0.0);
  CHECK(inner.outer_radius() == doctest::Approx(1.0 / 12.0));
}

TEST_CASE("invalid indices are rejected") {
  CHECK_THROWS_WITH_AS(pattern_from_index(0, 12), doctest::Contains("empty pattern"),
                       validation_error);
  CHECK_THROWS_AS(pattern_from_index(4096, 12), validation_error);
  CHECK_THROWS_AS(pattern_from_index(1, 0), validation_error);
  CHECK_THROWS_AS(pattern_from_index(1, 64), validation_error);
  CHECK_NOTHROW(pattern_from_index(4095, 12));
}

TEST_CASE("pattern specs parse in all three forms") {
  CHECK(parse_pattern_spec("2048", 12).mask == 2048);
  CHECK(parse_pattern_spec("0b100000000000", 12).mask == 2048);
  CHECK(parse_pattern_spec("R11", 12).mask == 2048);
  CHECK(parse_pattern_spec("R7,R11", 12).mask == 2176);
  CHECK(parse_pattern_spec("r0,r1", 12).mask == 3);
  CHECK(parse_pattern_spec("0b11", 12).mask == 3);

  CHECK_THROWS_AS(parse_pattern_spec("", 12), validation_error);
  CHECK_THROWS_AS(parse_pattern_spec("0", 12), validation_error);
  CHECK_THROWS_AS(parse_pattern_spec("4096", 12), validation_error);
  CHECK_THROWS_AS(parse_pattern_spec("0b2", 12), validation_error);
  CHECK_THROWS_AS(parse_pattern_spec("R12", 12), validation_error);
  CHECK_THROWS_AS(parse_pattern_spec("R-1", 12), validation_error);
  CHECK_THROWS_AS(parse_pattern_spec("Rx", 12), validation_error);
  CHECK_THROWS_AS(parse_pattern_spec("12abc", 12), validation_error);
  CHECK_THROWS_AS(parse_pattern_spec("R7;R11", 12), validation_error);
}

}  // TEST_SUITE

TEST_SUITE("source_points") {

TEST_CASE("sampling circles sit inside the ring with even counts and bounded arcs") {
  const int N = 12, M = 8;
  const double h = 1.0 / (N * M);
  for (int ring : {0, 5, 11}) {
    auto circles = ring_sampling_circles(ring, N, M);
    REQUIRE(circles.size() == static_cast<std::size_t>(M));
    for (const auto& [r, n] : circles) {
      CHECK(r >= static_cast<double>(ring) / N);
      CHECK(r < static_cast<double>(ring + 1) / N);
      CHECK(n % 2 == 0);
      CHECK(n >= 2);
      // arc spacing no larger than the radial spacing
      const double arc = 2.0 * std::numbers::pi * r / n;
      CHECK(arc <= h * (1.0 + 1e-12));
    }
  }
  CHECK_THROWS_AS(ring_sampling_circles(12, 12, 8), validation_error);
  CHECK_THROWS_AS(ring_sampling_circles(-1, 12, 8), validation_error);
  CHECK_THROWS_AS(ring_sampling_circles(0, 12, 0), validation_error);
}

TEST_CASE("ring point sets are exactly inversion symmetric") {
  SourcePointSet set = ring_source_points(11, 12, 8);
  std::size_t expected = 0;
  for (const auto& [r, n] : ring_sampling_circles(11, 12, 8)) {
    expected += n;
  }
  CHECK(set.total_count() == expected);

  // every point's exact negation is present (bitwise, by construction)
  std::vector<std::pair<double, double>> pts;
  pts.reserve(set.points.size());
  for (const auto& p : set.points) {
    pts.emplace_back(p.x, p.y);
  }
  std::sort(pts.begin(), pts.end());
  for (const auto& p : set.points) {
    CHECK(std::binary_search(pts.begin(), pts.end(), std::make_pair(-p.x, -p.y)));
  }
}

TEST_CASE("disjoint rings add: points of 3072 are points of 2048 plus 1024") {
  const int M = 8;
  auto p3072 = discretize_pattern(pattern_from_index(3072, 12), M);
  auto p2048 = discretize_pattern(pattern_from_index(2048, 12), M);
  auto p1024 = discretize_pattern(pattern_from_index(1024, 12), M);
  REQUIRE(p3072.total_count() == p2048.total_count() + p1024.total_count());

  auto key = [](const SourcePoint& p) { return std::make_pair(p.x, p.y); };
  std::vector<std::pair<double, double>> joint, split;
  for (const auto& p : p3072.points) joint.push_back(key(p));
  for (const auto& p : p1024.points) split.push_back(key(p));
  for (const auto& p : p2048.points) split.push_back(key(p));
  std::sort(joint.begin(), joint.end());
  std::sort(split.begin(), split.end());
  CHECK(joint == split);  // identical multisets, bitwise
}

TEST_CASE("areal point density is uniform across rings to within 10%") {
  const int N = 12, M = 8;
  double lo = 1e300, hi = 0.0;
  for (int i = 0; i < N; ++i) {
    const double count =
        static_cast<double>(ring_source_points(i, N, M).total_count());
    const double area = std::numbers::pi *
                        (std::pow((i + 1.0) / N, 2) - std::pow(static_cast<double>(i) / N, 2));
    const double density = count / area;
    lo = std::min(lo, density);
    hi = std::max(hi, density);
  }
  CHECK((hi - lo) / hi < 0.10);  // measured spread is ~3%
}

TEST_CASE("discretizing an empty pattern is rejected") {
  RingPattern p;
  p.mask = 0;
  CHECK_THROWS_AS(discretize_pattern(p, 8), validation_error);
}

}  // TEST_SUITE
