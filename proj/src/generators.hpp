#pragma once

#include "geometry.hpp"
#include "incidence.hpp"

#include <cstdint>
#include <vector>

namespace transcut {

/// S = {0..A-1} on the base parabola, T = {0..A-1} x {0..A^2-1}. P is the box
/// {0..2A-2} x {0..2A^2-2}, or only the points of S + T when tight is set.
/// Every (s, t) pair is incident, so the incidence count is A^4.
Instance gen_grid_construction(std::uint32_t A, bool tight = false);

/// Pythagorean unit vectors (3/5, 4/5), (5/13, 12/13), (8/17, 15/17), ...
const std::vector<Point>& pythagorean_unit_vectors();

struct UnitDistanceGap {
  std::vector<Point> points;   // { sum x_i u_i : 0 <= x_i < L_i }
  std::vector<Point> vectors;  // u_list and its negation
};

/// Throws std::invalid_argument for non-unit vectors or mismatched lengths.
UnitDistanceGap gen_unit_distance_gap(const std::vector<Point>& unit_vectors,
                                      const std::vector<std::uint32_t>& lengths);

/// n distinct translates (a, b) with a, b in {k/4 : |k| <= coord_bound}, drawn
/// from a seeded mt19937_64 and resampled until the family is in general
/// position. Throws std::runtime_error when the retry budget runs out.
CurveFamily gen_random_family(std::size_t n, std::uint64_t seed, std::int64_t coord_bound = 1000);

}  // namespace transcut
