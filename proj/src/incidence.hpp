#pragma once

#include "geometry.hpp"

#include <cstdint>
#include <vector>

namespace transcut {

/// Points P, base-curve abscissae S (S-points are (s, s^2)) and translates T.
struct Instance {
  std::vector<Point> points;
  std::vector<Rational> s_coords;
  std::vector<Translate> translates;
};

/// Throws std::invalid_argument if P, S or T contain duplicates.
void validate(const Instance& inst);

/// Point s + t: the S-point with abscissa s moved by t.
Point shifted(const Rational& s, const Translate& t);

struct IncidenceCount {
  std::uint64_t total = 0;             // #{(s, t) : s + t in P}
  std::uint64_t distinct_points = 0;   // #{p in P : p = s + t for some pair}
  std::vector<std::uint64_t> per_translate;
};

IncidenceCount count_incidences(const Instance& inst);

/// Ordered pairs (x, y) of P with x - y in U. Throws std::invalid_argument if
/// some u in U is not an exact unit vector.
std::uint64_t unit_distance_count(const std::vector<Point>& points, const std::vector<Point>& unit_vectors);

struct StAudit {
  double ratio = 0;  // I / (n^{2/3} m^{2/3} + n + m), 0 when the envelope is 0
  bool pass = true;  // I <= c (n^{2/3} m^{2/3} + n + m), decided exactly
};

StAudit st_audit(std::uint64_t points, std::uint64_t pseudolines, std::uint64_t incidences,
                 const Rational& c = Rational(4));

}  // namespace transcut
