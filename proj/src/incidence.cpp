#include "incidence.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace transcut {

namespace {

template <class T, class Hash>
void require_unique(const std::vector<T>& items, const char* what) {
  std::unordered_set<T, Hash> seen;
  seen.reserve(items.size());
  for (const auto& item : items) {
    if (!seen.insert(item).second) {
      throw std::invalid_argument(std::string("duplicate entry in ") + what);
    }
  }
}

struct RationalHash {
  std::size_t operator()(const Rational& q) const { return hash_value(q); }
};

}  // namespace

void validate(const Instance& inst) {
  require_unique<Point, PointHash>(inst.points, "points");
  require_unique<Rational, RationalHash>(inst.s_coords, "s_coords");
  require_unique<Translate, TranslateHash>(inst.translates, "translates");
}

Point shifted(const Rational& s, const Translate& t) {
  return {Rational(s + t.a), Rational(s * s + t.b)};
}

IncidenceCount count_incidences(const Instance& inst) {
  const std::unordered_set<Point, PointHash> lookup(inst.points.begin(), inst.points.end());
  std::unordered_set<Point, PointHash> hit;
  IncidenceCount out;
  out.per_translate.assign(inst.translates.size(), 0);
  for (std::size_t i = 0; i < inst.translates.size(); ++i) {
    for (const auto& s : inst.s_coords) {
      Point p = shifted(s, inst.translates[i]);
      if (lookup.count(p)) {
        ++out.per_translate[i];
        hit.insert(std::move(p));
      }
    }
    out.total += out.per_translate[i];
  }
  out.distinct_points = hit.size();
  return out;
}

std::uint64_t unit_distance_count(const std::vector<Point>& points,
                                  const std::vector<Point>& unit_vectors) {
  std::unordered_set<Point, PointHash> dirs;
  for (const auto& u : unit_vectors) {
    if (u.x * u.x + u.y * u.y != 1) {
      throw std::invalid_argument("vector (" + to_string(u.x) + ", " + to_string(u.y) +
                                  ") is not a unit vector");
    }
    dirs.insert(u);
  }
  const std::unordered_set<Point, PointHash> lookup(points.begin(), points.end());
  std::uint64_t count = 0;
  for (const auto& y : lookup) {
    for (const auto& u : dirs) {
      if (lookup.count(Point{Rational(y.x + u.x), Rational(y.y + u.y)})) ++count;
    }
  }
  return count;
}

StAudit st_audit(std::uint64_t points, std::uint64_t pseudolines, std::uint64_t incidences,
                 const Rational& c) {
  if (c <= 0) throw std::invalid_argument("st_audit: constant must be positive");
  StAudit out;
  const double n = static_cast<double>(points);
  const double m = static_cast<double>(pseudolines);
  const double envelope = std::cbrt(n * m) * std::cbrt(n * m) + n + m;
  out.ratio = envelope > 0 ? static_cast<double>(incidences) / envelope : 0.0;

  // I <= c (X + n + m) with X = (nm)^{2/3}  <=>  D <= X with D = I/c - n - m,
  // and for D > 0 that is D^3 <= (nm)^2.
  const Integer nn(std::to_string(points));
  const Integer mm(std::to_string(pseudolines));
  const Rational d = Rational(Integer(std::to_string(incidences))) / c - nn - mm;
  if (d <= 0) {
    out.pass = true;
  } else {
    const Integer nm = nn * mm;
    out.pass = d * d * d <= Rational(nm * nm);
  }
  return out;
}

}  // namespace transcut
