#include "generators.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace transcut {

namespace {

// Uniform integer in [lo, hi] using only the (portable) raw engine output.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return lo + static_cast<std::int64_t>(v % span);
}

Rational quarter(std::int64_t k) {
  Rational q(static_cast<long>(k), 4);
  q.canonicalize();
  return q;
}

}  // namespace

Instance gen_grid_construction(std::uint32_t A, bool tight) {
  if (A < 2) throw std::invalid_argument("grid construction needs A >= 2");
  Instance inst;
  for (std::uint32_t s = 0; s < A; ++s) inst.s_coords.emplace_back(s);
  for (std::uint32_t a = 0; a < A; ++a) {
    for (std::uint64_t b = 0; b < std::uint64_t{A} * A; ++b) {
      inst.translates.push_back({Rational(a), Rational(static_cast<unsigned long>(b))});
    }
  }
  if (tight) {
    std::unordered_set<Point, PointHash> seen;
    for (const auto& t : inst.translates) {
      for (const auto& s : inst.s_coords) {
        Point p = shifted(s, t);
        if (seen.insert(p).second) inst.points.push_back(std::move(p));
      }
    }
    std::sort(inst.points.begin(), inst.points.end(),
              [](const Point& l, const Point& r) { return lex_less(l, r); });
  } else {
    const std::uint64_t width = 2ULL * A - 1;
    const std::uint64_t height = 2ULL * A * A - 1;
    for (std::uint64_t u = 0; u < width; ++u) {
      for (std::uint64_t v = 0; v < height; ++v) {
        inst.points.push_back({Rational(static_cast<unsigned long>(u)),
                               Rational(static_cast<unsigned long>(v))});
      }
    }
  }
  return inst;
}

const std::vector<Point>& pythagorean_unit_vectors() {
  static const std::vector<Point> table = [] {
    const int triples[][3] = {{3, 4, 5},   {5, 12, 13}, {8, 15, 17}, {7, 24, 25},
                              {20, 21, 29}, {12, 35, 37}, {9, 40, 41}, {28, 45, 53}};
    std::vector<Point> out;
    for (const auto& t : triples) {
      out.push_back({Rational(t[0], t[2]), Rational(t[1], t[2])});
    }
    return out;
  }();
  return table;
}

UnitDistanceGap gen_unit_distance_gap(const std::vector<Point>& unit_vectors,
                                      const std::vector<std::uint32_t>& lengths) {
  if (unit_vectors.size() != lengths.size()) {
    throw std::invalid_argument("unit-distance GAP: one length per vector required");
  }
  for (const auto& u : unit_vectors) {
    if (u.x * u.x + u.y * u.y != 1) {
      throw std::invalid_argument("(" + to_string(u.x) + ", " + to_string(u.y) +
                                  ") is not a rational unit vector");
    }
  }
  for (auto l : lengths) {
    if (l == 0) throw std::invalid_argument("unit-distance GAP: lengths must be positive");
  }

  UnitDistanceGap out;
  std::unordered_set<Point, PointHash> seen;
  std::vector<std::uint32_t> digits(lengths.size(), 0);
  while (true) {
    Point p{0, 0};
    for (std::size_t i = 0; i < digits.size(); ++i) {
      p.x += digits[i] * unit_vectors[i].x;
      p.y += digits[i] * unit_vectors[i].y;
    }
    if (seen.insert(p).second) out.points.push_back(std::move(p));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == lengths[i]) digits[i++] = 0;
    if (i == digits.size()) break;
  }

  std::unordered_set<Point, PointHash> dirs;
  for (const auto& u : unit_vectors) {
    if (dirs.insert(u).second) out.vectors.push_back(u);
  }
  for (const auto& u : unit_vectors) {
    Point neg{Rational(-u.x), Rational(-u.y)};
    if (dirs.insert(neg).second) out.vectors.push_back(std::move(neg));
  }
  return out;
}

CurveFamily gen_random_family(std::size_t n, std::uint64_t seed, std::int64_t coord_bound) {
  if (n < 1) throw std::invalid_argument("random family needs n >= 1");
  if (coord_bound < 1) throw std::invalid_argument("random family needs coord_bound >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Translate> chosen;
  std::vector<Line> lines;
  std::unordered_set<std::int64_t> used_a;
  std::vector<Rational> xs;
  std::size_t budget = 1000 * n + 1000;

  while (chosen.size() < n) {
    if (budget-- == 0) {
      throw std::runtime_error("random family: no general-position family within retry budget");
    }
    const std::int64_t ka = draw(rng, -coord_bound, coord_bound);
    const std::int64_t kb = draw(rng, -coord_bound, coord_bound);
    if (used_a.count(ka)) continue;  // vertical shift of an earlier curve
    Translate t{quarter(ka), quarter(kb)};
    const Line line = Line::from(t);

    // A triple point through the new curve shows up as a repeated crossing.
    xs.clear();
    for (const auto& l : lines) xs.push_back(crossing_x(line, l));
    std::sort(xs.begin(), xs.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) continue;

    used_a.insert(ka);
    lines.push_back(line);
    chosen.push_back(std::move(t));
  }
  return CurveFamily(std::move(chosen));
}

}  // namespace transcut
