#include <doctest.h>

#include "generators.hpp"
#include "incidence.hpp"
#include "oracles.hpp"

#include <cmath>
#include <random>
#include <set>

using namespace transcut;

namespace {

Rational q(long p, long d = 1) {
  Rational r{Integer(p), Integer(d)};
  r.canonicalize();
  return r;
}

Instance random_instance(std::mt19937_64& rng, std::size_t s, std::size_t t, std::size_t extra) {
  Instance inst;
  std::uniform_int_distribution<long> small(-6, 6);
  while (inst.s_coords.size() < s) {
    Rational v = q(small(rng), 1 + (rng() % 2));
    if (std::find(inst.s_coords.begin(), inst.s_coords.end(), v) == inst.s_coords.end()) {
      inst.s_coords.push_back(v);
    }
  }
  while (inst.translates.size() < t) {
    Translate v{q(small(rng)), q(small(rng))};
    if (std::find(inst.translates.begin(), inst.translates.end(), v) == inst.translates.end()) {
      inst.translates.push_back(v);
    }
  }
  // about half the points are genuine s + t, the rest noise
  std::set<std::pair<Rational, Rational>> seen;
  std::uniform_int_distribution<std::size_t> ps(0, s - 1), pt(0, t - 1);
  for (std::size_t i = 0; i < extra; ++i) {
    Point p;
    if (rng() % 2) {
      p = shifted(inst.s_coords[ps(rng)], inst.translates[pt(rng)]);
    } else {
      p = {q(small(rng), 2), q(small(rng) * 7, 4)};
    }
    if (seen.insert({p.x, p.y}).second) inst.points.push_back(p);
  }
  return inst;
}

}  // namespace

TEST_CASE("single incidence and disjoint sets") {
  Instance one;
  one.points = {{q(1), q(1)}};
  one.s_coords = {q(0)};
  one.translates = {{q(1), q(1)}};
  const IncidenceCount c = count_incidences(one);
  CHECK(c.total == 1);
  CHECK(c.distinct_points == 1);
  CHECK(c.per_translate == std::vector<std::uint64_t>{1});

  Instance none = one;
  none.points = {{q(5), q(-3)}};
  CHECK(count_incidences(none).total == 0);
}

TEST_CASE("pairs are counted with multiplicity") {
  // (0,0) + (1,0) and (1,1) + (0,-1) both land on (1,0)
  Instance inst;
  inst.points = {{q(1), q(0)}};
  inst.s_coords = {q(0), q(1)};
  inst.translates = {{q(1), q(0)}, {q(0), q(-1)}};
  const IncidenceCount c = count_incidences(inst);
  CHECK(c.total == 2);
  CHECK(c.distinct_points == 1);
}

TEST_CASE("validation rejects duplicates") {
  Instance inst;
  inst.points = {{q(1), q(1)}, {q(1), q(1)}};
  CHECK_THROWS_AS(validate(inst), std::invalid_argument);
  inst.points = {{q(1), q(1)}};
  inst.s_coords = {q(2), q(2)};
  CHECK_THROWS_AS(validate(inst), std::invalid_argument);
  inst.s_coords = {q(2)};
  inst.translates = {{q(0), q(0)}, {q(0), q(0)}};
  CHECK_THROWS_AS(validate(inst), std::invalid_argument);
}

TEST_CASE("grid construction with A = 4 has 256 incidences") {
  const Instance inst = gen_grid_construction(4);
  CHECK(count_incidences(inst).total == 256);
  CHECK(oracle::incidences(inst) == 256);
}

TEST_CASE("unit distance pairs") {
  const std::vector<Point> P{{q(0), q(0)}, {q(1), q(0)}};
  CHECK(unit_distance_count(P, {{q(1), q(0)}}) == 1);
  CHECK(unit_distance_count(P, {{q(1), q(0)}, {q(-1), q(0)}}) == 2);
  CHECK_THROWS_AS(unit_distance_count(P, {{q(1), q(1)}}), std::invalid_argument);

  const Point u{q(3, 5), q(4, 5)};
  std::vector<Point> line;
  for (long i = 0; i < 10; ++i) line.push_back({u.x * i, u.y * i});
  const std::vector<Point> U{u, {-u.x, -u.y}};
  CHECK(unit_distance_count(line, U) == 18);
  CHECK(oracle::unit_pairs(line, U) == 18);
}

TEST_CASE("ST audit") {
  const StAudit one = st_audit(1, 1, 1);
  CHECK(one.pass);
  CHECK(one.ratio == doctest::Approx(1.0 / 3.0));
  CHECK(st_audit(0, 17, 0).pass);
  CHECK(st_audit(0, 0, 0).ratio == 0);
  // 4 * (1 + 1 + 1) = 12 is the envelope for one point and one curve
  CHECK(st_audit(1, 1, 12).pass);
  CHECK_FALSE(st_audit(1, 1, 13).pass);

  const Instance grid = gen_grid_construction(8);
  const std::uint64_t I = count_incidences(grid).total;
  CHECK(I == 4096);
  const StAudit a = st_audit(grid.points.size(), grid.translates.size(), I);
  const double n = 1905, m = 512;
  CHECK(a.ratio == doctest::Approx(4096 / (std::cbrt(n * n) * std::cbrt(m * m) + n + m)));
  CHECK(a.pass);
}

TEST_CASE("property: hashed incidence count equals the double loop") {
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 40; ++it) {
    const Instance inst = random_instance(rng, 2 + rng() % 8, 2 + rng() % 30, 60);
    const IncidenceCount c = count_incidences(inst);
    CHECK(c.total == oracle::incidences(inst));
    std::uint64_t sum = 0;
    for (auto v : c.per_translate) sum += v;
    CHECK(sum == c.total);
    CHECK(c.distinct_points <= c.total);
  }
}

TEST_CASE("property: incidences are translation invariant") {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 20; ++it) {
    Instance inst = random_instance(rng, 5, 20, 50);
    const std::uint64_t before = count_incidences(inst).total;
    const Translate shift{oracle::small_rational(rng, 9, 4), oracle::small_rational(rng, 9, 4)};
    for (auto& p : inst.points) p = {p.x + shift.a, p.y + shift.b};
    for (auto& t : inst.translates) t = t + shift;
    CHECK(count_incidences(inst).total == before);
  }
}

TEST_CASE("property: unit-distance counts are symmetric under U -> -U") {
  const auto& table = pythagorean_unit_vectors();
  const UnitDistanceGap g = gen_unit_distance_gap({table[0], table[1]}, {4, 3});
  std::vector<Point> neg;
  for (const auto& u : g.vectors) neg.push_back({-u.x, -u.y});
  CHECK(unit_distance_count(g.points, g.vectors) == unit_distance_count(g.points, neg));
  const std::vector<Point> half{table[0], table[1]};
  const std::vector<Point> half_neg{{-table[0].x, -table[0].y}, {-table[1].x, -table[1].y}};
  CHECK(unit_distance_count(g.points, half) == unit_distance_count(g.points, half_neg));
  CHECK(unit_distance_count(g.points, half) == oracle::unit_pairs(g.points, half));
}
