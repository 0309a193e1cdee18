#include <doctest.h>

#include "additive.hpp"
#include "oracles.hpp"

#include <random>

using namespace transcut;

namespace {

Translate v(long a, long b) { return {Rational(a), Rational(b)}; }

std::vector<Translate> ap(long len) {
  std::vector<Translate> out;
  for (long i = 0; i < len; ++i) out.push_back(v(i, 0));
  return out;
}

std::vector<oracle::V2> as_v2(const std::vector<Translate>& A) {
  std::vector<oracle::V2> out;
  for (const auto& a : A) out.push_back(oracle::to_v2(a));
  return out;
}

std::vector<Translate> random_set(std::mt19937_64& rng, std::size_t size, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  std::vector<Translate> A;
  while (A.size() < size) {
    const Translate t = v(d(rng), d(rng));
    if (std::find(A.begin(), A.end(), t) == A.end()) A.push_back(t);
  }
  return A;
}

}  // namespace

TEST_CASE("difference sets") {
  const DifferenceSet d = difference_set(ap(10));
  CHECK(d.elements.size() == 19);
  CHECK(d.doubling == Rational(19, 10));

  const DifferenceSet one = difference_set({v(3, 4)});
  CHECK(one.elements == std::vector<Translate>{v(0, 0)});
  CHECK(one.doubling == 1);

  // powers of two in both coordinates: all differences distinct
  std::vector<Translate> generic;
  for (long i = 0; i < 10; ++i) generic.push_back(v(1L << i, 1L << (2 * i)));
  const DifferenceSet g = difference_set(generic);
  CHECK(g.elements.size() == 91);
  CHECK(g.doubling == Rational(91, 10));
  CHECK(oracle::differences(as_v2(generic)).size() == 91);

  CHECK_THROWS_AS(difference_set({}), std::invalid_argument);
  CHECK_THROWS_AS(difference_set({v(1, 1), v(1, 1)}), std::invalid_argument);
}

TEST_CASE("GAP membership") {
  Gap line{v(0, 0), {v(1, 0)}, {5}};
  CHECK(gap_contains(line, v(3, 0)));
  CHECK_FALSE(gap_contains(line, v(5, 0)));
  CHECK_FALSE(gap_contains(line, v(-1, 0)));
  CHECK_FALSE(gap_contains(line, v(2, 1)));
  CHECK(line.size() == 5);

  Gap box{v(0, 0), {v(1, 0), v(0, 1)}, {4, 4}};
  CHECK(gap_contains(box, v(2, 3)));
  CHECK_FALSE(gap_contains(box, v(4, 3)));
  CHECK(box.size() == 16);

  Gap point{v(2, 2), {}, {}};
  CHECK(gap_contains(point, v(2, 2)));
  CHECK_FALSE(gap_contains(point, v(2, 3)));

  Gap rational{{Rational(1, 2), Rational(0)}, {{Rational(1, 3), Rational(1, 5)}}, {4}};
  CHECK(gap_contains(rational, {Rational(3, 2), Rational(3, 5)}));
  CHECK_FALSE(gap_contains(rational, {Rational(3, 2), Rational(2, 5)}));

  Gap three{v(0, 0), {v(1, 0), v(0, 1), v(1, 1)}, {2, 2, 2}};
  CHECK_THROWS_AS(gap_contains(three, v(0, 0)), std::invalid_argument);
}

TEST_CASE("GAP fitting on structured sets") {
  GapFitOptions o;
  const auto line = gap_fit(ap(10), o);
  REQUIRE(line);
  CHECK(line->gap.dimension() == 1);
  CHECK(line->gap.size() == 10);
  CHECK(line->coverage == 10);

  std::vector<Translate> grid;
  for (long a = 0; a < 4; ++a) {
    for (long b = 0; b < 4; ++b) grid.push_back(v(a, b));
  }
  const auto box = gap_fit(grid, o);
  REQUIRE(box);
  CHECK(box->gap.dimension() == 2);
  CHECK(box->gap.size() == 16);
  CHECK(box->coverage == 16);

  const auto single = gap_fit({v(7, -2)}, o);
  REQUIRE(single);
  CHECK(single->gap.dimension() == 0);
  CHECK(single->gap.size() == 1);
}

TEST_CASE("generic vectors do not fit a short progression") {
  std::vector<Translate> generic;
  for (long i = 0; i < 10; ++i) generic.push_back(v(1L << i, 3 * i * i + 1));
  GapFitOptions o;
  o.d_max = 1;
  o.size_cap = 20;
  o.exact = true;
  CHECK_FALSE(gap_fit(generic, o));
  // the brute-force oracle agrees that every 1-dimensional fit is too big
  CHECK(oracle::min_gap(as_v2(generic), 1).size > 20);
}

TEST_CASE("GAP fitting options") {
  GapFitOptions o;
  o.exact = true;
  CHECK_THROWS_AS(gap_fit(ap(13), o), std::invalid_argument);
  o.exact = false;
  o.d_max = 3;
  CHECK_THROWS_AS(gap_fit(ap(3), o), std::invalid_argument);
  o.d_max = 2;
  o.min_coverage = 0;
  CHECK_THROWS_AS(gap_fit(ap(3), o), std::invalid_argument);
  o.min_coverage = Rational(3, 2);
  CHECK_THROWS_AS(gap_fit(ap(3), o), std::invalid_argument);
  CHECK_THROWS_AS(gap_fit({}, GapFitOptions{}), std::invalid_argument);

  // partial coverage: an AP plus one outlier is mostly a line
  std::vector<Translate> A = ap(9);
  A.push_back(v(100, 37));
  GapFitOptions partial;
  partial.d_max = 1;
  partial.min_coverage = Rational(9, 10);
  const auto fit = gap_fit(A, partial);
  REQUIRE(fit);
  CHECK(fit->coverage == 9);
  CHECK(fit->gap.size() == 9);
  partial.min_coverage = 1;
  partial.size_cap = 50;
  CHECK_FALSE(gap_fit(A, partial));
}

TEST_CASE("canonical directions") {
  CHECK(canonical_direction(v(-1, 2)) == v(1, -2));
  CHECK(canonical_direction(v(0, -3)) == v(0, 3));
  CHECK(canonical_direction(v(2, -5)) == v(2, -5));
}

TEST_CASE("property: difference set bounds and monotonicity") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 60; ++it) {
    const std::size_t n = 1 + rng() % 12;
    std::vector<Translate> A = random_set(rng, n, 5);
    const DifferenceSet d = difference_set(A);
    CHECK(d.elements.size() == oracle::differences(as_v2(A)).size());
    CHECK(d.elements.size() >= 2 * n - 1);
    CHECK(d.elements.size() <= n * n - n + 1);
    CHECK(std::is_sorted(d.elements.begin(), d.elements.end(),
                         [](const Translate& l, const Translate& r) { return lex_less(l, r); }));
    // adding an element never shrinks A - A
    auto bigger = random_set(rng, n + 1, 5);
    for (const auto& t : bigger) {
      if (std::find(A.begin(), A.end(), t) == A.end()) {
        A.push_back(t);
        break;
      }
    }
    if (A.size() == n + 1) CHECK(difference_set(A).elements.size() >= d.elements.size());
  }
}

TEST_CASE("property: fitted GAPs contain the input and respect the cap") {
  std::mt19937_64 rng(6);
  for (int it = 0; it < 60; ++it) {
    const std::vector<Translate> A = random_set(rng, 2 + rng() % 11, 4);
    GapFitOptions o;
    o.size_cap = 30 + rng() % 60;
    o.exact = rng() % 2;
    const auto fit = gap_fit(A, o);
    if (!fit) continue;
    CHECK(fit->gap.size() <= o.size_cap);
    CHECK(fit->coverage == A.size());
    const auto elems = oracle::gap_elements(fit->gap);
    CHECK(elems.size() == fit->gap.size().get_ui());
    for (const auto& a : A) {
      CHECK(gap_contains(fit->gap, a));
      CHECK(elems.count(oracle::to_v2(a)) == 1);
    }
  }
}

TEST_CASE("property: exact fits of synthetic GAPs recover their dimension and size") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> d(-4, 4);
  int checked = 0;
  while (checked < 40) {
    const Translate g1 = v(d(rng), d(rng)), g2 = v(d(rng), d(rng));
    const Rational det = g1.a * g2.b - g1.b * g2.a;
    if (sgn(det) == 0) continue;
    const std::uint64_t l1 = 2 + rng() % 3, l2 = 2 + rng() % 2;  // at most 12 elements
    const Gap g{v(d(rng), d(rng)), {g1, g2}, {l1, l2}};
    std::vector<Translate> A;
    for (std::uint64_t i = 0; i < l1; ++i) {
      for (std::uint64_t j = 0; j < l2; ++j) {
        A.push_back(g.base + Integer(i) * g1 + Integer(j) * g2);
      }
    }
    GapFitOptions o;
    o.exact = true;
    const auto fit = gap_fit(A, o);
    REQUIRE(fit);
    CHECK(fit->gap.size() == l1 * l2);
    CHECK(fit->gap.dimension() <= 2);
    ++checked;
  }
}

TEST_CASE("property: exact fits match the brute-force minimum") {
  std::mt19937_64 rng(9);
  for (int it = 0; it < 40; ++it) {
    const std::size_t n = 1 + rng() % 8;
    const std::vector<Translate> A = random_set(rng, n, 3);
    GapFitOptions o;
    o.exact = true;
    const auto fit = gap_fit(A, o);
    const oracle::MinGap expect = oracle::min_gap(as_v2(A), 2);
    CAPTURE(n);
    // some sets have no pair of differences spanning their lattice
    const bool exists = expect.size != std::numeric_limits<std::uint64_t>::max();
    REQUIRE(fit.has_value() == exists);
    if (!exists) continue;
    CHECK(fit->gap.size() == expect.size);
    CHECK(fit->gap.dimension() == expect.dimension);
  }
}
