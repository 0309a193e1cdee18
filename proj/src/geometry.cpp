#include "geometry.hpp"

#include <stdexcept>
#include <unordered_set>

namespace transcut {

Translate operator+(const Translate& lhs, const Translate& rhs) {
  return {lhs.a + rhs.a, lhs.b + rhs.b};
}

Translate operator-(const Translate& lhs, const Translate& rhs) {
  return {lhs.a - rhs.a, lhs.b - rhs.b};
}

Translate operator*(const Integer& k, const Translate& v) {
  return {Rational(k) * v.a, Rational(k) * v.b};
}

bool lex_less(const Translate& lhs, const Translate& rhs) {
  const int c = cmp(lhs.a, rhs.a);
  return c < 0 || (c == 0 && lhs.b < rhs.b);
}

bool lex_less(const Point& lhs, const Point& rhs) {
  const int c = cmp(lhs.x, rhs.x);
  return c < 0 || (c == 0 && lhs.y < rhs.y);
}

std::size_t PointHash::operator()(const Point& p) const {
  std::size_t seed = hash_value(p.x);
  hash_combine(seed, hash_value(p.y));
  return seed;
}

std::size_t TranslateHash::operator()(const Translate& t) const {
  std::size_t seed = hash_value(t.a);
  hash_combine(seed, hash_value(t.b));
  return seed;
}

Line Line::from(const Translate& t) {
  return {Rational(-2 * t.a), Rational(t.a * t.a + t.b)};
}

Translate Line::translate() const {
  Rational a = -slope / 2;
  return {a, Rational(intercept - a * a)};
}

Rational lifted_y(const Point& p) { return p.y - p.x * p.x; }

Point unlift(const Rational& x, const Rational& lifted) {
  return {x, Rational(lifted + x * x)};
}

CurveFamily::CurveFamily(std::vector<Translate> translates)
    : translates_(std::move(translates)) {
  std::unordered_set<Translate, TranslateHash> seen;
  seen.reserve(translates_.size());
  lines_.reserve(translates_.size());
  for (const auto& t : translates_) {
    if (!seen.insert(t).second) {
      throw std::invalid_argument("duplicate translate (" + to_string(t.a) + ", " +
                                  to_string(t.b) + ") in curve family");
    }
    lines_.push_back(Line::from(t));
  }
}

Rational curve_eval(const Translate& c, const Rational& x) {
  Rational d = x - c.a;
  return d * d + c.b;
}

Rational crossing_x(const Line& l1, const Line& l2) {
  return (l2.intercept - l1.intercept) / (l1.slope - l2.slope);
}

std::optional<Point> intersect(const Translate& c1, const Translate& c2) {
  if (c1 == c2) throw std::invalid_argument("intersect: identical translates");
  if (c1.a == c2.a) return std::nullopt;
  Rational x = (c1.a + c2.a) / 2 + (c2.b - c1.b) / (2 * (c2.a - c1.a));
  Rational y = curve_eval(c1, x);
  return Point{std::move(x), std::move(y)};
}

std::optional<Translate> curve_through(const Point& p, const Point& q) {
  if (p == q) throw std::invalid_argument("curve_through: identical points");
  if (p.x == q.x) return std::nullopt;
  Rational a = (p.x * p.x - q.x * q.x - (p.y - q.y)) / (2 * (p.x - q.x));
  Rational d = p.x - a;
  Rational b = p.y - d * d;
  return Translate{std::move(a), std::move(b)};
}

Side point_vs_curve(const Point& p, const Translate& c) {
  const int s = cmp(p.y, curve_eval(c, p.x));
  if (s < 0) return Side::Below;
  if (s > 0) return Side::Above;
  return Side::On;
}

std::size_t level_of_point(const Point& p, const CurveFamily& fam) {
  std::size_t level = 0;
  for (const auto& c : fam.translates()) {
    if (point_vs_curve(p, c) == Side::Above) ++level;
  }
  return level;
}

}  // namespace transcut
