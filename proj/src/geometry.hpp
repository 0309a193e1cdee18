#pragma once

// Exact predicates for translates of the base parabola y = x^2.
//
// A translate (a, b) is the curve y = (x - a)^2 + b. Every predicate here is
// evaluated in lifted coordinates (x, y - x^2), where the translate becomes
// the line  y' = -2a x + (a^2 + b). The lift keeps x and keeps the vertical
// order of points and curves, so "below", "level", and "crosses" have the
// same answers in both pictures.

#include "rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace transcut {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Translate {
  Rational a;
  Rational b;

  friend bool operator==(const Translate&, const Translate&) = default;
};

Translate operator+(const Translate& lhs, const Translate& rhs);
Translate operator-(const Translate& lhs, const Translate& rhs);
Translate operator*(const Integer& k, const Translate& v);
bool lex_less(const Translate& lhs, const Translate& rhs);
bool lex_less(const Point& lhs, const Point& rhs);

struct PointHash {
  std::size_t operator()(const Point& p) const;
};
struct TranslateHash {
  std::size_t operator()(const Translate& t) const;
};

/// A translate in lifted coordinates: y' = slope * x + intercept.
struct Line {
  Rational slope;
  Rational intercept;

  Rational at(const Rational& x) const { return slope * x + intercept; }

  static Line from(const Translate& t);
  Translate translate() const;

  friend bool operator==(const Line&, const Line&) = default;
};

/// Lifted y-coordinate y - x^2.
Rational lifted_y(const Point& p);
Point unlift(const Rational& x, const Rational& lifted);

enum class Side { Below, On, Above };

/// Distinct translates of the base curve.
class CurveFamily {
 public:
  CurveFamily() = default;
  /// Throws std::invalid_argument on duplicates.
  explicit CurveFamily(std::vector<Translate> translates);

  std::size_t size() const { return translates_.size(); }
  bool empty() const { return translates_.empty(); }
  const Translate& operator[](std::size_t i) const { return translates_[i]; }
  const std::vector<Translate>& translates() const { return translates_; }
  const Line& line(std::size_t i) const { return lines_[i]; }
  const std::vector<Line>& lines() const { return lines_; }

 private:
  std::vector<Translate> translates_;
  std::vector<Line> lines_;
};

Rational curve_eval(const Translate& c, const Rational& x);

/// Unique common point of two translates; empty for vertical shifts.
/// Throws std::invalid_argument when c1 == c2.
std::optional<Point> intersect(const Translate& c1, const Translate& c2);

/// Unique translate through p and q; empty when p.x == q.x.
/// Throws std::invalid_argument when p == q.
std::optional<Translate> curve_through(const Point& p, const Point& q);

/// Position of p relative to the curve c.
Side point_vs_curve(const Point& p, const Translate& c);

/// Number of curves lying strictly below p.
std::size_t level_of_point(const Point& p, const CurveFamily& fam);

/// x-coordinate where two non-parallel lifted lines meet.
Rational crossing_x(const Line& l1, const Line& l2);

}  // namespace transcut
