#pragma once

// Exact rational scalars backed by GMP.
//
// mpq_class keeps values canonical (lowest terms, positive denominator) after
// every arithmetic operation; values built from strings are canonicalized by
// parse_rational.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace transcut {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p", "p/q" (q != 0). Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

int sign(const Rational& value);

double to_double(const Rational& value);

std::size_t hash_value(const Rational& value);

inline void hash_combine(std::size_t& seed, std::size_t h) {
  seed ^= h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

/// floor(p/q) and ceil(p/q) for rationals.
Integer floor(const Rational& value);
Integer ceil(const Rational& value);

/// An x-coordinate on the extended real line. Edges of an arrangement are
/// unbounded to the left or right; those ends are represented as infinities.
class XBound {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  XBound() : kind_(Kind::NegInf) {}
  XBound(Rational value) : kind_(Kind::Finite), value_(std::move(value)) {}

  static XBound neg_inf() { return XBound(Kind::NegInf); }
  static XBound pos_inf() { return XBound(Kind::PosInf); }

  Kind kind() const { return kind_; }
  bool finite() const { return kind_ == Kind::Finite; }
  const Rational& value() const;

  friend bool operator==(const XBound& lhs, const XBound& rhs);
  friend std::strong_ordering operator<=>(const XBound& lhs, const XBound& rhs);

  /// Rational string, or "inf" / "-inf".
  std::string str() const;
  static XBound parse(std::string_view text);

 private:
  explicit XBound(Kind kind) : kind_(kind) {}

  Kind kind_;
  Rational value_;
};

bool operator<(const XBound& lhs, const Rational& rhs);
bool operator<(const Rational& lhs, const XBound& rhs);

}  // namespace transcut
