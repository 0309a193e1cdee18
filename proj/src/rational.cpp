#include "rational.hpp"

#include <stdexcept>

namespace transcut {

namespace {

bool valid_integer_text(std::string_view text) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

std::size_t hash_mpz(mpz_srcptr z) {
  std::size_t seed = static_cast<std::size_t>(mpz_sgn(z) + 1);
  const std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs; ++i) {
    hash_combine(seed, static_cast<std::size_t>(mpz_getlimbn(z, i)));
  }
  return seed;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string body(text);
  while (!body.empty() && (body.back() == ' ' || body.back() == '\t')) body.pop_back();
  std::size_t start = body.find_first_not_of(" \t");
  if (start == std::string::npos) throw std::invalid_argument("empty rational");
  body = body.substr(start);

  const std::size_t slash = body.find('/');
  std::string num = body.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer n(num, 10);
  Integer d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

int sign(const Rational& value) { return sgn(value); }

double to_double(const Rational& value) { return value.get_d(); }

std::size_t hash_value(const Rational& value) {
  std::size_t seed = hash_mpz(value.get_num_mpz_t());
  hash_combine(seed, hash_mpz(value.get_den_mpz_t()));
  return seed;
}

Integer floor(const Rational& value) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& value) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

const Rational& XBound::value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("infinite x-bound has no value");
  return value_;
}

bool operator==(const XBound& lhs, const XBound& rhs) {
  if (lhs.kind_ != rhs.kind_) return false;
  return lhs.kind_ != XBound::Kind::Finite || lhs.value_ == rhs.value_;
}

std::strong_ordering operator<=>(const XBound& lhs, const XBound& rhs) {
  if (lhs.kind_ != rhs.kind_) {
    return static_cast<int>(lhs.kind_) <=> static_cast<int>(rhs.kind_);
  }
  if (lhs.kind_ != XBound::Kind::Finite) return std::strong_ordering::equal;
  const int c = cmp(lhs.value_, rhs.value_);
  return c <=> 0;
}

std::string XBound::str() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "inf";
    case Kind::Finite: break;
  }
  return to_string(value_);
}

XBound XBound::parse(std::string_view text) {
  if (text == "-inf") return neg_inf();
  if (text == "inf" || text == "+inf") return pos_inf();
  return XBound(parse_rational(text));
}

bool operator<(const XBound& lhs, const Rational& rhs) {
  switch (lhs.kind()) {
    case XBound::Kind::NegInf: return true;
    case XBound::Kind::PosInf: return false;
    case XBound::Kind::Finite: break;
  }
  return lhs.value() < rhs;
}

bool operator<(const Rational& lhs, const XBound& rhs) {
  switch (rhs.kind()) {
    case XBound::Kind::NegInf: return false;
    case XBound::Kind::PosInf: return true;
    case XBound::Kind::Finite: break;
  }
  return lhs < rhs.value();
}

}  // namespace transcut
