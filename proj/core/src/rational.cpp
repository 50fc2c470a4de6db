#include "cnct/rational.hpp"

#include <cctype>
#include <ostream>

#include "cnct/error.hpp"

namespace cnct {
namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw Error(ErrorKind::Parse, "malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (text[pos] - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator.is_zero()) throw Error(ErrorKind::Parse, "zero denominator");
  value_ = denominator.sign() < 0 ? Value(-numerator, -denominator)
                                  : Value(numerator, denominator);
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text), 1);
  const std::string_view den = text.substr(slash + 1);
  if (!den.empty() && (den[0] == '+' || den[0] == '-')) {
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  }
  return Rational(parse_integer(text.substr(0, slash), text), parse_integer(den, text));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::OutOfRange, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const {
  const BigInt den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace cnct
