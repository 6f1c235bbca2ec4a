#include "pricelab/exactnum/rational.hpp"

#include <cctype>
#include <ostream>

#include "pricelab/errors.hpp"

namespace pricelab::exact {

namespace {

bool is_integer_literal(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw ArgumentError("not an integer literal: '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

std::string to_string(const Integer& value) { return value.get_str(10); }

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw ArgumentError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(long long numerator, long long denominator)
    : Rational(Integer(static_cast<long>(numerator)), Integer(static_cast<long>(denominator))) {}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string Rational::str() const {
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArgumentError("rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational rational_arith(const Rational& a, const Rational& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add:
      return a + b;
    case ArithOp::Subtract:
      return a - b;
    case ArithOp::Multiply:
      return a * b;
    case ArithOp::Divide:
      return a / b;
  }
  throw ArgumentError("unknown arithmetic op");
}

}  // namespace pricelab::exact
