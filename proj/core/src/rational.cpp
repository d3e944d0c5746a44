#include "herbrand/rational.hpp"

#include <cctype>
#include <ostream>

#include "herbrand/error.hpp"

namespace herbrand {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw Error(ErrorCode::domain, "malformed rational '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw Error(ErrorCode::domain, "malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::domain, "zero denominator");
  // The backend rejects a negative denominator.
  value_ = den < 0 ? Value(-num, -den) : Value(num, den);
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  auto num = parse_integer(text.substr(0, slash), text);
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw Error(ErrorCode::domain, "malformed rational '" + std::string(text) + "'");
  }
  return Rational(num, parse_integer(den_text, text));
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

BigInt Rational::floor() const {
  BigInt n = numerator(), d = denominator();
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

BigInt Rational::ceil() const {
  BigInt n = numerator(), d = denominator();
  BigInt q = n / d;
  if (n > 0 && q * d != n) q += 1;
  return q;
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

std::string Rational::to_fraction_string() const {
  return numerator().str() + "/" + denominator().str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw Error(ErrorCode::domain, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace herbrand
