#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace herbrand {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Every depth, filtration index and Herbrand-function value in the library
/// is a Rational; there is no floating point anywhere.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& n) : value_(n) {}
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "a", "-a" and "a/b" (b != 0); the result is reduced.
  static Rational parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;

  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  BigInt floor() const;
  BigInt ceil() const;

  /// Human form: "a" for integers, otherwise "a/b".
  std::string to_string() const;
  /// Wire form used in JSON: always "a/b" with b > 0.
  std::string to_fraction_string() const;

  Rational operator-() const { return Rational(Raw{}, -value_); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  using Value = boost::multiprecision::cpp_rational;
  struct Raw {};
  Rational(Raw, Value v) : value_(std::move(v)) {}

  Value value_{0};
};

Rational abs(const Rational& r);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

}  // namespace herbrand
