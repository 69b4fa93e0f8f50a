#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace platknot {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction, always reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(BigInt numerator) : num_(std::move(numerator)) {}  // NOLINT: implicit from integers
  Rational(long long numerator) : num_(numerator) {}          // NOLINT
  Rational(int numerator) : num_(numerator) {}                // NOLINT
  Rational(BigInt numerator, BigInt denominator);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  Rational reciprocal() const;  // throws DivisionByZeroTail on zero
  Rational abs() const { return Rational(num_ < 0 ? BigInt(-num_) : num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(BigInt(-num_), den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string str() const;

 private:
  BigInt num_{0};
  BigInt den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Accepts "p/q" or "p". Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace platknot
