#pragma once

#include <map>
#include <string>
#include <string_view>

#include "platknot/rational.hpp"

namespace platknot {

// Integer Laurent polynomial in one variable; zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(BigInt coefficient, int exponent);
  static LaurentPoly constant(BigInt c) { return monomial(std::move(c), 0); }

  const std::map<int, BigInt>& terms() const noexcept { return terms_; }
  BigInt coefficient(int exponent) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const BigInt& coefficient, int exponent);
  // x -> 1/x
  LaurentPoly inverted() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Exponents are printed divided by `exponent_scale`, so the Jones
  // polynomial stored on the t^(1/2) grid prints with half-integer powers.
  std::string str(std::string_view variable, int exponent_scale = 1) const;

 private:
  std::map<int, BigInt> terms_;
};

}  // namespace platknot
