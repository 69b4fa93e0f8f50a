#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "platknot/plat.hpp"
#include "platknot/rational.hpp"

namespace platknot {

// [a0; a1, ..., ak] = a0 + 1/(a1 + 1/(... + 1/ak)).
using CFExpansion = std::vector<std::int64_t>;

// Throws DivisionByZeroTail when a tail that must be inverted is zero, and
// OutOfRange on an empty expansion.
Rational cf_evaluate(std::span<const std::int64_t> terms);

// Nearest integer, or nullopt when r sits exactly halfway between two.
std::optional<BigInt> nearest_integer(const Rational& r);

// The unique expansion with every |a_i| >= 3, built by repeatedly taking the
// nearest integer. Throws NotRepresentable on a tie or an undersized term.
CFExpansion cf_reconstruct(const Rational& r);

// Unordered pair {r, r'}; stored sorted so equality is set equality.
class SchubertPair {
 public:
  SchubertPair(Rational a, Rational b);
  const Rational& first() const noexcept { return lo_; }
  const Rational& second() const noexcept { return hi_; }
  bool is_singleton() const { return lo_ == hi_; }
  friend bool operator==(const SchubertPair&, const SchubertPair&) = default;

 private:
  Rational lo_;
  Rational hi_;
};

// r = [a1; -a2, a3, ..., -a_{n-1}, a_n] and r' from the reversed sequence.
// Needs n odd and every |a_i| >= 3 (OutOfRange / NotHighlyTwisted).
SchubertPair schubert_pair(std::span<const std::int64_t> coeffs);
bool twobridge_equivalent(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

// First (resp. last) entry of every row, top to bottom.
std::vector<std::int64_t> left_boundary_coeffs(const TwistMatrix& M);
std::vector<std::int64_t> right_boundary_coeffs(const TwistMatrix& M);

// Width-2 plat whose twist regions are the given coefficients down the left
// column (the second even-row column is zero). Its closure is the 2-bridge
// link with Schubert pair schubert_pair(coeffs).
TwistMatrix two_bridge_plat(std::span<const std::int64_t> coeffs);

}  // namespace platknot
