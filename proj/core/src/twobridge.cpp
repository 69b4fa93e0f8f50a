#include "platknot/twobridge.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace platknot {

Rational cf_evaluate(std::span<const std::int64_t> terms) {
  if (terms.empty()) throw Error(ErrorCode::OutOfRange, "empty continued fraction");
  Rational value(static_cast<long long>(terms.back()));
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
    if (value.sign() == 0) {
      throw Error(ErrorCode::DivisionByZeroTail, "continued fraction tail evaluates to 0");
    }
    value = Rational(static_cast<long long>(*it)) + value.reciprocal();
  }
  return value;
}

std::optional<BigInt> nearest_integer(const Rational& r) {
  // floor division with a non-negative remainder
  BigInt q = r.num() / r.den();
  BigInt rem = r.num() - q * r.den();
  if (rem < 0) {
    q -= 1;
    rem += r.den();
  }
  const BigInt twice = 2 * rem;
  if (twice == r.den()) return std::nullopt;
  return twice < r.den() ? q : BigInt(q + 1);
}

CFExpansion cf_reconstruct(const Rational& r) {
  CFExpansion terms;
  Rational rest = r;
  const Rational half(1, 2);
  while (true) {
    auto a = nearest_integer(rest);
    if (!a) {
      throw Error(ErrorCode::NotRepresentable,
                  rest.str() + " is equidistant from two integers");
    }
    if (abs(*a) < 3) {
      throw Error(ErrorCode::NotRepresentable,
                  "term " + a->str() + " of " + r.str() + " has modulus below 3");
    }
    if (*a > std::numeric_limits<std::int64_t>::max() ||
        *a < std::numeric_limits<std::int64_t>::min()) {
      throw Error(ErrorCode::OutOfRange, "term does not fit in 64 bits");
    }
    terms.push_back(static_cast<std::int64_t>(*a));
    const Rational tail = rest - Rational(*a);
    if (tail.sign() == 0) return terms;
    if (!(tail.abs() < half)) {
      throw Error(ErrorCode::NotRepresentable, "fractional remainder is not below 1/2");
    }
    rest = tail.reciprocal();
  }
}

SchubertPair::SchubertPair(Rational a, Rational b) : lo_(std::move(a)), hi_(std::move(b)) {
  if (hi_ < lo_) std::swap(lo_, hi_);
}

namespace {

void require_schubert_input(std::span<const std::int64_t> coeffs) {
  if (coeffs.size() % 2 == 0) {
    throw Error(ErrorCode::OutOfRange, "coefficient sequence must have odd length");
  }
  for (auto a : coeffs) {
    if (std::llabs(a) < 3) {
      throw Error(ErrorCode::NotHighlyTwisted, "coefficient " + std::to_string(a) +
                                                   " has modulus below 3");
    }
  }
}

Rational alternating_value(std::span<const std::int64_t> coeffs) {
  CFExpansion terms(coeffs.begin(), coeffs.end());
  for (std::size_t k = 1; k < terms.size(); k += 2) terms[k] = -terms[k];
  return cf_evaluate(terms);
}

}  // namespace

SchubertPair schubert_pair(std::span<const std::int64_t> coeffs) {
  require_schubert_input(coeffs);
  const CFExpansion reversed(coeffs.rbegin(), coeffs.rend());
  return SchubertPair(alternating_value(coeffs), alternating_value(reversed));
}

bool twobridge_equivalent(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  return schubert_pair(a) == schubert_pair(b);
}

std::vector<std::int64_t> left_boundary_coeffs(const TwistMatrix& M) {
  require_valid(M);
  std::vector<std::int64_t> out;
  for (const auto& row : M.rows) out.push_back(row.front());
  return out;
}

std::vector<std::int64_t> right_boundary_coeffs(const TwistMatrix& M) {
  require_valid(M);
  std::vector<std::int64_t> out;
  for (const auto& row : M.rows) out.push_back(row.back());
  return out;
}

TwistMatrix two_bridge_plat(std::span<const std::int64_t> coeffs) {
  if (coeffs.size() % 2 == 0) {
    throw Error(ErrorCode::OutOfRange, "coefficient sequence must have odd length");
  }
  TwistMatrix M;
  M.m = 2;
  M.n = static_cast<int>(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i % 2 == 0) {
      M.rows.push_back({coeffs[i]});
    } else {
      M.rows.push_back({coeffs[i], 0});
    }
  }
  return M;
}

}  // namespace platknot
