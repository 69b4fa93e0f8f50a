#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "platknot/plat.hpp"

namespace platknot {

// pi-rotations of a plat about the vertical and horizontal in-plane axes.
// A rotation about an in-plane axis both reflects the projection and swaps
// every crossing, so coefficients keep their sign and only move.
enum class Symmetry { Id = 0, H = 1, V = 2, HV = 3 };

inline constexpr std::array<Symmetry, 4> kAllSymmetries{Symmetry::Id, Symmetry::H, Symmetry::V,
                                                        Symmetry::HV};

std::string_view to_string(Symmetry g) noexcept;
// Klein four-group product.
Symmetry operator*(Symmetry g, Symmetry h) noexcept;

// H reverses the row order, V reverses each row.
TwistMatrix apply(Symmetry g, const TwistMatrix& M);

struct CanonicalOptions {
  // Accept inputs outside 4-highly twisted, m >= 4, n >= 3. The result is
  // then only a normal form of the diagram.
  bool force = false;
};

// Throws NotHighlyTwisted / DimensionsOutOfTheoremRange unless forced.
void require_theorem_range(const TwistMatrix& M);

// Lexicographically least image under the four rotations.
TwistMatrix canonical_form(const TwistMatrix& M, CanonicalOptions options = {});
bool equivalent(const TwistMatrix& a, const TwistMatrix& b, CanonicalOptions options = {});
std::vector<Symmetry> symmetry_group(const TwistMatrix& M);

}  // namespace platknot
