#pragma once

#include <vector>

#include "platknot/laurent.hpp"
#include "platknot/planar_diagram.hpp"
#include "platknot/rational.hpp"

namespace platknot {

inline constexpr int kDefaultBracketCap = 22;

int writhe(const PlanarDiagram& d);

// |Alexander polynomial at t = -1|, from a first minor of the Fox coloring
// matrix (one row per crossing, one column per over-arc) using fraction-free
// elimination. Split diagrams, including any crossingless circle next to
// other components, give 0; a single crossingless circle gives 1.
BigInt determinant(const PlanarDiagram& d);

struct BracketOptions {
  int cap = kDefaultBracketCap;
  // 0 picks the hardware concurrency. The result never depends on it.
  unsigned threads = 0;
};

// State sum over all 2^c smoothings, in the variable A, normalised so that a
// crossingless circle is 1. Throws TooManyCrossings above the cap.
LaurentPoly kauffman_bracket(const PlanarDiagram& d, const BracketOptions& options = {});

// (-A)^(-3w) <D> with A = t^(-1/4). Exponent e of the result means t^(e/2).
LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe);
LaurentPoly jones(const PlanarDiagram& d, const BracketOptions& options = {});

// Value at t = -1 taking t^(1/2) = i, as (real, imaginary).
std::pair<BigInt, BigInt> jones_at_minus_one(const LaurentPoly& jones_poly);

// Writhe after reversing the components whose bit is set in `reversed`
// (components with crossings, in component_ranges order).
int writhe_with_reversed(const PlanarDiagram& d, std::uint64_t reversed);

// Jones polynomials of every orientation of d, one entry per subset of
// reversed components. Throws OutOfRange above 20 components with crossings.
std::vector<LaurentPoly> jones_all_orientations(const PlanarDiagram& d,
                                                const LaurentPoly& bracket);

// True when some orientation of `b` has the same Jones polynomial as `a`
// with its stored orientation (or its mirror image, when allowed).
bool jones_agree(const PlanarDiagram& a, const LaurentPoly& bracket_a, const PlanarDiagram& b,
                 const LaurentPoly& bracket_b, bool allow_mirror);

}  // namespace platknot
