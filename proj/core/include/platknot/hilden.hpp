#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "platknot/braid.hpp"
#include "platknot/plat.hpp"

namespace platknot {

enum class HildenKind { h1 = 1, h2 = 2, h3 = 3, h4 = 4 };

// Generator h^kind_index of the Hilden subgroup (index odd), or its inverse.
// Whether it multiplies on the left or on the right is decided by the list
// it is passed in to apply_moves.
struct HildenMove {
  HildenKind kind = HildenKind::h1;
  int index = 1;
  bool inverse = false;

  friend bool operator==(const HildenMove&, const HildenMove&) = default;
};

// h1_i = s_i
// h2_i = s_{i+1} s_{i+2} s_i s_{i+1}
// h3_i = s_{i+1} s_i s_{i+2}^-1 s_{i+1}^-1
// h4_i = s_{i+1}^-1 s_i^-1 s_{i+2} s_{i+1}
// Throws IndexParity for even i, IndexRange when the letters leave the strands.
BraidWord expand(const HildenMove& move, int strands);

// left moves (in order), then b, then right moves.
BraidWord apply_moves(const BraidWord& b, const std::vector<HildenMove>& left,
                      const std::vector<HildenMove>& right);

// All (kind, index) pairs valid on the given strand count, without inverses.
std::vector<HildenMove> hilden_generators(int strands);

// Product of `length` generators or inverses chosen uniformly from
// hilden_generators; the same seed always gives the same word.
BraidWord random_hilden_element(int strands, int length, std::uint64_t seed);

// Comma-separated `h<kind>@<index>` with optional `^-1`.
std::vector<HildenMove> parse_hilden_moves(std::string_view text);
std::string format_hilden_move(const HildenMove& move);

enum class CosetVerdict {
  // Source matrices agree up to rotation and every sampled translate kept
  // the closure invariants.
  SameCosetConsistent,
  // Different canonical forms, and the closure invariants already differ.
  ProvablyDistinct,
  // Different canonical forms; invariants agree and no sampled translate
  // reproduced the other word.
  DistinctNotRefuted,
  // Some check contradicted the uniqueness statement.
  Inconsistent,
};
std::string_view to_string(CosetVerdict v) noexcept;

struct CosetReport {
  CosetVerdict verdict = CosetVerdict::Inconsistent;
  bool same_canonical_form = false;
  bool identical_words = false;
  int samples = 0;
  std::string first_determinant;
  std::string second_determinant;
  int first_components = 0;
  int second_components = 0;
  std::vector<std::string> notes;
};

struct CosetCheckOptions {
  int samples = 16;
  int move_length = 3;
  std::uint64_t seed = 1;
};

// Falsification harness for the double-coset uniqueness statement: both
// matrices must be 4-highly twisted with m >= 4 and n >= 3. Invariants are
// the determinant and component count of the standard closure.
CosetReport coset_consistency(const TwistMatrix& first, const TwistMatrix& second,
                              const CosetCheckOptions& options = {});

}  // namespace platknot
