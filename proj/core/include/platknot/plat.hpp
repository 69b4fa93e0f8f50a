#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "platknot/braid.hpp"
#include "platknot/error.hpp"
#include "platknot/planar_diagram.hpp"

namespace platknot {

// Twist coefficients of a plat in standard form of width m and height n.
// Row i (1-based) has m-1 entries when i is odd and m entries when i is
// even. Entries are stored with the knot-diagram sign; to_braid_word is the
// only place that negates them.
struct TwistMatrix {
  int m = 0;
  int n = 0;
  std::vector<std::vector<std::int64_t>> rows;

  // 1-based accessor, matching the usual a_{i,j} indexing.
  std::int64_t at(int i, int j) const { return rows.at(i - 1).at(j - 1); }
  static std::size_t row_width(int m, int i) { return static_cast<std::size_t>(i % 2 ? m - 1 : m); }
  std::vector<std::int64_t> flattened() const;

  friend bool operator==(const TwistMatrix&, const TwistMatrix&) = default;
};

struct ValidationIssue {
  ErrorCode code;
  int row = 0;  // 1-based row for WrongRowLength, else 0
  std::string message;
};

std::optional<ValidationIssue> validate(const TwistMatrix& M);
// Throws the first validation issue as an Error.
void require_valid(const TwistMatrix& M);

bool is_highly_twisted(const TwistMatrix& M, std::int64_t c);
std::int64_t crossing_total(const TwistMatrix& M);

BraidWord to_braid_word(const TwistMatrix& M);

enum class ClosureStyle { standard, even, doubly_even };
std::string_view to_string(ClosureStyle style) noexcept;
ClosureStyle parse_closure_style(std::string_view name);

// Closing arcs of a style as a partner table over 0-based endpoint positions.
std::vector<int> top_pairing(int strands, ClosureStyle style);
std::vector<int> bottom_pairing(int strands, ClosureStyle style);

// Crossing i of the result is letter i of the word. Arcs are labeled along a
// traversal that starts at the leftmost top endpoint heading down; further
// components start at their leftmost unvisited top endpoint.
PlanarDiagram closure(const BraidWord& word, ClosureStyle style = ClosureStyle::standard);
PlanarDiagram closure(const TwistMatrix& M, ClosureStyle style = ClosureStyle::standard);

// Cycle count of top pairing, braid permutation and bottom pairing.
int component_count(const BraidWord& word, ClosureStyle style = ClosureStyle::standard);
int component_count(const TwistMatrix& M, ClosureStyle style = ClosureStyle::standard);

// Text interchange format: "m n" then n rows; '#' starts a comment.
// Parsing checks syntax only; call validate() for the shape.
TwistMatrix parse_twist_matrix(std::string_view text);
std::string format_twist_matrix(const TwistMatrix& M);

}  // namespace platknot
