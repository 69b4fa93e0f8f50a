#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace platknot {

// One crossing: sigma_index raised to sign (+1 or -1).
struct BraidLetter {
  int index = 1;
  int sign = 1;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

// Image of each top endpoint (0-based position) at the bottom of the braid.
using Permutation = std::vector<int>;

// A word in the Artin generators of the braid group on an even number of
// strands. Exponent runs are stored expanded, one letter per crossing.
// Letters are read top to bottom.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<BraidLetter> letters = {});

  int strands() const noexcept { return strands_; }
  const std::vector<BraidLetter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  // Appends sigma_index^exponent as |exponent| letters.
  void append_power(int index, long long exponent);

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

// Stacks a above b. Throws StrandMismatch.
BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& a);
BraidWord free_reduce(const BraidWord& a);

// perm[p] is the bottom position reached by the strand that starts at top
// position p. permutation(compose(a, b))[p] == permutation(b)[permutation(a)[p]].
Permutation permutation(const BraidWord& a);

// Run-length view: maximal runs of equal generators with their summed
// exponents, in order. Opposite-sign neighbours are not merged.
struct BraidRun {
  int index;
  long long exponent;
};
std::vector<BraidRun> runs(const BraidWord& a);

// Parses whitespace-separated tokens `s<k>`, `s<k>^-1`, `s<k>^<e>`.
// Exponent 0 contributes nothing. Throws ParseError / IndexOutOfRange.
BraidWord parse_braid_word(std::string_view text, int strands);

// Inverse of parse_braid_word using the run-length view; "1" for the identity.
std::string format_braid_word(const BraidWord& a);

}  // namespace platknot
