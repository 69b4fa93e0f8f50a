#include "platknot/braid.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

#include "platknot/error.hpp"

namespace platknot {

namespace {

void check_letter(int strands, const BraidLetter& l) {
  if (l.index < 1 || l.index >= strands) {
    throw Error(ErrorCode::IndexOutOfRange,
                "generator s" + std::to_string(l.index) + " out of range for " +
                    std::to_string(strands) + " strands");
  }
  if (l.sign != 1 && l.sign != -1) {
    throw Error(ErrorCode::ParseError, "letter sign must be +1 or -1");
  }
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2 || strands_ % 2 != 0) {
    throw Error(ErrorCode::StrandMismatch,
                "strand count must be even and at least 2, got " +
                    std::to_string(strands_));
  }
  for (const auto& l : letters_) check_letter(strands_, l);
}

void BraidWord::append_power(int index, long long exponent) {
  const int sign = exponent < 0 ? -1 : 1;
  BraidLetter letter{index, sign};
  check_letter(strands_, letter);
  for (long long k = 0; k < std::llabs(exponent); ++k) letters_.push_back(letter);
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw Error(ErrorCode::StrandMismatch,
                "cannot compose braids on " + std::to_string(a.strands()) +
                    " and " + std::to_string(b.strands()) + " strands");
  }
  std::vector<BraidLetter> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord inverse(const BraidWord& a) {
  std::vector<BraidLetter> letters(a.letters().rbegin(), a.letters().rend());
  for (auto& l : letters) l.sign = -l.sign;
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord free_reduce(const BraidWord& a) {
  std::vector<BraidLetter> stack;
  stack.reserve(a.size());
  for (const auto& l : a.letters()) {
    if (!stack.empty() && stack.back().index == l.index && stack.back().sign == -l.sign) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(a.strands(), std::move(stack));
}

Permutation permutation(const BraidWord& a) {
  // strand_at[p] is the top position of the strand currently at position p.
  std::vector<int> strand_at(a.strands());
  for (int p = 0; p < a.strands(); ++p) strand_at[p] = p;
  for (const auto& l : a.letters()) std::swap(strand_at[l.index - 1], strand_at[l.index]);
  Permutation perm(a.strands());
  for (int p = 0; p < a.strands(); ++p) perm[strand_at[p]] = p;
  return perm;
}

std::vector<BraidRun> runs(const BraidWord& a) {
  std::vector<BraidRun> out;
  for (const auto& l : a.letters()) {
    if (!out.empty() && out.back().index == l.index &&
        (out.back().exponent > 0) == (l.sign > 0)) {
      out.back().exponent += l.sign;
    } else {
      out.push_back({l.index, l.sign});
    }
  }
  return out;
}

BraidWord parse_braid_word(std::string_view text, int strands) {
  BraidWord word(strands);
  std::istringstream in{std::string(text)};
  std::string token;
  auto parse_int = [&](std::string_view s, long long& v) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (!s.empty() && s.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    return ec == std::errc{} && ptr == last && first != last;
  };
  while (in >> token) {
    std::string_view t = token;
    if (t.size() < 2 || (t[0] != 's' && t[0] != 'S')) {
      throw Error(ErrorCode::ParseError, "bad braid token '" + token + "'");
    }
    t.remove_prefix(1);
    long long index = 0;
    long long exponent = 1;
    const auto caret = t.find('^');
    if (!parse_int(t.substr(0, caret), index)) {
      throw Error(ErrorCode::ParseError, "bad generator index in '" + token + "'");
    }
    if (caret != std::string_view::npos && !parse_int(t.substr(caret + 1), exponent)) {
      throw Error(ErrorCode::ParseError, "bad exponent in '" + token + "'");
    }
    if (index < 1 || index >= strands) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "generator s" + std::to_string(index) + " out of range for " +
                      std::to_string(strands) + " strands");
    }
    word.append_power(static_cast<int>(index), exponent);
  }
  return word;
}

std::string format_braid_word(const BraidWord& a) {
  if (a.empty()) return "1";
  std::string out;
  for (const auto& r : runs(a)) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(r.index);
    if (r.exponent != 1) out += '^' + std::to_string(r.exponent);
  }
  return out;
}

}  // namespace platknot
