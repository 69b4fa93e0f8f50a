#include "platknot/hilden.hpp"

#include <charconv>
#include <random>

#include "platknot/canonical.hpp"
#include "platknot/invariants.hpp"

namespace platknot {

BraidWord expand(const HildenMove& move, int strands) {
  const int i = move.index;
  if (i % 2 == 0) {
    throw Error(ErrorCode::IndexParity, "Hilden move index must be odd, got " + std::to_string(i));
  }
  const int highest = move.kind == HildenKind::h1 ? i : i + 2;
  if (i < 1 || highest > strands - 1) {
    throw Error(ErrorCode::IndexRange, "Hilden move " + format_hilden_move(move) +
                                           " does not fit on " + std::to_string(strands) +
                                           " strands");
  }
  std::vector<BraidLetter> letters;
  switch (move.kind) {
    case HildenKind::h1: letters = {{i, 1}}; break;
    case HildenKind::h2: letters = {{i + 1, 1}, {i + 2, 1}, {i, 1}, {i + 1, 1}}; break;
    case HildenKind::h3: letters = {{i + 1, 1}, {i, 1}, {i + 2, -1}, {i + 1, -1}}; break;
    case HildenKind::h4: letters = {{i + 1, -1}, {i, -1}, {i + 2, 1}, {i + 1, 1}}; break;
  }
  BraidWord word(strands, std::move(letters));
  return move.inverse ? inverse(word) : word;
}

BraidWord apply_moves(const BraidWord& b, const std::vector<HildenMove>& left,
                      const std::vector<HildenMove>& right) {
  BraidWord out(b.strands());
  for (const auto& mv : left) out = compose(out, expand(mv, b.strands()));
  out = compose(out, b);
  for (const auto& mv : right) out = compose(out, expand(mv, b.strands()));
  return out;
}

std::vector<HildenMove> hilden_generators(int strands) {
  std::vector<HildenMove> out;
  for (int i = 1; i < strands; i += 2) out.push_back({HildenKind::h1, i, false});
  for (auto kind : {HildenKind::h2, HildenKind::h3, HildenKind::h4}) {
    for (int i = 1; i + 2 < strands; i += 2) out.push_back({kind, i, false});
  }
  return out;
}

BraidWord random_hilden_element(int strands, int length, std::uint64_t seed) {
  if (length < 0) throw Error(ErrorCode::OutOfRange, "negative Hilden word length");
  const auto generators = hilden_generators(strands);
  // Plain modulo on the engine output keeps the sequence identical across
  // standard libraries, unlike std::uniform_int_distribution.
  std::mt19937_64 rng(seed);
  BraidWord out(strands);
  for (int k = 0; k < length; ++k) {
    const auto pick = rng() % (2 * generators.size());
    HildenMove mv = generators[pick / 2];
    mv.inverse = pick % 2 == 1;
    out = compose(out, expand(mv, strands));
  }
  return out;
}

std::vector<HildenMove> parse_hilden_moves(std::string_view text) {
  std::vector<HildenMove> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    pos = comma + 1;
    if (token.empty()) {
      if (comma == text.size()) break;
      throw Error(ErrorCode::ParseError, "empty Hilden move in '" + std::string(text) + "'");
    }
    const std::string bad = "bad Hilden move '" + std::string(token) + "'";
    HildenMove mv;
    if (token.ends_with("^-1")) {
      mv.inverse = true;
      token.remove_suffix(3);
    }
    const auto at = token.find('@');
    if (token.size() < 4 || token[0] != 'h' || at != 2 || token[1] < '1' || token[1] > '4') {
      throw Error(ErrorCode::ParseError, bad);
    }
    mv.kind = static_cast<HildenKind>(token[1] - '0');
    const auto digits = token.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), mv.index);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw Error(ErrorCode::ParseError, bad);
    }
    out.push_back(mv);
  }
  return out;
}

std::string format_hilden_move(const HildenMove& move) {
  return "h" + std::to_string(static_cast<int>(move.kind)) + "@" + std::to_string(move.index) +
         (move.inverse ? "^-1" : "");
}

std::string_view to_string(CosetVerdict v) noexcept {
  switch (v) {
    case CosetVerdict::SameCosetConsistent: return "same-coset-consistent";
    case CosetVerdict::ProvablyDistinct: return "provably-distinct";
    case CosetVerdict::DistinctNotRefuted: return "distinct-not-refuted";
    case CosetVerdict::Inconsistent: return "inconsistent";
  }
  return "inconsistent";
}

CosetReport coset_consistency(const TwistMatrix& first, const TwistMatrix& second,
                              const CosetCheckOptions& options) {
  require_theorem_range(first);
  require_theorem_range(second);
  CosetReport report;
  const BraidWord b1 = to_braid_word(first);
  const BraidWord b2 = to_braid_word(second);
  report.identical_words = b1 == b2;
  report.same_canonical_form = canonical_form(first) == canonical_form(second);

  const auto d1 = closure(b1);
  const auto d2 = closure(b2);
  const BigInt det1 = determinant(d1);
  const BigInt det2 = determinant(d2);
  report.first_determinant = det1.str();
  report.second_determinant = det2.str();
  report.first_components = d1.component_count();
  report.second_components = d2.component_count();
  const bool invariants_equal = det1 == det2 && d1.component_count() == d2.component_count();

  bool contradiction = false;
  if (report.same_canonical_form && !invariants_equal) {
    report.notes.push_back("rotation-equal matrices have different closure invariants");
    contradiction = true;
  }

  const BraidWord target = free_reduce(b2);
  for (int s = 0; s < options.samples; ++s) {
    const auto seed = options.seed + 2 * static_cast<std::uint64_t>(s);
    const BraidWord left = random_hilden_element(b1.strands(), options.move_length, seed);
    const BraidWord right = random_hilden_element(b1.strands(), options.move_length, seed + 1);
    const BraidWord moved = compose(compose(left, b1), right);
    const auto d = closure(moved);
    ++report.samples;
    if (determinant(d) != det1 || d.component_count() != d1.component_count()) {
      report.notes.push_back("sample " + std::to_string(s) +
                             ": Hilden translate changed the closure invariants");
      contradiction = true;
    }
    if (!report.same_canonical_form && invariants_equal && free_reduce(moved) == target) {
      report.notes.push_back("sample " + std::to_string(s) +
                             ": Hilden translate reproduces a word with a different canonical form");
      contradiction = true;
    }
  }

  if (contradiction) {
    report.verdict = CosetVerdict::Inconsistent;
  } else if (report.same_canonical_form) {
    report.verdict = CosetVerdict::SameCosetConsistent;
  } else if (!invariants_equal) {
    report.verdict = CosetVerdict::ProvablyDistinct;
  } else {
    report.verdict = CosetVerdict::DistinctNotRefuted;
  }
  return report;
}

}  // namespace platknot
