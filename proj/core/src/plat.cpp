#include "platknot/plat.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace platknot {

std::vector<std::int64_t> TwistMatrix::flattened() const {
  std::vector<std::int64_t> out;
  for (const auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::optional<ValidationIssue> validate(const TwistMatrix& M) {
  if (M.m < 2) {
    return ValidationIssue{ErrorCode::WidthTooSmall, 0,
                           "width m=" + std::to_string(M.m) + " is below 2"};
  }
  if (M.n < 1 || M.n % 2 == 0) {
    return ValidationIssue{ErrorCode::EvenHeight, 0,
                           "height n=" + std::to_string(M.n) + " must be odd and positive"};
  }
  if (M.rows.size() != static_cast<std::size_t>(M.n)) {
    return ValidationIssue{ErrorCode::RowCountMismatch, 0,
                           "expected " + std::to_string(M.n) + " rows, found " +
                               std::to_string(M.rows.size())};
  }
  for (int i = 1; i <= M.n; ++i) {
    const auto want = TwistMatrix::row_width(M.m, i);
    if (M.rows[i - 1].size() != want) {
      return ValidationIssue{ErrorCode::WrongRowLength, i,
                             "row " + std::to_string(i) + " has " +
                                 std::to_string(M.rows[i - 1].size()) + " entries, expected " +
                                 std::to_string(want)};
    }
  }
  return std::nullopt;
}

void require_valid(const TwistMatrix& M) {
  if (auto issue = validate(M)) throw Error(issue->code, issue->message);
}

bool is_highly_twisted(const TwistMatrix& M, std::int64_t c) {
  require_valid(M);
  for (const auto& row : M.rows) {
    for (auto a : row) {
      if (std::llabs(a) < c) return false;
    }
  }
  return true;
}

std::int64_t crossing_total(const TwistMatrix& M) {
  std::int64_t total = 0;
  for (const auto& row : M.rows) {
    for (auto a : row) total += std::llabs(a);
  }
  return total;
}

BraidWord to_braid_word(const TwistMatrix& M) {
  require_valid(M);
  BraidWord word(2 * M.m);
  for (int i = 1; i <= M.n; ++i) {
    const auto& row = M.rows[i - 1];
    for (std::size_t j = 1; j <= row.size(); ++j) {
      // Odd rows twist sigma_{2j}, even rows sigma_{2j-1}.
      const int generator = i % 2 ? static_cast<int>(2 * j) : static_cast<int>(2 * j - 1);
      word.append_power(generator, -row[j - 1]);
    }
  }
  return word;
}

std::string_view to_string(ClosureStyle style) noexcept {
  switch (style) {
    case ClosureStyle::standard: return "standard";
    case ClosureStyle::even: return "even";
    case ClosureStyle::doubly_even: return "doubly-even";
  }
  return "standard";
}

ClosureStyle parse_closure_style(std::string_view name) {
  if (name == "standard") return ClosureStyle::standard;
  if (name == "even") return ClosureStyle::even;
  if (name == "doubly-even" || name == "doubly_even") return ClosureStyle::doubly_even;
  throw Error(ErrorCode::ParseError, "unknown closure style '" + std::string(name) + "'");
}

namespace {

std::vector<int> adjacent_pairs(int strands) {
  std::vector<int> partner(strands);
  for (int p = 0; p < strands; ++p) partner[p] = p ^ 1;
  return partner;
}

// {2,3}, ..., {2m, 1} in 1-based positions.
std::vector<int> shifted_pairs(int strands) {
  std::vector<int> partner(strands);
  for (int p = 0; p < strands; ++p) {
    partner[p] = p % 2 ? (p + 1) % strands : (p + strands - 1) % strands;
  }
  return partner;
}

enum Port { TL = 0, TR = 1, BL = 2, BR = 3 };
constexpr std::array<std::array<int, 2>, 4> kPortXY{{{-1, 1}, {1, 1}, {-1, -1}, {1, -1}}};
// Counterclockwise around the crossing centre.
constexpr std::array<Port, 4> kCounterclockwise{TR, TL, BL, BR};

struct Pass {
  int crossing;
  Port in;
  Port out;
};

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  int classes() {
    int k = 0;
    for (int x = 0; x < static_cast<int>(parent.size()); ++x) k += find(x) == x;
    return k;
  }
};

}  // namespace

std::vector<int> top_pairing(int strands, ClosureStyle style) {
  return style == ClosureStyle::doubly_even ? shifted_pairs(strands) : adjacent_pairs(strands);
}

std::vector<int> bottom_pairing(int strands, ClosureStyle style) {
  return style == ClosureStyle::standard ? adjacent_pairs(strands) : shifted_pairs(strands);
}

PlanarDiagram closure(const BraidWord& word, ClosureStyle style) {
  const int strands = word.strands();
  const auto& letters = word.letters();
  const int length = static_cast<int>(letters.size());
  const auto top = top_pairing(strands, style);
  const auto bottom = bottom_pairing(strands, style);

  // Letter indices touching each position, in top-to-bottom order.
  std::vector<std::vector<int>> touching(strands);
  for (int l = 0; l < length; ++l) {
    touching[letters[l].index - 1].push_back(l);
    touching[letters[l].index].push_back(l);
  }

  std::vector<std::array<int, 4>> port_label(length, {0, 0, 0, 0});
  std::vector<std::array<Pass, 2>> through(length);  // [0] over, [1] under
  std::vector<bool> visited_top(strands, false);
  std::vector<std::pair<int, int>> ranges;
  int free_loops = 0;
  int next_label = 1;
  std::vector<Pass> passes;

  for (int start = 0; start < strands; ++start) {
    if (visited_top[start]) continue;
    visited_top[start] = visited_top[top[start]] = true;
    passes.clear();
    int pos = start;
    int level = 0;  // walking down: next letter to inspect; walking up: one past it
    bool down = true;
    while (true) {
      const auto& list = touching[pos];
      if (down) {
        auto it = std::lower_bound(list.begin(), list.end(), level);
        if (it == list.end()) {
          pos = bottom[pos];
          level = length;
          down = false;
          continue;
        }
        const int l = *it;
        const int left = letters[l].index - 1;
        const Port in = pos == left ? TL : TR;
        const Port out = in == TL ? BR : BL;
        passes.push_back({l, in, out});
        pos = out == BR ? left + 1 : left;
        level = l + 1;
      } else {
        auto it = std::lower_bound(list.begin(), list.end(), level);
        if (it == list.begin()) {
          const int q = top[pos];
          visited_top[pos] = visited_top[q] = true;
          if (q == start) break;
          pos = q;
          level = 0;
          down = true;
          continue;
        }
        const int l = *std::prev(it);
        const int left = letters[l].index - 1;
        const Port in = pos == left ? BL : BR;
        const Port out = in == BL ? TR : TL;
        passes.push_back({l, in, out});
        pos = out == TR ? left + 1 : left;
        level = l;
      }
    }
    if (passes.empty()) {
      ++free_loops;
      continue;
    }
    const int count = static_cast<int>(passes.size());
    for (int k = 0; k < count; ++k) {
      const auto& p = passes[k];
      port_label[p.crossing][p.in] = next_label + k;
      port_label[p.crossing][p.out] = next_label + (k + 1) % count;
      // sigma^{+1}: the strand through TL and BR is over.
      const bool tl_br = p.in == TL || p.in == BR;
      const bool over = (letters[p.crossing].sign > 0) == tl_br;
      through[p.crossing][over ? 0 : 1] = p;
    }
    ranges.emplace_back(next_label, next_label + count - 1);
    next_label += count;
  }

  std::vector<Crossing> crossings;
  crossings.reserve(length);
  for (int l = 0; l < length; ++l) {
    const auto& over = through[l][0];
    const auto& under = through[l][1];
    auto direction = [](const Pass& p) {
      return std::array<int, 2>{kPortXY[p.out][0] - kPortXY[p.in][0],
                                kPortXY[p.out][1] - kPortXY[p.in][1]};
    };
    const auto o = direction(over);
    const auto u = direction(under);
    const int sign = o[0] * u[1] - o[1] * u[0] > 0 ? 1 : -1;
    const auto first = std::find(kCounterclockwise.begin(), kCounterclockwise.end(), under.in) -
                       kCounterclockwise.begin();
    Crossing x;
    x.sign = sign;
    for (int k = 0; k < 4; ++k) x.arcs[k] = port_label[l][kCounterclockwise[(first + k) % 4]];
    crossings.push_back(x);
  }
  return PlanarDiagram(std::move(crossings), std::move(ranges), free_loops);
}

PlanarDiagram closure(const TwistMatrix& M, ClosureStyle style) {
  return closure(to_braid_word(M), style);
}

int component_count(const BraidWord& word, ClosureStyle style) {
  const int strands = word.strands();
  const auto perm = permutation(word);
  const auto top = top_pairing(strands, style);
  const auto bottom = bottom_pairing(strands, style);
  // Nodes 0..S-1 are top endpoints, S..2S-1 bottom endpoints.
  DisjointSets sets(2 * strands);
  for (int p = 0; p < strands; ++p) {
    sets.unite(p, strands + perm[p]);
    sets.unite(p, top[p]);
    sets.unite(strands + p, strands + bottom[p]);
  }
  return sets.classes();
}

int component_count(const TwistMatrix& M, ClosureStyle style) {
  return component_count(to_braid_word(M), style);
}

TwistMatrix parse_twist_matrix(std::string_view text) {
  std::vector<std::vector<std::int64_t>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::int64_t> values;
    std::string token;
    while (fields >> token) {
      std::int64_t v = 0;
      const char* first = token.data();
      const char* last = token.data() + token.size();
      if (*first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc{} || ptr != last || first == last) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_no) + ": bad integer '" + token + "'");
      }
      values.push_back(v);
    }
    if (!values.empty()) lines.push_back(std::move(values));
  }
  if (lines.empty() || lines.front().size() != 2) {
    throw Error(ErrorCode::ParseError, "header must be a line 'm n'");
  }
  TwistMatrix M;
  M.m = static_cast<int>(lines.front()[0]);
  M.n = static_cast<int>(lines.front()[1]);
  M.rows.assign(lines.begin() + 1, lines.end());
  return M;
}

std::string format_twist_matrix(const TwistMatrix& M) {
  std::ostringstream out;
  out << M.m << ' ' << M.n << '\n';
  for (const auto& row : M.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  return out.str();
}

}  // namespace platknot
