#include "platknot/invariants.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <thread>

#include "platknot/error.hpp"

namespace platknot {

int writhe(const PlanarDiagram& d) { return d.writhe(); }

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Determinant of a square integer matrix by Bareiss elimination.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
      }
      a[i][k] = 0;
    }
    previous = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

BigInt determinant(const PlanarDiagram& d) {
  const int c = d.crossing_count();
  if (c == 0) return d.free_loops() == 1 ? 1 : 0;
  if (d.free_loops() > 0) return 0;

  // Over-arcs: PD arcs glued along the over-strand of each crossing.
  std::vector<int> parent(d.arc_count() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& x : d.crossings()) {
    parent[find_root(parent, x.arcs[1])] = find_root(parent, x.arcs[3]);
  }
  std::vector<int> column(d.arc_count() + 1, -1);
  int arcs = 0;
  for (int a = 1; a <= d.arc_count(); ++a) {
    const int r = find_root(parent, a);
    if (column[r] < 0) column[r] = arcs++;
  }
  // A component with no undercrossing is a closed over-arc and can be lifted
  // off the rest of the diagram.
  if (arcs != c) return 0;

  std::vector<std::vector<BigInt>> matrix(c - 1, std::vector<BigInt>(c - 1, 0));
  for (int i = 0; i + 1 < c; ++i) {
    const auto& x = d.crossings()[i];
    auto add = [&](int arc, int value) {
      const int col = column[find_root(parent, arc)];
      if (col < c - 1) matrix[i][col] += value;
    };
    add(x.arcs[1], 2);
    add(x.arcs[0], -1);
    add(x.arcs[2], -1);
  }
  BigInt det = bareiss_determinant(std::move(matrix));
  return det < 0 ? BigInt(-det) : det;
}

LaurentPoly kauffman_bracket(const PlanarDiagram& d, const BracketOptions& options) {
  const int c = d.crossing_count();
  if (c > options.cap) {
    throw Error(ErrorCode::TooManyCrossings, std::to_string(c) + " crossings exceed the cap of " +
                                                 std::to_string(options.cap));
  }
  const LaurentPoly delta = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
  std::vector<LaurentPoly> delta_powers{LaurentPoly::constant(1)};
  auto delta_power = [&](int k) -> const LaurentPoly& {
    while (static_cast<int>(delta_powers.size()) <= k) {
      delta_powers.push_back(delta_powers.back() * delta);
    }
    return delta_powers[k];
  };
  if (c == 0) return d.free_loops() <= 1 ? LaurentPoly::constant(1) : delta_power(d.free_loops() - 1);
  const int arcs = d.arc_count();
  // histogram[k][l]: states with k A-smoothings and l loops among the arcs.
  using Histogram = std::vector<std::vector<std::uint64_t>>;
  const std::uint64_t states = std::uint64_t{1} << c;

  std::vector<std::array<int, 4>> quads;
  quads.reserve(c);
  for (const auto& x : d.crossings()) {
    quads.push_back({x.arcs[0] - 1, x.arcs[1] - 1, x.arcs[2] - 1, x.arcs[3] - 1});
  }

  auto count_range = [&](std::uint64_t begin, std::uint64_t end, Histogram& hist) {
    std::vector<int> parent(arcs);
    for (std::uint64_t s = begin; s < end; ++s) {
      std::iota(parent.begin(), parent.end(), 0);
      int merges = 0;
      int a_count = 0;
      for (int k = 0; k < c; ++k) {
        const auto& q = quads[k];
        int p1, p2, p3, p4;
        if ((s >> k) & 1) {  // B-smoothing joins (a,d) and (b,c)
          p1 = q[0], p2 = q[3], p3 = q[1], p4 = q[2];
        } else {  // A-smoothing joins (a,b) and (c,d)
          p1 = q[0], p2 = q[1], p3 = q[2], p4 = q[3];
          ++a_count;
        }
        int r1 = find_root(parent, p1), r2 = find_root(parent, p2);
        if (r1 != r2) parent[r1] = r2, ++merges;
        r1 = find_root(parent, p3), r2 = find_root(parent, p4);
        if (r1 != r2) parent[r1] = r2, ++merges;
      }
      ++hist[a_count][arcs - merges];
    }
  };

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (c < 14) threads = 1;
  std::vector<Histogram> partial(threads, Histogram(c + 1, std::vector<std::uint64_t>(arcs + 1, 0)));
  if (threads == 1) {
    count_range(0, states, partial[0]);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (states + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = std::min(states, t * chunk);
      const std::uint64_t end = std::min(states, begin + chunk);
      pool.emplace_back(count_range, begin, end, std::ref(partial[t]));
    }
    for (auto& th : pool) th.join();
  }

  LaurentPoly result;
  for (int k = 0; k <= c; ++k) {
    for (int loops = 0; loops <= arcs; ++loops) {
      BigInt count = 0;
      for (const auto& h : partial) count += h[k][loops];
      if (count == 0) continue;
      const int total_loops = loops + d.free_loops();
      // A^(#A - #B) delta^(loops - 1)
      result += LaurentPoly::monomial(count, k - (c - k)) * delta_power(total_loops - 1);
    }
  }
  return result;
}

LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe) {
  LaurentPoly out;
  const int sign = writhe % 2 == 0 ? 1 : -1;
  for (const auto& [e, coeff] : bracket.terms()) {
    const int a_exponent = e - 3 * writhe;
    if (a_exponent % 2 != 0) {
      throw Error(ErrorCode::OutOfRange, "bracket exponent parity is inconsistent with a diagram");
    }
    out.add_term(sign * coeff, -a_exponent / 2);
  }
  return out;
}

LaurentPoly jones(const PlanarDiagram& d, const BracketOptions& options) {
  return jones_from_bracket(kauffman_bracket(d, options), d.writhe());
}

std::pair<BigInt, BigInt> jones_at_minus_one(const LaurentPoly& jones_poly) {
  BigInt re = 0, im = 0;
  for (const auto& [e, coeff] : jones_poly.terms()) {
    switch (((e % 4) + 4) % 4) {
      case 0: re += coeff; break;
      case 1: im += coeff; break;
      case 2: re -= coeff; break;
      case 3: im -= coeff; break;
    }
  }
  return {re, im};
}

int writhe_with_reversed(const PlanarDiagram& d, std::uint64_t reversed) {
  int w = 0;
  for (const auto& x : d.crossings()) {
    const bool under_flip = (reversed >> d.component_of_arc(x.arcs[0])) & 1;
    const bool over_flip = (reversed >> d.component_of_arc(x.arcs[1])) & 1;
    w += under_flip == over_flip ? x.sign : -x.sign;
  }
  return w;
}

std::vector<LaurentPoly> jones_all_orientations(const PlanarDiagram& d,
                                                const LaurentPoly& bracket) {
  const auto k = d.component_ranges().size();
  if (k > 20) throw Error(ErrorCode::OutOfRange, "too many components to enumerate orientations");
  std::vector<LaurentPoly> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    out.push_back(jones_from_bracket(bracket, writhe_with_reversed(d, mask)));
  }
  return out;
}

bool jones_agree(const PlanarDiagram& a, const LaurentPoly& bracket_a, const PlanarDiagram& b,
                 const LaurentPoly& bracket_b, bool allow_mirror) {
  if (a.component_count() != b.component_count()) return false;
  const LaurentPoly reference = jones_from_bracket(bracket_a, a.writhe());
  const LaurentPoly mirrored = reference.inverted();
  for (const auto& candidate : jones_all_orientations(b, bracket_b)) {
    if (candidate == reference) return true;
    if (allow_mirror && candidate == mirrored) return true;
  }
  return false;
}

}  // namespace platknot
