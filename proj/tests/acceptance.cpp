// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "platknot/platknot.hpp"
#include "test_support.hpp"

namespace {

using namespace platknot;
using platknot::testing::random_matrix;
using platknot::testing::random_small_matrix;
using platknot::testing::random_word;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int number;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

// Closure invariants compared across diagrams.
struct Closed {
  PlanarDiagram diagram;
  BigInt det;
  int components = 0;
  std::optional<LaurentPoly> bracket;
};

Closed close(const BraidWord& w) {
  Closed c;
  c.diagram = closure(w);
  c.det = determinant(c.diagram);
  c.components = c.diagram.component_count();
  if (c.diagram.crossing_count() <= kDefaultBracketCap) c.bracket = kauffman_bracket(c.diagram);
  return c;
}

Closed close(const TwistMatrix& M) { return close(to_braid_word(M)); }

// Jones comparison counts: strict (some orientation, no mirror) and
// up to t <-> 1/t.
struct JonesTally {
  int compared = 0;
  int strict = 0;
  int mirror_only = 0;
  int failed = 0;
};

void compare_jones(const Closed& a, const Closed& b, JonesTally& tally) {
  if (!a.bracket || !b.bracket) return;
  ++tally.compared;
  if (jones_agree(a.diagram, *a.bracket, b.diagram, *b.bracket, false)) {
    ++tally.strict;
  } else if (jones_agree(a.diagram, *a.bracket, b.diagram, *b.bracket, true)) {
    ++tally.mirror_only;
  } else {
    ++tally.failed;
  }
}

std::string describe(const JonesTally& t) {
  std::ostringstream s;
  s << "Jones compared " << t.compared << " (strict " << t.strict << ", mirror-only "
    << t.mirror_only << ", failed " << t.failed << ")";
  return s.str();
}

std::vector<std::int64_t> random_coeffs(std::mt19937_64& rng, int length) {
  std::uniform_int_distribution<int> magnitude(3, 9);
  std::bernoulli_distribution negative(0.5);
  std::vector<std::int64_t> c;
  for (int k = 0; k < length; ++k) {
    const int a = magnitude(rng);
    c.push_back(negative(rng) ? -a : a);
  }
  return c;
}

// Samples shared by criteria 3 and 4.
std::vector<CFExpansion> cf_samples() {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> length(1, 12);
  std::vector<CFExpansion> out;
  for (int k = 0; k < 1000; ++k) out.push_back(random_coeffs(rng, length(rng)));
  return out;
}

Outcome rotation_orbit() {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> width(4, 6);
  std::bernoulli_distribution tall(0.5);
  int images = 0;
  for (int k = 0; k < 200; ++k) {
    const auto M = random_matrix(rng, width(rng), tall(rng) ? 5 : 3, 4, 7);
    const auto c = canonical_form(M);
    for (auto g : kAllSymmetries) {
      ++images;
      if (canonical_form(apply(g, M)) != c) {
        return {false, "orbit image " + std::string(to_string(g)) + " of sample " +
                           std::to_string(k) + " has a different canonical form"};
      }
    }
  }
  return {true, "200 matrices, " + std::to_string(images) + " rotation images"};
}

Outcome rotation_soundness() {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> width(3, 5);
  std::uniform_int_distribution<int> height_pick(0, 2);
  JonesTally tally;
  for (int k = 0; k < 100; ++k) {
    const int n = 2 * height_pick(rng) + 1;
    const auto M = random_small_matrix(rng, width(rng), n, 22);
    const auto base = close(M);
    for (auto g : {Symmetry::H, Symmetry::V, Symmetry::HV}) {
      const auto image = close(apply(g, M));
      if (image.det != base.det || image.components != base.components) {
        return {false, "sample " + std::to_string(k) + " under " + std::string(to_string(g)) +
                           ": determinant or component count changed"};
      }
      compare_jones(base, image, tally);
    }
  }
  return {tally.failed == 0 && tally.compared == 300,
          "100 matrices x 3 rotations, det and components equal; " + describe(tally)};
}

Outcome cf_round_trip() {
  int checked = 0;
  for (const auto& e : cf_samples()) {
    if (cf_reconstruct(cf_evaluate(e)) != e) return {false, "round trip failed"};
    ++checked;
  }
  // [0; 3, -3, 3, -3, ...]
  const Rational low(8, 21), high(5, 13);
  const auto below_limit = [](const Rational& x) {
    const BigInt d = 3 * x.den() - 2 * x.num();
    return d > 0 && d * d > 5 * x.den() * x.den();
  };
  if (!below_limit(low) || below_limit(high)) return {false, "8/21 < limit < 5/13 does not hold"};
  CFExpansion terms{0};
  Rational previous;
  int partials = 0;
  for (int k = 1; k <= 24; ++k) {
    terms.push_back(k % 2 ? 3 : -3);
    const Rational x = cf_evaluate(terms);
    if (k > 1 && !(x > previous)) return {false, "partials not strictly increasing at " + std::to_string(k)};
    if (!below_limit(x) || !(x < high)) return {false, "partial " + x.str() + " not below the limit"};
    if (k >= 3 && x < low) return {false, "partial " + x.str() + " below 8/21"};
    previous = x;
    ++partials;
  }
  return {true, std::to_string(checked) + " round trips, " + std::to_string(partials) +
                    " increasing partials, last " + previous.str()};
}

Outcome schubert_pairs() {
  int reversals = 0;
  for (auto e : cf_samples()) {
    if (e.size() % 2 == 0) e.pop_back();
    std::vector<std::int64_t> r(e.rbegin(), e.rend());
    if (!(schubert_pair(e) == schubert_pair(r))) return {false, "reversal changed the pair"};
    ++reversals;
  }
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> half(0, 5);
  std::bernoulli_distribution perturb(0.5);
  int separated = 0, near = 0;
  while (separated < 500) {
    const int length = 2 * half(rng) + 1;
    auto a = random_coeffs(rng, length);
    auto b = a;
    if (perturb(rng)) {
      // One entry changed: the hardest kind of distinct pair.
      std::uniform_int_distribution<int> at(0, length - 1);
      b[at(rng)] = random_coeffs(rng, 1)[0];
      ++near;
    } else {
      b = random_coeffs(rng, 2 * half(rng) + 1);
    }
    const std::vector<std::int64_t> a_rev(a.rbegin(), a.rend());
    if (b == a || b == a_rev) continue;
    if (schubert_pair(a) == schubert_pair(b)) return {false, "distinct sequences share a pair"};
    ++separated;
  }
  return {true, std::to_string(reversals) + " reversals invariant, 500 distinct pairs separated (" +
                    std::to_string(near) + " single-entry changes)"};
}

Outcome hilden_invariance() {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> length(0, 10);
  const int strands = 8;
  const auto generators = hilden_generators(strands);
  std::set<int> kinds;
  for (const auto& g : generators) kinds.insert(static_cast<int>(g.kind));
  JonesTally tally;
  int applications = 0;
  for (int k = 0; k < 50; ++k) {
    const auto base_word = random_word(rng, strands, length(rng));
    const auto base = close(base_word);
    for (const auto& g : generators) {
      for (bool left : {true, false}) {
        const std::vector<HildenMove> moves{g};
        const std::vector<HildenMove> none;
        const auto moved = close(apply_moves(base_word, left ? moves : none, left ? none : moves));
        ++applications;
        if (moved.det != base.det || moved.components != base.components) {
          return {false, format_hilden_move(g) + (left ? " on the left" : " on the right") +
                             " changed determinant or components"};
        }
        compare_jones(base, moved, tally);
      }
    }
  }
  // Strict agreement is the convention pinned by the rotation criterion.
  const bool ok = kinds.size() == 4 && tally.failed == 0 && tally.mirror_only == 0;
  return {ok, std::to_string(generators.size()) + " generators, " + std::to_string(applications) +
                  " applications; " + describe(tally)};
}

Outcome maximal_collections() {
  int cases = 0;
  for (int m = 4; m <= 8; ++m) {
    for (int n = 3; n <= 9; n += 2) {
      const auto chain = maximal_collection(m, n);
      const std::int64_t expected = ((n + 1) / 2) * (m - 3) + (n / 2) * (m - 2) + 1;
      if (static_cast<std::int64_t>(chain.size()) != expected) {
        return {false, "m=" + std::to_string(m) + " n=" + std::to_string(n) + " wrong size"};
      }
      for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        if (regions_between(chain[k], chain[k + 1]) != 1) return {false, "gap is not one region"};
      }
      ++cases;
    }
  }
  return {true, std::to_string(cases) + " (m, n) cases"};
}

LaurentPoly minus_a_cubed(int sign) { return LaurentPoly::monomial(-1, 3 * sign); }

Outcome oracle_consistency() {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> half_strands(1, 4);
  std::uniform_int_distribution<int> length(1, kDefaultBracketCap);
  std::uniform_int_distribution<int> style_pick(0, 2);
  const ClosureStyle styles[] = {ClosureStyle::standard, ClosureStyle::even,
                                 ClosureStyle::doubly_even};
  for (int k = 0; k < 100; ++k) {
    const auto w = random_word(rng, 2 * half_strands(rng), length(rng));
    const auto d = closure(w, styles[style_pick(rng)]);
    const auto [re, im] = jones_at_minus_one(jones(d));
    const BigInt det = determinant(d);
    if (re * re + im * im != det * det) {
      return {false, "det " + det.str() + " vs V(-1) = " + re.str() + " + " + im.str() + "i"};
    }
  }
  if (kauffman_bracket(closure(BraidWord(2))) != LaurentPoly::constant(1)) {
    return {false, "unknot bracket is not 1"};
  }
  int kinks = 0;
  for (int k = 0; k < 50; ++k) {
    const auto w = random_word(rng, 2 * half_strands(rng), length(rng) - 1);
    const auto before = kauffman_bracket(closure(w));
    for (int e : {1, -1}) {
      BraidWord kink(2);
      kink.append_power(1, e);
      const int kink_sign = closure(kink).writhe();
      BraidWord tail(w.strands());
      tail.append_power(1, e);
      if (kauffman_bracket(closure(compose(w, tail))) != minus_a_cubed(kink_sign) * before) {
        return {false, "kink did not multiply the bracket by -A^(+-3)"};
      }
      ++kinks;
    }
  }
  return {true, "100 diagrams det == |V(-1)|, unknot bracket 1, " + std::to_string(kinks) +
                    " kinks scale by -A^(+-3)"};
}

Outcome example_golden() {
  const auto M = platknot::testing::example_matrix();
  if (validate(M)) return {false, "example does not validate"};
  if (!is_highly_twisted(M, 4)) return {false, "example is not 4-highly twisted"};
  const std::string word = format_braid_word(to_braid_word(M));
  if (word != "s2^4 s4^4 s6^4 s1^4 s3^-6 s5^4 s7^4 s2^4 s4^4 s6^6") return {false, "word " + word};
  if (component_count(M) != 4 || closure(M).component_count() != 4) {
    return {false, "component count is not 4"};
  }
  const auto c = canonical_form(M);
  const TwistMatrix frozen{4, 3, {{-6, -4, -4}, {-4, -4, 6, -4}, {-4, -4, -4}}};
  for (int k = 0; k < 10; ++k) {
    if (canonical_form(M) != c) return {false, "canonical form unstable"};
  }
  if (c != frozen) return {false, "canonical form changed:\n" + format_twist_matrix(c)};
  return {true, "word, 4 components, canonical form stable"};
}

Outcome negative_control() {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> width(4, 5);
  int changes = 0, certified = 0;
  for (int k = 0; k < 20; ++k) {
    const auto C = canonical_form(random_matrix(rng, width(rng), 3, 4, 5));
    const BigInt det = determinant(closure(C));
    for (std::size_t i = 0; i < C.rows.size(); ++i) {
      for (std::size_t j = 0; j < C.rows[i].size(); ++j) {
        const std::int64_t a = C.rows[i][j];
        // Grow the magnitude, and flip the sign, staying 4-highly twisted.
        for (std::int64_t b : {a + (a > 0 ? 1 : -1), -a}) {
          auto M = C;
          M.rows[i][j] = b;
          ++changes;
          if (canonical_form(M) == C) return {false, "single-entry change kept the canonical form"};
          if (determinant(closure(M)) != det) ++certified;
        }
      }
    }
  }
  return {true, std::to_string(changes) + " single-entry changes all change the canonical form; " +
                    std::to_string(certified) + " certified by determinant"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "rotation-orbit correctness", 1, rotation_orbit},
      {2, "rotation soundness via closure invariants", 600, rotation_soundness},
      {3, "continued fraction round trip", 1, cf_round_trip},
      {4, "Schubert pair reversal and separation", 1, schubert_pairs},
      {5, "Hilden invariance", 600, hilden_invariance},
      {6, "maximal collection size", 1, maximal_collections},
      {7, "invariant oracle self-consistency", 600, oracle_consistency},
      {8, "worked example golden", 1, example_golden},
      {9, "single-entry negative control", 60, negative_control},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      outcome.ok = false;
      outcome.detail += "; over the time budget";
    }
    if (!outcome.ok) ++failures;
    std::printf("%s [%d] %s: %s (%.3f s, budget %.0f s)\n", outcome.ok ? "PASS" : "FAIL", c.number,
                c.name, outcome.detail.c_str(), seconds, c.budget_seconds);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
