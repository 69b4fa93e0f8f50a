#include "platknot/spheres.hpp"

#include <algorithm>

#include "platknot/error.hpp"

namespace platknot {

std::string to_string(const VerticalSphere& s) {
  std::string out = "S(";
  for (std::size_t i = 0; i < s.c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.c[i]);
  }
  return out + ')';
}

int max_left_regions(int m, int row) { return row % 2 ? m - 2 : m - 1; }

bool is_valid(const VerticalSphere& s, int m, int n) {
  if (m < 3 || n < 1 || static_cast<int>(s.c.size()) != n) return false;
  for (int i = 1; i <= n; ++i) {
    const int ci = s.c[i - 1];
    if (ci < 1 || ci > max_left_regions(m, i)) return false;
  }
  return true;
}

namespace {

void require_same_length(const VerticalSphere& s, const VerticalSphere& t) {
  if (s.c.size() != t.c.size()) {
    throw Error(ErrorCode::DimensionMismatch, "spheres " + to_string(s) + " and " + to_string(t) +
                                                  " have different heights");
  }
}

bool below_or_equal(const VerticalSphere& s, const VerticalSphere& t) {
  for (std::size_t i = 0; i < s.c.size(); ++i) {
    if (s.c[i] > t.c[i]) return false;
  }
  return true;
}

}  // namespace

bool disjointly_realizable(const VerticalSphere& s, const VerticalSphere& t) {
  require_same_length(s, t);
  return below_or_equal(s, t) || below_or_equal(t, s);
}

int regions_between(const VerticalSphere& s, const VerticalSphere& t) {
  require_same_length(s, t);
  if (!below_or_equal(s, t)) {
    throw Error(ErrorCode::Incomparable, to_string(s) + " is not left of " + to_string(t));
  }
  int total = 0;
  for (std::size_t i = 0; i < s.c.size(); ++i) total += t.c[i] - s.c[i];
  return total;
}

VerticalSphere meet(const VerticalSphere& s, const VerticalSphere& t) {
  require_same_length(s, t);
  VerticalSphere out = s;
  for (std::size_t i = 0; i < s.c.size(); ++i) out.c[i] = std::min(s.c[i], t.c[i]);
  return out;
}

VerticalSphere join(const VerticalSphere& s, const VerticalSphere& t) {
  require_same_length(s, t);
  VerticalSphere out = s;
  for (std::size_t i = 0; i < s.c.size(); ++i) out.c[i] = std::max(s.c[i], t.c[i]);
  return out;
}

std::int64_t maximal_collection_size(int m, int n) {
  const std::int64_t odd_rows = (n + 1) / 2;
  const std::int64_t even_rows = n / 2;
  return odd_rows * (m - 3) + even_rows * (m - 2) + 1;
}

std::vector<VerticalSphere> maximal_collection(int m, int n) {
  if (m < 4 || n < 3 || n % 2 == 0) {
    throw Error(ErrorCode::OutOfRange, "maximal collections need m >= 4 and odd n >= 3, got m=" +
                                           std::to_string(m) + " n=" + std::to_string(n));
  }
  std::vector<VerticalSphere> chain;
  VerticalSphere current{std::vector<int>(n, 1)};
  chain.push_back(current);
  for (int i = 1; i <= n; ++i) {
    while (current.c[i - 1] < max_left_regions(m, i)) {
      ++current.c[i - 1];
      chain.push_back(current);
    }
  }
  return chain;
}

}  // namespace platknot
