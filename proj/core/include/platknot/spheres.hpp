#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace platknot {

// S(c_1, ..., c_n): a vertical 2-sphere meeting the projection plane in a
// monotone arc with c_i twist regions to its left at row i.
struct VerticalSphere {
  std::vector<int> c;

  friend bool operator==(const VerticalSphere&, const VerticalSphere&) = default;
};

std::string to_string(const VerticalSphere& s);

// Largest allowed c_i at row i (1-based): m-2 on odd rows, m-1 on even rows.
int max_left_regions(int m, int row);

// Needs m >= 3, length n, and at least one twist region on each side at
// every row.
bool is_valid(const VerticalSphere& s, int m, int n);

// Two spheres can be disjoint exactly when their arcs never swap sides,
// i.e. they are comparable componentwise. Throws DimensionMismatch.
bool disjointly_realizable(const VerticalSphere& s, const VerticalSphere& t);

// Twist regions strictly between s and t, s <= t componentwise.
// Throws Incomparable otherwise (in either order).
int regions_between(const VerticalSphere& s, const VerticalSphere& t);

// Componentwise min / max; both stay valid when the inputs are.
VerticalSphere meet(const VerticalSphere& s, const VerticalSphere& t);
VerticalSphere join(const VerticalSphere& s, const VerticalSphere& t);

// ceil(n/2)(m-3) + floor(n/2)(m-2) + 1
std::int64_t maximal_collection_size(int m, int n);

// Chain from S(1,...,1) to S(m-2, m-1, m-2, ..., m-2), one twist region per
// step, raising rows top to bottom. Needs m >= 4 and odd n >= 3.
std::vector<VerticalSphere> maximal_collection(int m, int n);

}  // namespace platknot
