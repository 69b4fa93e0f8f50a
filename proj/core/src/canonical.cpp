#include "platknot/canonical.hpp"

#include <algorithm>

namespace platknot {

std::string_view to_string(Symmetry g) noexcept {
  switch (g) {
    case Symmetry::Id: return "Id";
    case Symmetry::H: return "H";
    case Symmetry::V: return "V";
    case Symmetry::HV: return "HV";
  }
  return "Id";
}

Symmetry operator*(Symmetry g, Symmetry h) noexcept {
  return static_cast<Symmetry>(static_cast<int>(g) ^ static_cast<int>(h));
}

TwistMatrix apply(Symmetry g, const TwistMatrix& M) {
  require_valid(M);
  TwistMatrix out = M;
  const int bits = static_cast<int>(g);
  if (bits & static_cast<int>(Symmetry::H)) std::reverse(out.rows.begin(), out.rows.end());
  if (bits & static_cast<int>(Symmetry::V)) {
    for (auto& row : out.rows) std::reverse(row.begin(), row.end());
  }
  return out;
}

void require_theorem_range(const TwistMatrix& M) {
  require_valid(M);
  if (M.m < 4 || M.n < 3) {
    throw Error(ErrorCode::DimensionsOutOfTheoremRange,
                "uniqueness needs m >= 4 and n >= 3, got m=" + std::to_string(M.m) +
                    " n=" + std::to_string(M.n));
  }
  if (!is_highly_twisted(M, 4)) {
    throw Error(ErrorCode::NotHighlyTwisted, "some twist region has fewer than 4 crossings");
  }
}

TwistMatrix canonical_form(const TwistMatrix& M, CanonicalOptions options) {
  if (options.force) {
    require_valid(M);
  } else {
    require_theorem_range(M);
  }
  TwistMatrix best = M;
  auto best_key = M.flattened();
  for (auto g : kAllSymmetries) {
    auto image = apply(g, M);
    auto key = image.flattened();
    if (key < best_key) {
      best_key = std::move(key);
      best = std::move(image);
    }
  }
  return best;
}

bool equivalent(const TwistMatrix& a, const TwistMatrix& b, CanonicalOptions options) {
  return canonical_form(a, options) == canonical_form(b, options);
}

std::vector<Symmetry> symmetry_group(const TwistMatrix& M) {
  std::vector<Symmetry> out;
  for (auto g : kAllSymmetries) {
    if (apply(g, M) == M) out.push_back(g);
  }
  return out;
}

}  // namespace platknot
