#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace platknot {

// PD quadruple: arc labels (1-based) counterclockwise starting from the
// incoming under-strand, so arcs[0] -> arcs[2] is the under-strand and the
// over-strand runs arcs[3] -> arcs[1] when sign is +1, arcs[1] -> arcs[3]
// when sign is -1.
struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 1;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Crossing-level diagram with an orientation. Arcs of a component are
// labeled consecutively along its orientation; the arc after the last label
// of a component is its first label. Components without crossings are only
// counted (free_loops).
class PlanarDiagram {
 public:
  PlanarDiagram() = default;
  PlanarDiagram(std::vector<Crossing> crossings,
                std::vector<std::pair<int, int>> component_ranges, int free_loops);

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int arc_count() const noexcept { return arc_count_; }
  int free_loops() const noexcept { return free_loops_; }

  // Inclusive [first, last] label range of each component that has crossings.
  const std::vector<std::pair<int, int>>& component_ranges() const noexcept {
    return component_ranges_;
  }
  // 0-based component id of a 1-based arc label.
  int component_of_arc(int arc) const { return component_of_arc_.at(arc - 1); }
  int component_count() const noexcept {
    return static_cast<int>(component_ranges_.size()) + free_loops_;
  }
  int next_arc(int arc) const;

  int writhe() const noexcept;

  // Same diagram plus one more crossingless circle far away.
  PlanarDiagram with_distant_unknot() const;
  // Crossing changes everywhere.
  PlanarDiagram mirror() const;

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;

 private:
  std::vector<Crossing> crossings_;
  std::vector<std::pair<int, int>> component_ranges_;
  std::vector<int> component_of_arc_;
  int arc_count_ = 0;
  int free_loops_ = 0;
};

// `X[a,b,c,d]` one crossing per line.
std::string format_pd(const PlanarDiagram& d);

struct GaussEntry {
  int crossing = 0;  // 1-based
  bool over = false;
  int sign = 1;
};
// One list per component (free loops give empty lists), following the
// orientation from each component's first arc.
std::vector<std::vector<GaussEntry>> gauss_code(const PlanarDiagram& d);
// Tokens `O<k>+`, `U<k>-`; one component per line, free loops as `()`.
std::string format_gauss(const PlanarDiagram& d);

}  // namespace platknot
