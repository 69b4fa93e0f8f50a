#include "platknot/planar_diagram.hpp"

#include <sstream>

#include "platknot/error.hpp"

namespace platknot {

PlanarDiagram::PlanarDiagram(std::vector<Crossing> crossings,
                             std::vector<std::pair<int, int>> component_ranges,
                             int free_loops)
    : crossings_(std::move(crossings)),
      component_ranges_(std::move(component_ranges)),
      arc_count_(2 * static_cast<int>(crossings_.size())),
      free_loops_(free_loops) {
  if (free_loops_ < 0) throw Error(ErrorCode::OutOfRange, "negative free loop count");
  component_of_arc_.assign(arc_count_, -1);
  int expected_first = 1;
  for (std::size_t c = 0; c < component_ranges_.size(); ++c) {
    const auto [first, last] = component_ranges_[c];
    if (first != expected_first || last < first || last > arc_count_) {
      throw Error(ErrorCode::OutOfRange, "component ranges must tile the arc labels");
    }
    for (int a = first; a <= last; ++a) component_of_arc_[a - 1] = static_cast<int>(c);
    expected_first = last + 1;
  }
  if (expected_first != arc_count_ + 1) {
    throw Error(ErrorCode::OutOfRange, "component ranges must tile the arc labels");
  }
  std::vector<int> uses(arc_count_, 0);
  for (const auto& x : crossings_) {
    if (x.sign != 1 && x.sign != -1) throw Error(ErrorCode::OutOfRange, "crossing sign must be +-1");
    for (int a : x.arcs) {
      if (a < 1 || a > arc_count_) throw Error(ErrorCode::OutOfRange, "arc label out of range");
      ++uses[a - 1];
    }
  }
  for (int u : uses) {
    if (u != 2) throw Error(ErrorCode::OutOfRange, "every arc label must appear exactly twice");
  }
}

int PlanarDiagram::next_arc(int arc) const {
  const auto [first, last] = component_ranges_.at(component_of_arc(arc));
  return arc == last ? first : arc + 1;
}

int PlanarDiagram::writhe() const noexcept {
  int w = 0;
  for (const auto& x : crossings_) w += x.sign;
  return w;
}

PlanarDiagram PlanarDiagram::with_distant_unknot() const {
  return PlanarDiagram(crossings_, component_ranges_, free_loops_ + 1);
}

PlanarDiagram PlanarDiagram::mirror() const {
  std::vector<Crossing> out;
  out.reserve(crossings_.size());
  for (const auto& x : crossings_) {
    const auto [a, b, c, d] = x.arcs;
    // The old over-strand becomes the under-strand; start from its incoming end.
    if (x.sign > 0) {
      out.push_back({{d, a, b, c}, -1});
    } else {
      out.push_back({{b, c, d, a}, 1});
    }
  }
  return PlanarDiagram(std::move(out), component_ranges_, free_loops_);
}

std::string format_pd(const PlanarDiagram& d) {
  std::ostringstream out;
  for (const auto& x : d.crossings()) {
    out << "X[" << x.arcs[0] << ',' << x.arcs[1] << ',' << x.arcs[2] << ',' << x.arcs[3]
        << "]\n";
  }
  return out.str();
}

std::vector<std::vector<GaussEntry>> gauss_code(const PlanarDiagram& d) {
  // head[a] is the crossing pass at which arc a ends.
  std::vector<GaussEntry> head(d.arc_count() + 1);
  for (int i = 0; i < d.crossing_count(); ++i) {
    const auto& x = d.crossings()[i];
    head[x.arcs[0]] = {i + 1, false, x.sign};
    head[x.sign > 0 ? x.arcs[3] : x.arcs[1]] = {i + 1, true, x.sign};
  }
  std::vector<std::vector<GaussEntry>> out;
  for (const auto& [first, last] : d.component_ranges()) {
    std::vector<GaussEntry> comp;
    for (int a = first; a <= last; ++a) comp.push_back(head[a]);
    out.push_back(std::move(comp));
  }
  for (int k = 0; k < d.free_loops(); ++k) out.emplace_back();
  return out;
}

std::string format_gauss(const PlanarDiagram& d) {
  std::ostringstream out;
  for (const auto& comp : gauss_code(d)) {
    if (comp.empty()) {
      out << "()\n";
      continue;
    }
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (i) out << ' ';
      out << (comp[i].over ? 'O' : 'U') << comp[i].crossing << (comp[i].sign > 0 ? '+' : '-');
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace platknot
