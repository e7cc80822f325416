#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qtlink/link_diagram.hpp"
#include "qtlink/quandle.hpp"

namespace qtlink {

// Assignment of quandle elements to the edges of a diagram plus one color per
// crossingless component.  edge_color is indexed by edge label (slot 0
// unused); free_loop_colors follows the component ordering.
struct ArcColoring {
  std::vector<int> edge_color;
  std::vector<int> free_loop_colors;
};

struct ColoringCheck {
  bool valid = true;
  // First crossing (in record order) whose over-continuity or under relation
  // fails.
  std::optional<int> violating_crossing;
};

// Checks the coloring conditions at every crossing:
//   color(e2) == color(e4)
//   color(e3) == color(e1) * y   at positive crossings  (y = over color)
//   color(e3) == color(e1) *inv y at negative crossings
// Throws RangeError when a color or array size is out of range.
ColoringCheck is_valid_coloring(const LinkDiagram& d, const FiniteQuandle& q,
                                const ArcColoring& a);

struct EnumerationOptions {
  int jobs = 1;
  // When set, restricts component i to colors in orbit orbit_tuple[i]
  // (indices into orbits(q)); size must equal the component count.
  std::optional<std::vector<int>> orbit_tuple;
};

// Visits every valid coloring exactly once, in a canonical order that does
// not depend on jobs: colorings are found by branching on the
// lowest-numbered uncolored edge with colors ascending, propagating the
// under-strand relations both ways, and never solving for an over-color;
// crossingless components are filled in last, in lexicographic order.
void for_each_coloring(const LinkDiagram& d, const FiniteQuandle& q,
                       const std::function<void(const ArcColoring&)>& visit,
                       const EnumerationOptions& options = {});

std::vector<ArcColoring> enumerate_colorings(const LinkDiagram& d,
                                             const FiniteQuandle& q,
                                             int jobs = 1);

// Colorings whose component i uses only colors from orbit orbit_tuple[i].
std::vector<ArcColoring> enumerate_in_orbits(const LinkDiagram& d,
                                             const FiniteQuandle& q,
                                             const std::vector<int>& orbit_tuple,
                                             int jobs = 1);

std::uint64_t count_colorings(const LinkDiagram& d, const FiniteQuandle& q,
                              int jobs = 1);

// One line "e=c ..." sorted by edge, then "loopK=c" entries for crossingless
// components.
std::string dump_coloring(const LinkDiagram& d, const ArcColoring& a);

}  // namespace qtlink
