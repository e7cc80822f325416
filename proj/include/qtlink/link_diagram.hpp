#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "qtlink/errors.hpp"

namespace qtlink {

// One crossing of an oriented planar diagram code.  Edges are listed
// counterclockwise starting from the incoming under-edge: e[0] enters under,
// e[2] leaves under, e[1] and e[3] form the over-strand.
struct CrossingRecord {
  std::array<int, 4> e{};

  friend bool operator==(const CrossingRecord& a, const CrossingRecord& b) {
    return a.e == b.e;
  }
};

// Oriented, ordered link diagram.  Edge labels are 1..edge_count; each traced
// component occupies a consecutive label range and closes up cyclically.
// Crossingless components carry no edges and are listed after the traced ones
// in the component ordering.
class LinkDiagram {
 public:
  // order_hint, when nonempty, names one edge of each traced component and
  // fixes the component ordering; the default orders traced components by
  // their smallest edge label.  Throws ValidationError or OrientationError.
  static LinkDiagram from_records(std::vector<CrossingRecord> records,
                                  int free_loops,
                                  const std::vector<int>& order_hint = {});

  int crossing_count() const { return static_cast<int>(records_.size()); }
  const CrossingRecord& crossing(int c) const;
  const std::vector<CrossingRecord>& crossings() const { return records_; }

  int edge_count() const { return edge_count_; }
  int free_loop_count() const { return free_loops_; }
  int traced_component_count() const {
    return static_cast<int>(component_ranges_.size());
  }
  int component_count() const {
    return traced_component_count() + free_loops_;
  }

  // Successor of edge e along its component (wraps at the range end).
  int next_edge(int e) const;
  // Component index (0-based, in the final ordering) of edge e.
  int component_of(int e) const;
  // Consecutive edge label range [first, last] of traced component i.
  std::pair<int, int> component_range(int i) const;

  // +1 when the over-strand runs e[3] -> e[1], -1 when it runs e[1] -> e[3].
  int sign(int c) const;
  bool is_self_crossing(int c) const;
  int writhe() const;

  // Sum of signs over crossings between components i and j, halved.
  // Components are 0-based and must be distinct.
  long long linking_number(int i, int j) const;

  struct Flip;
  // Switches which strand passes over at crossing c, keeping the underlying
  // curves, orientations, and component ordering.
  Flip flip_crossing(int c) const;

  // Re-runs the construction checks; empty on any constructed diagram.
  std::vector<std::string> validate() const;

 private:
  LinkDiagram() = default;

  std::vector<CrossingRecord> records_;
  int free_loops_ = 0;
  int edge_count_ = 0;
  std::vector<int> next_;            // 1-based; next_[e] = successor of e
  std::vector<int> comp_of_edge_;    // 1-based; final component index
  std::vector<int> signs_;           // per crossing, +1 or -1
  std::vector<std::pair<int, int>> component_ranges_;  // per traced component
};

struct LinkDiagram::Flip {
  LinkDiagram diagram;
  bool was_self_crossing = false;
};

int crossing_sign(const LinkDiagram& d, int c);

// Structural checks on raw records without constructing a diagram.  Returns
// human-readable violations; empty means from_records would succeed.
std::vector<std::string> validate_pd(const std::vector<CrossingRecord>& records,
                                     int free_loops);

// Text format, one directive per line (or '/'-separated):
//   X a b c d   crossing record
//   O k         k crossingless unknot components
//   order e...  one edge per traced component, fixing the ordering
// '#' starts a comment.
LinkDiagram parse_pd(std::string_view text);
std::string format_pd(const LinkDiagram& d);

}  // namespace qtlink
