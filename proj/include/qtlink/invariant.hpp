#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qtlink/coloring.hpp"
#include "qtlink/homology.hpp"
#include "qtlink/link_diagram.hpp"
#include "qtlink/quandle.hpp"

namespace qtlink {

// Per-component weight of one coloring: the signed sum of theta over the
// crossings whose under-strand lies on that component,
//   +theta(color(e1), over)  at positive crossings,
//   -theta(color(e3), over)  at negative crossings,
// reduced by theta's modulus.
struct WeightVector {
  std::vector<long long> per_component;
};

WeightVector weights(const LinkDiagram& d, const FiniteQuandle& q,
                     const Cochain2& theta, const ArcColoring& a);

// value -> multiplicity, canonically sorted by value.
using WeightMultiset = std::map<long long, std::uint64_t>;

// The cocycle invariant: one weight multiset per component, all colorings
// counted.  Multiset totals all equal `total_colorings`.
struct InvariantReport {
  int modulus = 2;
  std::vector<WeightMultiset> per_component;
  std::uint64_t total_colorings = 0;

  friend bool operator==(const InvariantReport&,
                         const InvariantReport&) = default;
};

// link_homotopy requires a quasi-trivial quandle and a cocycle for the
// quasi-trivial quotient (ModeError otherwise); ambient only requires the
// standard cocycle conditions (NotACocycle otherwise).
enum class InvariantMode { link_homotopy, ambient };

InvariantReport cocycle_invariant(const LinkDiagram& d, const FiniteQuandle& q,
                                  const Cochain2& theta,
                                  InvariantMode mode = InvariantMode::link_homotopy,
                                  int jobs = 1);

// The invariant split by which orbit each component is colored in.  Tuples
// are in lexicographic order; every coloring lands in exactly one slice, so
// the slices sum to the unrefined report.
struct RefinedReport {
  int modulus = 2;
  // Only tuples with at least one coloring appear.
  std::vector<std::pair<std::vector<int>, InvariantReport>> by_orbit_tuple;

  friend bool operator==(const RefinedReport&, const RefinedReport&) = default;
};

RefinedReport refined_invariant(const LinkDiagram& d, const FiniteQuandle& q,
                                const Cochain2& theta,
                                InvariantMode mode = InvariantMode::link_homotopy,
                                int jobs = 1);

// Multiset-by-multiset equality.  Throws ShapeMismatch when the moduli or
// component counts differ.
bool compare_reports(const InvariantReport& a, const InvariantReport& b);

// Sum of the per-tuple slices of a refined report.
InvariantReport refined_union(const RefinedReport& r);

}  // namespace qtlink
