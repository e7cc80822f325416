#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtlink/errors.hpp"

namespace qtlink {

// Permutation of {0, ..., n-1}, stored as its image list.
struct Perm {
  std::vector<int> images;

  static Perm identity(int n);

  int degree() const { return static_cast<int>(images.size()); }
  int operator()(int x) const { return images[x]; }

  // Composition "apply *this, then g".
  Perm then(const Perm& g) const;
  Perm inverse() const;
  bool is_identity() const;

  friend bool operator==(const Perm& a, const Perm& b) {
    return a.images == b.images;
  }
  friend bool operator<(const Perm& a, const Perm& b) {
    return a.images < b.images;
  }
};

// Finite quandle given by its operation table.  Construction validates the
// three quandle axioms, so every instance in flight satisfies them:
//   Q1  x * x == x
//   Q2  each right translation  z -> z * y  is a bijection
//   Q3  (x * y) * z == (x * z) * (y * z)
class FiniteQuandle {
 public:
  // rows[x][y] = x * y.  Throws RangeError on shape or entry problems and
  // AxiomViolation (with the first witness in row-major scan order) on Q1-Q3
  // failures.
  static FiniteQuandle from_table(const std::vector<std::vector<int>>& rows);

  int size() const { return n_; }
  int op(int x, int y) const;      // x * y
  int inv_op(int x, int y) const;  // the unique z with z * y == x

  Perm right_translation(int y) const;

  // Optional display names.  Empty vector means "no labels"; otherwise the
  // size matches size().
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  // Label of x, falling back to its decimal index.
  std::string label(int x) const;

 private:
  FiniteQuandle(int n, std::vector<int> table, std::vector<int> inv_table);

  int n_ = 0;
  std::vector<int> table_;      // row-major, table_[x * n_ + y] = x * y
  std::vector<int> inv_table_;  // row-major, inv_table_[x * n_ + y] = x *inv y
  std::vector<std::string> labels_;
};

// Orbit decomposition under the inner group.  Orbits are indexed by order of
// their smallest member; members are sorted ascending.
struct OrbitPartition {
  std::vector<int> orbit_id;                    // element -> orbit index
  std::vector<std::vector<int>> orbit_members;  // orbit index -> elements

  int count() const { return static_cast<int>(orbit_members.size()); }
};

// Group generated by the right translations, materialized by breadth-first
// closure.  `elements` starts with the identity and is otherwise in discovery
// order; `truncated` is set when the closure would have exceeded the cap.
struct InnerGroup {
  std::vector<Perm> elements;
  std::vector<Perm> generators;  // right translations for y = 0, ..., n-1
  bool truncated = false;

  std::size_t order() const { return elements.size(); }
};

struct QuasiTrivialityCheck {
  bool quasi_trivial = false;
  // First (x, y) in ascending scan with y in the orbit of x and x * y != x.
  std::optional<std::pair<int, int>> witness;
};

FiniteQuandle trivial_quandle(int n);

// x * y = 2y - x mod n.
FiniteQuandle dihedral_quandle(int n);

// Conjugation quandle of the group with multiplication table `group_table`
// (rows[a][b] = a . b): x * y = y^-1 x y.  Throws GroupAxiomViolation if the
// table is not a group.
FiniteQuandle conjugation_quandle(const std::vector<std::vector<int>>& group_table);

OrbitPartition orbits(const FiniteQuandle& q);

inline constexpr std::size_t kDefaultInnerGroupCap = 1000000;
InnerGroup inner_group(const FiniteQuandle& q,
                       std::size_t cap = kDefaultInnerGroupCap);

// x * y == x whenever y lies in the orbit of x.  This is the same as asking
// x * phi(x) == x for every phi in the inner group, because the orbit of x is
// exactly { phi(x) : phi in Inn }.
QuasiTrivialityCheck is_quasi_trivial(const FiniteQuandle& q);

// Text format: first integer n, then n*n table entries in row-major order,
// then optional "label <index> <name>" directives.  '#' starts a comment.
FiniteQuandle parse_quandle(std::string_view text);

}  // namespace qtlink
