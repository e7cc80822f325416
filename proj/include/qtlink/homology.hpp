#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qtlink/quandle.hpp"

namespace qtlink {

// Exact arbitrary-precision integer used by all matrix arithmetic.
using Integer = boost::multiprecision::cpp_int;

// Which tuples count as degenerate in the rack chain complex:
//   standard       some adjacent pair is equal
//   quasi_trivial  additionally, in degree >= 2, the second entry lies in the
//                  orbit of the first (only positions 1-2; this subsumes
//                  x1 == x2).  Requires a quasi-trivial quandle.
enum class DegeneracyMode { standard, quasi_trivial };

// Ordered basis of the degree-n quotient chain group: all non-degenerate
// n-tuples in lexicographic order.
struct ChainBasis {
  int degree = 0;
  DegeneracyMode mode = DegeneracyMode::standard;
  std::vector<std::vector<int>> tuples;

  std::size_t size() const { return tuples.size(); }
  // Position of a tuple, or nullopt when it is degenerate (dropped by the
  // quotient).
  std::optional<std::size_t> index_of(std::span<const int> tuple) const;
};

// Dense matrix with exact integer entries, row-major.
struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Integer> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  static IntMatrix identity(std::size_t n);

  Integer& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Integer& at(std::size_t r, std::size_t c) const {
    return data[r * cols + c];
  }
  bool is_zero() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
  }
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

// Column-major sparse matrix with small integer coefficients; boundary
// matrices are huge but have at most 2(n-1) entries per column.
struct SparseIntMatrix {
  std::size_t rows = 0, cols = 0;
  // Per column: (row, coefficient), sorted by row, coefficients nonzero.
  std::vector<std::vector<std::pair<std::size_t, int>>> columns;

  IntMatrix dense() const;
  bool is_zero() const;
};

SparseIntMatrix sparse_multiply(const SparseIntMatrix& a,
                                const SparseIntMatrix& b);

// True when the tuple is dropped by the chosen quotient.  Throws ModeError
// for quasi_trivial mode on a non-quasi-trivial quandle.
bool is_degenerate(const FiniteQuandle& q, std::span<const int> tuple,
                   DegeneracyMode mode);

ChainBasis chain_basis(const FiniteQuandle& q, int degree, DegeneracyMode mode);

// Matrix of the boundary  d_n : C_n -> C_{n-1}  on the quotient bases,
//   d(x_1..x_n) = sum_{i=2..n} (-1)^i [ (.., x_{i-1}, x_{i+1}, ..)
//                                       - (x_1*x_i, .., x_{i-1}*x_i, x_{i+1}, ..) ],
// with degenerate targets projected away.  d_1 = 0.
SparseIntMatrix boundary_matrix(const FiniteQuandle& q, int degree,
                                DegeneracyMode mode);

// Cochain of degree 1 or 2 with coefficients in Z/m (modulus >= 2) or Z
// (modulus 0).  Two-cochain values are stored row-major and kept reduced.
struct Cochain1 {
  int modulus = 2;
  std::vector<long long> values;
};

struct Cochain2 {
  int modulus = 2;
  int n = 0;
  std::vector<long long> values;

  static Cochain2 zero(int n, int modulus);
  long long at(int x, int y) const {
    return values[static_cast<std::size_t>(x) * n + y];
  }
  void set(int x, int y, long long v);

  friend bool operator==(const Cochain2&, const Cochain2&) = default;
};

struct CocycleViolation {
  int condition = 0;  // 1, 2 or 3
  std::vector<int> witness;
};

// Outcome of the three cocycle conditions:
//   C1  theta(x, x) = 0
//   C2  theta(x,y) + theta(x*y,z) = theta(x,z) + theta(x*z,y*z)
//   C3  theta(x, y) = 0 for y in the orbit of x   (quasi_trivial mode only)
// A condition flag is false exactly when `violations` holds its witness (the
// first one in lexicographic scan order).
struct CocycleReport {
  bool c1_ok = true;
  bool c2_ok = true;
  bool c3_ok = true;
  std::vector<CocycleViolation> violations;

  bool all_ok() const { return c1_ok && c2_ok && c3_ok; }
};

// C2 is checked by an exhaustive scan over all triples, independent of the
// boundary-matrix machinery.
CocycleReport check_cocycle(const FiniteQuandle& q, const Cochain2& theta,
                            DegeneracyMode mode);

// (delta f)(x, y) = f(x) - f(x * y), with f's modulus.
Cochain2 coboundary(const FiniteQuandle& q, const Cochain1& f);

// Smith normal form D = U * M * V with U, V unimodular, D diagonal with
// nonnegative entries and d_1 | d_2 | ...  The inverses are built alongside
// by applying the inverse elementary operations.
struct SmithNormalForm {
  IntMatrix d, u, v;
  IntMatrix u_inv, v_inv;
};

SmithNormalForm smith_normal_form(IntMatrix m);

// Cyclic factor list of a finitely generated abelian group: 0 stands for Z,
// torsion factors come first in ascending order.
struct CohomologyResult {
  std::vector<long long> factors;
  // Dimension over F_p when the modulus is prime.
  std::optional<std::size_t> field_rank;

  bool trivial() const { return factors.empty(); }
};

enum class H2Strategy { automatic, mod_p, snf };

// Second cohomology of the quotient complex with Z/m (or Z, m = 0)
// coefficients.  Prime moduli go through F_p elimination, everything else
// through Smith normal forms; the strategy override exists so tests can
// cross-check the two paths.
CohomologyResult cohomology_h2(const FiniteQuandle& q, int modulus,
                               DegeneracyMode mode,
                               H2Strategy strategy = H2Strategy::automatic);

// Solves delta f = theta over the coefficient ring.  Requires theta to pass
// check_cocycle in the given mode (NotACocycle otherwise).  Returns nullopt
// when theta is not a coboundary.
std::optional<Cochain1> is_coboundary(const FiniteQuandle& q,
                                      const Cochain2& theta,
                                      DegeneracyMode mode);

// Text format: "mod m" then n*n values row-major; n is inferred.  '#' starts
// a comment.
Cochain2 parse_cochain(std::string_view text);

}  // namespace qtlink
