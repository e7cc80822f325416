#include "qtlink/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "parse_util.hpp"

namespace qtlink {

namespace {

bool valid_modulus(int m) { return m == 0 || m >= 2; }

void require_modulus(int m) {
  if (!valid_modulus(m))
    throw RangeError("modulus must be 0 or >= 2, got " + std::to_string(m));
}

long long reduce(long long v, int m) {
  if (m == 0) return v;
  const long long r = v % m;
  return r < 0 ? r + m : r;
}

void require_qt(const FiniteQuandle& q, DegeneracyMode mode) {
  if (mode == DegeneracyMode::quasi_trivial) {
    const QuasiTrivialityCheck check = is_quasi_trivial(q);
    if (!check.quasi_trivial)
      throw ModeError(
          "quasi-trivial mode on a non-quasi-trivial quandle (witness x=" +
          std::to_string(check.witness->first) +
          " y=" + std::to_string(check.witness->second) + ")");
  }
}

bool degenerate_with(const std::vector<int>& orbit_id, DegeneracyMode mode,
                     std::span<const int> t) {
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    if (t[i] == t[i + 1]) return true;
  if (mode == DegeneracyMode::quasi_trivial && t.size() >= 2 &&
      orbit_id[t[0]] == orbit_id[t[1]])
    return true;
  return false;
}

void require_shape(const FiniteQuandle& q, const Cochain2& theta) {
  if (theta.n != q.size())
    throw ShapeMismatch("cochain is on " + std::to_string(theta.n) +
                        " elements, quandle has " + std::to_string(q.size()));
  require_modulus(theta.modulus);
}

bool is_prime(int m) {
  if (m < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

}  // namespace

std::optional<std::size_t> ChainBasis::index_of(
    std::span<const int> tuple) const {
  const std::vector<int> key(tuple.begin(), tuple.end());
  const auto it = std::lower_bound(tuples.begin(), tuples.end(), key);
  if (it == tuples.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - tuples.begin());
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data.begin(), data.end(),
                     [](const Integer& v) { return v == 0; });
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw ShapeMismatch("matrix product shape mismatch");
  IntMatrix r(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Integer& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        const Integer& bkj = b.at(k, j);
        if (bkj != 0) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

IntMatrix SparseIntMatrix::dense() const {
  IntMatrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [row, coeff] : columns[j]) m.at(row, j) = coeff;
  return m;
}

bool SparseIntMatrix::is_zero() const {
  return std::all_of(columns.begin(), columns.end(),
                     [](const auto& col) { return col.empty(); });
}

SparseIntMatrix sparse_multiply(const SparseIntMatrix& a,
                                const SparseIntMatrix& b) {
  if (a.cols != b.rows) throw ShapeMismatch("matrix product shape mismatch");
  SparseIntMatrix r;
  r.rows = a.rows;
  r.cols = b.cols;
  r.columns.resize(b.cols);
  std::map<std::size_t, long long> acc;
  for (std::size_t j = 0; j < b.cols; ++j) {
    acc.clear();
    for (const auto& [k, bk] : b.columns[j])
      for (const auto& [i, ai] : a.columns[k])
        acc[i] += static_cast<long long>(ai) * bk;
    for (const auto& [i, v] : acc)
      if (v != 0) r.columns[j].emplace_back(i, static_cast<int>(v));
  }
  return r;
}

bool is_degenerate(const FiniteQuandle& q, std::span<const int> tuple,
                   DegeneracyMode mode) {
  require_qt(q, mode);
  for (int x : tuple)
    if (x < 0 || x >= q.size())
      throw RangeError("tuple entry " + std::to_string(x) + " out of range");
  const OrbitPartition part = orbits(q);
  return degenerate_with(part.orbit_id, mode, tuple);
}

ChainBasis chain_basis(const FiniteQuandle& q, int degree,
                       DegeneracyMode mode) {
  if (degree < 0) throw IndexError("chain basis degree must be >= 0");
  require_qt(q, mode);

  ChainBasis basis;
  basis.degree = degree;
  basis.mode = mode;
  if (degree == 0) {
    basis.tuples.push_back({});
    return basis;
  }

  const OrbitPartition part = orbits(q);
  const int n = q.size();
  std::vector<int> t(degree, 0);
  while (true) {
    if (!degenerate_with(part.orbit_id, mode, t)) basis.tuples.push_back(t);
    int i = degree - 1;
    while (i >= 0 && t[i] == n - 1) t[i--] = 0;
    if (i < 0) break;
    ++t[i];
  }
  return basis;
}

SparseIntMatrix boundary_matrix(const FiniteQuandle& q, int degree,
                                DegeneracyMode mode) {
  if (degree < 1) throw IndexError("boundary matrix needs degree >= 1");
  const ChainBasis source = chain_basis(q, degree, mode);
  const ChainBasis target = chain_basis(q, degree - 1, mode);

  SparseIntMatrix m;
  m.rows = target.size();
  m.cols = source.size();
  m.columns.resize(m.cols);

  std::map<std::size_t, int> acc;
  std::vector<int> shorter(degree > 0 ? degree - 1 : 0);
  for (std::size_t j = 0; j < source.size(); ++j) {
    acc.clear();
    const std::vector<int>& t = source.tuples[j];
    for (int i = 2; i <= degree; ++i) {
      const int coeff = (i % 2 == 0) ? 1 : -1;
      const int xi = t[i - 1];
      // Omit position i.
      std::size_t w = 0;
      for (int k = 0; k < degree; ++k)
        if (k != i - 1) shorter[w++] = t[k];
      if (auto idx = target.index_of(shorter)) acc[*idx] += coeff;
      // Act on the first i-1 entries by *x_i, then omit position i.
      for (int k = 0; k < i - 1; ++k) shorter[k] = q.op(t[k], xi);
      if (auto idx = target.index_of(shorter)) acc[*idx] -= coeff;
    }
    for (const auto& [row, coeff] : acc)
      if (coeff != 0) m.columns[j].emplace_back(row, coeff);
  }
  return m;
}

Cochain2 Cochain2::zero(int n, int modulus) {
  require_modulus(modulus);
  if (n < 1) throw RangeError("cochain needs n >= 1");
  Cochain2 c;
  c.modulus = modulus;
  c.n = n;
  c.values.assign(static_cast<std::size_t>(n) * n, 0);
  return c;
}

void Cochain2::set(int x, int y, long long v) {
  if (x < 0 || x >= n || y < 0 || y >= n)
    throw RangeError("cochain index out of range");
  values[static_cast<std::size_t>(x) * n + y] = reduce(v, modulus);
}

CocycleReport check_cocycle(const FiniteQuandle& q, const Cochain2& theta,
                            DegeneracyMode mode) {
  require_shape(q, theta);
  require_qt(q, mode);
  const int n = q.size();
  const int m = theta.modulus;
  CocycleReport report;

  for (int x = 0; x < n && report.c1_ok; ++x) {
    if (reduce(theta.at(x, x), m) != 0) {
      report.c1_ok = false;
      report.violations.push_back({1, {x}});
    }
  }

  for (int x = 0; x < n && report.c2_ok; ++x) {
    for (int y = 0; y < n && report.c2_ok; ++y) {
      for (int z = 0; z < n && report.c2_ok; ++z) {
        const long long lhs = theta.at(x, y) + theta.at(q.op(x, y), z);
        const long long rhs =
            theta.at(x, z) + theta.at(q.op(x, z), q.op(y, z));
        if (reduce(lhs - rhs, m) != 0) {
          report.c2_ok = false;
          report.violations.push_back({2, {x, y, z}});
        }
      }
    }
  }

  if (mode == DegeneracyMode::quasi_trivial) {
    const OrbitPartition part = orbits(q);
    for (int x = 0; x < n && report.c3_ok; ++x) {
      for (int y : part.orbit_members[part.orbit_id[x]]) {
        if (reduce(theta.at(x, y), m) != 0) {
          report.c3_ok = false;
          report.violations.push_back({3, {x, y}});
          break;
        }
      }
    }
  }
  return report;
}

Cochain2 coboundary(const FiniteQuandle& q, const Cochain1& f) {
  require_modulus(f.modulus);
  const int n = q.size();
  if (f.values.size() != static_cast<std::size_t>(n))
    throw ShapeMismatch("degree-1 cochain has " +
                        std::to_string(f.values.size()) +
                        " values, quandle has " + std::to_string(n));
  Cochain2 out = Cochain2::zero(n, f.modulus);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      out.set(x, y, f.values[x] - f.values[q.op(x, y)]);
  return out;
}

SmithNormalForm smith_normal_form(IntMatrix m) {
  const std::size_t rows = m.rows, cols = m.cols;
  SmithNormalForm s;
  s.u = IntMatrix::identity(rows);
  s.u_inv = IntMatrix::identity(rows);
  s.v = IntMatrix::identity(cols);
  s.v_inv = IntMatrix::identity(cols);

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(a, j), m.at(b, j));
    for (std::size_t j = 0; j < rows; ++j) {
      std::swap(s.u.at(a, j), s.u.at(b, j));
      std::swap(s.u_inv.at(j, a), s.u_inv.at(j, b));
    }
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(m.at(i, a), m.at(i, b));
    for (std::size_t i = 0; i < cols; ++i) {
      std::swap(s.v.at(i, a), s.v.at(i, b));
      std::swap(s.v_inv.at(a, i), s.v_inv.at(b, i));
    }
  };
  // row a -= q * row b
  auto row_sub = [&](std::size_t a, std::size_t b, const Integer& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < cols; ++j) m.at(a, j) -= q * m.at(b, j);
    for (std::size_t j = 0; j < rows; ++j) {
      s.u.at(a, j) -= q * s.u.at(b, j);
      s.u_inv.at(j, b) += q * s.u_inv.at(j, a);
    }
  };
  // col a -= q * col b
  auto col_sub = [&](std::size_t a, std::size_t b, const Integer& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < rows; ++i) m.at(i, a) -= q * m.at(i, b);
    for (std::size_t i = 0; i < cols; ++i) {
      s.v.at(i, a) -= q * s.v.at(i, b);
      s.v_inv.at(b, i) += q * s.v_inv.at(a, i);
    }
  };
  auto negate_row = [&](std::size_t a) {
    for (std::size_t j = 0; j < cols; ++j) m.at(a, j) = -m.at(a, j);
    for (std::size_t j = 0; j < rows; ++j) {
      s.u.at(a, j) = -s.u.at(a, j);
      s.u_inv.at(j, a) = -s.u_inv.at(j, a);
    }
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t k = 0; k < steps; ++k) {
    while (true) {
      // Smallest nonzero entry of the trailing submatrix becomes the pivot.
      std::size_t pi = rows, pj = cols;
      Integer best = 0;
      for (std::size_t i = k; i < rows; ++i)
        for (std::size_t j = k; j < cols; ++j) {
          const Integer& v = m.at(i, j);
          if (v == 0) continue;
          const Integer mag = boost::multiprecision::abs(v);
          if (pi == rows || mag < best) {
            best = mag;
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) {
        k = steps;  // trailing submatrix is zero; diagonal is complete
        break;
      }
      swap_rows(k, pi);
      swap_cols(k, pj);

      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (m.at(i, k) == 0) continue;
        row_sub(i, k, m.at(i, k) / m.at(k, k));
        if (m.at(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (m.at(k, j) == 0) continue;
        col_sub(j, k, m.at(k, j) / m.at(k, k));
        if (m.at(k, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing submatrix for the divisibility
      // chain; fold an offending row in and retry.
      bool divides = true;
      for (std::size_t i = k + 1; i < rows && divides; ++i)
        for (std::size_t j = k + 1; j < cols && divides; ++j)
          if (m.at(i, j) % m.at(k, k) != 0) {
            row_sub(k, i, Integer(-1));  // row k += row i
            divides = false;
          }
      if (divides) break;
    }
    if (k >= steps) break;
  }
  for (std::size_t k = 0; k < steps; ++k)
    if (m.at(k, k) < 0) negate_row(k);

  s.d = std::move(m);
  return s;
}

namespace {

// Rank of a matrix over F_p.
std::size_t rank_mod_p(IntMatrix m, int p) {
  const std::size_t rows = m.rows, cols = m.cols;
  std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Integer v = m.at(i, j) % p;
      if (v < 0) v += p;
      a[i][j] = v.convert_to<long long>();
    }

  auto inv_mod = [&](long long x) {
    long long r0 = p, r1 = x, t0 = 0, t1 = 1;
    while (r1 != 0) {
      const long long q = r0 / r1;
      long long tmp = r0 - q * r1;
      r0 = r1;
      r1 = tmp;
      tmp = t0 - q * t1;
      t0 = t1;
      t1 = tmp;
    }
    return ((t0 % p) + p) % p;
  };

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    const long long inv = inv_mod(a[rank][col]);
    for (std::size_t j = col; j < cols; ++j)
      a[rank][j] = a[rank][j] * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      const long long f = a[i][col];
      for (std::size_t j = col; j < cols; ++j)
        a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// delta_1 and delta_2 as dense matrices on the quotient bases (transposes of
// the degree-2 and degree-3 boundary matrices).
struct CochainComplexSlice {
  ChainBasis basis1, basis2;
  IntMatrix a;  // delta_1 : C^1 -> C^2, |B2| x |B1|
  IntMatrix b;  // delta_2 : C^2 -> C^3, |B3| x |B2|
};

CochainComplexSlice cochain_slice(const FiniteQuandle& q, DegeneracyMode mode) {
  CochainComplexSlice s;
  s.basis1 = chain_basis(q, 1, mode);
  s.basis2 = chain_basis(q, 2, mode);
  const SparseIntMatrix d2 = boundary_matrix(q, 2, mode);
  const SparseIntMatrix d3 = boundary_matrix(q, 3, mode);
  s.a = IntMatrix(d2.cols, d2.rows);
  for (std::size_t j = 0; j < d2.cols; ++j)
    for (const auto& [row, coeff] : d2.columns[j]) s.a.at(j, row) = coeff;
  s.b = IntMatrix(d3.cols, d3.rows);
  for (std::size_t j = 0; j < d3.cols; ++j)
    for (const auto& [row, coeff] : d3.columns[j]) s.b.at(j, row) = coeff;
  return s;
}

std::vector<long long> snf_diagonal(const IntMatrix& d) {
  std::vector<long long> out;
  for (std::size_t k = 0; k < std::min(d.rows, d.cols); ++k)
    out.push_back(d.at(k, k).convert_to<long long>());
  return out;
}

}  // namespace

CohomologyResult cohomology_h2(const FiniteQuandle& q, int modulus,
                               DegeneracyMode mode, H2Strategy strategy) {
  require_modulus(modulus);
  require_qt(q, mode);
  if (strategy == H2Strategy::automatic)
    strategy = is_prime(modulus) ? H2Strategy::mod_p : H2Strategy::snf;
  if (strategy == H2Strategy::mod_p && !is_prime(modulus))
    throw RangeError("mod_p strategy needs a prime modulus");

  const CochainComplexSlice s = cochain_slice(q, mode);
  const std::size_t n2 = s.basis2.size();
  CohomologyResult result;

  if (strategy == H2Strategy::mod_p) {
    const std::size_t rank_b = rank_mod_p(s.b, modulus);
    const std::size_t rank_a = rank_mod_p(s.a, modulus);
    const std::size_t h = n2 - rank_b - rank_a;
    result.factors.assign(h, modulus);
    result.field_rank = h;
    return result;
  }

  const SmithNormalForm snf_b = smith_normal_form(s.b);
  std::size_t rank_b = 0;
  for (long long d : snf_diagonal(snf_b.d))
    if (d != 0) ++rank_b;

  // v_inv_a = V_B^-1 * A; its top rank_b rows vanish because B * A = 0.
  const IntMatrix v_inv_a = multiply(snf_b.v_inv, s.a);
  for (std::size_t i = 0; i < rank_b; ++i)
    for (std::size_t j = 0; j < v_inv_a.cols; ++j)
      if (v_inv_a.at(i, j) != 0)
        throw Error("internal: image of delta_1 not in kernel of delta_2");

  if (modulus == 0) {
    // Kernel coordinates are the last n2 - rank_b columns of V_B; the image
    // of delta_1 in those coordinates is the bottom rows of v_inv_a.
    const std::size_t k = n2 - rank_b;
    IntMatrix y(k, v_inv_a.cols);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < v_inv_a.cols; ++j)
        y.at(i, j) = v_inv_a.at(rank_b + i, j);
    const SmithNormalForm snf_y = smith_normal_form(std::move(y));
    std::size_t rank_y = 0;
    for (long long d : snf_diagonal(snf_y.d)) {
      if (d == 0) break;
      ++rank_y;
      if (d > 1) result.factors.push_back(d);
    }
    result.factors.insert(result.factors.end(), k - rank_y, 0);
    return result;
  }

  // Lattice of mod-m cocycles: columns of P = V_B * diag(e), where
  // e_i = m / gcd(d_i, m) stretches each coordinate just enough to kill
  // B v = 0 (mod m).  H^2 is then Z^n2 / P^-1 [A | m I].
  const std::vector<long long> diag = snf_diagonal(snf_b.d);
  std::vector<Integer> e(n2, 1);
  for (std::size_t i = 0; i < rank_b; ++i)
    e[i] = modulus / boost::multiprecision::gcd(Integer(diag[i]),
                                                Integer(modulus));

  IntMatrix gens(n2, s.a.cols + n2);
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < s.a.cols; ++j) gens.at(i, j) = s.a.at(i, j);
  for (std::size_t i = 0; i < n2; ++i) gens.at(i, s.a.cols + i) = modulus;

  IntMatrix w = multiply(snf_b.v_inv, gens);
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < w.cols; ++j) {
      if (w.at(i, j) % e[i] != 0)
        throw Error("internal: cocycle lattice division failed");
      w.at(i, j) /= e[i];
    }

  const SmithNormalForm snf_w = smith_normal_form(std::move(w));
  for (long long d : snf_diagonal(snf_w.d)) {
    if (d == 0 || modulus % d != 0)
      throw Error("internal: cohomology factor does not divide the modulus");
    if (d > 1) result.factors.push_back(d);
  }
  std::sort(result.factors.begin(), result.factors.end());
  if (is_prime(modulus)) result.field_rank = result.factors.size();
  return result;
}

std::optional<Cochain1> is_coboundary(const FiniteQuandle& q,
                                      const Cochain2& theta,
                                      DegeneracyMode mode) {
  require_shape(q, theta);
  const CocycleReport report = check_cocycle(q, theta, mode);
  if (!report.all_ok()) {
    const CocycleViolation& v = report.violations.front();
    throw NotACocycle("cochain fails cocycle condition C" +
                      std::to_string(v.condition));
  }

  const int m = theta.modulus;
  const CochainComplexSlice s = cochain_slice(q, mode);
  const std::size_t n2 = s.basis2.size(), n1 = s.basis1.size();

  // theta restricted to the basis; it vanishes on degenerate pairs by C1/C3.
  IntMatrix t(n2, 1);
  for (std::size_t j = 0; j < n2; ++j)
    t.at(j, 0) = theta.at(s.basis2.tuples[j][0], s.basis2.tuples[j][1]);

  const SmithNormalForm snf_a = smith_normal_form(s.a);
  const IntMatrix rhs = multiply(snf_a.u, t);
  const std::vector<long long> diag = snf_diagonal(snf_a.d);
  std::size_t rank = 0;
  while (rank < diag.size() && diag[rank] != 0) ++rank;

  std::vector<Integer> g(n1, 0);
  const Integer mm = m;
  for (std::size_t i = 0; i < n2; ++i) {
    const Integer& si = rhs.at(i, 0);
    if (i < rank) {
      const Integer di = diag[i];
      if (m == 0) {
        if (si % di != 0) return std::nullopt;
        g[i] = si / di;
      } else {
        // d g = s (mod m) is solvable iff gcd(d, m) divides s.
        const Integer common = boost::multiprecision::gcd(di, mm);
        if (si % common != 0) return std::nullopt;
        const Integer md = mm / common;
        // Inverse of d/common modulo m/common via the extended Euclid loop.
        Integer r0 = md, r1 = (di / common) % md, t0 = 0, t1 = 1;
        while (r1 != 0) {
          const Integer quot = r0 / r1;
          Integer tmp = r0 - quot * r1;
          r0 = r1;
          r1 = tmp;
          tmp = t0 - quot * t1;
          t0 = t1;
          t1 = tmp;
        }
        g[i] = ((si / common) % md) * (t0 % md) % md;
      }
    } else {
      if (m == 0 ? si != 0 : si % mm != 0) return std::nullopt;
    }
  }

  Cochain1 f;
  f.modulus = m;
  f.values.assign(n1, 0);
  for (std::size_t i = 0; i < n1; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < n1; ++j) acc += snf_a.v.at(i, j) * g[j];
    if (m != 0) {
      acc %= mm;
      if (acc < 0) acc += mm;
    }
    f.values[i] = acc.convert_to<long long>();
  }
  return f;
}

Cochain2 parse_cochain(std::string_view text) {
  const std::vector<std::string> tokens =
      detail::tokenize(detail::strip_comments(text));
  if (tokens.size() < 2 || tokens[0] != "mod")
    throw ParseError("cochain text must start with 'mod <m>'");
  const long long m = detail::parse_int(tokens[1], "modulus");
  if (m < 0 || m == 1 || m > (1 << 30))
    throw ParseError("modulus must be 0 or >= 2");

  std::vector<long long> values;
  for (std::size_t i = 2; i < tokens.size(); ++i)
    values.push_back(detail::parse_int(tokens[i], "cochain value"));
  std::size_t n = 0;
  while (n * n < values.size()) ++n;
  if (n == 0 || n * n != values.size())
    throw ParseError("cochain needs a square number of values, got " +
                     std::to_string(values.size()));

  Cochain2 c = Cochain2::zero(static_cast<int>(n), static_cast<int>(m));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      c.set(static_cast<int>(x), static_cast<int>(y), values[x * n + y]);
  return c;
}

}  // namespace qtlink
