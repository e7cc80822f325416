#include "qtlink/quandle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "parse_util.hpp"

namespace qtlink {

Perm Perm::identity(int n) {
  Perm p;
  p.images.resize(n);
  for (int i = 0; i < n; ++i) p.images[i] = i;
  return p;
}

Perm Perm::then(const Perm& g) const {
  Perm r;
  r.images.resize(images.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    r.images[i] = g.images[images[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.images.resize(images.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    r.images[images[i]] = static_cast<int>(i);
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i] != static_cast<int>(i)) return false;
  return true;
}

FiniteQuandle::FiniteQuandle(int n, std::vector<int> table,
                             std::vector<int> inv_table)
    : n_(n), table_(std::move(table)), inv_table_(std::move(inv_table)) {}

int FiniteQuandle::op(int x, int y) const {
  if (x < 0 || x >= n_ || y < 0 || y >= n_)
    throw RangeError("op(" + std::to_string(x) + ", " + std::to_string(y) +
                     ") out of range for size " + std::to_string(n_));
  return table_[static_cast<std::size_t>(x) * n_ + y];
}

int FiniteQuandle::inv_op(int x, int y) const {
  if (x < 0 || x >= n_ || y < 0 || y >= n_)
    throw RangeError("inv_op(" + std::to_string(x) + ", " + std::to_string(y) +
                     ") out of range for size " + std::to_string(n_));
  return inv_table_[static_cast<std::size_t>(x) * n_ + y];
}

Perm FiniteQuandle::right_translation(int y) const {
  if (y < 0 || y >= n_)
    throw RangeError("right_translation(" + std::to_string(y) +
                     ") out of range for size " + std::to_string(n_));
  Perm p;
  p.images.resize(n_);
  for (int x = 0; x < n_; ++x)
    p.images[x] = table_[static_cast<std::size_t>(x) * n_ + y];
  return p;
}

void FiniteQuandle::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n_))
    throw RangeError("label list size " + std::to_string(labels.size()) +
                     " does not match quandle size " + std::to_string(n_));
  labels_ = std::move(labels);
}

std::string FiniteQuandle::label(int x) const {
  if (x < 0 || x >= n_)
    throw RangeError("label(" + std::to_string(x) + ") out of range");
  if (!labels_.empty() && !labels_[x].empty()) return labels_[x];
  return std::to_string(x);
}

FiniteQuandle FiniteQuandle::from_table(
    const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw RangeError("quandle table must have at least one row");
  for (int x = 0; x < n; ++x) {
    if (rows[x].size() != static_cast<std::size_t>(n))
      throw RangeError("quandle table row " + std::to_string(x) + " has " +
                       std::to_string(rows[x].size()) + " entries, expected " +
                       std::to_string(n));
  }
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int v = rows[x][y];
      if (v < 0 || v >= n)
        throw RangeError("quandle table entry (" + std::to_string(x) + ", " +
                         std::to_string(y) + ") = " + std::to_string(v) +
                         " out of range 0.." + std::to_string(n - 1));
      table[static_cast<std::size_t>(x) * n + y] = v;
    }
  }

  // Q1: idempotence.
  for (int x = 0; x < n; ++x) {
    if (table[static_cast<std::size_t>(x) * n + x] != x)
      throw AxiomViolation(
          "Q1", {x},
          "Q1 violated at x=" + std::to_string(x) + ": " + std::to_string(x) +
              "*" + std::to_string(x) + " = " +
              std::to_string(table[static_cast<std::size_t>(x) * n + x]));
  }

  // Q2: each column is a permutation.  Witness is the first (x', x, y) in
  // scan order with x' < x and x'*y == x*y.
  std::vector<int> first_preimage(n);
  for (int y = 0; y < n; ++y) {
    std::fill(first_preimage.begin(), first_preimage.end(), -1);
    for (int x = 0; x < n; ++x) {
      const int v = table[static_cast<std::size_t>(x) * n + y];
      if (first_preimage[v] >= 0) {
        const int xp = first_preimage[v];
        throw AxiomViolation(
            "Q2", {xp, x, y},
            "Q2 violated in column y=" + std::to_string(y) + ": " +
                std::to_string(xp) + "*" + std::to_string(y) + " = " +
                std::to_string(x) + "*" + std::to_string(y) + " = " +
                std::to_string(v));
      }
      first_preimage[v] = x;
    }
  }

  // Q3: right self-distributivity, first failing (x, y, z) in lex order.
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        const int lhs =
            table[static_cast<std::size_t>(
                      table[static_cast<std::size_t>(x) * n + y]) *
                      n +
                  z];
        const int xz = table[static_cast<std::size_t>(x) * n + z];
        const int yz = table[static_cast<std::size_t>(y) * n + z];
        const int rhs = table[static_cast<std::size_t>(xz) * n + yz];
        if (lhs != rhs)
          throw AxiomViolation(
              "Q3", {x, y, z},
              "Q3 violated at (x, y, z) = (" + std::to_string(x) + ", " +
                  std::to_string(y) + ", " + std::to_string(z) + "): (" +
                  std::to_string(x) + "*" + std::to_string(y) + ")*" +
                  std::to_string(z) + " = " + std::to_string(lhs) + " but (" +
                  "x*z)*(y*z) = " + std::to_string(rhs));
      }
    }
  }

  std::vector<int> inv_table(static_cast<std::size_t>(n) * n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      inv_table[static_cast<std::size_t>(
                    table[static_cast<std::size_t>(x) * n + y]) *
                    n +
                y] = x;

  return FiniteQuandle(n, std::move(table), std::move(inv_table));
}

FiniteQuandle trivial_quandle(int n) {
  if (n < 1) throw RangeError("trivial quandle needs n >= 1");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) rows[x][y] = x;
  return FiniteQuandle::from_table(rows);
}

FiniteQuandle dihedral_quandle(int n) {
  if (n < 1) throw RangeError("dihedral quandle needs n >= 1");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) rows[x][y] = ((2 * y - x) % n + n) % n;
  return FiniteQuandle::from_table(rows);
}

FiniteQuandle conjugation_quandle(
    const std::vector<std::vector<int>>& group_table) {
  const int n = static_cast<int>(group_table.size());
  if (n == 0) throw GroupAxiomViolation("group table must be nonempty");
  for (int a = 0; a < n; ++a) {
    if (group_table[a].size() != static_cast<std::size_t>(n))
      throw GroupAxiomViolation("group table is not square");
    for (int b = 0; b < n; ++b) {
      const int v = group_table[a][b];
      if (v < 0 || v >= n)
        throw GroupAxiomViolation("group table entry out of range at (" +
                                  std::to_string(a) + ", " +
                                  std::to_string(b) + ")");
    }
  }
  auto mul = [&](int a, int b) { return group_table[a][b]; };

  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw GroupAxiomViolation("group table has no identity");

  std::vector<int> inverse(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul(a, b) == identity && mul(b, a) == identity) {
        inverse[a] = b;
        break;
      }
    }
    if (inverse[a] < 0)
      throw GroupAxiomViolation("group element " + std::to_string(a) +
                                " has no inverse");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw GroupAxiomViolation(
              "group table is not associative at (" + std::to_string(a) +
              ", " + std::to_string(b) + ", " + std::to_string(c) + ")");

  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) rows[x][y] = mul(mul(inverse[y], x), y);
  return FiniteQuandle::from_table(rows);
}

OrbitPartition orbits(const FiniteQuandle& q) {
  const int n = q.size();
  OrbitPartition part;
  part.orbit_id.assign(n, -1);
  for (int start = 0; start < n; ++start) {
    if (part.orbit_id[start] >= 0) continue;
    const int id = part.count();
    std::vector<int> members;
    std::deque<int> queue{start};
    part.orbit_id[start] = id;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      members.push_back(x);
      for (int y = 0; y < n; ++y) {
        for (int z : {q.op(x, y), q.inv_op(x, y)}) {
          if (part.orbit_id[z] < 0) {
            part.orbit_id[z] = id;
            queue.push_back(z);
          }
        }
      }
    }
    std::sort(members.begin(), members.end());
    part.orbit_members.push_back(std::move(members));
  }
  return part;
}

InnerGroup inner_group(const FiniteQuandle& q, std::size_t cap) {
  InnerGroup g;
  const int n = q.size();
  for (int y = 0; y < n; ++y) g.generators.push_back(q.right_translation(y));

  std::set<std::vector<int>> seen;
  auto add = [&](const Perm& p) -> bool {
    // Returns false when the cap prevented the insertion of a new element.
    if (seen.contains(p.images)) return true;
    if (g.elements.size() >= cap) {
      g.truncated = true;
      return false;
    }
    seen.insert(p.images);
    g.elements.push_back(p);
    return true;
  };

  add(Perm::identity(n));
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    for (const Perm& gen : g.generators) {
      if (!add(g.elements[i].then(gen))) return g;
    }
  }
  return g;
}

QuasiTrivialityCheck is_quasi_trivial(const FiniteQuandle& q) {
  const OrbitPartition part = orbits(q);
  for (int x = 0; x < q.size(); ++x) {
    for (int y : part.orbit_members[part.orbit_id[x]]) {
      if (q.op(x, y) != x) return {false, std::make_pair(x, y)};
    }
  }
  return {true, std::nullopt};
}

FiniteQuandle parse_quandle(std::string_view text) {
  const std::vector<std::string> tokens =
      detail::tokenize(detail::strip_comments(text));
  std::size_t pos = 0;
  auto next = [&](std::string_view what) -> const std::string& {
    if (pos >= tokens.size())
      throw ParseError("unexpected end of quandle text, expected " +
                       std::string(what));
    return tokens[pos++];
  };

  const long long n = detail::parse_int(next("size"), "quandle size");
  if (n < 1 || n > 4096) throw ParseError("unreasonable quandle size");

  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (long long x = 0; x < n; ++x)
    for (long long y = 0; y < n; ++y)
      rows[x][y] = static_cast<int>(
          detail::parse_int(next("table entry"), "table entry"));

  std::vector<std::string> labels;
  while (pos < tokens.size()) {
    if (tokens[pos] != "label")
      throw ParseError("unexpected token '" + tokens[pos] +
                       "' after quandle table");
    ++pos;
    const long long idx = detail::parse_int(next("label index"), "label index");
    if (idx < 0 || idx >= n)
      throw ParseError("label index " + std::to_string(idx) + " out of range");
    const std::string& name = next("label name");
    if (labels.empty()) labels.assign(n, "");
    labels[idx] = name;
  }

  FiniteQuandle q = FiniteQuandle::from_table(rows);
  q.set_labels(std::move(labels));
  return q;
}

}  // namespace qtlink
