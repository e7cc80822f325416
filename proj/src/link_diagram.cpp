#include "qtlink/link_diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "parse_util.hpp"

namespace qtlink {

namespace {

struct Violation {
  bool orientation = false;  // picks OrientationError over ValidationError
  std::string message;
};

// Everything from_records derives, or the reasons it cannot.
struct BuildResult {
  std::vector<Violation> violations;
  int edge_count = 0;
  std::vector<int> next;          // 1-based
  std::vector<int> signs;         // per crossing
  std::vector<int> class_of;      // 1-based; traced class id by smallest edge
  std::vector<std::pair<int, int>> class_ranges;  // by class id
};

void analyze(const std::vector<CrossingRecord>& records, int free_loops,
             BuildResult& out) {
  auto fail = [&](std::string msg, bool orientation = false) {
    out.violations.push_back({orientation, std::move(msg)});
  };

  if (free_loops < 0) fail("free loop count is negative");
  if (records.empty() && free_loops <= 0) fail("diagram has no components");

  const int cross_n = static_cast<int>(records.size());
  const int edge_n = 2 * cross_n;
  out.edge_count = edge_n;

  std::map<int, int> uses;
  for (const CrossingRecord& r : records)
    for (int e : r.e) {
      if (e < 1) {
        fail("edge label " + std::to_string(e) + " is not positive");
        return;
      }
      ++uses[e];
    }
  for (auto [e, k] : uses)
    if (k != 2)
      fail("edge " + std::to_string(e) + " used " + std::to_string(k) +
           " times, expected 2");
  for (int e = 1; e <= edge_n; ++e)
    if (!uses.contains(e)) fail("edge " + std::to_string(e) + " is missing");
  if (!uses.empty() && uses.rbegin()->first > edge_n)
    fail("edge labels exceed twice the crossing count");
  if (!out.violations.empty()) return;

  // Strand classes: union under pairs and over pairs.
  std::vector<int> parent(edge_n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int e) {
    while (parent[e] != e) e = parent[e] = parent[parent[e]];
    return e;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const CrossingRecord& r : records) {
    unite(r.e[0], r.e[2]);
    unite(r.e[1], r.e[3]);
  }

  // Each class must be a consecutive label range (a traced component).
  std::map<int, std::pair<int, int>> range_of_root;
  for (int e = 1; e <= edge_n; ++e) {
    auto [it, fresh] = range_of_root.try_emplace(find(e), std::make_pair(e, e));
    if (!fresh) {
      it->second.first = std::min(it->second.first, e);
      it->second.second = std::max(it->second.second, e);
    }
  }
  std::vector<std::pair<int, int>> ranges;
  for (auto& [root, range] : range_of_root) ranges.push_back(range);
  std::sort(ranges.begin(), ranges.end());
  {
    int expect = 1;
    for (auto [lo, hi] : ranges) {
      if (lo != expect) {
        fail("component edge ranges are not consecutive near edge " +
             std::to_string(lo));
        return;
      }
      expect = hi + 1;
    }
  }
  out.class_ranges = ranges;
  out.class_of.assign(edge_n + 1, -1);
  for (std::size_t i = 0; i < ranges.size(); ++i)
    for (int e = ranges[i].first; e <= ranges[i].second; ++e)
      out.class_of[e] = static_cast<int>(i);

  out.next.assign(edge_n + 1, 0);
  for (auto [lo, hi] : ranges)
    for (int e = lo; e <= hi; ++e) out.next[e] = (e == hi) ? lo : e + 1;
  auto next = [&](int e) { return out.next[e]; };

  for (int c = 0; c < cross_n; ++c) {
    const auto& r = records[c].e;
    if (next(r[0]) != r[2])
      fail("under-strand edges " + std::to_string(r[0]) + " -> " +
           std::to_string(r[2]) + " are not consecutive at crossing " +
           std::to_string(c));
    if (next(r[1]) != r[3] && next(r[3]) != r[1])
      fail("over-strand edges at crossing " + std::to_string(c) +
           " are not consecutive in either direction");
  }
  if (!out.violations.empty()) return;

  // Orientation: every edge needs exactly one incoming (head) and one
  // outgoing (tail) appearance.  Under slots fix their own roles; over slots
  // are resolved by elimination, which also fixes the crossing signs.
  std::vector<int> heads(edge_n + 1, 0), tails(edge_n + 1, 0);
  for (const CrossingRecord& r : records) {
    ++heads[r.e[0]];
    ++tails[r.e[2]];
  }
  out.signs.assign(cross_n, 0);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int c = 0; c < cross_n; ++c) {
      if (out.signs[c] != 0) continue;
      const int x = records[c].e[1];  // candidate outgoing for sign +1
      const int w = records[c].e[3];  // candidate incoming for sign +1
      const bool pos_ok = next(w) == x && heads[w] == 0 && tails[x] == 0;
      const bool neg_ok = next(x) == w && heads[x] == 0 && tails[w] == 0;
      if (!pos_ok && !neg_ok) {
        fail("over-strand orientation at crossing " + std::to_string(c) +
                 " contradicts the rest of the diagram",
             true);
        return;
      }
      if (pos_ok != neg_ok) {
        out.signs[c] = pos_ok ? 1 : -1;
        ++heads[pos_ok ? w : x];
        ++tails[pos_ok ? x : w];
        progress = true;
      }
    }
  }
  for (int c = 0; c < cross_n; ++c)
    if (out.signs[c] == 0) {
      fail("over-strand orientation at crossing " + std::to_string(c) +
               " is ambiguous",
           true);
      return;
    }
  for (int e = 1; e <= edge_n; ++e)
    if (heads[e] != 1 || tails[e] != 1) {
      fail("edge " + std::to_string(e) +
               " does not have exactly one incoming and one outgoing use",
           true);
      return;
    }
}

}  // namespace

LinkDiagram LinkDiagram::from_records(std::vector<CrossingRecord> records,
                                      int free_loops,
                                      const std::vector<int>& order_hint) {
  BuildResult b;
  analyze(records, free_loops, b);
  if (!b.violations.empty()) {
    const Violation& v = b.violations.front();
    if (v.orientation) throw OrientationError(v.message);
    throw ValidationError(v.message);
  }

  LinkDiagram d;
  d.records_ = std::move(records);
  d.free_loops_ = free_loops;
  d.edge_count_ = b.edge_count;
  d.next_ = std::move(b.next);
  d.signs_ = std::move(b.signs);

  const int traced = static_cast<int>(b.class_ranges.size());
  std::vector<int> order(traced);
  std::iota(order.begin(), order.end(), 0);
  if (!order_hint.empty()) {
    if (static_cast<int>(order_hint.size()) != traced)
      throw ValidationError("order directive names " +
                            std::to_string(order_hint.size()) +
                            " components, diagram has " +
                            std::to_string(traced));
    std::set<int> seen;
    for (int i = 0; i < traced; ++i) {
      const int e = order_hint[i];
      if (e < 1 || e > d.edge_count_)
        throw ValidationError("order directive edge " + std::to_string(e) +
                              " out of range");
      const int cls = b.class_of[e];
      if (!seen.insert(cls).second)
        throw ValidationError(
            "order directive names one component more than once");
      order[i] = cls;
    }
  }

  d.component_ranges_.resize(traced);
  d.comp_of_edge_.assign(d.edge_count_ + 1, -1);
  for (int i = 0; i < traced; ++i) {
    const auto range = b.class_ranges[order[i]];
    d.component_ranges_[i] = range;
    for (int e = range.first; e <= range.second; ++e) d.comp_of_edge_[e] = i;
  }
  return d;
}

const CrossingRecord& LinkDiagram::crossing(int c) const {
  if (c < 0 || c >= crossing_count())
    throw IndexError("crossing index " + std::to_string(c) + " out of range");
  return records_[c];
}

int LinkDiagram::next_edge(int e) const {
  if (e < 1 || e > edge_count_)
    throw IndexError("edge " + std::to_string(e) + " out of range");
  return next_[e];
}

int LinkDiagram::component_of(int e) const {
  if (e < 1 || e > edge_count_)
    throw IndexError("edge " + std::to_string(e) + " out of range");
  return comp_of_edge_[e];
}

std::pair<int, int> LinkDiagram::component_range(int i) const {
  if (i < 0 || i >= traced_component_count())
    throw IndexError("traced component " + std::to_string(i) +
                     " out of range");
  return component_ranges_[i];
}

int LinkDiagram::sign(int c) const {
  if (c < 0 || c >= crossing_count())
    throw IndexError("crossing index " + std::to_string(c) + " out of range");
  return signs_[c];
}

bool LinkDiagram::is_self_crossing(int c) const {
  const CrossingRecord& r = crossing(c);
  return component_of(r.e[0]) == component_of(r.e[1]);
}

int LinkDiagram::writhe() const {
  int w = 0;
  for (int s : signs_) w += s;
  return w;
}

long long LinkDiagram::linking_number(int i, int j) const {
  const int n = component_count();
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw IndexError("component index out of range");
  if (i == j) throw IndexError("linking number needs two distinct components");
  long long sum = 0;
  for (int c = 0; c < crossing_count(); ++c) {
    const int under = component_of(records_[c].e[0]);
    const int over = component_of(records_[c].e[1]);
    if ((under == i && over == j) || (under == j && over == i))
      sum += signs_[c];
  }
  if (sum % 2 != 0)
    throw Error("internal: odd crossing sign sum between components");
  return sum / 2;
}

LinkDiagram::Flip LinkDiagram::flip_crossing(int c) const {
  const CrossingRecord& r = crossing(c);
  const bool self = is_self_crossing(c);

  std::vector<CrossingRecord> records = records_;
  const auto& e = r.e;
  if (signs_[c] > 0)
    records[c].e = {e[3], e[0], e[1], e[2]};
  else
    records[c].e = {e[1], e[2], e[3], e[0]};

  // Keep the existing component ordering: edges do not change, so the first
  // edge of each traced range still identifies its component.
  std::vector<int> hint;
  for (const auto& range : component_ranges_) hint.push_back(range.first);

  return {from_records(std::move(records), free_loops_, hint), self};
}

std::vector<std::string> LinkDiagram::validate() const {
  return validate_pd(records_, free_loops_);
}

int crossing_sign(const LinkDiagram& d, int c) { return d.sign(c); }

std::vector<std::string> validate_pd(const std::vector<CrossingRecord>& records,
                                     int free_loops) {
  BuildResult b;
  analyze(records, free_loops, b);
  std::vector<std::string> out;
  for (const Violation& v : b.violations) out.push_back(v.message);
  return out;
}

LinkDiagram parse_pd(std::string_view text) {
  std::string cleaned = detail::strip_comments(text);
  // The inline form uses '/' between directives; treat it as a line break.
  std::replace(cleaned.begin(), cleaned.end(), '/', '\n');

  std::vector<CrossingRecord> records;
  int free_loops = 0;
  std::vector<int> order_hint;
  bool seen_order = false;

  std::istringstream lines(cleaned);
  std::string line;
  while (std::getline(lines, line)) {
    const std::vector<std::string> tok = detail::tokenize(line);
    if (tok.empty()) continue;
    if (tok[0] == "X") {
      if (tok.size() != 5)
        throw ParseError("X directive needs four edge labels");
      CrossingRecord r;
      for (int i = 0; i < 4; ++i) {
        const long long e = detail::parse_int(tok[i + 1], "edge label");
        if (e < 1 || e > 1000000)
          throw ParseError("edge label " + std::to_string(e) +
                           " out of range");
        r.e[i] = static_cast<int>(e);
      }
      records.push_back(r);
    } else if (tok[0] == "O") {
      if (tok.size() != 2) throw ParseError("O directive needs one count");
      const long long k = detail::parse_int(tok[1], "free loop count");
      if (k < 0 || k > 1000000)
        throw ParseError("free loop count out of range");
      free_loops += static_cast<int>(k);
    } else if (tok[0] == "order") {
      if (seen_order) throw ParseError("duplicate order directive");
      seen_order = true;
      for (std::size_t i = 1; i < tok.size(); ++i)
        order_hint.push_back(
            static_cast<int>(detail::parse_int(tok[i], "order edge")));
    } else {
      throw ParseError("unknown directive '" + tok[0] + "'");
    }
  }
  return LinkDiagram::from_records(std::move(records), free_loops, order_hint);
}

std::string format_pd(const LinkDiagram& d) {
  std::ostringstream out;
  for (const CrossingRecord& r : d.crossings())
    out << "X " << r.e[0] << ' ' << r.e[1] << ' ' << r.e[2] << ' ' << r.e[3]
        << '\n';
  if (d.free_loop_count() > 0) out << "O " << d.free_loop_count() << '\n';

  bool default_order = true;
  for (int i = 0; i + 1 < d.traced_component_count(); ++i)
    if (d.component_range(i).first > d.component_range(i + 1).first)
      default_order = false;
  if (!default_order) {
    out << "order";
    for (int i = 0; i < d.traced_component_count(); ++i)
      out << ' ' << d.component_range(i).first;
    out << '\n';
  }
  return out.str();
}

}  // namespace qtlink
