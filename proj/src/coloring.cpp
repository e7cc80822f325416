#include "qtlink/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

namespace qtlink {

namespace {

// Diagram- and quandle-derived tables shared by one enumeration run.
struct SearchContext {
  const FiniteQuandle* q = nullptr;
  int ncolors = 0;
  int edge_count = 0;
  int arc_count = 0;
  std::vector<int> arc_of;    // edge (1-based) -> arc id
  std::vector<int> arc_comp;  // arc id -> component index

  struct Constraint {
    int u_in, u_out, over;  // arc ids
    int sign;
  };
  std::vector<Constraint> constraints;
  std::vector<std::vector<int>> constraints_by_arc;

  std::vector<std::vector<int>> comp_colors;  // component -> allowed colors
  std::vector<char> comp_mask;                // component * ncolors + color
  std::vector<int> loop_comp;                 // free loop -> component index

  bool color_allowed(int comp, int v) const {
    return comp_mask[static_cast<std::size_t>(comp) * ncolors + v] != 0;
  }
};

SearchContext make_context(const LinkDiagram& d, const FiniteQuandle& q,
                           const std::optional<std::vector<int>>& orbit_tuple) {
  SearchContext cx;
  cx.q = &q;
  cx.ncolors = q.size();
  cx.edge_count = d.edge_count();

  // Arcs: edges joined across over-passages.
  std::vector<int> parent(cx.edge_count + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int e) {
    while (parent[e] != e) e = parent[e] = parent[parent[e]];
    return e;
  };
  for (const CrossingRecord& r : d.crossings())
    parent[find(r.e[1])] = find(r.e[3]);

  cx.arc_of.assign(cx.edge_count + 1, -1);
  for (int e = 1; e <= cx.edge_count; ++e) {
    const int root = find(e);
    if (cx.arc_of[root] < 0) {
      cx.arc_of[root] = cx.arc_count++;
      cx.arc_comp.push_back(d.component_of(e));
    }
    cx.arc_of[e] = cx.arc_of[root];
  }

  for (int c = 0; c < d.crossing_count(); ++c) {
    const CrossingRecord& r = d.crossing(c);
    cx.constraints.push_back({cx.arc_of[r.e[0]], cx.arc_of[r.e[2]],
                              cx.arc_of[r.e[1]], d.sign(c)});
  }
  cx.constraints_by_arc.resize(cx.arc_count);
  for (std::size_t i = 0; i < cx.constraints.size(); ++i) {
    const auto& con = cx.constraints[i];
    for (int arc : {con.u_in, con.u_out, con.over}) {
      auto& list = cx.constraints_by_arc[arc];
      if (list.empty() || list.back() != static_cast<int>(i))
        list.push_back(static_cast<int>(i));
    }
  }

  const int comps = d.component_count();
  if (orbit_tuple && static_cast<int>(orbit_tuple->size()) != comps)
    throw ShapeMismatch("orbit tuple size " +
                        std::to_string(orbit_tuple->size()) +
                        " does not match component count " +
                        std::to_string(comps));
  cx.comp_colors.resize(comps);
  cx.comp_mask.assign(static_cast<std::size_t>(comps) * cx.ncolors, 0);
  const OrbitPartition part = orbit_tuple ? orbits(q) : OrbitPartition{};
  for (int i = 0; i < comps; ++i) {
    if (orbit_tuple) {
      const int orbit = (*orbit_tuple)[i];
      if (orbit < 0 || orbit >= part.count())
        throw IndexError("orbit index " + std::to_string(orbit) +
                         " out of range");
      cx.comp_colors[i] = part.orbit_members[orbit];
    } else {
      cx.comp_colors[i].resize(cx.ncolors);
      std::iota(cx.comp_colors[i].begin(), cx.comp_colors[i].end(), 0);
    }
    for (int v : cx.comp_colors[i])
      cx.comp_mask[static_cast<std::size_t>(i) * cx.ncolors + v] = 1;
  }
  for (int k = 0; k < d.free_loop_count(); ++k)
    cx.loop_comp.push_back(d.traced_component_count() + k);
  return cx;
}

// Depth-first enumeration with relation propagation.  Branches on the
// lowest-numbered uncolored edge, colors ascending; never derives an
// over-color.  `first_values` filters the root decision (used to partition
// work across threads without changing the per-branch order).
struct Dfs {
  const SearchContext& cx;
  const std::vector<int>& first_values;
  const std::function<void(const ArcColoring&)>& emit;

  std::vector<int> color;  // arc -> color or -1
  std::vector<int> trail;
  ArcColoring scratch;

  Dfs(const SearchContext& cx_in, const std::vector<int>& first,
      const std::function<void(const ArcColoring&)>& emit_in)
      : cx(cx_in), first_values(first), emit(emit_in) {
    color.assign(cx.arc_count, -1);
    scratch.edge_color.assign(cx.edge_count + 1, -1);
    scratch.free_loop_colors.assign(cx.loop_comp.size(), -1);
  }

  bool assign(int arc, int v) {
    if (!cx.color_allowed(cx.arc_comp[arc], v)) return false;
    color[arc] = v;
    trail.push_back(arc);
    // Propagate through every constraint the new arc touches; derived
    // assignments are queued through the same path.
    for (std::size_t qi = trail.size() - 1; qi < trail.size(); ++qi) {
      for (int ci : cx.constraints_by_arc[trail[qi]]) {
        const auto& con = cx.constraints[ci];
        const int over = color[con.over];
        if (over < 0) continue;  // never solve for an over-color
        const int in = color[con.u_in];
        const int out = color[con.u_out];
        if (in >= 0) {
          const int need = con.sign > 0 ? cx.q->op(in, over)
                                        : cx.q->inv_op(in, over);
          if (out >= 0) {
            if (out != need) return false;
          } else {
            if (!cx.color_allowed(cx.arc_comp[con.u_out], need)) return false;
            color[con.u_out] = need;
            trail.push_back(con.u_out);
          }
        } else if (out >= 0) {
          const int need = con.sign > 0 ? cx.q->inv_op(out, over)
                                        : cx.q->op(out, over);
          if (!cx.color_allowed(cx.arc_comp[con.u_in], need)) return false;
          color[con.u_in] = need;
          trail.push_back(con.u_in);
        }
      }
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail.size() > mark) {
      color[trail.back()] = -1;
      trail.pop_back();
    }
  }

  void run() { branch(1, true); }

  void branch(int from_edge, bool at_root) {
    int edge = 0;
    for (int e = from_edge; e <= cx.edge_count; ++e) {
      if (color[cx.arc_of[e]] < 0) {
        edge = e;
        break;
      }
    }
    if (edge == 0) {
      fill_loops(0, at_root);
      return;
    }
    const int arc = cx.arc_of[edge];
    for (int v : cx.comp_colors[cx.arc_comp[arc]]) {
      if (at_root &&
          !std::binary_search(first_values.begin(), first_values.end(), v))
        continue;
      const std::size_t mark = trail.size();
      if (assign(arc, v)) branch(edge + 1, false);
      undo_to(mark);
    }
  }

  void fill_loops(std::size_t loop, bool at_root) {
    if (loop == cx.loop_comp.size()) {
      for (int e = 1; e <= cx.edge_count; ++e)
        scratch.edge_color[e] = color[cx.arc_of[e]];
      emit(scratch);
      return;
    }
    for (int v : cx.comp_colors[cx.loop_comp[loop]]) {
      if (at_root && loop == 0 &&
          !std::binary_search(first_values.begin(), first_values.end(), v))
        continue;
      scratch.free_loop_colors[loop] = v;
      fill_loops(loop + 1, loop == 0 ? false : at_root);
    }
  }
};

// Domain of the root decision: the first branched edge when edges exist,
// otherwise the first crossingless component.
std::vector<int> root_domain(const SearchContext& cx) {
  if (cx.edge_count > 0) return cx.comp_colors[cx.arc_comp[cx.arc_of[1]]];
  if (!cx.loop_comp.empty()) return cx.comp_colors[cx.loop_comp[0]];
  return {};
}

void run_enumeration(const SearchContext& cx, int jobs,
                     const std::function<void(const ArcColoring&)>& visit) {
  const std::vector<int> domain = root_domain(cx);
  if (domain.empty()) return;  // no components to color

  const int workers =
      std::max(1, std::min<int>(jobs, static_cast<int>(domain.size())));
  if (workers == 1) {
    Dfs(cx, domain, visit).run();
    return;
  }

  // Partition the root domain round-robin; each worker streams its branches
  // in canonical order, so replaying buckets by ascending root value
  // reproduces the sequential order exactly.
  std::vector<std::vector<std::vector<ArcColoring>>> buckets(workers);
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) {
    buckets[w].resize((domain.size() - w + workers - 1) / workers);
    threads.emplace_back([&cx, &domain, &buckets, w, workers]() {
      for (std::size_t i = w; i < domain.size(); i += workers) {
        const std::vector<int> mine{domain[i]};
        std::function<void(const ArcColoring&)> collect =
            [&buckets, w, i, workers](const ArcColoring& a) {
              buckets[w][i / workers].push_back(a);
            };
        Dfs(cx, mine, collect).run();
      }
    });
  }
  for (std::thread& t : threads) t.join();
  for (std::size_t i = 0; i < domain.size(); ++i)
    for (const ArcColoring& a : buckets[i % workers][i / workers]) visit(a);
}

}  // namespace

ColoringCheck is_valid_coloring(const LinkDiagram& d, const FiniteQuandle& q,
                                const ArcColoring& a) {
  const int n = q.size();
  if (a.edge_color.size() != static_cast<std::size_t>(d.edge_count()) + 1 &&
      !(d.edge_count() == 0 && a.edge_color.empty()))
    throw RangeError("edge color array has size " +
                     std::to_string(a.edge_color.size()) + ", expected " +
                     std::to_string(d.edge_count() + 1));
  if (a.free_loop_colors.size() !=
      static_cast<std::size_t>(d.free_loop_count()))
    throw RangeError("free loop color count mismatch");
  for (int e = 1; e <= d.edge_count(); ++e)
    if (a.edge_color[e] < 0 || a.edge_color[e] >= n)
      throw RangeError("color of edge " + std::to_string(e) + " out of range");
  for (int v : a.free_loop_colors)
    if (v < 0 || v >= n) throw RangeError("free loop color out of range");

  for (int c = 0; c < d.crossing_count(); ++c) {
    const CrossingRecord& r = d.crossing(c);
    const int over = a.edge_color[r.e[1]];
    if (over != a.edge_color[r.e[3]]) return {false, c};
    const int in = a.edge_color[r.e[0]];
    const int out = a.edge_color[r.e[2]];
    const int need = d.sign(c) > 0 ? q.op(in, over) : q.inv_op(in, over);
    if (out != need) return {false, c};
  }
  return {true, std::nullopt};
}

void for_each_coloring(const LinkDiagram& d, const FiniteQuandle& q,
                       const std::function<void(const ArcColoring&)>& visit,
                       const EnumerationOptions& options) {
  const SearchContext cx = make_context(d, q, options.orbit_tuple);
  run_enumeration(cx, options.jobs, visit);
}

std::vector<ArcColoring> enumerate_colorings(const LinkDiagram& d,
                                             const FiniteQuandle& q,
                                             int jobs) {
  std::vector<ArcColoring> out;
  for_each_coloring(
      d, q, [&out](const ArcColoring& a) { out.push_back(a); },
      {.jobs = jobs});
  return out;
}

std::vector<ArcColoring> enumerate_in_orbits(const LinkDiagram& d,
                                             const FiniteQuandle& q,
                                             const std::vector<int>& orbit_tuple,
                                             int jobs) {
  std::vector<ArcColoring> out;
  for_each_coloring(
      d, q, [&out](const ArcColoring& a) { out.push_back(a); },
      {.jobs = jobs, .orbit_tuple = orbit_tuple});
  return out;
}

std::uint64_t count_colorings(const LinkDiagram& d, const FiniteQuandle& q,
                              int jobs) {
  std::uint64_t count = 0;
  for_each_coloring(
      d, q, [&count](const ArcColoring&) { ++count; }, {.jobs = jobs});
  return count;
}

std::string dump_coloring(const LinkDiagram& d, const ArcColoring& a) {
  std::ostringstream out;
  bool first = true;
  for (int e = 1; e <= d.edge_count(); ++e) {
    if (!first) out << ' ';
    first = false;
    out << e << '=' << a.edge_color[e];
  }
  for (int k = 0; k < d.free_loop_count(); ++k) {
    if (!first) out << ' ';
    first = false;
    out << "loop" << (d.traced_component_count() + k + 1) << '='
        << a.free_loop_colors[k];
  }
  return out.str();
}

}  // namespace qtlink
