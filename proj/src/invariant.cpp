#include "qtlink/invariant.hpp"

#include <algorithm>
#include <string>

namespace qtlink {

namespace {

long long reduce(long long v, int m) {
  if (m == 0) return v;
  const long long r = v % m;
  return r < 0 ? r + m : r;
}

// Weight accumulation without the validity re-check, for enumerated streams.
void accumulate_weights(const LinkDiagram& d, const FiniteQuandle& q,
                        const Cochain2& theta, const ArcColoring& a,
                        std::vector<long long>& w) {
  std::fill(w.begin(), w.end(), 0);
  for (int c = 0; c < d.crossing_count(); ++c) {
    const CrossingRecord& r = d.crossing(c);
    const int over = a.edge_color[r.e[1]];
    if (d.sign(c) > 0)
      w[d.component_of(r.e[0])] += theta.at(a.edge_color[r.e[0]], over);
    else
      w[d.component_of(r.e[0])] -= theta.at(a.edge_color[r.e[2]], over);
  }
  for (long long& v : w) v = reduce(v, theta.modulus);
}

void check_inputs(const LinkDiagram& d, const FiniteQuandle& q,
                  const Cochain2& theta, InvariantMode mode) {
  (void)d;
  if (mode == InvariantMode::link_homotopy) {
    const QuasiTrivialityCheck qt = is_quasi_trivial(q);
    if (!qt.quasi_trivial)
      throw ModeError(
          "link-homotopy invariant needs a quasi-trivial quandle (witness x=" +
          std::to_string(qt.witness->first) +
          " y=" + std::to_string(qt.witness->second) + ")");
    const CocycleReport report =
        check_cocycle(q, theta, DegeneracyMode::quasi_trivial);
    if (!report.all_ok()) {
      const CocycleViolation& v = report.violations.front();
      throw ModeError(
          "link-homotopy invariant needs a quasi-trivial 2-cocycle "
          "(fails C" +
          std::to_string(v.condition) + ")");
    }
  } else {
    const CocycleReport report =
        check_cocycle(q, theta, DegeneracyMode::standard);
    if (!report.all_ok()) {
      const CocycleViolation& v = report.violations.front();
      throw NotACocycle("cochain fails cocycle condition C" +
                        std::to_string(v.condition));
    }
  }
}

InvariantReport run_invariant(const LinkDiagram& d, const FiniteQuandle& q,
                              const Cochain2& theta, int jobs,
                              const std::optional<std::vector<int>>& orbit_tuple) {
  InvariantReport report;
  report.modulus = theta.modulus;
  report.per_component.resize(d.component_count());

  std::vector<long long> w(d.component_count());
  for_each_coloring(
      d, q,
      [&](const ArcColoring& a) {
        accumulate_weights(d, q, theta, a, w);
        for (int i = 0; i < d.component_count(); ++i)
          ++report.per_component[i][w[i]];
        ++report.total_colorings;
      },
      {.jobs = jobs, .orbit_tuple = orbit_tuple});
  return report;
}

}  // namespace

WeightVector weights(const LinkDiagram& d, const FiniteQuandle& q,
                     const Cochain2& theta, const ArcColoring& a) {
  if (theta.n != q.size())
    throw ShapeMismatch("cochain is on " + std::to_string(theta.n) +
                        " elements, quandle has " + std::to_string(q.size()));
  const ColoringCheck check = is_valid_coloring(d, q, a);
  if (!check.valid)
    throw InvalidColoring("coloring fails at crossing " +
                          std::to_string(*check.violating_crossing));
  WeightVector wv;
  wv.per_component.resize(d.component_count());
  accumulate_weights(d, q, theta, a, wv.per_component);
  return wv;
}

InvariantReport cocycle_invariant(const LinkDiagram& d, const FiniteQuandle& q,
                                  const Cochain2& theta, InvariantMode mode,
                                  int jobs) {
  check_inputs(d, q, theta, mode);
  return run_invariant(d, q, theta, jobs, std::nullopt);
}

RefinedReport refined_invariant(const LinkDiagram& d, const FiniteQuandle& q,
                                const Cochain2& theta, InvariantMode mode,
                                int jobs) {
  check_inputs(d, q, theta, mode);

  RefinedReport refined;
  refined.modulus = theta.modulus;
  const int comps = d.component_count();
  const int norbits = orbits(q).count();

  std::vector<int> tuple(comps, 0);
  while (true) {
    InvariantReport slice = run_invariant(d, q, theta, jobs, tuple);
    if (slice.total_colorings > 0)
      refined.by_orbit_tuple.emplace_back(tuple, std::move(slice));
    int i = comps - 1;
    while (i >= 0 && tuple[i] == norbits - 1) tuple[i--] = 0;
    if (i < 0) break;
    ++tuple[i];
  }
  return refined;
}

bool compare_reports(const InvariantReport& a, const InvariantReport& b) {
  if (a.modulus != b.modulus)
    throw ShapeMismatch("reports have different moduli");
  if (a.per_component.size() != b.per_component.size())
    throw ShapeMismatch("reports have different component counts");
  return a.per_component == b.per_component &&
         a.total_colorings == b.total_colorings;
}

InvariantReport refined_union(const RefinedReport& r) {
  InvariantReport out;
  out.modulus = r.modulus;
  for (const auto& [tuple, slice] : r.by_orbit_tuple) {
    if (out.per_component.empty())
      out.per_component.resize(slice.per_component.size());
    if (slice.per_component.size() != out.per_component.size())
      throw ShapeMismatch("refined slices disagree on component count");
    for (std::size_t i = 0; i < slice.per_component.size(); ++i)
      for (const auto& [value, count] : slice.per_component[i])
        out.per_component[i][value] += count;
    out.total_colorings += slice.total_colorings;
  }
  return out;
}

}  // namespace qtlink
