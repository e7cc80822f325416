// Command-line front end: quandle checks, cocycle checks, coloring counts,
// cocycle invariants, cohomology, linking numbers, and crossing changes,
// over catalog names or files in the documented text formats.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtlink/catalog.hpp"
#include "qtlink/coloring.hpp"
#include "qtlink/homology.hpp"
#include "qtlink/invariant.hpp"
#include "qtlink/link_diagram.hpp"
#include "qtlink/quandle.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

struct UsageFailure {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageFailure{"cannot open '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Inputs resolve catalog-first, then as file paths.
qtlink::FiniteQuandle load_quandle(const std::string& arg) {
  if (const qtlink::FiniteQuandle* q = qtlink::find_quandle(arg)) return *q;
  return qtlink::parse_quandle(read_file(arg));
}

qtlink::Cochain2 load_cochain(const std::string& arg) {
  if (const qtlink::Cochain2* c = qtlink::find_cochain(arg)) return *c;
  return qtlink::parse_cochain(read_file(arg));
}

qtlink::LinkDiagram load_diagram(const std::string& arg) {
  if (const qtlink::LinkDiagram* d = qtlink::find_diagram(arg)) return *d;
  return qtlink::parse_pd(read_file(arg));
}

qtlink::InvariantMode parse_mode(const std::string& mode) {
  if (mode == "link-homotopy") return qtlink::InvariantMode::link_homotopy;
  if (mode == "ambient") return qtlink::InvariantMode::ambient;
  throw UsageFailure{"unknown mode '" + mode +
                     "' (expected link-homotopy or ambient)"};
}

qtlink::DegeneracyMode degeneracy_of(qtlink::InvariantMode mode) {
  return mode == qtlink::InvariantMode::link_homotopy
             ? qtlink::DegeneracyMode::quasi_trivial
             : qtlink::DegeneracyMode::standard;
}

// Each subcommand fills both renderings; --format picks one at the end.
struct Output {
  std::ostringstream text;
  json doc;
  int exit_code = 0;
};

std::string multiset_to_text(const qtlink::WeightMultiset& ms) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [value, count] : ms) {
    if (!first) out << ' ';
    first = false;
    out << value << " x" << count;
  }
  if (first) out << "empty";
  return out.str();
}

json multiset_to_json(const qtlink::WeightMultiset& ms) {
  json arr = json::array();
  for (const auto& [value, count] : ms)
    arr.push_back({{"value", value}, {"count", count}});
  return arr;
}

std::string tuple_to_text(const std::vector<int>& tuple) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out << ',';
    out << tuple[i] + 1;
  }
  out << ')';
  return out.str();
}

void render_invariant_report(const qtlink::InvariantReport& report,
                             const std::string& line_prefix, Output& out,
                             json& doc_components) {
  for (std::size_t i = 0; i < report.per_component.size(); ++i) {
    out.text << line_prefix << "component " << i + 1 << ": "
             << multiset_to_text(report.per_component[i]) << '\n';
    doc_components.push_back({{"component", i + 1},
                              {"weights", multiset_to_json(report.per_component[i])}});
  }
}

void cmd_check_quandle(const std::string& name, std::size_t inn_cap,
                       Output& out) {
  qtlink::FiniteQuandle q = [&] {
    try {
      return load_quandle(name);
    } catch (const qtlink::AxiomViolation& e) {
      out.text << "quandle: invalid\n"
               << "violation: " << e.axiom << " at (";
      for (std::size_t i = 0; i < e.witness.size(); ++i)
        out.text << (i ? ", " : "") << e.witness[i];
      out.text << ")\n";
      out.doc = {{"command", "check-quandle"},
                 {"valid", false},
                 {"axiom", e.axiom},
                 {"witness", e.witness}};
      out.exit_code = kExitValidation;
      throw;
    }
  }();
  if (out.exit_code != 0) return;

  const qtlink::QuasiTrivialityCheck qt = qtlink::is_quasi_trivial(q);
  const qtlink::OrbitPartition part = qtlink::orbits(q);
  const qtlink::InnerGroup inn = qtlink::inner_group(q, inn_cap);

  out.text << "quandle: ok\n";
  if (qt.quasi_trivial) {
    out.text << "quasi-trivial: yes\n";
  } else {
    out.text << "quasi-trivial: no (witness x=" << qt.witness->first
             << " y=" << qt.witness->second << ")\n";
  }
  out.text << "orbits: " << part.count() << '\n';
  for (int i = 0; i < part.count(); ++i) {
    out.text << "orbit " << i + 1 << ':';
    for (int x : part.orbit_members[i]) out.text << ' ' << q.label(x);
    out.text << '\n';
  }
  if (inn.truncated)
    out.text << "inn-order: >= " << inn.order() << " (truncated)\n";
  else
    out.text << "inn-order: " << inn.order() << '\n';

  json orbits_doc = json::array();
  for (int i = 0; i < part.count(); ++i) {
    json members = json::array();
    for (int x : part.orbit_members[i]) members.push_back(q.label(x));
    orbits_doc.push_back(members);
  }
  out.doc = {{"command", "check-quandle"},
             {"valid", true},
             {"size", q.size()},
             {"quasi_trivial", qt.quasi_trivial},
             {"orbits", orbits_doc},
             {"inn_order", inn.order()},
             {"inn_truncated", inn.truncated}};
  if (!qt.quasi_trivial)
    out.doc["witness"] = {qt.witness->first, qt.witness->second};
}

void cmd_check_cocycle(const std::string& quandle_arg,
                       const std::string& cochain_arg, const std::string& mode,
                       Output& out) {
  const qtlink::FiniteQuandle q = load_quandle(quandle_arg);
  const qtlink::Cochain2 theta = load_cochain(cochain_arg);
  const qtlink::DegeneracyMode dmode = degeneracy_of(parse_mode(mode));
  const qtlink::CocycleReport report = qtlink::check_cocycle(q, theta, dmode);

  out.text << "modulus: " << theta.modulus << '\n';
  json violations = json::array();
  auto line = [&](int condition, bool ok) {
    out.text << 'c' << condition << ": ";
    if (ok) {
      out.text << "ok\n";
      return;
    }
    for (const qtlink::CocycleViolation& v : report.violations) {
      if (v.condition != condition) continue;
      out.text << "violated at (";
      for (std::size_t i = 0; i < v.witness.size(); ++i)
        out.text << (i ? ", " : "") << v.witness[i];
      out.text << ")\n";
      violations.push_back({{"condition", condition}, {"witness", v.witness}});
    }
  };
  line(1, report.c1_ok);
  line(2, report.c2_ok);
  if (dmode == qtlink::DegeneracyMode::quasi_trivial)
    line(3, report.c3_ok);
  else
    out.text << "c3: skipped\n";
  out.text << "cocycle: " << (report.all_ok() ? "ok" : "invalid") << '\n';

  out.doc = {{"command", "check-cocycle"},
             {"modulus", theta.modulus},
             {"mode", mode},
             {"c1", report.c1_ok},
             {"c2", report.c2_ok},
             {"c3", dmode == qtlink::DegeneracyMode::quasi_trivial
                        ? json(report.c3_ok)
                        : json("skipped")},
             {"valid", report.all_ok()},
             {"violations", violations}};
  if (!report.all_ok()) out.exit_code = kExitValidation;
}

void cmd_colorings(const std::string& quandle_arg, const std::string& link_arg,
                   bool dump, int jobs, Output& out) {
  const qtlink::FiniteQuandle q = load_quandle(quandle_arg);
  const qtlink::LinkDiagram d = load_diagram(link_arg);

  if (dump) {
    json list = json::array();
    qtlink::for_each_coloring(
        d, q,
        [&](const qtlink::ArcColoring& a) {
          out.text << qtlink::dump_coloring(d, a) << '\n';
          json one = json::object();
          for (int e = 1; e <= d.edge_count(); ++e)
            one[std::to_string(e)] = a.edge_color[e];
          for (int k = 0; k < d.free_loop_count(); ++k)
            one["loop" + std::to_string(d.traced_component_count() + k + 1)] =
                a.free_loop_colors[k];
          list.push_back(one);
        },
        {.jobs = jobs});
    out.doc = {{"command", "colorings"},
               {"count", list.size()},
               {"colorings", list}};
  } else {
    const std::uint64_t count = qtlink::count_colorings(d, q, jobs);
    out.text << "colorings: " << count << '\n';
    out.doc = {{"command", "colorings"}, {"count", count}};
  }
}

void cmd_invariant(const std::string& quandle_arg,
                   const std::string& cochain_arg, const std::string& link_arg,
                   const std::string& mode, int jobs, Output& out) {
  const qtlink::FiniteQuandle q = load_quandle(quandle_arg);
  const qtlink::Cochain2 theta = load_cochain(cochain_arg);
  const qtlink::LinkDiagram d = load_diagram(link_arg);
  const qtlink::InvariantReport report =
      qtlink::cocycle_invariant(d, q, theta, parse_mode(mode), jobs);

  out.text << "modulus: " << report.modulus << '\n';
  out.text << "colorings: " << report.total_colorings << '\n';
  json components = json::array();
  render_invariant_report(report, "", out, components);
  out.doc = {{"command", "invariant"},
             {"mode", mode},
             {"modulus", report.modulus},
             {"colorings", report.total_colorings},
             {"components", components}};
}

void cmd_refined(const std::string& quandle_arg, const std::string& cochain_arg,
                 const std::string& link_arg, const std::string& mode, int jobs,
                 Output& out) {
  const qtlink::FiniteQuandle q = load_quandle(quandle_arg);
  const qtlink::Cochain2 theta = load_cochain(cochain_arg);
  const qtlink::LinkDiagram d = load_diagram(link_arg);
  const qtlink::RefinedReport refined =
      qtlink::refined_invariant(d, q, theta, parse_mode(mode), jobs);

  out.text << "modulus: " << refined.modulus << '\n';
  json slices = json::array();
  for (const auto& [tuple, slice] : refined.by_orbit_tuple) {
    out.text << "orbit-tuple " << tuple_to_text(tuple)
             << " colorings: " << slice.total_colorings << '\n';
    json components = json::array();
    render_invariant_report(
        slice, "orbit-tuple " + tuple_to_text(tuple) + " ", out, components);
    json tuple_doc = json::array();
    for (int t : tuple) tuple_doc.push_back(t + 1);
    slices.push_back({{"orbit_tuple", tuple_doc},
                      {"colorings", slice.total_colorings},
                      {"components", components}});
  }
  out.doc = {{"command", "refined"},
             {"mode", mode},
             {"modulus", refined.modulus},
             {"slices", slices}};
}

void cmd_cohomology(const std::string& quandle_arg, int modulus,
                    const std::string& mode,
                    const std::optional<std::string>& cochain_arg,
                    Output& out) {
  const qtlink::FiniteQuandle q = load_quandle(quandle_arg);
  const qtlink::DegeneracyMode dmode = degeneracy_of(parse_mode(mode));
  const qtlink::CohomologyResult h2 = qtlink::cohomology_h2(q, modulus, dmode);

  out.text << "h2:";
  if (h2.trivial()) {
    out.text << " 0";
  } else {
    for (std::size_t i = 0; i < h2.factors.size(); ++i) {
      if (i) out.text << " +";
      if (h2.factors[i] == 0)
        out.text << " Z";
      else
        out.text << " Z" << h2.factors[i];
    }
  }
  out.text << '\n';
  out.doc = {{"command", "cohomology"},
             {"mode", mode},
             {"modulus", modulus},
             {"factors", h2.factors}};

  if (cochain_arg) {
    const qtlink::Cochain2 theta = load_cochain(*cochain_arg);
    const std::optional<qtlink::Cochain1> f =
        qtlink::is_coboundary(q, theta, dmode);
    if (f) {
      out.text << "is-coboundary: yes\n";
      out.text << "f:";
      for (long long v : f->values) out.text << ' ' << v;
      out.text << '\n';
      out.text << "class: zero\n";
      out.doc["is_coboundary"] = true;
      out.doc["f"] = f->values;
      out.doc["class"] = "zero";
    } else {
      out.text << "is-coboundary: no\n";
      out.text << "class: nonzero\n";
      out.doc["is_coboundary"] = false;
      out.doc["class"] = "nonzero";
    }
  }
}

void cmd_linking(const std::string& link_arg, Output& out) {
  const qtlink::LinkDiagram d = load_diagram(link_arg);
  out.text << "components: " << d.component_count() << '\n';
  json pairs = json::array();
  for (int i = 0; i < d.component_count(); ++i) {
    for (int j = i + 1; j < d.component_count(); ++j) {
      const long long lk = d.linking_number(i, j);
      out.text << "lk(" << i + 1 << ',' << j + 1 << ") = " << lk << '\n';
      pairs.push_back({{"i", i + 1}, {"j", j + 1}, {"lk", lk}});
    }
  }
  out.doc = {{"command", "linking"},
             {"components", d.component_count()},
             {"pairs", pairs}};
}

void cmd_flip(const std::string& link_arg, int crossing, Output& out) {
  const qtlink::LinkDiagram d = load_diagram(link_arg);
  if (crossing < 1 || crossing > d.crossing_count())
    throw UsageFailure{"crossing must be between 1 and " +
                       std::to_string(d.crossing_count())};
  const qtlink::LinkDiagram::Flip flip = d.flip_crossing(crossing - 1);
  out.text << "# flip of crossing " << crossing << " (self-crossing: "
           << (flip.was_self_crossing ? "yes" : "no") << ")\n"
           << qtlink::format_pd(flip.diagram);
  out.doc = {{"command", "flip"},
             {"crossing", crossing},
             {"self_crossing", flip.was_self_crossing},
             {"link", qtlink::format_pd(flip.diagram)}};
}

void cmd_catalog(Output& out) {
  json entries = json::array();
  for (const qtlink::CatalogEntry& e : qtlink::catalog_entries()) {
    const char* kind = e.kind == qtlink::CatalogKind::quandle   ? "quandle"
                       : e.kind == qtlink::CatalogKind::cochain ? "cochain"
                                                                : "link";
    out.text << kind << ' ' << e.name << '\n';
    entries.push_back({{"kind", kind}, {"name", e.name}});
  }
  out.doc = {{"command", "catalog"}, {"entries", entries}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quandle cocycle invariants of oriented ordered links"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --format appear after the subcommand too

  std::string format = "text";
  app.add_option("--format", format, "output format: text or doc")
      ->check(CLI::IsMember({"text", "doc"}));

  std::string quandle_arg, cochain_arg, link_arg;
  std::string mode = "link-homotopy";
  int jobs = 1;
  int modulus = 2;
  int crossing = 1;
  std::size_t inn_cap = qtlink::kDefaultInnerGroupCap;
  bool dump = false;
  std::optional<std::string> opt_cochain;

  CLI::App* check_quandle =
      app.add_subcommand("check-quandle", "validate a quandle table");
  check_quandle->add_option("quandle", quandle_arg, "catalog name or file")
      ->required();
  check_quandle->add_option("--inn-cap", inn_cap,
                            "inner group materialization cap");

  CLI::App* check_cocycle =
      app.add_subcommand("check-cocycle", "check the 2-cocycle conditions");
  check_cocycle->add_option("--quandle", quandle_arg)->required();
  check_cocycle->add_option("--cocycle", cochain_arg)->required();
  check_cocycle->add_option("--mode", mode, "link-homotopy or ambient");

  CLI::App* colorings =
      app.add_subcommand("colorings", "count or list quandle colorings");
  colorings->add_option("--quandle", quandle_arg)->required();
  colorings->add_option("--link", link_arg)->required();
  colorings->add_flag("--dump", dump, "list colorings instead of counting");
  colorings->add_option("--jobs", jobs, "worker threads");

  CLI::App* invariant =
      app.add_subcommand("invariant", "cocycle invariant weight multisets");
  invariant->add_option("--quandle", quandle_arg)->required();
  invariant->add_option("--cocycle", cochain_arg)->required();
  invariant->add_option("--link", link_arg)->required();
  invariant->add_option("--mode", mode, "link-homotopy or ambient");
  invariant->add_option("--jobs", jobs, "worker threads");

  CLI::App* refined =
      app.add_subcommand("refined", "invariant split by orbit tuple");
  refined->add_option("--quandle", quandle_arg)->required();
  refined->add_option("--cocycle", cochain_arg)->required();
  refined->add_option("--link", link_arg)->required();
  refined->add_option("--mode", mode, "link-homotopy or ambient");
  refined->add_option("--jobs", jobs, "worker threads");

  CLI::App* cohomology =
      app.add_subcommand("cohomology", "second cohomology and coboundary test");
  cohomology->add_option("--quandle", quandle_arg)->required();
  cohomology->add_option("--mod", modulus, "coefficient modulus (0 for Z)")
      ->required();
  cohomology->add_option("--mode", mode, "link-homotopy or ambient");
  cohomology->add_option("--cocycle", opt_cochain,
                         "also test whether this cocycle is a coboundary");

  CLI::App* linking =
      app.add_subcommand("linking", "pairwise linking numbers");
  linking->add_option("--link", link_arg)->required();

  CLI::App* flip = app.add_subcommand("flip", "switch one crossing");
  flip->add_option("--link", link_arg)->required();
  flip->add_option("--crossing", crossing, "1-based crossing index")
      ->required();

  CLI::App* catalog = app.add_subcommand("catalog", "list built-in objects");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  Output out;
  try {
    if (check_quandle->parsed()) {
      try {
        cmd_check_quandle(quandle_arg, inn_cap, out);
      } catch (const qtlink::AxiomViolation&) {
        // Already rendered as a validation report.
      }
    } else if (check_cocycle->parsed()) {
      cmd_check_cocycle(quandle_arg, cochain_arg, mode, out);
    } else if (colorings->parsed()) {
      cmd_colorings(quandle_arg, link_arg, dump, jobs, out);
    } else if (invariant->parsed()) {
      cmd_invariant(quandle_arg, cochain_arg, link_arg, mode, jobs, out);
    } else if (refined->parsed()) {
      cmd_refined(quandle_arg, cochain_arg, link_arg, mode, jobs, out);
    } else if (cohomology->parsed()) {
      cmd_cohomology(quandle_arg, modulus, mode, opt_cochain, out);
    } else if (linking->parsed()) {
      cmd_linking(link_arg, out);
    } else if (flip->parsed()) {
      cmd_flip(link_arg, crossing, out);
    } else if (catalog->parsed()) {
      cmd_catalog(out);
    }
  } catch (const UsageFailure& e) {
    std::cerr << "usage error: " << e.message << '\n';
    return kExitUsage;
  } catch (const qtlink::NotFound& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qtlink::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  if (format == "doc")
    std::cout << out.doc.dump(2) << '\n';
  else
    std::cout << out.text.str();
  return out.exit_code;
}
