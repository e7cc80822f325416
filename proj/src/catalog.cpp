#include "qtlink/catalog.hpp"

#include <algorithm>
#include <map>

namespace qtlink {

namespace {

struct RawEntry {
  const char* name;
  const char* kind;
  const char* text;
};

#include "catalog_data.inc"

CatalogKind kind_of(const std::string& s) {
  if (s == "quandle") return CatalogKind::quandle;
  if (s == "cochain") return CatalogKind::cochain;
  return CatalogKind::diagram;
}

const RawEntry* raw_find(CatalogKind kind, const std::string& name) {
  for (const RawEntry& e : kCatalogData)
    if (kind_of(e.kind) == kind && name == e.name) return &e;
  return nullptr;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const RawEntry& e : kCatalogData)
      out.push_back({e.name, kind_of(e.kind)});
    std::sort(out.begin(), out.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) {
                if (a.kind != b.kind) return a.kind < b.kind;
                return a.name < b.name;
              });
    return out;
  }();
  return entries;
}

const FiniteQuandle* find_quandle(const std::string& name) {
  static const std::map<std::string, FiniteQuandle> cache = [] {
    std::map<std::string, FiniteQuandle> out;
    for (const RawEntry& e : kCatalogData)
      if (kind_of(e.kind) == CatalogKind::quandle)
        out.emplace(e.name, parse_quandle(e.text));
    return out;
  }();
  const auto it = cache.find(name);
  return it == cache.end() ? nullptr : &it->second;
}

const Cochain2* find_cochain(const std::string& name) {
  static const std::map<std::string, Cochain2> cache = [] {
    std::map<std::string, Cochain2> out;
    for (const RawEntry& e : kCatalogData)
      if (kind_of(e.kind) == CatalogKind::cochain)
        out.emplace(e.name, parse_cochain(e.text));
    return out;
  }();
  const auto it = cache.find(name);
  return it == cache.end() ? nullptr : &it->second;
}

const LinkDiagram* find_diagram(const std::string& name) {
  static const std::map<std::string, LinkDiagram> cache = [] {
    std::map<std::string, LinkDiagram> out;
    for (const RawEntry& e : kCatalogData)
      if (kind_of(e.kind) == CatalogKind::diagram)
        out.emplace(e.name, parse_pd(e.text));
    return out;
  }();
  const auto it = cache.find(name);
  return it == cache.end() ? nullptr : &it->second;
}

namespace {

[[noreturn]] void not_found(const char* what, const std::string& name) {
  std::string available;
  for (const CatalogEntry& e : catalog_entries()) {
    const char* kind = e.kind == CatalogKind::quandle   ? "quandle"
                       : e.kind == CatalogKind::cochain ? "cochain"
                                                        : "diagram";
    if (kind == std::string(what)) {
      if (!available.empty()) available += ", ";
      available += e.name;
    }
  }
  throw NotFound("no catalog " + std::string(what) + " named '" + name +
                 "' (available: " + available + ")");
}

}  // namespace

const FiniteQuandle& get_quandle(const std::string& name) {
  if (const FiniteQuandle* q = find_quandle(name)) return *q;
  not_found("quandle", name);
}

const Cochain2& get_cochain(const std::string& name) {
  if (const Cochain2* c = find_cochain(name)) return *c;
  not_found("cochain", name);
}

const LinkDiagram& get_diagram(const std::string& name) {
  if (const LinkDiagram* d = find_diagram(name)) return *d;
  not_found("diagram", name);
}

}  // namespace qtlink
