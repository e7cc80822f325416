#pragma once

#include <string>
#include <vector>

#include "qtlink/homology.hpp"
#include "qtlink/link_diagram.hpp"
#include "qtlink/quandle.hpp"

namespace qtlink {

// Named objects compiled into the library.  Payloads are stored as the same
// text the file formats use and go through the public parsers on first
// access, so a catalog entry and the equivalent user file are
// indistinguishable.
enum class CatalogKind { quandle, cochain, diagram };

struct CatalogEntry {
  std::string name;
  CatalogKind kind;
};

// All entries, sorted by kind then name.
const std::vector<CatalogEntry>& catalog_entries();

// Throwing accessors (NotFound) and their nullable counterparts.
const FiniteQuandle& get_quandle(const std::string& name);
const Cochain2& get_cochain(const std::string& name);
const LinkDiagram& get_diagram(const std::string& name);

const FiniteQuandle* find_quandle(const std::string& name);
const Cochain2* find_cochain(const std::string& name);
const LinkDiagram* find_diagram(const std::string& name);

}  // namespace qtlink
