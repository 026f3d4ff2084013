#pragma once

// A subset of OWL 2 functional-style syntax:
//
//   Prefix(:=<http://example.org/onto#>)
//   Ontology(<http://example.org/onto>
//     Declaration(Class(:Room))
//     SubClassOf(:Room :Location)
//     EquivalentClasses(:Corridor ObjectIntersectionOf(:Location
//                        ObjectMinCardinality(2 :hasDoor :Door)))
//     DataPropertyAssertion(:hasTemperature :Room1 "24"^^xsd:integer)
//   )
//
// Class expressions are flat: named classes and single restrictions with a
// named filler, optionally inside one ObjectIntersectionOf. A qualified
// cardinality on classes is written ClassCardinality(min 2 :C). `#` starts a
// comment that runs to the end of the line.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ontomap/ontology.hpp"

namespace ontomap {

struct ParsedDocument {
  Ontology ontology;
  std::size_t statements = 0;  // inside Ontology(...), declarations included
};

/// Throws ParseError carrying line and column.
ParsedDocument parse_document(std::string_view text);

/// Canonical text: prefixes, then one statement per line grouped by form and
/// sorted. Restriction conjuncts of a class share one EquivalentClasses line.
std::string serialize(const Ontology& onto);

/// One asserted item as a single statement, e.g. `SubClassOf(:A :B)`.
std::string statement(const Axiom& a);
std::string declaration_statement(const EntityRef& e);
std::string characteristic_statement(const EntityRef& property, Characteristic c);

/// Every asserted item of `onto` as single statements, in serialization order.
std::vector<std::string> statement_lines(const Ontology& onto);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace ontomap
