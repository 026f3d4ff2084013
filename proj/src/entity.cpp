#include "ontomap/entity.hpp"

#include <cctype>
#include <string>

namespace ontomap {

std::string_view to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::Class: return "Class";
    case EntityKind::NamedIndividual: return "NamedIndividual";
    case EntityKind::ObjectProperty: return "ObjectProperty";
    case EntityKind::DataProperty: return "DataProperty";
    case EntityKind::Datatype: return "Datatype";
  }
  return "?";
}

Iri Iri::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) return Iri{"", std::string(text)};
  return Iri{std::string(text.substr(0, colon)), std::string(text.substr(colon + 1))};
}

std::string to_string(const Iri& iri) { return iri.prefix + ":" + iri.name; }

EntityRef make_class(std::string_view iri) { return {EntityKind::Class, Iri::parse(iri)}; }
EntityRef make_individual(std::string_view iri) {
  return {EntityKind::NamedIndividual, Iri::parse(iri)};
}
EntityRef make_object_property(std::string_view iri) {
  return {EntityKind::ObjectProperty, Iri::parse(iri)};
}
EntityRef make_data_property(std::string_view iri) {
  return {EntityKind::DataProperty, Iri::parse(iri)};
}
EntityRef make_datatype(std::string_view iri) { return {EntityKind::Datatype, Iri::parse(iri)}; }

const EntityRef& thing() {
  static const EntityRef e = make_class("owl:Thing");
  return e;
}
const EntityRef& nothing() {
  static const EntityRef e = make_class("owl:Nothing");
  return e;
}
bool is_builtin_class(const EntityRef& e) { return e == thing() || e == nothing(); }

const EntityRef& xsd_integer() {
  static const EntityRef e = make_datatype("xsd:integer");
  return e;
}
const EntityRef& xsd_decimal() {
  static const EntityRef e = make_datatype("xsd:decimal");
  return e;
}
const EntityRef& xsd_boolean() {
  static const EntityRef e = make_datatype("xsd:boolean");
  return e;
}
const EntityRef& xsd_string() {
  static const EntityRef e = make_datatype("xsd:string");
  return e;
}
bool is_supported_datatype(const EntityRef& e) {
  return e == xsd_integer() || e == xsd_decimal() || e == xsd_boolean() || e == xsd_string();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view strip_sign(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  return s;
}

bool integer_shape(std::string_view s) { return all_digits(strip_sign(s)); }

bool decimal_shape(std::string_view s) {
  s = strip_sign(s);
  auto dot = s.find('.');
  if (dot == std::string_view::npos) return all_digits(s);
  auto whole = s.substr(0, dot);
  auto frac = s.substr(dot + 1);
  if (whole.empty() && frac.empty()) return false;
  return (whole.empty() || all_digits(whole)) && (frac.empty() || all_digits(frac));
}

bool boolean_shape(std::string_view s) {
  return s == "true" || s == "false" || s == "1" || s == "0";
}

}  // namespace

Literal Literal::infer(std::string_view lexical) {
  if (integer_shape(lexical)) return {std::string(lexical), xsd_integer()};
  if (decimal_shape(lexical)) return {std::string(lexical), xsd_decimal()};
  if (lexical == "true" || lexical == "false") return {std::string(lexical), xsd_boolean()};
  return {std::string(lexical), xsd_string()};
}

Literal Literal::typed(std::string_view lexical, EntityRef datatype) {
  return {std::string(lexical), std::move(datatype)};
}

std::optional<std::string> literal_problem(const Literal& lit) {
  if (lit.datatype.kind != EntityKind::Datatype)
    return "literal datatype " + render(lit.datatype) + " is not a Datatype";
  if (lit.datatype == xsd_integer()) {
    if (!integer_shape(lit.lexical)) return "\"" + lit.lexical + "\" is not an xsd:integer";
  } else if (lit.datatype == xsd_decimal()) {
    if (!decimal_shape(lit.lexical)) return "\"" + lit.lexical + "\" is not an xsd:decimal";
  } else if (lit.datatype == xsd_boolean()) {
    if (!boolean_shape(lit.lexical)) return "\"" + lit.lexical + "\" is not an xsd:boolean";
  } else if (lit.datatype != xsd_string()) {
    return "unsupported datatype " + render(lit.datatype);
  }
  return std::nullopt;
}

std::string_view to_string(Quantifier q) {
  switch (q) {
    case Quantifier::Some: return "some";
    case Quantifier::Only: return "only";
    case Quantifier::Min: return "min";
    case Quantifier::Max: return "max";
    case Quantifier::Exact: return "exact";
  }
  return "?";
}

bool is_wildcard(const Element& e) {
  if (auto* o = std::get_if<ObjectPair>(&e)) return o->wildcard();
  if (auto* d = std::get_if<DataPair>(&e)) return d->wildcard();
  return false;
}

std::optional<EntityRef> pair_property(const Element& e) {
  if (auto* o = std::get_if<ObjectPair>(&e)) return o->property;
  if (auto* d = std::get_if<DataPair>(&e)) return d->property;
  return std::nullopt;
}

std::string_view to_string(ExpressionKind kind) {
  switch (kind) {
    case ExpressionKind::Equivalent: return "Equivalent";
    case ExpressionKind::Disjoint: return "Disjoint";
    case ExpressionKind::Super: return "Super";
    case ExpressionKind::Sub: return "Sub";
    case ExpressionKind::Instance: return "Instance";
    case ExpressionKind::EquivalentRestriction: return "EquivalentRestriction";
    case ExpressionKind::Type: return "Type";
    case ExpressionKind::ObjectLink: return "ObjectLink";
    case ExpressionKind::DataLink: return "DataLink";
    case ExpressionKind::Inverse: return "Inverse";
    case ExpressionKind::Domain: return "Domain";
    case ExpressionKind::Range: return "Range";
  }
  return "?";
}

std::optional<ExpressionKind> parse_expression_kind(std::string_view text) {
  for (auto k : kAllExpressions)
    if (to_string(k) == text) return k;
  return std::nullopt;
}

std::string render(const EntityRef& e) { return to_string(e.iri); }

std::string render(const Literal& lit) {
  std::string out = "\"";
  for (char c : lit.lexical) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += "\"^^";
  out += render(lit.datatype);
  return out;
}

namespace {

std::string cardinality_head(const Cardinality& c, std::string_view family) {
  std::string name(family);
  switch (c.quantifier) {
    case Quantifier::Some: return name + "SomeValuesFrom(";
    case Quantifier::Only: return name + "AllValuesFrom(";
    case Quantifier::Min: return name + "MinCardinality(" + std::to_string(c.n) + " ";
    case Quantifier::Max: return name + "MaxCardinality(" + std::to_string(c.n) + " ";
    case Quantifier::Exact: return name + "ExactCardinality(" + std::to_string(c.n) + " ";
  }
  return name + "?(";
}

}  // namespace

std::string render(const Restriction& r) {
  struct Visitor {
    std::string operator()(const BareClass& b) const { return render(b.cls); }
    std::string operator()(const ClassCardinality& c) const {
      std::string out = "ClassCardinality(";
      out += to_string(c.cardinality.quantifier);
      if (c.cardinality.counted()) out += " " + std::to_string(c.cardinality.n);
      return out + " " + render(c.cls) + ")";
    }
    std::string operator()(const ObjectRestriction& o) const {
      return cardinality_head(o.cardinality, "Object") + render(o.property) + " " +
             render(o.filler) + ")";
    }
    std::string operator()(const DataRestriction& d) const {
      return cardinality_head(d.cardinality, "Data") + render(d.property) + " " +
             render(d.datatype) + ")";
    }
  };
  return std::visit(Visitor{}, r);
}

std::string render(const Element& e) {
  struct Visitor {
    std::string operator()(const EntityRef& r) const { return render(r); }
    std::string operator()(const ObjectPair& p) const {
      return "(" + render(p.property) + " " + (p.filler ? render(*p.filler) : "*") + ")";
    }
    std::string operator()(const DataPair& p) const {
      return "(" + render(p.property) + " " + (p.value ? render(*p.value) : "*") + ")";
    }
    std::string operator()(const Restriction& r) const { return render(r); }
  };
  return std::visit(Visitor{}, e);
}

std::string render(const Axiom& a) {
  return render(a.subject) + " " + std::string(to_string(a.expression)) + " " + render(a.object);
}

std::string display_name(const EntityRef& e) { return e.iri.name; }

}  // namespace ontomap
