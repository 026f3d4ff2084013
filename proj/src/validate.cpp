#include "ontomap/validate.hpp"

#include <string>

namespace ontomap {

std::optional<ElementShape> element_shape(EntityKind ground, ExpressionKind expr) {
  using E = ExpressionKind;
  using S = ElementShape;
  switch (ground) {
    case EntityKind::Class:
      switch (expr) {
        case E::Equivalent:
        case E::Disjoint:
        case E::Super:
        case E::Sub: return S::Class;
        case E::Instance: return S::Individual;
        case E::EquivalentRestriction: return S::Restriction;
        default: return std::nullopt;
      }
    case EntityKind::NamedIndividual:
      switch (expr) {
        case E::Type: return S::Class;
        case E::Equivalent:
        case E::Disjoint: return S::Individual;
        case E::ObjectLink: return S::ObjectPair;
        case E::DataLink: return S::DataPair;
        default: return std::nullopt;
      }
    case EntityKind::ObjectProperty:
      switch (expr) {
        case E::Equivalent:
        case E::Disjoint:
        case E::Sub:
        case E::Super:
        case E::Inverse: return S::ObjectProperty;
        case E::Domain:
        case E::Range: return S::Restriction;
        default: return std::nullopt;
      }
    case EntityKind::DataProperty:
      switch (expr) {
        case E::Equivalent:
        case E::Disjoint:
        case E::Sub:
        case E::Super: return S::DataProperty;
        case E::Domain:
        case E::Range: return S::Restriction;
        default: return std::nullopt;
      }
    case EntityKind::Datatype: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<EntityKind> element_entity_kind(ElementShape shape) {
  switch (shape) {
    case ElementShape::Class: return EntityKind::Class;
    case ElementShape::Individual: return EntityKind::NamedIndividual;
    case ElementShape::ObjectProperty: return EntityKind::ObjectProperty;
    case ElementShape::DataProperty: return EntityKind::DataProperty;
    default: return std::nullopt;
  }
}

namespace {

std::string_view ground_name(EntityKind kind) {
  switch (kind) {
    case EntityKind::Class: return "Class";
    case EntityKind::NamedIndividual: return "NamedIndividual";
    case EntityKind::ObjectProperty: return "ObjectProperty";
    case EntityKind::DataProperty: return "DataProperty";
    case EntityKind::Datatype: return "Datatype";
  }
  return "?";
}

// The ground kinds accepting an expression, for the error message.
std::string accepted_grounds(ExpressionKind expr) {
  std::string out;
  for (auto g : kGroundKinds) {
    if (!expression_allowed(g, expr)) continue;
    if (!out.empty()) out += " or ";
    out += ground_name(g);
  }
  return out;
}

std::optional<std::string> cardinality_problem(const Cardinality& c) {
  if (c.counted() && c.n < 1)
    return std::string(to_string(c.quantifier)) + " cardinality must be at least 1";
  if (!c.counted() && c.n != 0)
    return std::string(to_string(c.quantifier)) + " takes no cardinality number";
  return std::nullopt;
}

std::optional<std::string> expect_kind(const EntityRef& e, EntityKind kind, std::string_view role) {
  if (e.kind == kind) return std::nullopt;
  return std::string(role) + " " + render(e) + " must be a " + std::string(ground_name(kind));
}

}  // namespace

std::optional<std::string> restriction_problem(const Restriction& r) {
  struct Visitor {
    std::optional<std::string> operator()(const BareClass& b) const {
      return expect_kind(b.cls, EntityKind::Class, "restriction class");
    }
    std::optional<std::string> operator()(const ClassCardinality& c) const {
      if (auto p = cardinality_problem(c.cardinality)) return p;
      return expect_kind(c.cls, EntityKind::Class, "restriction class");
    }
    std::optional<std::string> operator()(const ObjectRestriction& o) const {
      if (auto p = cardinality_problem(o.cardinality)) return p;
      if (auto p = expect_kind(o.property, EntityKind::ObjectProperty, "restriction property"))
        return p;
      return expect_kind(o.filler, EntityKind::Class, "restriction filler");
    }
    std::optional<std::string> operator()(const DataRestriction& d) const {
      if (auto p = cardinality_problem(d.cardinality)) return p;
      if (auto p = expect_kind(d.property, EntityKind::DataProperty, "restriction property"))
        return p;
      if (auto p = expect_kind(d.datatype, EntityKind::Datatype, "restriction filler")) return p;
      if (!is_supported_datatype(d.datatype))
        return "unsupported datatype " + render(d.datatype);
      return std::nullopt;
    }
  };
  return std::visit(Visitor{}, r);
}

ValidationResult check_element(EntityKind ground, ExpressionKind expr, const Element& element,
                               bool allow_wildcards) {
  auto shape = element_shape(ground, expr);
  if (!shape) {
    return ValidationResult::fail(std::string(to_string(expr)) + " requires " +
                                  accepted_grounds(expr) + " ground");
  }
  auto wrong = [&](std::string_view wanted) {
    return ValidationResult::fail(std::string(to_string(expr)) + " element must be " +
                                  std::string(wanted) + ", got " + render(element));
  };
  switch (*shape) {
    case ElementShape::Class:
    case ElementShape::Individual:
    case ElementShape::ObjectProperty:
    case ElementShape::DataProperty: {
      auto* e = std::get_if<EntityRef>(&element);
      auto kind = *element_entity_kind(*shape);
      if (!e || e->kind != kind) return wrong(ground_name(kind));
      return ValidationResult::ok();
    }
    case ElementShape::ObjectPair: {
      auto* p = std::get_if<ObjectPair>(&element);
      if (!p) return wrong("an (ObjectProperty, NamedIndividual) pair");
      if (p->property.kind != EntityKind::ObjectProperty)
        return wrong("an (ObjectProperty, NamedIndividual) pair");
      if (p->wildcard()) {
        if (!allow_wildcards) return ValidationResult::fail("wildcard not storable");
        return ValidationResult::ok();
      }
      if (p->filler->kind != EntityKind::NamedIndividual)
        return wrong("an (ObjectProperty, NamedIndividual) pair");
      return ValidationResult::ok();
    }
    case ElementShape::DataPair: {
      auto* p = std::get_if<DataPair>(&element);
      if (!p || p->property.kind != EntityKind::DataProperty)
        return wrong("a (DataProperty, Literal) pair");
      if (p->wildcard()) {
        if (!allow_wildcards) return ValidationResult::fail("wildcard not storable");
        return ValidationResult::ok();
      }
      if (auto problem = literal_problem(*p->value)) return ValidationResult::fail(*problem);
      return ValidationResult::ok();
    }
    case ElementShape::Restriction: {
      auto* r = std::get_if<Restriction>(&element);
      if (!r) return wrong("a restriction");
      if (auto problem = restriction_problem(*r)) return ValidationResult::fail(*problem);
      return ValidationResult::ok();
    }
  }
  return ValidationResult::ok();
}

ValidationResult validate_axiom(const Axiom& a) {
  if (a.subject.iri.name.empty()) return ValidationResult::fail("empty subject IRI");
  auto result = check_element(a.subject.kind, a.expression, a.object, false);
  if (!result) return result;

  if (auto* e = std::get_if<EntityRef>(&a.object)) {
    if (e->iri.name.empty()) return ValidationResult::fail("empty object IRI");
    if (a.expression == ExpressionKind::Disjoint && *e == a.subject)
      return ValidationResult::fail("Disjoint is irreflexive: " + render(a.subject));
  }
  if (a.subject.kind == EntityKind::DataProperty && a.expression == ExpressionKind::Range) {
    // Data ranges are datatypes, carried as `only` over the ground property.
    auto* r = std::get_if<Restriction>(&a.object);
    auto* d = r ? std::get_if<DataRestriction>(r) : nullptr;
    if (!d || d->cardinality.quantifier != Quantifier::Only || d->property != a.subject)
      return ValidationResult::fail("data property Range must be DataAllValuesFrom(" +
                                    render(a.subject) + " <datatype>)");
  }
  return ValidationResult::ok();
}

}  // namespace ontomap
