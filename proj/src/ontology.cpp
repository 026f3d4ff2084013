#include "ontomap/ontology.hpp"

#include "ontomap/errors.hpp"
#include "ontomap/validate.hpp"

namespace ontomap {

std::string_view to_string(ChangeReport r) {
  switch (r) {
    case ChangeReport::Added: return "added";
    case ChangeReport::AlreadyPresent: return "already present";
    case ChangeReport::Removed: return "removed";
    case ChangeReport::Absent: return "absent";
  }
  return "?";
}

PrefixMap standard_prefixes(std::string default_base) {
  return {
      {"", std::move(default_base)},
      {"owl", "http://www.w3.org/2002/07/owl#"},
      {"rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#"},
      {"rdfs", "http://www.w3.org/2000/01/rdf-schema#"},
      {"xsd", "http://www.w3.org/2001/XMLSchema#"},
  };
}

Ontology::Ontology(std::string name, PrefixMap prefixes)
    : name_(std::move(name)), prefixes_(std::move(prefixes)) {
  if (name_.empty()) throw Error("ontology name must not be empty");
  std::set<std::string> seen;
  for (auto& [key, base] : prefixes_) {
    if (!seen.insert(key).second) throw Error("prefix '" + key + ":' bound twice");
  }
  declarations_.insert(thing());
  declarations_.insert(nothing());
}

std::optional<std::string> Ontology::prefix_base(std::string_view prefix) const {
  for (auto& [key, base] : prefixes_)
    if (key == prefix) return base;
  return std::nullopt;
}

void Ontology::touch() {
  stale_ = true;
  ++revision_;
}

ChangeReport Ontology::declare(const EntityRef& e) {
  if (e.iri.name.empty()) throw ValidationError("cannot declare an entity with an empty IRI");
  if (!declarations_.insert(e).second) return ChangeReport::AlreadyPresent;
  touch();
  return ChangeReport::Added;
}

std::vector<EntityRef> Ontology::lookup(const Iri& iri) const {
  std::vector<EntityRef> found;
  for (auto& e : declarations_)
    if (e.iri == iri) found.push_back(e);
  return found;
}

std::vector<EntityRef> mentioned_entities(const Axiom& a) {
  std::vector<EntityRef> out{a.subject};
  struct Visitor {
    std::vector<EntityRef>& out;
    void operator()(const EntityRef& e) const { out.push_back(e); }
    void operator()(const ObjectPair& p) const {
      out.push_back(p.property);
      if (p.filler) out.push_back(*p.filler);
    }
    void operator()(const DataPair& p) const {
      out.push_back(p.property);
      if (p.value) out.push_back(p.value->datatype);
    }
    void operator()(const Restriction& r) const {
      std::visit(
          [this](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, BareClass> || std::is_same_v<T, ClassCardinality>) {
              out.push_back(x.cls);
            } else if constexpr (std::is_same_v<T, ObjectRestriction>) {
              out.push_back(x.property);
              out.push_back(x.filler);
            } else {
              out.push_back(x.property);
              out.push_back(x.datatype);
            }
          },
          r);
    }
  };
  std::visit(Visitor{out}, a.object);
  return out;
}

ChangeReport Ontology::forget(const EntityRef& e) {
  if (!declarations_.count(e)) return ChangeReport::Absent;
  if (e == thing() || e == nothing()) return ChangeReport::AlreadyPresent;
  for (auto& [p, c] : characteristics_)
    if (p == e) return ChangeReport::AlreadyPresent;
  for (auto& a : axioms_.canonical())
    for (auto& m : mentioned_entities(a))
      if (m == e) return ChangeReport::AlreadyPresent;
  declarations_.erase(e);
  touch();
  return ChangeReport::Removed;
}

namespace {

bool trivially_true(const Axiom& a) {
  auto* other = std::get_if<EntityRef>(&a.object);
  if (!other || *other != a.subject) return false;
  return a.expression == ExpressionKind::Super || a.expression == ExpressionKind::Sub ||
         a.expression == ExpressionKind::Equivalent;
}

}  // namespace

ChangeReport Ontology::assert_axiom(const Axiom& a) {
  if (auto v = validate_axiom(a); !v) throw ValidationError(v.message());
  bool declared = false;
  for (auto& e : mentioned_entities(a)) declared |= declarations_.insert(e).second;
  if (trivially_true(a)) {
    if (declared) touch();
    return ChangeReport::AlreadyPresent;
  }
  bool added = axioms_.insert(a);
  if (added || declared) touch();
  return added ? ChangeReport::Added : ChangeReport::AlreadyPresent;
}

ChangeReport Ontology::retract_axiom(const Axiom& a) {
  if (!axioms_.erase(a)) return ChangeReport::Absent;
  touch();
  return ChangeReport::Removed;
}

const std::set<Element>& Ontology::enumerate(const EntityRef& subject, ExpressionKind kind) const {
  if (!expression_allowed(subject.kind, kind)) {
    throw ValidationError(std::string(to_string(kind)) + " is not defined for a " +
                          std::string(to_string(subject.kind)) + " ground");
  }
  return axioms_.slice(subject, kind);
}

ChangeReport Ontology::set_characteristic(const EntityRef& property, Characteristic c,
                                          bool value) {
  if (property.kind != EntityKind::ObjectProperty)
    throw KindError("characteristics apply to object properties, not " + render(property));
  if (property.iri.name.empty()) throw ValidationError("empty property IRI");
  bool declared = declarations_.insert(property).second;
  ChangeReport report;
  if (value) {
    report = characteristics_.insert({property, c}).second ? ChangeReport::Added
                                                           : ChangeReport::AlreadyPresent;
  } else {
    report = characteristics_.erase({property, c}) ? ChangeReport::Removed : ChangeReport::Absent;
  }
  if (declared || report == ChangeReport::Added || report == ChangeReport::Removed) touch();
  return report;
}

ChangeReport Ontology::assert_identity(const IdentityPair& pair) {
  if (pair.a.kind != EntityKind::NamedIndividual || pair.b.kind != EntityKind::NamedIndividual)
    throw KindError("identity pairs relate named individuals");
  auto kind = pair.relation == IdentityRelation::Same ? ExpressionKind::Equivalent
                                                      : ExpressionKind::Disjoint;
  return assert_axiom({kind, pair.a, pair.b});
}

std::uint64_t Ontology::publish_snapshot(std::shared_ptr<const InferenceSnapshot> snapshot) {
  snapshot_ = std::move(snapshot);
  stale_ = false;
  return ++sync_count_;
}

bool same_content(const Ontology& a, const Ontology& b) {
  return a.declarations() == b.declarations() && a.axioms() == b.axioms() &&
         a.characteristics() == b.characteristics();
}

}  // namespace ontomap
