#pragma once

// Entities, entity-set elements and axioms shared by every layer.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace ontomap {

enum class EntityKind : std::uint8_t {
  Class,
  NamedIndividual,
  ObjectProperty,
  DataProperty,
  Datatype,
};

std::string_view to_string(EntityKind kind);

/// A prefixed name. The default prefix (written `:name`) has an empty prefix.
struct Iri {
  std::string prefix;
  std::string name;

  /// Splits `pfx:name`; a string without ':' lands in the default prefix.
  static Iri parse(std::string_view text);

  auto operator<=>(const Iri&) const = default;
};

std::string to_string(const Iri& iri);

struct EntityRef {
  EntityKind kind = EntityKind::Class;
  Iri iri;

  auto operator<=>(const EntityRef&) const = default;
};

EntityRef make_class(std::string_view iri);
EntityRef make_individual(std::string_view iri);
EntityRef make_object_property(std::string_view iri);
EntityRef make_data_property(std::string_view iri);
EntityRef make_datatype(std::string_view iri);

const EntityRef& thing();
const EntityRef& nothing();
bool is_builtin_class(const EntityRef& e);

const EntityRef& xsd_integer();
const EntityRef& xsd_decimal();
const EntityRef& xsd_boolean();
const EntityRef& xsd_string();
bool is_supported_datatype(const EntityRef& e);

struct Literal {
  std::string lexical;
  EntityRef datatype = make_datatype("xsd:string");

  /// Picks integer, decimal, boolean or string from the lexical shape.
  static Literal infer(std::string_view lexical);
  static Literal typed(std::string_view lexical, EntityRef datatype);

  auto operator<=>(const Literal&) const = default;
};

/// Empty when the lexical form parses under the datatype.
std::optional<std::string> literal_problem(const Literal& lit);

enum class Quantifier : std::uint8_t { Some, Only, Min, Max, Exact };

std::string_view to_string(Quantifier q);

struct Cardinality {
  Quantifier quantifier = Quantifier::Some;
  std::uint32_t n = 0;  // only meaningful for Min/Max/Exact

  static Cardinality some() { return {Quantifier::Some, 0}; }
  static Cardinality only() { return {Quantifier::Only, 0}; }
  static Cardinality min(std::uint32_t n) { return {Quantifier::Min, n}; }
  static Cardinality max(std::uint32_t n) { return {Quantifier::Max, n}; }
  static Cardinality exact(std::uint32_t n) { return {Quantifier::Exact, n}; }

  bool counted() const {
    return quantifier == Quantifier::Min || quantifier == Quantifier::Max ||
           quantifier == Quantifier::Exact;
  }

  auto operator<=>(const Cardinality&) const = default;
};

struct BareClass {
  EntityRef cls;
  auto operator<=>(const BareClass&) const = default;
};

struct ClassCardinality {
  Cardinality cardinality;
  EntityRef cls;
  auto operator<=>(const ClassCardinality&) const = default;
};

struct ObjectRestriction {
  Cardinality cardinality;
  EntityRef property;
  EntityRef filler;
  auto operator<=>(const ObjectRestriction&) const = default;
};

struct DataRestriction {
  Cardinality cardinality;
  EntityRef property;
  EntityRef datatype;
  auto operator<=>(const DataRestriction&) const = default;
};

using Restriction =
    std::variant<BareClass, ClassCardinality, ObjectRestriction, DataRestriction>;

/// `filler` unset is a wildcard pin, legal only in a descriptor's local set.
struct ObjectPair {
  EntityRef property;
  std::optional<EntityRef> filler;
  bool wildcard() const { return !filler.has_value(); }
  auto operator<=>(const ObjectPair&) const = default;
};

struct DataPair {
  EntityRef property;
  std::optional<Literal> value;
  bool wildcard() const { return !value.has_value(); }
  auto operator<=>(const DataPair&) const = default;
};

using Element = std::variant<EntityRef, ObjectPair, DataPair, Restriction>;

bool is_wildcard(const Element& e);
/// The property of an ObjectPair/DataPair element, if any.
std::optional<EntityRef> pair_property(const Element& e);

enum class ExpressionKind : std::uint8_t {
  Equivalent,
  Disjoint,
  Super,
  Sub,
  Instance,
  EquivalentRestriction,
  Type,
  ObjectLink,
  DataLink,
  Inverse,
  Domain,
  Range,
};

inline constexpr ExpressionKind kAllExpressions[] = {
    ExpressionKind::Equivalent, ExpressionKind::Disjoint,
    ExpressionKind::Super,      ExpressionKind::Sub,
    ExpressionKind::Instance,   ExpressionKind::EquivalentRestriction,
    ExpressionKind::Type,       ExpressionKind::ObjectLink,
    ExpressionKind::DataLink,   ExpressionKind::Inverse,
    ExpressionKind::Domain,     ExpressionKind::Range,
};

inline constexpr EntityKind kGroundKinds[] = {
    EntityKind::Class, EntityKind::NamedIndividual, EntityKind::ObjectProperty,
    EntityKind::DataProperty};

std::string_view to_string(ExpressionKind kind);
std::optional<ExpressionKind> parse_expression_kind(std::string_view text);

/// One statement E_k(x, y): `subject` is the ground position x.
struct Axiom {
  ExpressionKind expression = ExpressionKind::Super;
  EntityRef subject;
  Element object;

  auto operator<=>(const Axiom&) const = default;
};

std::string render(const EntityRef& e);
std::string render(const Literal& lit);
std::string render(const Restriction& r);
std::string render(const Element& e);
std::string render(const Axiom& a);

/// Local name only, e.g. `Corridor1`.
std::string display_name(const EntityRef& e);

}  // namespace ontomap
