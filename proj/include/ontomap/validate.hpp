#pragma once

#include <optional>
#include <string>
#include <utility>

#include "ontomap/entity.hpp"

namespace ontomap {

/// What kind of element an expression's entity set holds.
enum class ElementShape : std::uint8_t {
  Class,
  Individual,
  ObjectProperty,
  DataProperty,
  ObjectPair,
  DataPair,
  Restriction,
};

/// The element shape for a (ground kind, expression) row of the mapping
/// table, or nothing when the expression is not legal for that ground.
std::optional<ElementShape> element_shape(EntityKind ground, ExpressionKind expr);

inline bool expression_allowed(EntityKind ground, ExpressionKind expr) {
  return element_shape(ground, expr).has_value();
}

/// Entity kind a built descriptor is grounded on for an expression's elements.
/// ObjectLink/DataLink depend on the grounding choice and are not covered.
std::optional<EntityKind> element_entity_kind(ElementShape shape);

class ValidationResult {
 public:
  static ValidationResult ok() { return ValidationResult{}; }
  static ValidationResult fail(std::string why) {
    ValidationResult r;
    r.violation_ = std::move(why);
    return r;
  }

  bool is_ok() const { return !violation_.has_value(); }
  explicit operator bool() const { return is_ok(); }
  /// Empty when ok.
  const std::string& message() const {
    static const std::string kNone;
    return violation_ ? *violation_ : kNone;
  }

 private:
  std::optional<std::string> violation_;
};

std::optional<std::string> restriction_problem(const Restriction& r);

/// Shape check for an element placed in an entity set of `expr` over a ground
/// of kind `ground`. Wildcard pairs pass only when `allow_wildcards`.
ValidationResult check_element(EntityKind ground, ExpressionKind expr, const Element& element,
                               bool allow_wildcards);

/// Full check for a storable axiom: table row, element shape, no wildcards,
/// restriction and literal invariants, and the few per-row extras (no
/// reflexive Disjoint, data-property ranges as `only` over the ground).
ValidationResult validate_axiom(const Axiom& a);

}  // namespace ontomap
