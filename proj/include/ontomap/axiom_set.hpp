#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "ontomap/entity.hpp"

namespace ontomap {

/// Maps an axiom to the single stored form of the fact it states.
///
/// Sub(B, A) is stored as Super(A, B) and Type(i, C) as Instance(C, i), so the
/// two descriptor views of one subsumption or membership are one fact.
/// Equivalent, Disjoint and Inverse are symmetric and keep the smaller entity
/// as subject.
Axiom canonical_form(const Axiom& a);

/// Every (subject, expression, element) reading of a canonical axiom: the
/// axiom itself plus its mirror for Super/Instance and symmetric kinds.
std::vector<Axiom> view_forms(const Axiom& canonical);

/// A set of facts addressed through descriptor-style slices.
class AxiomSet {
 public:
  /// True when the fact was not present before.
  bool insert(const Axiom& a);
  bool erase(const Axiom& a);
  bool contains(const Axiom& a) const;

  /// All y with E_kind(subject, y) under any reading of the stored facts.
  const std::set<Element>& slice(const EntityRef& subject, ExpressionKind kind) const;

  const std::set<Axiom>& canonical() const { return facts_; }
  std::size_t size() const { return facts_.size(); }
  bool empty() const { return facts_.empty(); }

  bool operator==(const AxiomSet& other) const { return facts_ == other.facts_; }

 private:
  std::set<Axiom> facts_;
  std::map<std::pair<EntityRef, ExpressionKind>, std::set<Element>> views_;
};

}  // namespace ontomap
