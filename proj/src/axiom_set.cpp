#include "ontomap/axiom_set.hpp"

namespace ontomap {

namespace {

bool symmetric(ExpressionKind k) {
  return k == ExpressionKind::Equivalent || k == ExpressionKind::Disjoint ||
         k == ExpressionKind::Inverse;
}

}  // namespace

Axiom canonical_form(const Axiom& a) {
  auto* other = std::get_if<EntityRef>(&a.object);
  if (!other) return a;
  switch (a.expression) {
    case ExpressionKind::Sub: return {ExpressionKind::Super, *other, a.subject};
    case ExpressionKind::Type: return {ExpressionKind::Instance, *other, a.subject};
    default: break;
  }
  if (symmetric(a.expression) && *other < a.subject)
    return {a.expression, *other, a.subject};
  return a;
}

std::vector<Axiom> view_forms(const Axiom& canonical) {
  std::vector<Axiom> forms{canonical};
  auto* other = std::get_if<EntityRef>(&canonical.object);
  if (!other) return forms;
  switch (canonical.expression) {
    case ExpressionKind::Super:
      forms.push_back({ExpressionKind::Sub, *other, canonical.subject});
      break;
    case ExpressionKind::Instance:
      forms.push_back({ExpressionKind::Type, *other, canonical.subject});
      break;
    default:
      if (symmetric(canonical.expression) && *other != canonical.subject)
        forms.push_back({canonical.expression, *other, canonical.subject});
      break;
  }
  return forms;
}

bool AxiomSet::insert(const Axiom& a) {
  auto c = canonical_form(a);
  if (!facts_.insert(c).second) return false;
  for (auto& f : view_forms(c)) views_[{f.subject, f.expression}].insert(f.object);
  return true;
}

bool AxiomSet::erase(const Axiom& a) {
  auto c = canonical_form(a);
  if (facts_.erase(c) == 0) return false;
  for (auto& f : view_forms(c)) {
    auto it = views_.find({f.subject, f.expression});
    if (it == views_.end()) continue;
    it->second.erase(f.object);
    if (it->second.empty()) views_.erase(it);
  }
  return true;
}

bool AxiomSet::contains(const Axiom& a) const { return facts_.count(canonical_form(a)) != 0; }

const std::set<Element>& AxiomSet::slice(const EntityRef& subject, ExpressionKind kind) const {
  static const std::set<Element> kEmpty;
  auto it = views_.find({subject, kind});
  return it == views_.end() ? kEmpty : it->second;
}

}  // namespace ontomap
