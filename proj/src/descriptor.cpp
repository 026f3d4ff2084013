#include "ontomap/descriptor.hpp"

#include <algorithm>

#include "ontomap/errors.hpp"
#include "ontomap/reasoner.hpp"

namespace ontomap {

bool DescriptorProfile::has(ExpressionKind k) const {
  return std::find(expressions.begin(), expressions.end(), k) != expressions.end();
}

std::optional<EntityKind> built_kind(EntityKind ground, ExpressionKind kind,
                                     LinkGrounding grounding) {
  auto shape = element_shape(ground, kind);
  if (!shape) return std::nullopt;
  switch (*shape) {
    case ElementShape::ObjectPair:
      return grounding == LinkGrounding::Filler ? EntityKind::NamedIndividual
                                                : EntityKind::ObjectProperty;
    case ElementShape::DataPair:
      if (grounding == LinkGrounding::Filler) return std::nullopt;
      return EntityKind::DataProperty;
    default: return element_entity_kind(*shape);
  }
}

ValidationResult check_profile(const DescriptorProfile& p) {
  if (p.name.empty()) return ValidationResult::fail("profile without a name");
  if (p.expressions.empty()) return ValidationResult::fail(p.name + ": no expressions");
  std::set<ExpressionKind> seen;
  for (auto k : p.expressions) {
    if (!seen.insert(k).second)
      return ValidationResult::fail(p.name + ": " + std::string(to_string(k)) + " listed twice");
    if (!expression_allowed(p.ground_kind, k))
      return ValidationResult::fail(p.name + ": " + std::string(to_string(k)) +
                                    " is not defined for a " +
                                    std::string(to_string(p.ground_kind)) + " ground");
  }
  for (auto& [k, target] : p.build_targets) {
    if (!seen.count(k))
      return ValidationResult::fail(p.name + ": build target for undeclared " +
                                    std::string(to_string(k)));
    if (!built_kind(p.ground_kind, k, target.grounding))
      return ValidationResult::fail(p.name + ": " + std::string(to_string(k)) +
                                    " elements cannot ground a descriptor");
  }
  return ValidationResult::ok();
}

void ProfileRegistry::add(DescriptorProfile p) {
  if (auto v = check_profile(p); !v) throw ValidationError(v.message());
  if (profiles_.count(p.name)) throw ValidationError("profile " + p.name + " registered twice");
  for (auto& [k, target] : p.build_targets) {
    auto want = *built_kind(p.ground_kind, k, target.grounding);
    const DescriptorProfile* other = target.profile == p.name ? &p : find(target.profile);
    if (other && other->ground_kind != want)
      throw ValidationError(p.name + ": build target " + target.profile + " is grounded on " +
                            std::string(to_string(other->ground_kind)) + ", not " +
                            std::string(to_string(want)));
  }
  profiles_.emplace(p.name, std::move(p));
}

const DescriptorProfile* ProfileRegistry::find(std::string_view name) const {
  auto it = profiles_.find(name);
  return it == profiles_.end() ? nullptr : &it->second;
}

const DescriptorProfile& ProfileRegistry::at(std::string_view name) const {
  if (auto* p = find(name)) return *p;
  throw KindError("unknown descriptor profile " + std::string(name));
}

std::vector<std::string> ProfileRegistry::names() const {
  std::vector<std::string> out;
  for (auto& [name, p] : profiles_) out.push_back(name);
  return out;
}

const ProfileRegistry& ProfileRegistry::builtin() {
  static const ProfileRegistry registry = [] {
    using E = ExpressionKind;
    using G = LinkGrounding;
    ProfileRegistry r;
    r.add({"FullClass",
           EntityKind::Class,
           {E::Equivalent, E::Disjoint, E::Super, E::Sub, E::Instance, E::EquivalentRestriction},
           {{E::Equivalent, {"FullClass"}},
            {E::Disjoint, {"FullClass"}},
            {E::Super, {"FullClass"}},
            {E::Sub, {"FullClass"}},
            {E::Instance, {"FullIndividual"}}}});
    r.add({"FullIndividual",
           EntityKind::NamedIndividual,
           {E::Type, E::Equivalent, E::Disjoint, E::ObjectLink, E::DataLink},
           {{E::Type, {"FullClass"}},
            {E::Equivalent, {"FullIndividual"}},
            {E::Disjoint, {"FullIndividual"}},
            {E::ObjectLink, {"FullIndividual", G::Filler}},
            {E::DataLink, {"FullDataProperty", G::Property}}}});
    r.add({"FullObjectProperty",
           EntityKind::ObjectProperty,
           {E::Equivalent, E::Disjoint, E::Super, E::Sub, E::Inverse, E::Domain, E::Range},
           {{E::Equivalent, {"FullObjectProperty"}},
            {E::Disjoint, {"FullObjectProperty"}},
            {E::Super, {"FullObjectProperty"}},
            {E::Sub, {"FullObjectProperty"}},
            {E::Inverse, {"FullObjectProperty"}}}});
    r.add({"FullDataProperty",
           EntityKind::DataProperty,
           {E::Equivalent, E::Disjoint, E::Super, E::Sub, E::Domain, E::Range},
           {{E::Equivalent, {"FullDataProperty"}},
            {E::Disjoint, {"FullDataProperty"}},
            {E::Super, {"FullDataProperty"}},
            {E::Sub, {"FullDataProperty"}}}});

    r.add({"LinkIndividual",
           EntityKind::NamedIndividual,
           {E::ObjectLink, E::DataLink},
           {{E::ObjectLink, {"LinkIndividual", G::Filler}},
            {E::DataLink, {"FullDataProperty", G::Property}}}});
    r.add({"HierarchyClass",
           EntityKind::Class,
           {E::Sub, E::Super},
           {{E::Sub, {"HierarchyClass"}}, {E::Super, {"HierarchyClass"}}}});
    r.add({"TypeIndividual", EntityKind::NamedIndividual, {E::Type}, {{E::Type, {"HierarchyClass"}}}});
    r.add({"SubInstanceClass",
           EntityKind::Class,
           {E::Sub, E::Instance},
           {{E::Sub, {"SubInstanceClass"}}, {E::Instance, {"TypeIndividual"}}}});
    r.add({"DisjointClass", EntityKind::Class, {E::Disjoint}, {{E::Disjoint, {"DisjointClass"}}}});
    r.add({"DomainRangeObjectProperty", EntityKind::ObjectProperty, {E::Domain, E::Range}, {}});
    return r;
  }();
  return registry;
}

std::string_view to_string(IntentChange c) {
  switch (c) {
    case IntentChange::Added: return "added";
    case IntentChange::Removed: return "removed";
    case IntentChange::Skipped: return "skipped";
  }
  return "?";
}

std::string_view to_string(IntentLocus l) {
  return l == IntentLocus::DescriptorState ? "descriptor" : "ontology";
}

std::string render(const MappingIntent& intent) {
  const char sign = intent.change == IntentChange::Added     ? '+'
                    : intent.change == IntentChange::Removed ? '-'
                                                             : '~';
  return std::string(to_string(intent.locus)) + " " + sign +
         render(Axiom{intent.expression, intent.ground, intent.element});
}

EntityRef resolve_identifier(std::string_view text, EntityKind kind) {
  return EntityRef{kind, Iri::parse(text)};
}

Descriptor::Descriptor(DescriptorProfile profile, EntityRef ground, Ontology& onto)
    : profile_(std::move(profile)), ground_(std::move(ground)), onto_(&onto) {
  if (auto v = check_profile(profile_); !v) throw ValidationError(v.message());
  if (ground_.kind != profile_.ground_kind) {
    throw KindError(profile_.name + " is grounded on a " +
                    std::string(to_string(profile_.ground_kind)) + ", not on " + render(ground_));
  }
  if (ground_.iri.name.empty()) throw ValidationError("descriptor ground with an empty IRI");
  for (auto k : profile_.expressions) sets_[k];
}

Descriptor::Descriptor(DescriptorProfile profile, std::string_view ground, Ontology& onto)
    : Descriptor(profile, resolve_identifier(ground, profile.ground_kind), onto) {}

const std::set<Element>& Descriptor::entities(ExpressionKind kind) const {
  auto it = sets_.find(kind);
  if (it == sets_.end())
    throw KindError(profile_.name + " has no " + std::string(to_string(kind)) + " set");
  return it->second;
}

std::set<Element>& Descriptor::local(ExpressionKind kind) {
  return const_cast<std::set<Element>&>(std::as_const(*this).entities(kind));
}

bool Descriptor::add(ExpressionKind kind, Element element) {
  auto& set = local(kind);
  if (auto v = check_element(ground_.kind, kind, element, true); !v)
    throw ValidationError(v.message());
  if (!set.insert(std::move(element)).second) return false;
  ++revision_;
  return true;
}

bool Descriptor::remove(ExpressionKind kind, const Element& element) {
  if (!local(kind).erase(element)) return false;
  ++revision_;
  return true;
}

std::size_t Descriptor::remove_property(ExpressionKind kind, const EntityRef& property) {
  auto& set = local(kind);
  std::size_t n = 0;
  for (auto it = set.begin(); it != set.end();) {
    if (pair_property(*it) == property) {
      it = set.erase(it);
      ++n;
    } else {
      ++it;
    }
  }
  if (n) ++revision_;
  return n;
}

std::vector<EntityRef> Descriptor::object_fillers(const EntityRef& property) const {
  std::vector<EntityRef> out;
  for (auto& e : entities(ExpressionKind::ObjectLink))
    if (auto* p = std::get_if<ObjectPair>(&e); p && p->property == property && p->filler)
      out.push_back(*p->filler);
  return out;
}

QueryResult Descriptor::query(ExpressionKind kind) const {
  entities(kind);
  if (onto_->snapshot()) return {entailed_entity_set(*onto_, ground_, kind), true};
  return {onto_->enumerate(ground_, kind), false};
}

MappingIntent Descriptor::apply_local(ExpressionKind kind, const Element& e, IntentChange change) {
  auto& set = local(kind);
  if (change == IntentChange::Added)
    set.insert(e);
  else
    set.erase(e);
  ++revision_;
  return {ground_, kind, e, change, IntentLocus::DescriptorState, revision_, {}};
}

namespace {

// Elements in `a` but not `b`, tagged, merged in element order.
void diff_into(const std::set<Element>& before, const std::set<Element>& after,
               std::vector<std::pair<Element, IntentChange>>& out) {
  for (auto& e : before)
    if (!after.count(e)) out.push_back({e, IntentChange::Removed});
  for (auto& e : after)
    if (!before.count(e)) out.push_back({e, IntentChange::Added});
  std::sort(out.begin(), out.end());
}

}  // namespace

std::vector<MappingIntent> Descriptor::read_axioms() {
  std::vector<MappingIntent> intents;
  for (auto kind : profile_.expressions) {
    const auto& current = entities(kind);
    std::set<EntityRef> pinned;
    for (auto& e : current)
      if (is_wildcard(e)) pinned.insert(*pair_property(e));

    auto fresh = query(kind).elements;
    std::set<Element> target;
    if (pinned.empty()) {
      target = std::move(fresh);
    } else {
      for (auto& e : current)
        if (!pinned.count(*pair_property(e))) target.insert(e);
      for (auto& e : fresh)
        if (pinned.count(*pair_property(e))) target.insert(e);
    }

    std::vector<std::pair<Element, IntentChange>> changes;
    diff_into(current, target, changes);
    for (auto& [e, change] : changes) intents.push_back(apply_local(kind, e, change));
  }
  return intents;
}

std::vector<MappingIntent> Descriptor::write_axioms() {
  // Entailments only excuse a missing assertion while the snapshot still
  // describes the current content.
  const bool fresh = onto_->snapshot() && !onto_->stale();

  struct Step {
    ExpressionKind kind;
    Element element;
    IntentChange change;
  };
  std::vector<Step> plan;
  for (auto kind : profile_.expressions) {
    const auto& want = entities(kind);
    const auto& asserted = onto_->enumerate(ground_, kind);
    const std::set<Element> empty;
    const auto& entailed = fresh ? entailed_entity_set(*onto_, ground_, kind) : empty;

    std::vector<Step> steps;
    for (auto& e : want) {
      if (is_wildcard(e)) {
        steps.push_back({kind, e, IntentChange::Skipped});
      } else if (!asserted.count(e) && !entailed.count(e)) {
        if (auto v = validate_axiom({kind, ground_, e}); !v) throw ValidationError(v.message());
        steps.push_back({kind, e, IntentChange::Added});
      }
    }
    for (auto& e : asserted)
      if (!want.count(e)) steps.push_back({kind, e, IntentChange::Removed});
    std::sort(steps.begin(), steps.end(), [](const Step& a, const Step& b) {
      return a.element < b.element;
    });
    plan.insert(plan.end(), steps.begin(), steps.end());
  }

  std::vector<MappingIntent> intents;
  try {
    for (auto& step : plan) {
      Axiom a{step.kind, ground_, step.element};
      MappingIntent intent{ground_, step.kind, step.element, step.change,
                           IntentLocus::OntologyState, 0, {}};
      if (step.change == IntentChange::Added) {
        for (auto& e : mentioned_entities(a))
          if (!onto_->is_declared(e) &&
              std::find(intent.declared.begin(), intent.declared.end(), e) == intent.declared.end())
            intent.declared.push_back(e);
        onto_->assert_axiom(a);
      } else if (step.change == IntentChange::Removed) {
        onto_->retract_axiom(a);
      }
      intent.sequence = onto_->revision();
      intents.push_back(std::move(intent));
    }
  } catch (...) {
    undo(intents);
    throw;
  }
  return intents;
}

std::vector<Descriptor> Descriptor::build(ExpressionKind kind,
                                          const ProfileRegistry& registry) const {
  const auto& set = entities(kind);
  auto it = profile_.build_targets.find(kind);
  if (it == profile_.build_targets.end())
    throw KindError(profile_.name + " has no build target for " + std::string(to_string(kind)));
  const auto& target = registry.at(it->second.profile);
  auto want = built_kind(profile_.ground_kind, kind, it->second.grounding);
  if (!want || target.ground_kind != *want)
    throw KindError("build target " + target.name + " does not fit " +
                    std::string(to_string(kind)) + " elements");

  std::set<EntityRef> grounds;
  for (auto& e : set) {
    if (is_wildcard(e))
      throw KindError("cannot build from a pinned " + std::string(to_string(kind)) + " set");
    if (auto* ref = std::get_if<EntityRef>(&e)) {
      grounds.insert(*ref);
    } else if (auto* p = std::get_if<ObjectPair>(&e)) {
      grounds.insert(it->second.grounding == LinkGrounding::Filler ? *p->filler : p->property);
    } else if (auto* p = std::get_if<DataPair>(&e)) {
      grounds.insert(p->property);
    }
  }

  std::vector<Descriptor> out;
  for (auto& g : grounds) {
    Descriptor nd(target, g, *onto_);
    nd.read_axioms();
    out.push_back(std::move(nd));
  }
  return out;
}

void Descriptor::undo(const std::vector<MappingIntent>& intents) {
  if (intents.empty()) return;
  std::optional<std::uint64_t> last_local, last_onto;
  for (auto& i : intents) {
    if (i.ground != ground_) throw SequenceConflict("intent for another ground: " + render(i));
    if (i.change == IntentChange::Skipped) continue;
    (i.locus == IntentLocus::DescriptorState ? last_local : last_onto) = i.sequence;
  }
  if (last_local && *last_local != revision_)
    throw SequenceConflict("descriptor changed since revision " + std::to_string(*last_local));
  if (last_onto && *last_onto != onto_->revision())
    throw SequenceConflict("ontology changed since revision " + std::to_string(*last_onto));

  for (auto it = intents.rbegin(); it != intents.rend(); ++it) {
    if (it->change == IntentChange::Skipped) continue;
    const bool was_added = it->change == IntentChange::Added;
    if (it->locus == IntentLocus::DescriptorState) {
      apply_local(it->expression, it->element, was_added ? IntentChange::Removed : IntentChange::Added);
      continue;
    }
    Axiom a{it->expression, ground_, it->element};
    if (was_added) {
      onto_->retract_axiom(a);
      for (auto& e : it->declared) onto_->forget(e);
    } else {
      onto_->assert_axiom(a);
    }
  }
}

}  // namespace ontomap
