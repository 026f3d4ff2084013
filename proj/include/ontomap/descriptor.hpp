#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontomap/entity.hpp"
#include "ontomap/ontology.hpp"
#include "ontomap/validate.hpp"

namespace ontomap {

/// For ObjectLink/DataLink elements: build on the filler individual or on the
/// property. DataLink fillers are literals, so only Property applies there.
enum class LinkGrounding : std::uint8_t { Filler, Property };

struct BuildTarget {
  std::string profile;
  LinkGrounding grounding = LinkGrounding::Filler;
};

struct DescriptorProfile {
  std::string name;
  EntityKind ground_kind = EntityKind::Class;
  std::vector<ExpressionKind> expressions;  // read/write order
  std::map<ExpressionKind, BuildTarget> build_targets;

  bool has(ExpressionKind k) const;
};

/// Expressions non-empty, unique and legal for the ground kind; build targets
/// keyed by declared expressions with a grounding that yields an entity.
ValidationResult check_profile(const DescriptorProfile& p);

/// Entity kind of the descriptors built from `kind` under `target`, if any.
std::optional<EntityKind> built_kind(EntityKind ground, ExpressionKind kind, LinkGrounding grounding);

class ProfileRegistry {
 public:
  /// Throws ValidationError on a bad profile, a duplicate name, or a build
  /// target naming an already registered profile of the wrong ground kind.
  void add(DescriptorProfile p);
  const DescriptorProfile* find(std::string_view name) const;
  /// Throws KindError when absent.
  const DescriptorProfile& at(std::string_view name) const;
  std::vector<std::string> names() const;

  /// FullClass, FullIndividual, FullObjectProperty, FullDataProperty and the
  /// narrower profiles used by the demos.
  static const ProfileRegistry& builtin();

 private:
  std::map<std::string, DescriptorProfile, std::less<>> profiles_;
};

enum class IntentChange : std::uint8_t { Added, Removed, Skipped };
enum class IntentLocus : std::uint8_t { DescriptorState, OntologyState };

std::string_view to_string(IntentChange c);
std::string_view to_string(IntentLocus l);

/// One element added to or removed from one side of the mapping. `sequence`
/// is the locus revision right after the change (for Skipped, the revision at
/// the time). Ontology-side additions list the entities they declared.
struct MappingIntent {
  EntityRef ground;
  ExpressionKind expression = ExpressionKind::Super;
  Element element;
  IntentChange change = IntentChange::Added;
  IntentLocus locus = IntentLocus::DescriptorState;
  std::uint64_t sequence = 0;
  std::vector<EntityRef> declared;

  bool operator==(const MappingIntent&) const = default;
};

/// e.g. `ontology +:Corridor1 ObjectLink (:isLinkedTo :Room1)`
std::string render(const MappingIntent& intent);

struct QueryResult {
  std::set<Element> elements;
  /// False when no snapshot existed and asserted axioms were used instead.
  bool reasoned = false;
};

/// Resolves a bare name against the default prefix; `pfx:name` is split.
EntityRef resolve_identifier(std::string_view text, EntityKind kind);

/// A ground entity plus one local entity set per profile expression.
///
/// A value type: copies are independent. It keeps a pointer to its ontology,
/// which must outlive it.
class Descriptor {
 public:
  /// Throws KindError when the ground kind differs from the profile's, and
  /// ValidationError for an invalid profile or empty IRI. Does not touch the
  /// ontology.
  Descriptor(DescriptorProfile profile, EntityRef ground, Ontology& onto);
  Descriptor(DescriptorProfile profile, std::string_view ground, Ontology& onto);

  const EntityRef& ground() const { return ground_; }
  const DescriptorProfile& profile() const { return profile_; }
  Ontology& ontology() const { return *onto_; }
  /// Bumped by every effective local change.
  std::uint64_t revision() const { return revision_; }

  /// Throws KindError for an expression outside the profile.
  const std::set<Element>& entities(ExpressionKind kind) const;
  /// Local only. Wildcard pairs are accepted as read pins. Throws KindError or
  /// ValidationError; false when already present.
  bool add(ExpressionKind kind, Element element);
  /// False when absent.
  bool remove(ExpressionKind kind, const Element& element);
  /// Removes every pair of `property` (pins included); returns how many.
  std::size_t remove_property(ExpressionKind kind, const EntityRef& property);
  /// Fillers of `property` in the local ObjectLink set.
  std::vector<EntityRef> object_fillers(const EntityRef& property) const;

  QueryResult query(ExpressionKind kind) const;

  /// Makes local sets equal to query results. A set holding pins refreshes
  /// only the pinned properties, replacing the pins.
  std::vector<MappingIntent> read_axioms();

  /// Makes the asserted (ground, kind) slices equal to the local sets.
  /// Elements already entailed by a fresh snapshot are not asserted; only
  /// asserted axioms are retracted. Pins are reported as Skipped. On a
  /// validation failure nothing changes and ValidationError is thrown.
  std::vector<MappingIntent> write_axioms();

  /// One read descriptor per distinct entity reachable from the local set of
  /// `kind`, sorted by ground. Throws KindError when `kind` has no build
  /// target or its set holds pins.
  std::vector<Descriptor> build(ExpressionKind kind,
                                const ProfileRegistry& registry = ProfileRegistry::builtin()) const;

  /// Applies the inverse of `intents` in reverse order. Throws
  /// SequenceConflict if a locus moved on since the intents were made or
  /// they belong to another ground.
  void undo(const std::vector<MappingIntent>& intents);

 private:
  std::set<Element>& local(ExpressionKind kind);
  MappingIntent apply_local(ExpressionKind kind, const Element& e, IntentChange change);

  DescriptorProfile profile_;
  EntityRef ground_;
  Ontology* onto_;
  std::map<ExpressionKind, std::set<Element>> sets_;
  std::uint64_t revision_ = 0;
};

}  // namespace ontomap
