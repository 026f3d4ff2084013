#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ontomap/axiom_set.hpp"
#include "ontomap/entity.hpp"

namespace ontomap {

struct InferenceSnapshot;

enum class ChangeReport : std::uint8_t { Added, AlreadyPresent, Removed, Absent };

std::string_view to_string(ChangeReport r);

enum class Characteristic : std::uint8_t { Transitive, Symmetric };

enum class IdentityRelation : std::uint8_t { Same, Different };

struct IdentityPair {
  EntityRef a;
  EntityRef b;
  IdentityRelation relation = IdentityRelation::Same;
};

/// Prefix name (without ':', empty for the default prefix) to IRI base.
using PrefixMap = std::vector<std::pair<std::string, std::string>>;

inline constexpr std::string_view kDefaultBase = "http://example.org/ontology#";

/// The default prefix plus owl, xsd, rdf and rdfs.
PrefixMap standard_prefixes(std::string default_base = std::string(kDefaultBase));

/// Asserted TBox/RBox/ABox content with declaration tracking.
///
/// Readers may share an Ontology; writers (mutations and reasoner
/// synchronisation) must be serialised by the caller.
class Ontology {
 public:
  /// Throws Error on an empty name or a prefix bound twice.
  explicit Ontology(std::string name, PrefixMap prefixes = standard_prefixes());

  const std::string& name() const { return name_; }
  const PrefixMap& prefixes() const { return prefixes_; }
  std::optional<std::string> prefix_base(std::string_view prefix) const;

  const std::string& iri() const { return iri_; }
  void set_iri(std::string iri) { iri_ = std::move(iri); }

  const std::set<EntityRef>& declarations() const { return declarations_; }
  bool is_declared(const EntityRef& e) const { return declarations_.count(e) != 0; }
  ChangeReport declare(const EntityRef& e);
  /// Drops a declaration no axiom or characteristic mentions. Builtins and
  /// mentioned entities are kept and report AlreadyPresent.
  ChangeReport forget(const EntityRef& e);
  /// Declared entities of any kind carrying this IRI.
  std::vector<EntityRef> lookup(const Iri& iri) const;

  const AxiomSet& axioms() const { return axioms_; }
  bool contains(const Axiom& a) const { return axioms_.contains(a); }

  /// Throws ValidationError. Reflexive Super/Sub/Equivalent are trivially
  /// true and report AlreadyPresent without being stored.
  ChangeReport assert_axiom(const Axiom& a);
  ChangeReport retract_axiom(const Axiom& a);

  /// Asserted elements only; throws ValidationError on an illegal
  /// (subject kind, expression) row.
  const std::set<Element>& enumerate(const EntityRef& subject, ExpressionKind kind) const;

  /// Throws KindError unless `property` is an ObjectProperty.
  ChangeReport set_characteristic(const EntityRef& property, Characteristic c, bool value);
  bool has_characteristic(const EntityRef& property, Characteristic c) const {
    return characteristics_.count({property, c}) != 0;
  }
  const std::set<std::pair<EntityRef, Characteristic>>& characteristics() const {
    return characteristics_;
  }

  /// Recorded as an individual Equivalent/Disjoint axiom. Throws
  /// ValidationError for Different(x, x).
  ChangeReport assert_identity(const IdentityPair& pair);

  /// True iff a mutation happened after the last synchronisation.
  bool stale() const { return stale_; }
  /// Bumped by every effective mutation.
  std::uint64_t revision() const { return revision_; }

  const InferenceSnapshot* snapshot() const { return snapshot_.get(); }
  std::shared_ptr<const InferenceSnapshot> shared_snapshot() const { return snapshot_; }
  /// Installs a snapshot computed from the current content and clears the
  /// stale flag. Returns the sequence number assigned to it.
  std::uint64_t publish_snapshot(std::shared_ptr<const InferenceSnapshot> snapshot);
  std::uint64_t sync_count() const { return sync_count_; }

 private:
  void touch();

  std::string name_;
  PrefixMap prefixes_;
  std::string iri_;
  std::set<EntityRef> declarations_;
  AxiomSet axioms_;
  std::set<std::pair<EntityRef, Characteristic>> characteristics_;
  bool stale_ = true;
  std::uint64_t revision_ = 0;
  std::uint64_t sync_count_ = 0;
  std::shared_ptr<const InferenceSnapshot> snapshot_;
};

/// Every entity an axiom names, datatypes of literals included.
std::vector<EntityRef> mentioned_entities(const Axiom& a);

/// Declarations, axioms and characteristics compared as sets.
bool same_content(const Ontology& a, const Ontology& b);

}  // namespace ontomap
