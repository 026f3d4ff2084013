#pragma once

// Forward-chaining closure of an ontology under a fixed, sound rule fragment.
//
// Strata, each closed before the next starts:
//   identity   Same-individual groups; Different pairs between groups.
//   RBox       sub-property reachability (Tr-P, Eq-P), disjointness pushed to
//              sub-properties, inverse pairs closed over equivalents,
//              transitive/symmetric flags shared inside equivalence groups.
//   TBox       subsumption reachability over Super, Equivalent and the
//              BareClass conjuncts of equivalent-restriction definitions,
//              with THING on top and NOTHING below (Tr-Sub, Eq-C). A class
//              below both sides of an asserted Disjoint is unsatisfiable and
//              joins NOTHING's group (V5); disjointness is pushed down to
//              sub-classes (Dj-C).
//   links      SubP, Inv, TrP, Sym, and Same-individual sharing.
//   types      asserted types, THING for every individual, Dom, Rng, Ty-Up,
//              Same sharing, and Cls realization (see below).
//   checks     V1..V5.
//
// Cls: an individual is typed C when it satisfies every conjunct of C's
// equivalent-restriction set. BareClass(D) needs Type D; Object some/min n
// need n distinct fillers of the filler class; Data some/min n need n distinct
// literals of the datatype. A definition containing only/max/exact or a
// class cardinality never classifies. Fillers are distinct when they are in
// different Same groups and either the unique-name assumption holds or a
// Different pair links the groups.

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ontomap/axiom_set.hpp"
#include "ontomap/entity.hpp"
#include "ontomap/ontology.hpp"

namespace ontomap {

struct ReasonerOptions {
  bool unique_name_assumption = true;
};

struct Violation {
  std::string rule;  // V1..V5
  std::vector<EntityRef> entities;
  std::string detail;

  // Identity is the rule plus the offending entities; detail is commentary.
  bool operator==(const Violation& o) const { return rule == o.rule && entities == o.entities; }
  bool operator<(const Violation& o) const {
    return rule != o.rule ? rule < o.rule : entities < o.entities;
  }
};

/// Human-readable text for a violation, from its rule and entities.
std::string describe_violation(const std::string& rule, const std::vector<EntityRef>& entities);

struct ConsistencyReport {
  bool consistent = true;
  std::vector<Violation> violations;  // sorted, unique
  std::set<EntityRef> unsatisfiable;  // classes equivalent to NOTHING, NOTHING excluded
};

/// Sorted groups, each sorted; singletons included.
using Partition = std::vector<std::vector<EntityRef>>;

struct InferenceSnapshot {
  AxiomSet entailed;
  Partition class_groups;
  Partition object_property_groups;
  Partition data_property_groups;
  Partition individual_groups;
  ConsistencyReport consistency;
  std::uint64_t sequence = 0;
  ReasonerOptions options;
};

/// Everything but `sequence` is compared.
bool same_closure(const InferenceSnapshot& a, const InferenceSnapshot& b);

/// Pure closure computation; does not touch the ontology.
InferenceSnapshot compute_closure(const Ontology& onto, ReasonerOptions options = {});

/// Computes the closure, publishes it as the ontology's snapshot and clears
/// the stale flag.
std::shared_ptr<const InferenceSnapshot> synchronise_reasoner(Ontology& onto,
                                                              ReasonerOptions options = {});

/// Elements y with E_kind(subject, y) in the last snapshot, even when the
/// ontology went stale since. Throws NoSnapshotError or ValidationError.
const std::set<Element>& entailed_entity_set(const Ontology& onto, const EntityRef& subject,
                                             ExpressionKind kind);

/// Throws NoSnapshotError.
bool is_entailed(const Ontology& onto, const Axiom& a);

}  // namespace ontomap
