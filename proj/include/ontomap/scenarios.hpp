#pragma once

// Scripted descriptor sessions against the home fixture.

#include <memory>
#include <string>
#include <vector>

#include "ontomap/descriptor.hpp"
#include "ontomap/errors.hpp"
#include "ontomap/ontology.hpp"
#include "ontomap/reasoner.hpp"

namespace ontomap {

/// The fixture lacks an entity a scenario needs.
class MissingEntity : public Error {
 public:
  using Error::Error;
};

struct ScenarioLog {
  std::vector<std::string> lines;
  /// Ontology-side intents of every write, in order.
  std::vector<MappingIntent> ontology_intents;
  /// The snapshot taken after the writes, before the final removal.
  std::shared_ptr<const InferenceSnapshot> synced;
};

/// Writes Corridor1's links to Room1 and Room2, ROBOT's disjointness from
/// LOCATION and DOOR, and hasDoor's domain and range; synchronises; reads the
/// three descriptors back; then drops every isLinkedTo pair of Corridor1 and
/// writes again. Each descriptor writes itself.
ScenarioLog run_listing2(Ontology& onto, ReasonerOptions options = {});

/// Synchronises, finds where Robot1 is through a pinned isIn read, and prints
/// one `<robot> is in <location>, which is a <CLASS>` line per leaf type.
std::vector<std::string> run_listing3(Ontology& onto, ReasonerOptions options = {});

}  // namespace ontomap
