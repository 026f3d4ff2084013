#include "ontomap/scenarios.hpp"

#include "ontomap/errors.hpp"

namespace ontomap {

namespace {

EntityRef require(const Ontology& onto, std::string_view name, EntityKind kind) {
  auto e = resolve_identifier(name, kind);
  if (!onto.is_declared(e))
    throw MissingEntity("the ontology has no " + std::string(to_string(kind)) + " " + render(e));
  return e;
}

void log_step(ScenarioLog& log, const std::string& title, const std::vector<MappingIntent>& intents) {
  log.lines.push_back(title + " (" + std::to_string(intents.size()) + " changes)");
  for (auto& i : intents) {
    log.lines.push_back("  " + render(i));
    if (i.locus == IntentLocus::OntologyState) log.ontology_intents.push_back(i);
  }
}

}  // namespace

ScenarioLog run_listing2(Ontology& onto, ReasonerOptions options) {
  using E = ExpressionKind;
  const auto& profiles = ProfileRegistry::builtin();
  auto corridor = require(onto, "Corridor1", EntityKind::NamedIndividual);
  auto room1 = require(onto, "Room1", EntityKind::NamedIndividual);
  auto room2 = require(onto, "Room2", EntityKind::NamedIndividual);
  auto robot = require(onto, "ROBOT", EntityKind::Class);
  auto location = require(onto, "LOCATION", EntityKind::Class);
  auto door = require(onto, "DOOR", EntityKind::Class);
  auto has_door = require(onto, "hasDoor", EntityKind::ObjectProperty);
  auto linked = require(onto, "isLinkedTo", EntityKind::ObjectProperty);

  ScenarioLog log;
  Descriptor corridor1(profiles.at("LinkIndividual"), corridor, onto);
  corridor1.add(E::ObjectLink, ObjectPair{linked, room1});
  corridor1.add(E::ObjectLink, ObjectPair{linked, room2});
  log_step(log, "write " + render(corridor), corridor1.write_axioms());

  Descriptor robot_class(profiles.at("DisjointClass"), robot, onto);
  robot_class.add(E::Disjoint, location);
  robot_class.add(E::Disjoint, door);
  log_step(log, "write " + render(robot), robot_class.write_axioms());

  Descriptor door_property(profiles.at("DomainRangeObjectProperty"), has_door, onto);
  door_property.add(E::Domain, Restriction{BareClass{location}});
  door_property.add(E::Range, Restriction{BareClass{door}});
  log_step(log, "write " + render(has_door), door_property.write_axioms());

  log.synced = synchronise_reasoner(onto, options);
  log.lines.push_back("sync " + std::to_string(log.synced->sequence) + ": " +
                      (log.synced->consistency.consistent ? "consistent" : "inconsistent"));

  log_step(log, "read " + render(corridor), corridor1.read_axioms());
  log_step(log, "read " + render(has_door), door_property.read_axioms());
  log_step(log, "read " + render(robot), robot_class.read_axioms());

  corridor1.remove_property(E::ObjectLink, linked);
  log_step(log, "write " + render(corridor), corridor1.write_axioms());
  return log;
}

std::vector<std::string> run_listing3(Ontology& onto, ReasonerOptions options) {
  using E = ExpressionKind;
  const auto& profiles = ProfileRegistry::builtin();
  auto robot = require(onto, "Robot1", EntityKind::NamedIndividual);
  auto is_in = require(onto, "isIn", EntityKind::ObjectProperty);

  synchronise_reasoner(onto, options);

  Descriptor robot1(profiles.at("LinkIndividual"), robot, onto);
  robot1.add(E::ObjectLink, ObjectPair{is_in, std::nullopt});
  robot1.read_axioms();
  auto places = robot1.object_fillers(is_in);
  if (places.empty()) throw MissingEntity(render(robot) + " is not anywhere");
  const auto& where = places.front();

  Descriptor location(profiles.at("TypeIndividual"), where, onto);
  location.read_axioms();
  std::vector<std::string> lines;
  for (auto& cls : location.build(E::Type)) {
    if (cls.entities(E::Sub).size() == 1)
      lines.push_back(display_name(robot1.ground()) + " is in " + display_name(where) +
                      ", which is a " + display_name(cls.ground()));
  }
  return lines;
}

}  // namespace ontomap
