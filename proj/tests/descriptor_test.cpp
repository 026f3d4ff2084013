#include <doctest.h>

#include "descriptor_properties.hpp"
#include "fixture.hpp"
#include "ontomap/descriptor.hpp"
#include "ontomap/errors.hpp"
#include "ontomap/reasoner.hpp"

using namespace ontomap;
using testing_support::load_fixture;
using E = ExpressionKind;

namespace {

const DescriptorProfile& profile(const char* name) { return ProfileRegistry::builtin().at(name); }

}  // namespace

TEST_CASE("builtin profiles are valid and reject bad ones") {
  for (auto& name : ProfileRegistry::builtin().names()) CHECK(check_profile(profile(name.c_str())));
  DescriptorProfile bad{"Bad", EntityKind::Class, {E::Type}, {}};
  CHECK_FALSE(check_profile(bad));
  DescriptorProfile dup{"Dup", EntityKind::Class, {E::Super, E::Super}, {}};
  CHECK_FALSE(check_profile(dup));
  DescriptorProfile none{"None", EntityKind::Class, {}, {}};
  CHECK_FALSE(check_profile(none));
  ProfileRegistry r;
  r.add({"A", EntityKind::Class, {E::Super}, {}});
  CHECK_THROWS_AS(r.add({"A", EntityKind::Class, {E::Sub}, {}}), ValidationError);
  CHECK_THROWS_AS(r.at("missing"), KindError);
}

TEST_CASE("construction checks the ground kind and leaves the store alone") {
  auto onto = load_fixture();
  auto rev = onto.revision();
  CHECK_THROWS_AS(Descriptor(profile("FullClass"), make_individual(":Room1"), onto), KindError);
  Descriptor d(profile("FullClass"), ":NEWCLASS", onto);
  CHECK(d.ground() == make_class(":NEWCLASS"));
  CHECK_FALSE(onto.is_declared(d.ground()));
  CHECK(onto.revision() == rev);
  CHECK_THROWS_AS(d.entities(E::Type), KindError);
}

TEST_CASE("read without a snapshot uses asserted axioms") {
  auto onto = load_fixture();
  Descriptor room(profile("FullClass"), ":ROOM", onto);
  CHECK_FALSE(room.query(E::Super).reasoned);
  room.read_axioms();
  CHECK(room.entities(E::Super) == std::set<Element>{make_class(":LOCATION")});
  synchronise_reasoner(onto);
  auto intents = room.read_axioms();
  REQUIRE(intents.size() >= 1);
  CHECK(render(intents.front()).rfind("descriptor +", 0) == 0);
  CHECK(room.entities(E::Super) == std::set<Element>{make_class(":LOCATION"), thing()});
}

TEST_CASE("write adds and retracts only the asserted difference") {
  auto onto = load_fixture();
  synchronise_reasoner(onto);
  Descriptor c1(profile("LinkIndividual"), ":Corridor1", onto);
  c1.read_axioms();
  auto link = make_object_property(":isLinkedTo");
  auto door = make_object_property(":hasDoor");
  // The mirrored isLinkedTo(Corridor1, Room1) is entailed, so not asserted again.
  CHECK(c1.entities(E::ObjectLink).count(ObjectPair{link, make_individual(":Room1")}));
  c1.add(E::ObjectLink, ObjectPair{link, make_individual(":Room2")});
  c1.remove(E::ObjectLink, ObjectPair{door, make_individual(":Door2")});
  auto intents = c1.write_axioms();
  REQUIRE(intents.size() == 2);
  CHECK(render(intents[0]) == "ontology -:Corridor1 ObjectLink (:hasDoor :Door2)");
  CHECK(render(intents[1]) == "ontology +:Corridor1 ObjectLink (:isLinkedTo :Room2)");
  CHECK(intents[1].sequence == onto.revision());
  synchronise_reasoner(onto);
  CHECK(c1.write_axioms().empty());
}

TEST_CASE("write declares new entities and undo forgets them") {
  auto onto = load_fixture();
  Ontology before = onto;
  Descriptor robot(profile("FullClass"), ":ROBOT", onto);
  robot.read_axioms();
  robot.add(E::Super, make_class(":MACHINE"));
  auto intents = robot.write_axioms();
  REQUIRE(intents.size() == 1);
  CHECK(intents[0].declared == std::vector<EntityRef>{make_class(":MACHINE")});
  CHECK(onto.is_declared(make_class(":MACHINE")));
  robot.undo(intents);
  CHECK(same_content(onto, before));
}

TEST_CASE("a failed write changes nothing") {
  auto onto = load_fixture();
  Ontology before = onto;
  Descriptor room(profile("FullClass"), ":ROOM", onto);
  room.add(E::Super, make_class(":AREA"));
  room.add(E::Disjoint, make_class(":ROOM"));
  CHECK_THROWS_AS(room.write_axioms(), ValidationError);
  CHECK(same_content(onto, before));
}

TEST_CASE("undo refuses intents when a locus moved on") {
  auto onto = load_fixture();
  Descriptor room(profile("FullClass"), ":ROOM", onto);
  auto read = room.read_axioms();
  room.add(E::Super, make_class(":AREA"));
  CHECK_THROWS_AS(room.undo(read), SequenceConflict);

  auto written = room.write_axioms();
  onto.assert_axiom({E::Super, make_class(":X"), make_class(":Y")});
  CHECK_THROWS_AS(room.undo(written), SequenceConflict);

  Descriptor other(profile("FullClass"), ":DOOR", onto);
  CHECK_THROWS_AS(other.undo(read), SequenceConflict);
}

TEST_CASE("pins refresh only the pinned property") {
  auto onto = load_fixture();
  synchronise_reasoner(onto);
  Descriptor robot(profile("LinkIndividual"), ":Robot1", onto);
  auto is_in = make_object_property(":isIn");
  auto keep = ObjectPair{make_object_property(":hasDoor"), make_individual(":Door9")};
  robot.add(E::ObjectLink, keep);
  robot.add(E::ObjectLink, ObjectPair{is_in, std::nullopt});
  CHECK_THROWS_AS(robot.build(E::ObjectLink), KindError);

  auto w = robot.write_axioms();
  for (auto& i : w)
    if (is_wildcard(i.element)) CHECK(i.change == IntentChange::Skipped);
  robot.undo(w);

  robot.read_axioms();
  CHECK(robot.entities(E::ObjectLink) ==
        std::set<Element>{keep, ObjectPair{is_in, make_individual(":Corridor1")}});
  CHECK(robot.object_fillers(is_in) == std::vector<EntityRef>{make_individual(":Corridor1")});
  CHECK(robot.remove_property(E::ObjectLink, is_in) == 1);
}

TEST_CASE("build follows fillers and properties") {
  auto onto = load_fixture();
  synchronise_reasoner(onto);
  Descriptor r1(profile("LinkIndividual"), ":Room1", onto);
  r1.read_axioms();
  auto built = r1.build(E::ObjectLink);
  std::vector<EntityRef> grounds;
  for (auto& b : built) grounds.push_back(b.ground());
  CHECK(grounds == std::vector<EntityRef>{make_individual(":Corridor1"), make_individual(":Door1")});
  CHECK(built[0].profile().name == "LinkIndividual");
  CHECK_FALSE(built[0].entities(E::ObjectLink).empty());
  auto props = r1.build(E::DataLink);
  REQUIRE(props.size() == 1);
  CHECK(props[0].ground() == make_data_property(":hasTemperature"));
}

TEST_CASE("descriptor contract holds on random stores") {
  int ran = 0;
  for (std::uint32_t seed = 1; seed <= 150; ++seed) {
    auto r = testing_support::check_random_descriptor(seed);
    if (r.skipped) continue;
    ++ran;
    INFO("seed " << seed << " ground " << r.ground);
    CHECK(r.failure == "");
  }
  CHECK(ran >= 50);
}
