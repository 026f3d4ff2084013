#include "random_store.hpp"

#include "ontomap/errors.hpp"

namespace testing_support {

using namespace ontomap;

namespace {

class Draw {
 public:
  Draw(std::uint32_t seed, StoreShape shape) : rng_(seed), shape_(shape) {}

  int upto(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  EntityRef cls() {
    // The builtins show up now and then.
    if (chance(0.01)) return chance(0.5) ? thing() : nothing();
    return make_class("C" + std::to_string(upto(shape_.classes)));
  }
  EntityRef ind() { return make_individual("i" + std::to_string(upto(shape_.individuals))); }
  EntityRef oprop() { return make_object_property("p" + std::to_string(upto(shape_.object_properties))); }
  EntityRef dprop() { return make_data_property("d" + std::to_string(upto(shape_.data_properties))); }

  EntityRef datatype() {
    switch (upto(4)) {
      case 0: return xsd_integer();
      case 1: return xsd_decimal();
      case 2: return xsd_boolean();
      default: return xsd_string();
    }
  }

  Literal literal() {
    switch (upto(4)) {
      case 0: return Literal::typed(std::to_string(upto(4)), xsd_integer());
      case 1: return Literal::typed(std::to_string(upto(3)) + ".5", xsd_decimal());
      case 2: return Literal::typed(chance(0.5) ? "true" : "false", xsd_boolean());
      default: return Literal::typed("s" + std::to_string(upto(3)), xsd_string());
    }
  }

  Cardinality cardinality() {
    auto n = static_cast<std::uint32_t>(upto(4));
    switch (upto(5)) {
      case 0: return Cardinality::some();
      case 1: return Cardinality::only();
      case 2: return Cardinality::min(n);
      case 3: return Cardinality::max(n);
      default: return Cardinality::exact(n);
    }
  }

  // Positive conjuncts are favoured so that realization actually fires.
  Restriction conjunct() {
    int pick = upto(10);
    if (pick < 3) return BareClass{cls()};
    if (pick < 7) {
      auto c = chance(0.6) ? (chance(0.5) ? Cardinality::some() : Cardinality::min(1 + upto(3)))
                           : cardinality();
      return ObjectRestriction{c, oprop(), cls()};
    }
    if (pick < 9) {
      auto c = chance(0.6) ? Cardinality::some() : cardinality();
      return DataRestriction{c, dprop(), datatype()};
    }
    return ClassCardinality{Cardinality::min(1 + upto(2)), cls()};
  }

  Restriction domain_or_range() { return BareClass{cls()}; }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
  StoreShape shape_;
};

Axiom random_axiom(Draw& d) {
  switch (d.upto(26)) {
    case 0:
    case 1: return {ExpressionKind::Super, d.cls(), d.cls()};
    case 2: return {ExpressionKind::Sub, d.cls(), d.cls()};
    case 3: return {ExpressionKind::Equivalent, d.cls(), d.cls()};
    case 4:
      if (d.chance(0.5)) return {ExpressionKind::Disjoint, d.cls(), d.cls()};
      return {ExpressionKind::Super, d.cls(), d.cls()};
    case 5:
    case 6: return {ExpressionKind::Instance, d.cls(), d.ind()};
    case 7: return {ExpressionKind::Type, d.ind(), d.cls()};
    case 8:
    case 9: return {ExpressionKind::EquivalentRestriction, d.cls(), d.conjunct()};
    case 10:
    case 11:
    case 12: return {ExpressionKind::ObjectLink, d.ind(), ObjectPair{d.oprop(), d.ind()}};
    case 13: return {ExpressionKind::DataLink, d.ind(), DataPair{d.dprop(), d.literal()}};
    case 14: return {ExpressionKind::Equivalent, d.ind(), d.ind()};
    case 15: return {ExpressionKind::Disjoint, d.ind(), d.ind()};
    case 16: {
      static constexpr ExpressionKind kinds[] = {ExpressionKind::Super, ExpressionKind::Sub,
                                                 ExpressionKind::Equivalent, ExpressionKind::Disjoint,
                                                 ExpressionKind::Inverse};
      return {kinds[d.upto(5)], d.oprop(), d.oprop()};
    }
    case 17: {
      static constexpr ExpressionKind kinds[] = {ExpressionKind::Super, ExpressionKind::Sub,
                                                 ExpressionKind::Equivalent, ExpressionKind::Disjoint};
      return {kinds[d.upto(4)], d.dprop(), d.dprop()};
    }
    case 18:
      return {d.chance(0.5) ? ExpressionKind::Domain : ExpressionKind::Range, d.oprop(),
              d.domain_or_range()};
    case 19: {
      auto p = d.dprop();
      if (d.chance(0.5)) return {ExpressionKind::Domain, p, d.domain_or_range()};
      return {ExpressionKind::Range, p, DataRestriction{Cardinality::only(), p, d.datatype()}};
    }
    case 20:
    case 21: return {ExpressionKind::Instance, d.cls(), d.ind()};
    default: return {ExpressionKind::ObjectLink, d.ind(), ObjectPair{d.oprop(), d.ind()}};
  }
}

}  // namespace

Ontology random_store(std::uint32_t seed, StoreShape shape) {
  Draw d(seed, shape);
  Ontology onto("random" + std::to_string(seed));
  for (int k = 0; k < shape.axioms; ++k) {
    try {
      onto.assert_axiom(random_axiom(d));
    } catch (const ValidationError&) {
      // Reflexive disjointness and the like; skip.
    }
  }
  for (int k = 0; k < 2; ++k) {
    if (d.chance(0.4)) onto.set_characteristic(d.oprop(), Characteristic::Transitive, true);
    if (d.chance(0.4)) onto.set_characteristic(d.oprop(), Characteristic::Symmetric, true);
  }
  return onto;
}

std::vector<Axiom> random_axioms(std::uint32_t seed, int count, StoreShape shape) {
  Draw d(seed, shape);
  std::vector<Axiom> out;
  for (int k = 0; k < count; ++k) out.push_back(random_axiom(d));
  return out;
}

}  // namespace testing_support
