#include "naive_fixpoint.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace oracle {

using namespace ontomap;

namespace {

using Pair = std::pair<int, int>;
using Triple = std::tuple<int, int, int>;

// Repeats `pass` until it reports no change.
template <class F>
void fix(F pass) {
  while (pass()) {
  }
}

template <class T>
bool add(std::set<T>& s, const T& v) {
  return s.insert(v).second;
}

std::set<Pair> transitive(std::set<Pair> rel) {
  fix([&] {
    bool changed = false;
    auto snapshot = rel;
    for (auto [a, b] : snapshot)
      for (auto [c, d] : snapshot)
        if (b == c) changed |= add(rel, Pair{a, d});
    return changed;
  });
  return rel;
}

struct Hier {
  std::set<Pair> sub;
  std::set<Pair> disjoint;
  bool below(int a, int b) const { return sub.count({a, b}) != 0; }
  bool equivalent(int a, int b) const { return below(a, b) && below(b, a); }
};

std::set<Pair> push_disjoint(const std::set<Pair>& sub, const std::vector<int>& members,
                             const std::vector<Pair>& asserted) {
  std::set<Pair> out;
  for (auto [a, b] : asserted)
    for (int x : members)
      for (int y : members)
        if (x != y && sub.count({x, a}) && sub.count({y, b})) {
          out.insert({x, y});
          out.insert({y, x});
        }
  return out;
}

class Naive {
 public:
  Naive(const Ontology& onto, ReasonerOptions options) : onto_(onto), options_(options) {
    for (auto& e : onto.declarations()) {
      int id = static_cast<int>(ents_.size());
      ents_.push_back(e);
      ids_[e] = id;
      switch (e.kind) {
        case EntityKind::Class: classes_.push_back(id); break;
        case EntityKind::NamedIndividual: inds_.push_back(id); break;
        case EntityKind::ObjectProperty: oprops_.push_back(id); break;
        case EntityKind::DataProperty: dprops_.push_back(id); break;
        default: break;
      }
    }
  }

  InferenceSnapshot run() {
    read_axioms();
    identity();
    rbox();
    tbox();
    abox();
    checks();
    return output();
  }

 private:
  int id(const EntityRef& e) const { return ids_.at(e); }

  int lit(const Literal& l) {
    auto it = std::find(lits_.begin(), lits_.end(), l);
    if (it != lits_.end()) return static_cast<int>(it - lits_.begin());
    lits_.push_back(l);
    return static_cast<int>(lits_.size()) - 1;
  }

  void read_axioms() {
    for (auto& a : onto_.axioms().canonical()) {
      int s = id(a.subject);
      auto* o = std::get_if<EntityRef>(&a.object);
      auto kind = a.subject.kind;
      bool prop = kind == EntityKind::ObjectProperty || kind == EntityKind::DataProperty;
      auto& sub = kind == EntityKind::Class ? class_sub_
                  : kind == EntityKind::ObjectProperty ? oprop_sub_
                                                       : dprop_sub_;
      auto& dis = kind == EntityKind::Class ? class_dis_
                  : kind == EntityKind::ObjectProperty ? oprop_dis_
                                                       : dprop_dis_;
      switch (a.expression) {
        case ExpressionKind::Super:
          sub.push_back({s, id(*o)});
          break;
        case ExpressionKind::Equivalent:
          if (kind == EntityKind::NamedIndividual) {
            same_.push_back({s, id(*o)});
          } else {
            sub.push_back({s, id(*o)});
            sub.push_back({id(*o), s});
          }
          break;
        case ExpressionKind::Disjoint:
          if (kind == EntityKind::NamedIndividual)
            diff_.push_back({s, id(*o)});
          else
            dis.push_back({s, id(*o)});
          break;
        case ExpressionKind::Instance: type_seed_.push_back({id(*o), s}); break;
        case ExpressionKind::EquivalentRestriction: {
          auto& r = std::get<Restriction>(a.object);
          defs_[s].push_back(r);
          if (auto* b = std::get_if<BareClass>(&r)) class_sub_.push_back({s, id(b->cls)});
          break;
        }
        case ExpressionKind::ObjectLink: {
          auto& p = std::get<ObjectPair>(a.object);
          link_seed_.push_back({id(p.property), s, id(*p.filler)});
          break;
        }
        case ExpressionKind::DataLink: {
          auto& p = std::get<DataPair>(a.object);
          data_seed_.push_back({id(p.property), s, lit(*p.value)});
          break;
        }
        case ExpressionKind::Inverse: inverse_seed_.push_back({s, id(*o)}); break;
        case ExpressionKind::Domain:
        case ExpressionKind::Range:
          if (prop) {
            if (auto* b = std::get_if<BareClass>(&std::get<Restriction>(a.object))) {
              bool dom = a.expression == ExpressionKind::Domain;
              if (kind == EntityKind::ObjectProperty)
                (dom ? odom_ : orng_).push_back({s, id(b->cls)});
              else if (dom)
                ddom_.push_back({s, id(b->cls)});
            }
          }
          break;
        default: break;
      }
    }
    for (auto& [p, c] : onto_.characteristics())
      (c == Characteristic::Transitive ? trans_ : sym_).insert(id(p));
  }

  void identity() {
    for (int i : inds_) same_rel_.insert({i, i});
    for (auto [a, b] : same_) {
      same_rel_.insert({a, b});
      same_rel_.insert({b, a});
    }
    same_rel_ = transitive(same_rel_);
    for (auto [a, b] : diff_)
      for (int x : inds_)
        for (int y : inds_)
          if (same_rel_.count({x, a}) && same_rel_.count({y, b})) {
            diff_rel_.insert({x, y});
            diff_rel_.insert({y, x});
          }
  }

  Hier close(const std::vector<int>& members, const std::vector<Pair>& edges,
             const std::vector<Pair>& dis) {
    Hier h;
    for (int x : members) h.sub.insert({x, x});
    h.sub.insert(edges.begin(), edges.end());
    h.sub = transitive(h.sub);
    h.disjoint = push_disjoint(h.sub, members, dis);
    return h;
  }

  void rbox() {
    ohier_ = close(oprops_, oprop_sub_, oprop_dis_);
    dhier_ = close(dprops_, dprop_sub_, dprop_dis_);
    for (auto [a, b] : inverse_seed_)
      for (int x : oprops_)
        for (int y : oprops_)
          if (ohier_.equivalent(x, a) && ohier_.equivalent(y, b)) {
            inverse_.insert({x, y});
            inverse_.insert({y, x});
          }
    auto spread = [&](std::set<int>& flags) {
      std::set<int> out;
      for (int p : flags)
        for (int q : oprops_)
          if (ohier_.equivalent(p, q)) out.insert(q);
      flags = out;
    };
    spread(trans_);
    spread(sym_);
  }

  void tbox() {
    top_ = id(thing());
    bottom_ = id(nothing());
    std::set<Pair> sub;
    for (int x : classes_) {
      sub.insert({x, x});
      sub.insert({x, top_});
      sub.insert({bottom_, x});
    }
    sub.insert(class_sub_.begin(), class_sub_.end());
    fix([&] {
      sub = transitive(sub);
      bool changed = false;
      for (auto [a, b] : class_dis_)
        for (int x : classes_)
          if (sub.count({x, a}) && sub.count({x, b})) changed |= add(sub, Pair{x, bottom_});
      return changed;
    });
    chier_.sub = sub;
    chier_.disjoint = push_disjoint(sub, classes_, class_dis_);
  }

  std::vector<int> group_reps(const std::vector<int>& individuals) const {
    std::set<int> reps;
    for (int b : individuals) {
      int rep = b;
      for (int x : inds_)
        if (same_rel_.count({b, x})) rep = std::min(rep, x);
      reps.insert(rep);
    }
    return {reps.begin(), reps.end()};
  }

  // Tries every `need`-sized choice of fillers.
  bool has_distinct(const std::vector<int>& individuals, unsigned need) const {
    auto reps = group_reps(individuals);
    if (reps.size() < need) return false;
    if (need == 0) return true;
    if (options_.unique_name_assumption) return true;
    std::vector<bool> pick(reps.size(), false);
    std::fill(pick.begin(), pick.begin() + need, true);
    do {
      std::vector<int> chosen;
      for (std::size_t k = 0; k < reps.size(); ++k)
        if (pick[k]) chosen.push_back(reps[k]);
      bool ok = true;
      for (std::size_t x = 0; x < chosen.size() && ok; ++x)
        for (std::size_t y = x + 1; y < chosen.size() && ok; ++y)
          ok = diff_rel_.count({chosen[x], chosen[y]}) != 0;
      if (ok) return true;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return false;
  }

  std::vector<int> fillers(int i, int p, int filler) const {
    std::vector<int> out;
    for (auto& [q, a, b] : links_)
      if (q == p && a == i && types_.count({b, filler})) out.push_back(b);
    return out;
  }

  unsigned literals(int i, int p, const EntityRef& dt) const {
    unsigned n = 0;
    for (auto& [q, a, l] : data_)
      if (q == p && a == i && lits_[l].datatype == dt) ++n;
    return n;
  }

  bool positive(const std::vector<Restriction>& conj) const {
    for (auto& r : conj) {
      if (std::holds_alternative<ClassCardinality>(r)) return false;
      if (auto* o = std::get_if<ObjectRestriction>(&r)) {
        auto q = o->cardinality.quantifier;
        if (q != Quantifier::Some && q != Quantifier::Min) return false;
      }
      if (auto* d = std::get_if<DataRestriction>(&r)) {
        auto q = d->cardinality.quantifier;
        if (q != Quantifier::Some && q != Quantifier::Min) return false;
      }
    }
    return !conj.empty();
  }

  bool satisfies(int i, const std::vector<Restriction>& conj) const {
    for (auto& r : conj) {
      if (auto* b = std::get_if<BareClass>(&r)) {
        if (!types_.count({i, id(b->cls)})) return false;
      } else if (auto* o = std::get_if<ObjectRestriction>(&r)) {
        unsigned need = o->cardinality.quantifier == Quantifier::Min ? o->cardinality.n : 1;
        if (!has_distinct(fillers(i, id(o->property), id(o->filler)), need)) return false;
      } else if (auto* d = std::get_if<DataRestriction>(&r)) {
        unsigned need = d->cardinality.quantifier == Quantifier::Min ? d->cardinality.n : 1;
        if (literals(i, id(d->property), d->datatype) < need) return false;
      }
    }
    return true;
  }

  void abox() {
    links_.insert(link_seed_.begin(), link_seed_.end());
    data_.insert(data_seed_.begin(), data_seed_.end());
    types_.insert(type_seed_.begin(), type_seed_.end());

    fix([&] {
      bool changed = false;
      auto links = links_;
      for (auto& [p, a, b] : links) {
        for (int q : oprops_) {
          if (ohier_.below(p, q)) changed |= add(links_, Triple{q, a, b});
          if (inverse_.count({p, q})) changed |= add(links_, Triple{q, b, a});
        }
        if (sym_.count(p)) changed |= add(links_, Triple{p, b, a});
        if (trans_.count(p))
          for (auto& [p2, b2, c] : links)
            if (p2 == p && b2 == b) changed |= add(links_, Triple{p, a, c});
        for (int x : inds_)
          for (int y : inds_)
            if (same_rel_.count({a, x}) && same_rel_.count({b, y}))
              changed |= add(links_, Triple{p, x, y});
      }
      return changed;
    });

    fix([&] {
      bool changed = false;
      auto data = data_;
      for (auto& [p, a, l] : data) {
        for (int q : dprops_)
          if (dhier_.below(p, q)) changed |= add(data_, Triple{q, a, l});
        for (int x : inds_)
          if (same_rel_.count({a, x})) changed |= add(data_, Triple{p, x, l});
      }
      return changed;
    });

    fix([&] {
      bool changed = false;
      for (int i : inds_) changed |= add(types_, Pair{i, top_});
      for (auto& [p, a, b] : links_) {
        for (auto [q, c] : odom_)
          if (q == p) changed |= add(types_, Pair{a, c});
        for (auto [q, c] : orng_)
          if (q == p) changed |= add(types_, Pair{b, c});
      }
      for (auto& [p, a, l] : data_)
        for (auto [q, c] : ddom_)
          if (q == p) changed |= add(types_, Pair{a, c});
      auto types = types_;
      for (auto [i, c] : types) {
        for (int d : classes_)
          if (chier_.below(c, d)) changed |= add(types_, Pair{i, d});
        for (int x : inds_)
          if (same_rel_.count({i, x})) changed |= add(types_, Pair{x, c});
      }
      for (auto& [c, conj] : defs_) {
        if (!positive(conj)) continue;
        for (int i : inds_)
          if (!types_.count({i, c}) && satisfies(i, conj)) changed |= add(types_, Pair{i, c});
      }
      return changed;
    });
  }

  void flag(const std::string& rule, std::vector<EntityRef> es) {
    violations_.insert(Violation{rule, std::move(es), {}});
  }

  void checks() {
    for (int i : inds_) {
      for (auto [i2, a] : types_) {
        if (i2 != i) continue;
        for (auto [i3, b] : types_)
          if (i3 == i && ents_[a] < ents_[b] && chier_.disjoint.count({a, b}))
            flag("V1", {ents_[i], ents_[a], ents_[b]});
        if (chier_.below(a, bottom_)) flag("V5", {ents_[i], ents_[a]});
        auto it = defs_.find(a);
        if (it == defs_.end()) continue;
        for (auto& r : it->second) check(i, a, r);
      }
    }
    for (auto [a, b] : diff_)
      if (same_rel_.count({a, b})) flag("V2", {std::min(ents_[a], ents_[b]), std::max(ents_[a], ents_[b])});
  }

  void check(int i, int c, const Restriction& r) {
    if (auto* o = std::get_if<ObjectRestriction>(&r)) {
      int p = id(o->property), f = id(o->filler);
      auto q = o->cardinality.quantifier;
      if ((q == Quantifier::Max || q == Quantifier::Exact) &&
          has_distinct(fillers(i, p, f), o->cardinality.n + 1))
        flag("V3", {ents_[i], ents_[c], o->property, o->filler});
      if (q == Quantifier::Only)
        for (auto& [p2, a, b] : links_)
          if (p2 == p && a == i)
            for (auto [b2, e] : types_)
              if (b2 == b && chier_.disjoint.count({e, f}))
                flag("V4", {ents_[i], ents_[c], o->property, ents_[b]});
    } else if (auto* d = std::get_if<DataRestriction>(&r)) {
      int p = id(d->property);
      auto q = d->cardinality.quantifier;
      if ((q == Quantifier::Max || q == Quantifier::Exact) &&
          literals(i, p, d->datatype) > d->cardinality.n)
        flag("V3", {ents_[i], ents_[c], d->property, d->datatype});
      if (q == Quantifier::Only)
        for (auto& [p2, a, l] : data_)
          if (p2 == p && a == i && lits_[l].datatype != d->datatype)
            flag("V4", {ents_[i], ents_[c], d->property, d->datatype});
    }
  }

  Partition partition(const std::vector<int>& members, const std::set<Pair>& equal) const {
    Partition out;
    std::set<int> placed;
    for (int x : members) {
      if (placed.count(x)) continue;
      std::vector<EntityRef> group;
      for (int y : members)
        if (equal.count({x, y}) && equal.count({y, x})) {
          group.push_back(ents_[y]);
          placed.insert(y);
        }
      std::sort(group.begin(), group.end());
      out.push_back(group);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void hierarchy_axioms(AxiomSet& out, const std::vector<int>& members, const Hier& h) const {
    for (auto [x, y] : h.sub) {
      if (x == y) continue;
      out.insert({h.equivalent(x, y) ? ExpressionKind::Equivalent : ExpressionKind::Super, ents_[x],
                  ents_[y]});
    }
    for (auto [x, y] : h.disjoint) out.insert({ExpressionKind::Disjoint, ents_[x], ents_[y]});
    (void)members;
  }

  InferenceSnapshot output() const {
    InferenceSnapshot s;
    s.options = options_;
    auto& out = s.entailed;
    hierarchy_axioms(out, classes_, chier_);
    hierarchy_axioms(out, oprops_, ohier_);
    hierarchy_axioms(out, dprops_, dhier_);
    for (auto& a : onto_.axioms().canonical())
      if (std::holds_alternative<Restriction>(a.object)) out.insert(a);
    for (auto [x, y] : inverse_) out.insert({ExpressionKind::Inverse, ents_[x], ents_[y]});
    for (auto [i, c] : types_) out.insert({ExpressionKind::Instance, ents_[c], ents_[i]});
    for (auto [x, y] : same_rel_)
      if (x != y) out.insert({ExpressionKind::Equivalent, ents_[x], ents_[y]});
    for (auto [x, y] : diff_rel_)
      if (x != y) out.insert({ExpressionKind::Disjoint, ents_[x], ents_[y]});
    for (auto& [p, a, b] : links_)
      out.insert({ExpressionKind::ObjectLink, ents_[a], ObjectPair{ents_[p], ents_[b]}});
    for (auto& [p, a, l] : data_)
      out.insert({ExpressionKind::DataLink, ents_[a], DataPair{ents_[p], lits_[l]}});

    s.class_groups = partition(classes_, chier_.sub);
    s.object_property_groups = partition(oprops_, ohier_.sub);
    s.data_property_groups = partition(dprops_, dhier_.sub);
    s.individual_groups = partition(inds_, same_rel_);

    for (auto& v : violations_) {
      auto copy = v;
      copy.detail = describe_violation(v.rule, v.entities);
      s.consistency.violations.push_back(copy);
    }
    s.consistency.consistent = violations_.empty();
    for (int x : classes_)
      if (x != bottom_ && chier_.below(x, bottom_)) s.consistency.unsatisfiable.insert(ents_[x]);
    return s;
  }

  const Ontology& onto_;
  ReasonerOptions options_;
  std::vector<EntityRef> ents_;
  std::map<EntityRef, int> ids_;
  std::vector<int> classes_, inds_, oprops_, dprops_;
  std::vector<Literal> lits_;

  std::vector<Pair> class_sub_, class_dis_, oprop_sub_, oprop_dis_, dprop_sub_, dprop_dis_;
  std::vector<Pair> same_, diff_, type_seed_, inverse_seed_, odom_, orng_, ddom_;
  std::vector<Triple> link_seed_, data_seed_;
  std::map<int, std::vector<Restriction>> defs_;
  std::set<int> trans_, sym_;

  std::set<Pair> same_rel_, diff_rel_, inverse_;
  Hier ohier_, dhier_, chier_;
  int top_ = 0, bottom_ = 0;

  std::set<Triple> links_, data_;
  std::set<Pair> types_;
  std::set<Violation> violations_;
};

}  // namespace

InferenceSnapshot naive_fixpoint(const Ontology& onto, ReasonerOptions options) {
  return Naive(onto, options).run();
}

}  // namespace oracle
