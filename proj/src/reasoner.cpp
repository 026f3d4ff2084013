#include "ontomap/reasoner.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "ontomap/errors.hpp"
#include "ontomap/validate.hpp"

namespace ontomap {

namespace {

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

  bool test(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1U;
  }

  /// True when the bit was clear.
  bool set(std::size_t r, std::size_t c) {
    auto& word = bits_[r * words_ + c / 64];
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    if (word & mask) return false;
    word |= mask;
    return true;
  }

  void merge_row(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < words_; ++w) bits_[dst * words_ + w] |= bits_[src * words_ + w];
  }

  template <class F>
  void for_each(std::size_t r, F&& f) const {
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t word = bits_[r * words_ + w];
      while (word) {
        int bit = __builtin_ctzll(word);
        f(w * 64 + static_cast<std::size_t>(bit));
        word &= word - 1;
      }
    }
  }

  bool empty_row(std::size_t r) const {
    for (std::size_t w = 0; w < words_; ++w)
      if (bits_[r * words_ + w]) return false;
    return true;
  }

  std::size_t rows() const { return rows_; }

 private:
  std::size_t rows_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

template <class T>
class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<T> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    for (std::size_t i = 0; i < items_.size(); ++i) index_.emplace(items_[i], i);
  }
  std::size_t size() const { return items_.size(); }
  const T& at(std::size_t i) const { return items_[i]; }
  std::size_t index(const T& item) const { return index_.at(item); }

 private:
  std::vector<T> items_;
  std::map<T, std::size_t> index_;
};

using Edge = std::pair<std::size_t, std::size_t>;

// Reflexive-transitive closure of a small directed graph (Warshall on rows).
BitMatrix reachability(std::size_t n, const std::vector<Edge>& edges) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  for (auto [a, b] : edges) m.set(a, b);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (i != k && m.test(i, k)) m.merge_row(i, k);
  return m;
}

// Group ids for mutual reachability, numbered by first member.
std::vector<std::size_t> mutual_groups(const BitMatrix& sub, std::size_t n) {
  std::vector<std::size_t> group(n, n);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (group[i] != n) continue;
    for (std::size_t j = i; j < n; ++j)
      if (group[j] == n && sub.test(i, j) && sub.test(j, i)) group[j] = next;
    ++next;
  }
  return group;
}

template <class T>
Partition to_partition(const Universe<EntityRef>& u, const std::vector<T>& group_of) {
  std::map<T, std::vector<EntityRef>> by_group;
  for (std::size_t i = 0; i < u.size(); ++i) by_group[group_of[i]].push_back(u.at(i));
  Partition out;
  for (auto& [g, members] : by_group) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// One property or class hierarchy after the RBox/TBox stratum.
struct Hierarchy {
  BitMatrix sub;       // reflexive: sub(x, y) iff x is below or equal to y
  BitMatrix disjoint;  // irreflexive, symmetric
  std::vector<std::size_t> group;
};

Hierarchy close_hierarchy(std::size_t n, const std::vector<Edge>& edges,
                          const std::vector<Edge>& disjoint_pairs) {
  Hierarchy h;
  h.sub = reachability(n, edges);
  h.group = mutual_groups(h.sub, n);
  h.disjoint = BitMatrix(n, n);
  for (auto [a, b] : disjoint_pairs) {
    for (std::size_t x = 0; x < n; ++x) {
      if (!h.sub.test(x, a)) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (x != y && h.sub.test(y, b)) {
          h.disjoint.set(x, y);
          h.disjoint.set(y, x);
        }
      }
    }
  }
  return h;
}

struct Atom {
  enum class Kind { Bare, Object, Data } kind;
  std::size_t property = 0;  // object or data property index
  std::size_t cls = 0;       // Bare class, or Object filler class
  EntityRef datatype;        // Data filler
  std::uint32_t need = 1;    // distinct fillers required
};

struct Definition {
  std::size_t cls;
  std::vector<Atom> atoms;
};

class Engine {
 public:
  Engine(const Ontology& onto, ReasonerOptions options) : onto_(onto), options_(options) {}

  InferenceSnapshot run() {
    collect_universes();
    collect_facts();
    close_identity();
    close_properties();
    close_classes();
    close_links();
    close_types();
    check_consistency();
    return materialise();
  }

 private:
  void collect_universes() {
    std::vector<EntityRef> classes, individuals, oprops, dprops;
    for (auto& e : onto_.declarations()) {
      switch (e.kind) {
        case EntityKind::Class: classes.push_back(e); break;
        case EntityKind::NamedIndividual: individuals.push_back(e); break;
        case EntityKind::ObjectProperty: oprops.push_back(e); break;
        case EntityKind::DataProperty: dprops.push_back(e); break;
        case EntityKind::Datatype: break;
      }
    }
    classes_ = Universe<EntityRef>(std::move(classes));
    individuals_ = Universe<EntityRef>(std::move(individuals));
    oprops_ = Universe<EntityRef>(std::move(oprops));
    dprops_ = Universe<EntityRef>(std::move(dprops));

    std::vector<Literal> literals;
    for (auto& a : onto_.axioms().canonical())
      if (auto* p = std::get_if<DataPair>(&a.object); p && p->value) literals.push_back(*p->value);
    literals_ = Universe<Literal>(std::move(literals));
  }

  std::size_t cls(const EntityRef& e) const { return classes_.index(e); }
  std::size_t ind(const EntityRef& e) const { return individuals_.index(e); }
  std::size_t op(const EntityRef& e) const { return oprops_.index(e); }
  std::size_t dp(const EntityRef& e) const { return dprops_.index(e); }

  void collect_facts() {
    for (auto& a : onto_.axioms().canonical()) {
      const EntityRef* other = std::get_if<EntityRef>(&a.object);
      switch (a.subject.kind) {
        case EntityKind::Class: collect_class_fact(a, other); break;
        case EntityKind::NamedIndividual: collect_individual_fact(a, other); break;
        case EntityKind::ObjectProperty:
        case EntityKind::DataProperty: collect_property_fact(a, other); break;
        case EntityKind::Datatype: break;
      }
    }
    trans_.assign(oprops_.size(), false);
    sym_.assign(oprops_.size(), false);
    for (auto& [p, c] : onto_.characteristics()) {
      (c == Characteristic::Transitive ? trans_ : sym_)[op(p)] = true;
    }
  }

  void collect_class_fact(const Axiom& a, const EntityRef* other) {
    auto s = cls(a.subject);
    switch (a.expression) {
      case ExpressionKind::Super: class_edges_.push_back({s, cls(*other)}); break;
      case ExpressionKind::Equivalent:
        class_edges_.push_back({s, cls(*other)});
        class_edges_.push_back({cls(*other), s});
        break;
      case ExpressionKind::Disjoint: class_disjoint_.push_back({s, cls(*other)}); break;
      case ExpressionKind::Instance: seed_types_.push_back({ind(*other), s}); break;
      case ExpressionKind::EquivalentRestriction: {
        auto& r = std::get<Restriction>(a.object);
        restrictions_[s].push_back(r);
        if (auto* b = std::get_if<BareClass>(&r)) class_edges_.push_back({s, cls(b->cls)});
        break;
      }
      default: break;
    }
  }

  void collect_individual_fact(const Axiom& a, const EntityRef* other) {
    auto s = ind(a.subject);
    switch (a.expression) {
      case ExpressionKind::Equivalent: same_pairs_.push_back({s, ind(*other)}); break;
      case ExpressionKind::Disjoint: different_pairs_.push_back({s, ind(*other)}); break;
      case ExpressionKind::ObjectLink: {
        auto& p = std::get<ObjectPair>(a.object);
        seed_links_.push_back({op(p.property), s, ind(*p.filler)});
        break;
      }
      case ExpressionKind::DataLink: {
        auto& p = std::get<DataPair>(a.object);
        seed_data_.push_back({dp(p.property), s, literals_.index(*p.value)});
        break;
      }
      default: break;
    }
  }

  void collect_property_fact(const Axiom& a, const EntityRef* other) {
    const bool object = a.subject.kind == EntityKind::ObjectProperty;
    auto idx = [&](const EntityRef& e) { return object ? op(e) : dp(e); };
    auto s = idx(a.subject);
    auto& edges = object ? oprop_edges_ : dprop_edges_;
    switch (a.expression) {
      case ExpressionKind::Super: edges.push_back({s, idx(*other)}); break;
      case ExpressionKind::Equivalent:
        edges.push_back({s, idx(*other)});
        edges.push_back({idx(*other), s});
        break;
      case ExpressionKind::Disjoint:
        (object ? oprop_disjoint_ : dprop_disjoint_).push_back({s, idx(*other)});
        break;
      case ExpressionKind::Inverse: inverse_pairs_.push_back({s, idx(*other)}); break;
      case ExpressionKind::Domain:
      case ExpressionKind::Range: {
        auto* b = std::get_if<BareClass>(&std::get<Restriction>(a.object));
        if (!b) break;
        bool domain = a.expression == ExpressionKind::Domain;
        if (object) {
          (domain ? object_domain_ : object_range_).push_back({s, cls(b->cls)});
        } else if (domain) {
          data_domain_.push_back({s, cls(b->cls)});
        }
        break;
      }
      default: break;
    }
  }

  // --- identity ---------------------------------------------------------

  void close_identity() {
    const auto n = individuals_.size();
    DisjointSets sets(n);
    for (auto [a, b] : same_pairs_) sets.unite(a, b);
    group_of_.resize(n);
    for (std::size_t i = 0; i < n; ++i) group_of_[i] = sets.find(i);
    members_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) members_[group_of_[i]].push_back(i);
    different_groups_ = BitMatrix(n, n);
    for (auto [a, b] : different_pairs_) {
      different_groups_.set(group_of_[a], group_of_[b]);
      different_groups_.set(group_of_[b], group_of_[a]);
    }
  }

  // --- RBox -------------------------------------------------------------

  void close_properties() {
    ohier_ = close_hierarchy(oprops_.size(), oprop_edges_, oprop_disjoint_);
    dhier_ = close_hierarchy(dprops_.size(), dprop_edges_, dprop_disjoint_);

    const auto n = oprops_.size();
    // Characteristics hold for the whole equivalence group.
    std::vector<bool> gtrans(n, false), gsym(n, false);
    for (std::size_t p = 0; p < n; ++p) {
      if (trans_[p]) gtrans[ohier_.group[p]] = true;
      if (sym_[p]) gsym[ohier_.group[p]] = true;
    }
    for (std::size_t p = 0; p < n; ++p) {
      trans_[p] = gtrans[ohier_.group[p]];
      sym_[p] = gsym[ohier_.group[p]];
    }

    inverse_ = BitMatrix(n, n);
    for (auto [a, b] : inverse_pairs_) {
      for (std::size_t x = 0; x < n; ++x) {
        if (ohier_.group[x] != ohier_.group[a]) continue;
        for (std::size_t y = 0; y < n; ++y) {
          if (ohier_.group[y] != ohier_.group[b]) continue;
          inverse_.set(x, y);
          inverse_.set(y, x);
        }
      }
    }
  }

  // --- TBox -------------------------------------------------------------

  void close_classes() {
    const auto n = classes_.size();
    top_ = cls(thing());
    bottom_ = cls(nothing());
    std::vector<Edge> edges = class_edges_;
    for (std::size_t x = 0; x < n; ++x) {
      edges.push_back({x, top_});
      edges.push_back({bottom_, x});
    }
    BitMatrix sub = reachability(n, edges);
    for (;;) {
      bool grew = false;
      for (auto [a, b] : class_disjoint_) {
        for (std::size_t x = 0; x < n; ++x) {
          if (sub.test(x, a) && sub.test(x, b) && !sub.test(x, bottom_)) {
            edges.push_back({x, bottom_});
            grew = true;
          }
        }
      }
      if (!grew) break;
      sub = reachability(n, edges);
    }
    chier_ = close_hierarchy(n, edges, class_disjoint_);
  }

  // --- links ------------------------------------------------------------

  void add_link(std::size_t p, std::size_t a, std::size_t b) {
    if (!links_[p].set(a, b)) return;
    links_in_[p].set(b, a);
    link_queue_.push_back({p, a, b});
  }

  void add_data(std::size_t p, std::size_t a, std::size_t l) {
    if (!data_[p].set(a, l)) return;
    data_queue_.push_back({p, a, l});
  }

  void close_links() {
    const auto ni = individuals_.size();
    links_.assign(oprops_.size(), BitMatrix(ni, ni));
    links_in_.assign(oprops_.size(), BitMatrix(ni, ni));
    data_.assign(dprops_.size(), BitMatrix(ni, literals_.size()));

    for (auto& [p, a, b] : seed_links_) add_link(p, a, b);
    while (!link_queue_.empty()) {
      auto [p, a, b] = link_queue_.back();
      link_queue_.pop_back();
      for (std::size_t q = 0; q < oprops_.size(); ++q) {
        if (q != p && ohier_.sub.test(p, q)) add_link(q, a, b);
        if (inverse_.test(p, q)) add_link(q, b, a);
      }
      if (sym_[p]) add_link(p, b, a);
      if (trans_[p]) {
        std::vector<std::size_t> after, before;
        links_[p].for_each(b, [&](std::size_t c) { after.push_back(c); });
        links_in_[p].for_each(a, [&](std::size_t z) { before.push_back(z); });
        for (auto c : after) add_link(p, a, c);
        for (auto z : before) add_link(p, z, b);
      }
      for (auto a2 : members_[group_of_[a]])
        for (auto b2 : members_[group_of_[b]]) add_link(p, a2, b2);
    }

    for (auto& [p, a, l] : seed_data_) add_data(p, a, l);
    while (!data_queue_.empty()) {
      auto [p, a, l] = data_queue_.back();
      data_queue_.pop_back();
      for (std::size_t q = 0; q < dprops_.size(); ++q)
        if (q != p && dhier_.sub.test(p, q)) add_data(q, a, l);
      for (auto a2 : members_[group_of_[a]]) add_data(p, a2, l);
    }
  }

  // --- types ------------------------------------------------------------

  void add_type(std::size_t i, std::size_t c) {
    if (types_.set(i, c)) type_queue_.push_back({i, c});
  }

  void build_definitions() {
    bare_triggers_.assign(classes_.size(), {});
    filler_triggers_.assign(classes_.size(), {});
    for (auto& [c, rs] : restrictions_) {
      Definition def{c, {}};
      bool positive = true;
      for (auto& r : rs) {
        if (auto* b = std::get_if<BareClass>(&r)) {
          def.atoms.push_back({Atom::Kind::Bare, 0, cls(b->cls), {}, 1});
        } else if (auto* o = std::get_if<ObjectRestriction>(&r)) {
          auto q = o->cardinality.quantifier;
          if (q != Quantifier::Some && q != Quantifier::Min) {
            positive = false;
            break;
          }
          def.atoms.push_back({Atom::Kind::Object, op(o->property), cls(o->filler), {},
                               q == Quantifier::Min ? o->cardinality.n : 1U});
        } else if (auto* d = std::get_if<DataRestriction>(&r)) {
          auto q = d->cardinality.quantifier;
          if (q != Quantifier::Some && q != Quantifier::Min) {
            positive = false;
            break;
          }
          def.atoms.push_back({Atom::Kind::Data, dp(d->property), 0, d->datatype,
                               q == Quantifier::Min ? d->cardinality.n : 1U});
        } else {
          positive = false;
          break;
        }
      }
      if (!positive || def.atoms.empty()) continue;
      auto id = definitions_.size();
      for (auto& atom : def.atoms) {
        if (atom.kind == Atom::Kind::Bare) bare_triggers_[atom.cls].push_back(id);
        if (atom.kind == Atom::Kind::Object)
          filler_triggers_[atom.cls].push_back({id, atom.property});
      }
      definitions_.push_back(std::move(def));
    }
  }

  // Largest set of pairwise-distinct filler groups reaches `need`?
  bool distinct_at_least(std::vector<std::size_t> groups, std::uint32_t need) const {
    std::sort(groups.begin(), groups.end());
    groups.erase(std::unique(groups.begin(), groups.end()), groups.end());
    if (groups.size() < need) return false;
    if (options_.unique_name_assumption) return true;
    return extend_clique(groups, need);
  }

  bool extend_clique(const std::vector<std::size_t>& candidates, std::uint32_t need) const {
    if (need == 0) return true;
    if (candidates.size() < need) return false;
    for (std::size_t i = 0; i + need <= candidates.size(); ++i) {
      std::vector<std::size_t> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (different_groups_.test(candidates[i], candidates[j])) next.push_back(candidates[j]);
      if (extend_clique(next, need - 1)) return true;
    }
    return false;
  }

  std::vector<std::size_t> filler_groups(std::size_t i, std::size_t p, std::size_t filler) const {
    std::vector<std::size_t> groups;
    links_[p].for_each(i, [&](std::size_t b) {
      if (types_.test(b, filler)) groups.push_back(group_of_[b]);
    });
    return groups;
  }

  std::size_t literal_count(std::size_t i, std::size_t p, const EntityRef& datatype) const {
    std::size_t n = 0;
    data_[p].for_each(i, [&](std::size_t l) {
      if (literals_.at(l).datatype == datatype) ++n;
    });
    return n;
  }

  bool satisfies(std::size_t i, const Definition& def) const {
    for (auto& atom : def.atoms) {
      switch (atom.kind) {
        case Atom::Kind::Bare:
          if (!types_.test(i, atom.cls)) return false;
          break;
        case Atom::Kind::Object:
          if (!distinct_at_least(filler_groups(i, atom.property, atom.cls), atom.need))
            return false;
          break;
        case Atom::Kind::Data:
          if (literal_count(i, atom.property, atom.datatype) < atom.need) return false;
          break;
      }
    }
    return true;
  }

  void classify(std::size_t i, std::size_t def_id) {
    auto& def = definitions_[def_id];
    if (!types_.test(i, def.cls) && satisfies(i, def)) add_type(i, def.cls);
  }

  void close_types() {
    const auto ni = individuals_.size();
    types_ = BitMatrix(ni, classes_.size());
    build_definitions();

    for (auto [i, c] : seed_types_) add_type(i, c);
    for (std::size_t i = 0; i < ni; ++i) add_type(i, top_);
    for (auto [p, c] : object_domain_)
      for (std::size_t a = 0; a < ni; ++a)
        if (!links_[p].empty_row(a)) add_type(a, c);
    for (auto [p, c] : object_range_)
      for (std::size_t b = 0; b < ni; ++b)
        if (!links_in_[p].empty_row(b)) add_type(b, c);
    for (auto [p, c] : data_domain_)
      for (std::size_t a = 0; a < ni; ++a)
        if (!data_[p].empty_row(a)) add_type(a, c);

    for (std::size_t d = 0; d < definitions_.size(); ++d)
      for (std::size_t i = 0; i < ni; ++i) classify(i, d);

    while (!type_queue_.empty()) {
      auto [i, c] = type_queue_.back();
      type_queue_.pop_back();
      chier_.sub.for_each(c, [&](std::size_t up) { add_type(i, up); });
      for (auto i2 : members_[group_of_[i]]) add_type(i2, c);
      for (auto d : bare_triggers_[c]) classify(i, d);
      for (auto [d, p] : filler_triggers_[c]) {
        std::vector<std::size_t> owners;
        links_in_[p].for_each(i, [&](std::size_t z) { owners.push_back(z); });
        for (auto z : owners) classify(z, d);
      }
    }
  }

  // --- consistency ------------------------------------------------------

  void violation(std::string rule, std::vector<EntityRef> entities) {
    violations_.insert(Violation{rule, entities, describe_violation(rule, entities)});
  }

  void check_consistency() {
    const auto ni = individuals_.size();
    const auto nc = classes_.size();
    for (std::size_t i = 0; i < ni; ++i) {
      std::vector<std::size_t> types;
      types_.for_each(i, [&](std::size_t c) { types.push_back(c); });
      for (std::size_t x = 0; x < types.size(); ++x)
        for (std::size_t y = x + 1; y < types.size(); ++y)
          if (chier_.disjoint.test(types[x], types[y]))
            violation("V1", {individuals_.at(i), classes_.at(types[x]), classes_.at(types[y])});
      for (auto c : types) {
        if (chier_.sub.test(c, bottom_)) violation("V5", {individuals_.at(i), classes_.at(c)});
        auto it = restrictions_.find(c);
        if (it == restrictions_.end()) continue;
        for (auto& r : it->second) check_restriction(i, c, r);
      }
    }
    for (auto [a, b] : different_pairs_)
      if (group_of_[a] == group_of_[b])
        violation("V2", {individuals_.at(std::min(a, b)), individuals_.at(std::max(a, b))});

    for (std::size_t c = 0; c < nc; ++c)
      if (c != bottom_ && chier_.sub.test(c, bottom_)) unsatisfiable_.insert(classes_.at(c));
  }

  void check_restriction(std::size_t i, std::size_t c, const Restriction& r) {
    if (auto* o = std::get_if<ObjectRestriction>(&r)) {
      auto q = o->cardinality.quantifier;
      auto p = op(o->property);
      auto filler = cls(o->filler);
      if (q == Quantifier::Max || q == Quantifier::Exact) {
        if (distinct_at_least(filler_groups(i, p, filler), o->cardinality.n + 1))
          violation("V3", {individuals_.at(i), classes_.at(c), o->property, o->filler});
      } else if (q == Quantifier::Only) {
        links_[p].for_each(i, [&](std::size_t b) {
          bool clash = false;
          types_.for_each(b, [&](std::size_t e) { clash = clash || chier_.disjoint.test(e, filler); });
          if (clash)
            violation("V4", {individuals_.at(i), classes_.at(c), o->property, individuals_.at(b)});
        });
      }
    } else if (auto* d = std::get_if<DataRestriction>(&r)) {
      auto q = d->cardinality.quantifier;
      auto p = dp(d->property);
      if (q == Quantifier::Max || q == Quantifier::Exact) {
        if (literal_count(i, p, d->datatype) > d->cardinality.n)
          violation("V3", {individuals_.at(i), classes_.at(c), d->property, d->datatype});
      } else if (q == Quantifier::Only) {
        bool clash = false;
        data_[p].for_each(i, [&](std::size_t l) {
          clash = clash || literals_.at(l).datatype != d->datatype;
        });
        if (clash) violation("V4", {individuals_.at(i), classes_.at(c), d->property, d->datatype});
      }
    }
  }

  // --- output -----------------------------------------------------------

  void materialise_hierarchy(AxiomSet& out, const Universe<EntityRef>& u, const Hierarchy& h) {
    for (std::size_t x = 0; x < u.size(); ++x) {
      for (std::size_t y = 0; y < u.size(); ++y) {
        if (x == y) continue;
        if (h.sub.test(x, y)) {
          auto kind = h.sub.test(y, x) ? ExpressionKind::Equivalent : ExpressionKind::Super;
          out.insert({kind, u.at(x), u.at(y)});
        }
        if (h.disjoint.test(x, y)) out.insert({ExpressionKind::Disjoint, u.at(x), u.at(y)});
      }
    }
  }

  InferenceSnapshot materialise() {
    InferenceSnapshot snap;
    snap.options = options_;
    auto& out = snap.entailed;

    materialise_hierarchy(out, classes_, chier_);
    materialise_hierarchy(out, oprops_, ohier_);
    materialise_hierarchy(out, dprops_, dhier_);

    for (auto& a : onto_.axioms().canonical()) {
      // Restriction-valued facts are carried over unchanged.
      if (std::holds_alternative<Restriction>(a.object)) out.insert(a);
    }
    for (std::size_t p = 0; p < oprops_.size(); ++p) {
      inverse_.for_each(p, [&](std::size_t q) {
        out.insert({ExpressionKind::Inverse, oprops_.at(p), oprops_.at(q)});
      });
    }

    const auto ni = individuals_.size();
    for (std::size_t i = 0; i < ni; ++i) {
      const auto& who = individuals_.at(i);
      types_.for_each(i, [&](std::size_t c) {
        out.insert({ExpressionKind::Instance, classes_.at(c), who});
      });
      for (std::size_t j = 0; j < ni; ++j) {
        if (i == j) continue;
        if (group_of_[i] == group_of_[j])
          out.insert({ExpressionKind::Equivalent, who, individuals_.at(j)});
        if (different_groups_.test(group_of_[i], group_of_[j]))
          out.insert({ExpressionKind::Disjoint, who, individuals_.at(j)});
      }
      for (std::size_t p = 0; p < oprops_.size(); ++p) {
        links_[p].for_each(i, [&](std::size_t b) {
          out.insert({ExpressionKind::ObjectLink, who, ObjectPair{oprops_.at(p), individuals_.at(b)}});
        });
      }
      for (std::size_t p = 0; p < dprops_.size(); ++p) {
        data_[p].for_each(i, [&](std::size_t l) {
          out.insert({ExpressionKind::DataLink, who, DataPair{dprops_.at(p), literals_.at(l)}});
        });
      }
    }

    snap.class_groups = to_partition(classes_, chier_.group);
    snap.object_property_groups = to_partition(oprops_, ohier_.group);
    snap.data_property_groups = to_partition(dprops_, dhier_.group);
    snap.individual_groups = to_partition(individuals_, group_of_);

    snap.consistency.violations.assign(violations_.begin(), violations_.end());
    snap.consistency.consistent = violations_.empty();
    snap.consistency.unsatisfiable = unsatisfiable_;
    return snap;
  }

  const Ontology& onto_;
  ReasonerOptions options_;

  Universe<EntityRef> classes_, individuals_, oprops_, dprops_;
  Universe<Literal> literals_;

  std::vector<Edge> class_edges_, class_disjoint_;
  std::vector<Edge> oprop_edges_, oprop_disjoint_, dprop_edges_, dprop_disjoint_;
  std::vector<Edge> inverse_pairs_;
  std::vector<Edge> object_domain_, object_range_, data_domain_;
  std::vector<Edge> seed_types_;  // (individual, class)
  std::vector<Edge> same_pairs_, different_pairs_;
  std::vector<std::array<std::size_t, 3>> seed_links_, seed_data_;
  std::map<std::size_t, std::vector<Restriction>> restrictions_;
  std::vector<bool> trans_, sym_;

  std::vector<std::size_t> group_of_;
  std::vector<std::vector<std::size_t>> members_;
  BitMatrix different_groups_;

  Hierarchy ohier_, dhier_, chier_;
  BitMatrix inverse_;
  std::size_t top_ = 0, bottom_ = 0;

  std::vector<BitMatrix> links_, links_in_, data_;
  std::vector<std::array<std::size_t, 3>> link_queue_, data_queue_;

  BitMatrix types_;
  std::vector<Edge> type_queue_;
  std::vector<Definition> definitions_;
  std::vector<std::vector<std::size_t>> bare_triggers_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> filler_triggers_;

  std::set<Violation> violations_;
  std::set<EntityRef> unsatisfiable_;
};

}  // namespace

std::string describe_violation(const std::string& rule, const std::vector<EntityRef>& e) {
  auto name = [&](std::size_t k) { return k < e.size() ? render(e[k]) : std::string("?"); };
  if (rule == "V1")
    return name(0) + " is typed by disjoint classes " + name(1) + " and " + name(2);
  if (rule == "V2") return name(0) + " and " + name(1) + " are both same and different";
  if (rule == "V3")
    return name(0) + " exceeds the maximum " + name(2) + " fillers of " + name(3) +
           " allowed by " + name(1);
  if (rule == "V4")
    return name(0) + " has a " + name(2) + " filler " + name(3) +
           " outside the only-restriction of " + name(1);
  if (rule == "V5") return name(0) + " is an instance of unsatisfiable class " + name(1);
  return rule;
}

bool same_closure(const InferenceSnapshot& a, const InferenceSnapshot& b) {
  return a.entailed == b.entailed && a.class_groups == b.class_groups &&
         a.object_property_groups == b.object_property_groups &&
         a.data_property_groups == b.data_property_groups &&
         a.individual_groups == b.individual_groups &&
         a.consistency.consistent == b.consistency.consistent &&
         a.consistency.violations == b.consistency.violations &&
         a.consistency.unsatisfiable == b.consistency.unsatisfiable;
}

InferenceSnapshot compute_closure(const Ontology& onto, ReasonerOptions options) {
  return Engine(onto, options).run();
}

std::shared_ptr<const InferenceSnapshot> synchronise_reasoner(Ontology& onto,
                                                              ReasonerOptions options) {
  auto snap = std::make_shared<InferenceSnapshot>(compute_closure(onto, options));
  snap->sequence = onto.sync_count() + 1;
  onto.publish_snapshot(snap);
  return snap;
}

const std::set<Element>& entailed_entity_set(const Ontology& onto, const EntityRef& subject,
                                             ExpressionKind kind) {
  if (!expression_allowed(subject.kind, kind)) {
    throw ValidationError(std::string(to_string(kind)) + " is not defined for a " +
                          std::string(to_string(subject.kind)) + " ground");
  }
  const auto* snap = onto.snapshot();
  if (!snap) throw NoSnapshotError();
  return snap->entailed.slice(subject, kind);
}

bool is_entailed(const Ontology& onto, const Axiom& a) {
  const auto* snap = onto.snapshot();
  if (!snap) throw NoSnapshotError();
  return snap->entailed.contains(a);
}

}  // namespace ontomap
