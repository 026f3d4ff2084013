#include "ontomap/syntax.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "ontomap/errors.hpp"
#include "ontomap/validate.hpp"

namespace ontomap {

namespace {

// --- lexer ----------------------------------------------------------------

struct Token {
  enum Kind { LParen, RParen, Equals, FullIri, Name, String, Integer, End } kind = End;
  std::string text;
  std::optional<std::string> datatype;  // for String: the name after ^^
  std::size_t line = 1;
  std::size_t column = 1;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
bool is_delimiter(char c) {
  return is_space(c) || c == '(' || c == ')' || c == '=' || c == '<' || c == '>' || c == '"';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    switch (c) {
      case '(': advance(); t.kind = Token::LParen; return t;
      case ')': advance(); t.kind = Token::RParen; return t;
      case '=': advance(); t.kind = Token::Equals; return t;
      case '<': return full_iri(t);
      case '"': return string(t);
      case '>': throw ParseError(t.line, t.column, "unexpected '>'");
      default: break;
    }
    t.text = name();
    t.kind = std::all_of(t.text.begin(), t.text.end(), [](char ch) { return ch >= '0' && ch <= '9'; })
                 ? Token::Integer
                 : Token::Name;
    return t;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      if (is_space(text_[pos_])) {
        advance();
      } else if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string name() {
    std::string out;
    while (pos_ < text_.size() && !is_delimiter(text_[pos_])) {
      out += text_[pos_];
      advance();
    }
    return out;
  }

  Token full_iri(Token t) {
    advance();
    while (pos_ < text_.size() && text_[pos_] != '>') {
      char c = text_[pos_];
      if (is_space(c) || c == '<' || c == '"')
        throw ParseError(line_, column_, "illegal character in IRI");
      t.text += c;
      advance();
    }
    if (pos_ >= text_.size()) throw ParseError(t.line, t.column, "unterminated IRI");
    advance();
    if (t.text.empty()) throw ParseError(t.line, t.column, "empty IRI");
    t.kind = Token::FullIri;
    return t;
  }

  Token string(Token t) {
    advance();
    for (;;) {
      if (pos_ >= text_.size()) throw ParseError(t.line, t.column, "unterminated string");
      char c = text_[pos_];
      if (c == '"') break;
      if (c == '\\') {
        advance();
        if (pos_ >= text_.size() || (text_[pos_] != '"' && text_[pos_] != '\\'))
          throw ParseError(line_, column_, "unknown escape in string");
        c = text_[pos_];
      }
      t.text += c;
      advance();
    }
    advance();
    if (text_.substr(pos_, 2) == "^^") {
      advance();
      advance();
      auto dt = name();
      if (dt.empty()) throw ParseError(line_, column_, "expected a datatype after ^^");
      t.datatype = dt;
    }
    t.kind = Token::String;
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Token::LParen: return "'('";
    case Token::RParen: return "')'";
    case Token::Equals: return "'='";
    case Token::FullIri: return "<" + t.text + ">";
    case Token::String: return "a string";
    case Token::End: return "end of input";
    default: return "'" + t.text + "'";
  }
}

// --- statement forms --------------------------------------------------------

// Serialization order of statement forms.
constexpr std::array<std::string_view, 23> kForms = {
    "Declaration",
    "SubClassOf",
    "EquivalentClasses",
    "DisjointClasses",
    "SubObjectPropertyOf",
    "EquivalentObjectProperties",
    "DisjointObjectProperties",
    "InverseObjectProperties",
    "ObjectPropertyDomain",
    "ObjectPropertyRange",
    "TransitiveObjectProperty",
    "SymmetricObjectProperty",
    "SubDataPropertyOf",
    "EquivalentDataProperties",
    "DisjointDataProperties",
    "DataPropertyDomain",
    "DataPropertyRange",
    "ClassAssertion",
    "ObjectPropertyAssertion",
    "DataPropertyAssertion",
    "SameIndividual",
    "DifferentIndividuals",
    "",
};

std::size_t form_rank(std::string_view line) {
  auto head = line.substr(0, line.find('('));
  for (std::size_t i = 0; i < kForms.size(); ++i)
    if (kForms[i] == head) return i;
  return kForms.size();
}

std::string_view kind_keyword(EntityKind k) {
  switch (k) {
    case EntityKind::Class: return "Class";
    case EntityKind::NamedIndividual: return "NamedIndividual";
    case EntityKind::ObjectProperty: return "ObjectProperty";
    case EntityKind::DataProperty: return "DataProperty";
    case EntityKind::Datatype: return "Datatype";
  }
  return "?";
}

// --- parser ---------------------------------------------------------------

struct ClassOperand {
  std::optional<EntityRef> named;       // a bare class name
  std::vector<Restriction> conjuncts;  // always filled
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  ParsedDocument run() {
    PrefixMap declared;
    while (is_keyword("Prefix")) parse_prefix(declared);

    auto onto = std::make_unique<Ontology>("ontology", complete(declared));
    prefixes_ = &onto->prefixes();
    std::size_t count = 0;
    if (is_keyword("Ontology")) {
      auto at = tok_;
      shift();
      expect(Token::LParen);
      std::string iri;
      if (tok_.kind == Token::FullIri) {
        iri = tok_.text;
        shift();
      }
      auto named = std::make_unique<Ontology>(ontology_name(iri), onto->prefixes());
      named->set_iri(iri);
      onto = std::move(named);
      prefixes_ = &onto->prefixes();
      onto_ = onto.get();
      while (tok_.kind != Token::RParen) {
        if (tok_.kind == Token::End) throw ParseError(at.line, at.column, "unclosed Ontology(");
        parse_statement();
        ++count;
      }
      shift();
    }
    if (tok_.kind != Token::End)
      throw error(tok_, "expected end of input, found " + describe(tok_));
    return ParsedDocument{std::move(*onto), count};
  }

 private:
  void shift() { tok_ = lexer_.next(); }

  static ParseError error(const Token& t, const std::string& message) {
    return ParseError(t.line, t.column, message);
  }

  bool is_keyword(std::string_view word) const {
    return tok_.kind == Token::Name && tok_.text == word;
  }

  Token expect(Token::Kind kind) {
    if (tok_.kind != kind) {
      Token want;
      want.kind = kind;
      throw error(tok_, "expected " + describe(want) + ", found " + describe(tok_));
    }
    auto t = tok_;
    shift();
    return t;
  }

  std::string keyword() {
    if (tok_.kind != Token::Name || tok_.text.find(':') != std::string::npos)
      throw error(tok_, "expected a keyword, found " + describe(tok_));
    auto word = tok_.text;
    shift();
    return word;
  }

  void parse_prefix(PrefixMap& declared) {
    auto at = tok_;
    shift();
    expect(Token::LParen);
    auto name = expect(Token::Name);
    if (name.text.back() != ':' || name.text.find(':') != name.text.size() - 1)
      throw error(name, "expected a prefix name ending in ':'");
    expect(Token::Equals);
    auto iri = expect(Token::FullIri);
    expect(Token::RParen);
    auto key = name.text.substr(0, name.text.size() - 1);
    for (auto& [k, base] : declared)
      if (k == key) throw error(at, "prefix '" + name.text + "' declared twice");
    declared.emplace_back(key, iri.text);
  }

  static PrefixMap complete(PrefixMap declared) {
    for (auto& [key, base] : standard_prefixes()) {
      bool present = false;
      for (auto& [k, b] : declared) present = present || k == key;
      if (!present) declared.emplace_back(key, base);
    }
    return declared;
  }

  static std::string ontology_name(std::string iri) {
    while (!iri.empty() && (iri.back() == '/' || iri.back() == '#')) iri.pop_back();
    auto cut = iri.find_last_of("/#");
    auto name = cut == std::string::npos ? iri : iri.substr(cut + 1);
    return name.empty() ? "ontology" : name;
  }

  Iri iri_of(const Token& t) {
    if (t.kind == Token::FullIri) {
      const std::pair<std::string, std::string>* best = nullptr;
      for (auto& entry : *prefixes_)
        if (t.text.compare(0, entry.second.size(), entry.second) == 0 &&
            (!best || entry.second.size() > best->second.size()))
          best = &entry;
      if (best) {
        auto local = t.text.substr(best->second.size());
        if (!local.empty() && std::none_of(local.begin(), local.end(), is_delimiter))
          return Iri{best->first, local};
      }
      throw error(t, "no declared prefix abbreviates <" + t.text + ">");
    }
    if (t.kind != Token::Name || t.text.find(':') == std::string::npos)
      throw error(t, "expected an IRI, found " + describe(t));
    auto iri = Iri::parse(t.text);
    if (iri.name.empty()) throw error(t, "empty local name in '" + t.text + "'");
    bool known = false;
    for (auto& [k, base] : *prefixes_) known = known || k == iri.prefix;
    if (!known) throw error(t, "undeclared prefix '" + iri.prefix + ":'");
    return iri;
  }

  EntityRef entity(EntityKind kind) {
    auto t = tok_;
    EntityRef e{kind, iri_of(t)};
    shift();
    if (!onto_->is_declared(e)) {
      auto others = onto_->lookup(e.iri);
      if (!others.empty())
        throw error(t, render(e) + " is a " + std::string(to_string(others.front().kind)) +
                           ", not a " + std::string(to_string(kind)));
    }
    return e;
  }

  std::uint32_t integer() {
    auto t = expect(Token::Integer);
    if (t.text.size() > 10) throw error(t, "cardinality out of range");
    auto v = std::stoull(t.text);
    if (v > UINT32_MAX) throw error(t, "cardinality out of range");
    return static_cast<std::uint32_t>(v);
  }

  Literal literal() {
    auto t = expect(Token::String);
    EntityRef dt = xsd_string();
    if (t.datatype) {
      Token name = t;
      name.kind = Token::Name;
      name.text = *t.datatype;
      dt = EntityRef{EntityKind::Datatype, iri_of(name)};
    }
    Literal lit{t.text, dt};
    if (auto problem = literal_problem(lit)) throw error(t, *problem);
    return lit;
  }

  bool at_entity() const {
    return tok_.kind == Token::FullIri ||
           (tok_.kind == Token::Name && tok_.text.find(':') != std::string::npos);
  }

  Cardinality cardinality_for(std::string_view word, std::string_view family) {
    auto rest = word.substr(family.size());
    if (rest == "SomeValuesFrom") return Cardinality::some();
    if (rest == "AllValuesFrom") return Cardinality::only();
    if (rest == "MinCardinality") return Cardinality::min(integer());
    if (rest == "MaxCardinality") return Cardinality::max(integer());
    return Cardinality::exact(integer());
  }

  static bool restriction_keyword(std::string_view word, std::string_view family) {
    if (word.substr(0, family.size()) != family) return false;
    auto rest = word.substr(family.size());
    return rest == "SomeValuesFrom" || rest == "AllValuesFrom" || rest == "MinCardinality" ||
           rest == "MaxCardinality" || rest == "ExactCardinality";
  }

  // One conjunct: a class name or a single restriction with named filler.
  Restriction atom() {
    if (at_entity()) return BareClass{entity(EntityKind::Class)};
    auto at = tok_;
    auto word = keyword();
    expect(Token::LParen);
    Restriction r;
    if (restriction_keyword(word, "Object")) {
      auto c = cardinality_for(word, "Object");
      auto p = entity(EntityKind::ObjectProperty);
      EntityRef filler = thing();
      if (c.counted() && tok_.kind == Token::RParen) {
        // unqualified cardinality
      } else {
        filler = entity(EntityKind::Class);
      }
      r = ObjectRestriction{c, p, filler};
    } else if (restriction_keyword(word, "Data")) {
      auto c = cardinality_for(word, "Data");
      auto p = entity(EntityKind::DataProperty);
      r = DataRestriction{c, p, entity(EntityKind::Datatype)};
    } else if (word == "ClassCardinality") {
      auto q = keyword();
      Cardinality c;
      if (q == "some") c = Cardinality::some();
      else if (q == "only") c = Cardinality::only();
      else if (q == "min") c = Cardinality::min(integer());
      else if (q == "max") c = Cardinality::max(integer());
      else if (q == "exact") c = Cardinality::exact(integer());
      else throw error(at, "unknown quantifier '" + q + "'");
      r = ClassCardinality{c, entity(EntityKind::Class)};
    } else {
      throw error(at, "unknown class expression '" + word + "'");
    }
    expect(Token::RParen);
    if (auto problem = restriction_problem(r)) throw error(at, *problem);
    return r;
  }

  ClassOperand class_expression() {
    ClassOperand op;
    if (at_entity()) {
      op.named = entity(EntityKind::Class);
      op.conjuncts.push_back(BareClass{*op.named});
      return op;
    }
    if (is_keyword("ObjectIntersectionOf")) {
      shift();
      expect(Token::LParen);
      while (tok_.kind != Token::RParen) {
        if (tok_.kind == Token::End) throw error(tok_, "unclosed ObjectIntersectionOf(");
        op.conjuncts.push_back(atom());
      }
      shift();
      if (op.conjuncts.empty()) throw error(tok_, "empty ObjectIntersectionOf");
      return op;
    }
    op.conjuncts.push_back(atom());
    return op;
  }

  std::vector<EntityRef> entities_until_close(EntityKind kind, std::size_t at_least,
                                              const Token& at) {
    std::vector<EntityRef> out;
    while (tok_.kind != Token::RParen) out.push_back(entity(kind));
    shift();
    if (out.size() < at_least)
      throw error(at, "expected at least " + std::to_string(at_least) + " operands");
    return out;
  }

  void assert_all(const std::vector<Axiom>& axioms, const Token& at) {
    for (auto& a : axioms) {
      try {
        onto_->assert_axiom(a);
      } catch (const ValidationError& e) {
        throw error(at, e.what());
      }
    }
  }

  void pairwise(ExpressionKind kind, const std::vector<EntityRef>& es, const Token& at) {
    std::vector<Axiom> out;
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = i + 1; j < es.size(); ++j) out.push_back({kind, es[i], es[j]});
    assert_all(out, at);
  }

  void parse_statement() {
    auto at = tok_;
    auto word = keyword();
    expect(Token::LParen);
    using E = ExpressionKind;
    using K = EntityKind;

    if (word == "Declaration") {
      auto kw = keyword();
      std::optional<K> kind;
      for (auto k : {K::Class, K::NamedIndividual, K::ObjectProperty, K::DataProperty, K::Datatype})
        if (kind_keyword(k) == kw) kind = k;
      if (!kind) throw error(at, "unknown declaration kind '" + kw + "'");
      expect(Token::LParen);
      auto e = entity(*kind);
      expect(Token::RParen);
      expect(Token::RParen);
      onto_->declare(e);
    } else if (word == "SubClassOf") {
      auto sub = entity(K::Class);
      auto super = entity(K::Class);
      expect(Token::RParen);
      assert_all({{E::Super, sub, super}}, at);
    } else if (word == "EquivalentClasses") {
      std::vector<ClassOperand> ops;
      while (tok_.kind != Token::RParen) {
        if (tok_.kind == Token::End) throw error(at, "unclosed EquivalentClasses(");
        ops.push_back(class_expression());
      }
      shift();
      if (ops.size() < 2) throw error(at, "expected at least 2 operands");
      bool all_named = std::all_of(ops.begin(), ops.end(), [](auto& o) { return o.named.has_value(); });
      if (all_named) {
        std::vector<EntityRef> named;
        for (auto& o : ops) named.push_back(*o.named);
        pairwise(E::Equivalent, named, at);
      } else if (ops.size() == 2 && ops[0].named) {
        std::vector<Axiom> out;
        for (auto& r : ops[1].conjuncts) out.push_back({E::EquivalentRestriction, *ops[0].named, r});
        assert_all(out, at);
      } else {
        throw error(at, "a class expression must follow a single named class");
      }
    } else if (word == "DisjointClasses") {
      pairwise(E::Disjoint, entities_until_close(K::Class, 2, at), at);
    } else if (word == "ClassAssertion") {
      auto c = entity(K::Class);
      auto i = entity(K::NamedIndividual);
      expect(Token::RParen);
      assert_all({{E::Instance, c, i}}, at);
    } else if (word == "ObjectPropertyAssertion") {
      auto p = entity(K::ObjectProperty);
      auto a = entity(K::NamedIndividual);
      auto b = entity(K::NamedIndividual);
      expect(Token::RParen);
      assert_all({{E::ObjectLink, a, ObjectPair{p, b}}}, at);
    } else if (word == "DataPropertyAssertion") {
      auto p = entity(K::DataProperty);
      auto a = entity(K::NamedIndividual);
      auto v = literal();
      expect(Token::RParen);
      assert_all({{E::DataLink, a, DataPair{p, v}}}, at);
    } else if (word == "SubObjectPropertyOf" || word == "SubDataPropertyOf") {
      auto k = word == "SubObjectPropertyOf" ? K::ObjectProperty : K::DataProperty;
      auto sub = entity(k);
      auto super = entity(k);
      expect(Token::RParen);
      assert_all({{E::Super, sub, super}}, at);
    } else if (word == "EquivalentObjectProperties" || word == "EquivalentDataProperties") {
      auto k = word == "EquivalentObjectProperties" ? K::ObjectProperty : K::DataProperty;
      pairwise(E::Equivalent, entities_until_close(k, 2, at), at);
    } else if (word == "DisjointObjectProperties" || word == "DisjointDataProperties") {
      auto k = word == "DisjointObjectProperties" ? K::ObjectProperty : K::DataProperty;
      pairwise(E::Disjoint, entities_until_close(k, 2, at), at);
    } else if (word == "InverseObjectProperties") {
      auto p = entity(K::ObjectProperty);
      auto q = entity(K::ObjectProperty);
      expect(Token::RParen);
      assert_all({{E::Inverse, p, q}}, at);
    } else if (word == "ObjectPropertyDomain" || word == "ObjectPropertyRange" ||
               word == "DataPropertyDomain") {
      auto k = word == "DataPropertyDomain" ? K::DataProperty : K::ObjectProperty;
      auto kind = word == "ObjectPropertyRange" ? E::Range : E::Domain;
      auto p = entity(k);
      auto ce = class_expression();
      expect(Token::RParen);
      std::vector<Axiom> out;
      for (auto& r : ce.conjuncts) out.push_back({kind, p, r});
      assert_all(out, at);
    } else if (word == "DataPropertyRange") {
      auto p = entity(K::DataProperty);
      auto dt = entity(K::Datatype);
      expect(Token::RParen);
      assert_all({{E::Range, p, DataRestriction{Cardinality::only(), p, dt}}}, at);
    } else if (word == "TransitiveObjectProperty" || word == "SymmetricObjectProperty") {
      auto p = entity(K::ObjectProperty);
      expect(Token::RParen);
      onto_->set_characteristic(
          p, word[0] == 'T' ? Characteristic::Transitive : Characteristic::Symmetric, true);
    } else if (word == "SameIndividual") {
      pairwise(E::Equivalent, entities_until_close(K::NamedIndividual, 2, at), at);
    } else if (word == "DifferentIndividuals") {
      pairwise(E::Disjoint, entities_until_close(K::NamedIndividual, 2, at), at);
    } else {
      throw error(at, "unknown statement '" + word + "'");
    }
  }

  Lexer lexer_;
  Token tok_;
  const PrefixMap* prefixes_ = nullptr;
  Ontology* onto_ = nullptr;
};

// --- serializer -----------------------------------------------------------

std::string conjunct_text(const Restriction& r) { return render(r); }

}  // namespace

ParsedDocument parse_document(std::string_view text) { return Parser(text).run(); }

std::string declaration_statement(const EntityRef& e) {
  return "Declaration(" + std::string(kind_keyword(e.kind)) + "(" + render(e) + "))";
}

std::string characteristic_statement(const EntityRef& property, Characteristic c) {
  return std::string(c == Characteristic::Transitive ? "TransitiveObjectProperty("
                                                     : "SymmetricObjectProperty(") +
         render(property) + ")";
}

std::string statement(const Axiom& raw) {
  auto a = canonical_form(raw);
  const auto s = render(a.subject);
  auto other = [&] { return render(std::get<EntityRef>(a.object)); };
  using E = ExpressionKind;
  switch (a.subject.kind) {
    case EntityKind::Class:
      switch (a.expression) {
        case E::Super: return "SubClassOf(" + s + " " + other() + ")";
        case E::Equivalent: return "EquivalentClasses(" + s + " " + other() + ")";
        case E::Disjoint: return "DisjointClasses(" + s + " " + other() + ")";
        case E::Instance: return "ClassAssertion(" + s + " " + other() + ")";
        case E::EquivalentRestriction:
          return "EquivalentClasses(" + s + " ObjectIntersectionOf(" +
                 conjunct_text(std::get<Restriction>(a.object)) + "))";
        default: break;
      }
      break;
    case EntityKind::NamedIndividual:
      switch (a.expression) {
        case E::Equivalent: return "SameIndividual(" + s + " " + other() + ")";
        case E::Disjoint: return "DifferentIndividuals(" + s + " " + other() + ")";
        case E::ObjectLink: {
          auto& p = std::get<ObjectPair>(a.object);
          return "ObjectPropertyAssertion(" + render(p.property) + " " + s + " " +
                 render(*p.filler) + ")";
        }
        case E::DataLink: {
          auto& p = std::get<DataPair>(a.object);
          return "DataPropertyAssertion(" + render(p.property) + " " + s + " " + render(*p.value) +
                 ")";
        }
        default: break;
      }
      break;
    case EntityKind::ObjectProperty:
    case EntityKind::DataProperty: {
      const bool object = a.subject.kind == EntityKind::ObjectProperty;
      const std::string family = object ? "Object" : "Data";
      switch (a.expression) {
        case E::Super: return "Sub" + family + "PropertyOf(" + s + " " + other() + ")";
        case E::Equivalent: return "Equivalent" + family + "Properties(" + s + " " + other() + ")";
        case E::Disjoint: return "Disjoint" + family + "Properties(" + s + " " + other() + ")";
        case E::Inverse: return "InverseObjectProperties(" + s + " " + other() + ")";
        case E::Domain:
          return family + "PropertyDomain(" + s + " " +
                 conjunct_text(std::get<Restriction>(a.object)) + ")";
        case E::Range: {
          auto& r = std::get<Restriction>(a.object);
          if (!object)
            return "DataPropertyRange(" + s + " " + render(std::get<DataRestriction>(r).datatype) +
                   ")";
          return "ObjectPropertyRange(" + s + " " + conjunct_text(r) + ")";
        }
        default: break;
      }
      break;
    }
    case EntityKind::Datatype: break;
  }
  return "# unrepresentable: " + render(a);
}

namespace {

bool line_before(const std::string& a, const std::string& b) {
  auto ra = form_rank(a), rb = form_rank(b);
  return ra != rb ? ra < rb : a < b;
}

void header_lines(const Ontology& onto, std::vector<std::string>& out) {
  for (auto& e : onto.declarations())
    if (!is_builtin_class(e)) out.push_back(declaration_statement(e));
  for (auto& [p, c] : onto.characteristics()) out.push_back(characteristic_statement(p, c));
}

}  // namespace

std::vector<std::string> statement_lines(const Ontology& onto) {
  std::vector<std::string> out;
  header_lines(onto, out);
  for (auto& a : onto.axioms().canonical()) out.push_back(statement(a));
  std::sort(out.begin(), out.end(), line_before);
  return out;
}

std::string serialize(const Ontology& onto) {
  std::vector<std::string> lines;
  header_lines(onto, lines);
  std::map<EntityRef, std::vector<std::string>> definitions;
  for (auto& a : onto.axioms().canonical()) {
    if (a.expression == ExpressionKind::EquivalentRestriction)
      definitions[a.subject].push_back(conjunct_text(std::get<Restriction>(a.object)));
    else
      lines.push_back(statement(a));
  }
  for (auto& [cls, conjuncts] : definitions) {
    std::sort(conjuncts.begin(), conjuncts.end());
    std::string line = "EquivalentClasses(" + render(cls) + " ObjectIntersectionOf(";
    for (std::size_t i = 0; i < conjuncts.size(); ++i) line += (i ? " " : "") + conjuncts[i];
    lines.push_back(line + "))");
  }
  std::sort(lines.begin(), lines.end(), line_before);

  std::ostringstream out;
  for (auto& [key, base] : onto.prefixes()) out << "Prefix(" << key << ":=<" << base << ">)\n";
  out << "\nOntology(";
  if (!onto.iri().empty()) out << "<" << onto.iri() << ">";
  out << "\n";
  for (auto& l : lines) out << l << "\n";
  out << ")\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("failed writing " + path);
}

}  // namespace ontomap
