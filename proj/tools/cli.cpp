#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <ostream>
#include <set>

#include "ontomap/errors.hpp"
#include "ontomap/reasoner.hpp"
#include "ontomap/scenarios.hpp"
#include "ontomap/syntax.hpp"
#include "ontomap/validate.hpp"

namespace ontomap::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFound = 1;
constexpr int kUsage = 2;

struct Options {
  bool porcelain = false;
  bool no_una = false;
  bool no_reason = false;
  std::string file;
  std::string other;
  std::string ground;
  std::string expr;
  std::string scenario;
  std::string output;

  ReasonerOptions reasoner() const { return ReasonerOptions{!no_una}; }
};

/// Failures that end a command with exit code 2.
struct UsageError {
  std::string message;
};

Ontology load(const std::string& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const Error& e) {
    throw UsageError{e.what()};
  }
  try {
    return parse_document(text).ontology;
  } catch (const ParseError& e) {
    throw UsageError{path + ":" + e.what()};
  }
}

int cmd_validate(const Options& o, std::ostream& out) {
  std::string text;
  try {
    text = read_file(o.file);
  } catch (const Error& e) {
    throw UsageError{e.what()};
  }
  try {
    auto doc = parse_document(text);
    if (o.porcelain)
      out << "status=ok\nstatements=" << doc.statements << "\n";
    else
      out << o.file << ": ok, " << doc.statements << " statements\n";
    return kOk;
  } catch (const ParseError& e) {
    if (o.porcelain) {
      out << "status=error\nline=" << e.line() << "\ncolumn=" << e.column()
          << "\nmessage=" << e.message() << "\n";
      return kUsage;
    }
    throw UsageError{o.file + ":" + e.what()};
  }
}

// Direct strict subclasses, read from a Super relation over classes.
class Hierarchy {
 public:
  Hierarchy(const Ontology& onto, const AxiomSet& facts, const std::set<EntityRef>& hidden) {
    for (auto& c : onto.declarations())
      if (c.kind == EntityKind::Class && !hidden.count(c) && c != nothing()) classes_.insert(c);
    for (auto& c : classes_) {
      for (auto& e : facts.slice(c, ExpressionKind::Super)) {
        auto& up = std::get<EntityRef>(e);
        if (classes_.count(up)) above_[c].insert(up);
      }
      if (c != thing()) above_[c].insert(thing());
      for (auto& e : facts.slice(c, ExpressionKind::Equivalent)) {
        auto& eq = std::get<EntityRef>(e);
        if (classes_.count(eq)) same_[c].insert(eq);
      }
    }
    // Close the asserted-only case too, so "direct" means the same thing.
    for (bool grew = true; grew;) {
      grew = false;
      for (auto& c : classes_) {
        auto ups = above_[c];
        for (auto& u : ups)
          for (auto& uu : above_[u])
            if (uu != c && !same_[c].count(uu) && above_[c].insert(uu).second) grew = true;
      }
    }
  }

  /// Representative of each equivalence group: its smallest member.
  bool representative(const EntityRef& c) const {
    auto it = same_.find(c);
    return it == same_.end() || it->second.empty() || c < *it->second.begin();
  }

  std::string label(const EntityRef& c) const {
    std::string out = render(c);
    auto it = same_.find(c);
    if (it != same_.end())
      for (auto& e : it->second) out += " = " + render(e);
    return out;
  }

  std::vector<EntityRef> children(const EntityRef& parent) const {
    std::vector<EntityRef> out;
    for (auto& c : classes_) {
      if (!representative(c) || !above(c, parent) || above(parent, c)) continue;
      bool direct = true;
      for (auto& mid : above_.at(c))
        if (mid != parent && above(mid, parent) && !above(parent, mid) && !same(mid, parent))
          direct = false;
      if (direct) out.push_back(c);
    }
    return out;
  }

  void print_tree(std::ostream& out, const EntityRef& node, std::size_t depth) const {
    out << std::string(depth * 2, ' ') << label(node) << "\n";
    for (auto& c : children(node)) print_tree(out, c, depth + 1);
  }

  void print_edges(std::ostream& out) const {
    for (auto& c : classes_) {
      if (!representative(c)) continue;
      for (auto& p : classes_)
        if (representative(p) && p != c) {
          auto kids = children(p);
          if (std::find(kids.begin(), kids.end(), c) != kids.end())
            out << "subclass=" << render(c) << " " << render(p) << "\n";
        }
      auto it = same_.find(c);
      if (it != same_.end())
        for (auto& e : it->second) out << "equivalent=" << render(c) << " " << render(e) << "\n";
    }
  }

 private:
  bool above(const EntityRef& c, const EntityRef& p) const {
    auto it = above_.find(c);
    return it != above_.end() && it->second.count(p);
  }
  bool same(const EntityRef& a, const EntityRef& b) const {
    auto it = same_.find(a);
    return it != same_.end() && it->second.count(b);
  }

  std::set<EntityRef> classes_;
  std::map<EntityRef, std::set<EntityRef>> above_;
  std::map<EntityRef, std::set<EntityRef>> same_;
};

int cmd_classify(const Options& o, std::ostream& out) {
  auto onto = load(o.file);
  if (o.no_reason) {
    Hierarchy h(onto, onto.axioms(), {});
    if (o.porcelain) {
      out << "consistent=unchecked\n";
      h.print_edges(out);
    } else {
      out << "consistency: not checked (asserted axioms only)\n";
      h.print_tree(out, thing(), 0);
    }
    return kOk;
  }

  auto snap = synchronise_reasoner(onto, o.reasoner());
  const auto& report = snap->consistency;
  Hierarchy h(onto, snap->entailed, report.unsatisfiable);
  if (o.porcelain) {
    out << "consistent=" << (report.consistent ? "true" : "false") << "\n";
    for (auto& v : report.violations) {
      out << "violation=" << v.rule;
      for (auto& e : v.entities) out << " " << render(e);
      out << "\n";
    }
    for (auto& c : report.unsatisfiable) out << "unsatisfiable=" << render(c) << "\n";
    h.print_edges(out);
  } else {
    out << "consistency: " << (report.consistent ? "consistent" : "inconsistent") << "\n";
    for (auto& v : report.violations) out << "  " << v.rule << ": " << v.detail << "\n";
    out << "unsatisfiable classes:";
    if (report.unsatisfiable.empty()) out << " none";
    for (auto& c : report.unsatisfiable) out << " " << render(c);
    out << "\n";
    h.print_tree(out, thing(), 0);
  }
  return report.consistent ? kOk : kFound;
}

EntityRef find_ground(const Ontology& onto, const std::string& text, ExpressionKind kind) {
  Iri iri;
  if (!text.empty() && text.front() == '<' && text.back() == '>') {
    auto full = text.substr(1, text.size() - 2);
    bool found = false;
    for (auto& [key, base] : onto.prefixes())
      if (!found && full.size() > base.size() && full.compare(0, base.size(), base) == 0) {
        iri = Iri{key, full.substr(base.size())};
        found = true;
      }
    if (!found) throw UsageError{"no prefix abbreviates " + text};
  } else {
    iri = Iri::parse(text);
  }
  auto candidates = onto.lookup(iri);
  if (candidates.empty()) throw UsageError{"unknown ground " + text};
  std::vector<EntityRef> fitting;
  for (auto& c : candidates)
    if (expression_allowed(c.kind, kind)) fitting.push_back(c);
  if (fitting.empty())
    throw UsageError{std::string(to_string(kind)) + " is not defined for the " +
                     std::string(to_string(candidates.front().kind)) + " " + text};
  if (fitting.size() > 1) throw UsageError{"ground " + text + " is ambiguous"};
  return fitting.front();
}

int cmd_query(const Options& o, std::ostream& out) {
  auto kind = parse_expression_kind(o.expr);
  if (!kind) throw UsageError{"unknown expression " + o.expr};
  auto onto = load(o.file);
  auto ground = find_ground(onto, o.ground, *kind);
  std::set<Element> elements;
  if (o.no_reason) {
    elements = onto.enumerate(ground, *kind);
  } else {
    synchronise_reasoner(onto, o.reasoner());
    elements = entailed_entity_set(onto, ground, *kind);
  }
  if (o.porcelain) out << "reasoned=" << (o.no_reason ? "false" : "true") << "\n";
  for (auto& e : elements) out << (o.porcelain ? "element=" : "") << render(e) << "\n";
  return kOk;
}

int cmd_demo(const Options& o, std::ostream& out) {
  auto onto = load(o.file);
  std::vector<std::string> lines;
  try {
    if (o.scenario == "listing2")
      lines = run_listing2(onto, o.reasoner()).lines;
    else
      lines = run_listing3(onto, o.reasoner());
  } catch (const MissingEntity& e) {
    throw UsageError{e.what()};
  }
  for (auto& l : lines) out << (o.porcelain ? "line=" : "") << l << "\n";
  if (!o.output.empty()) {
    try {
      write_file(o.output, serialize(onto));
    } catch (const Error& e) {
      throw UsageError{e.what()};
    }
  }
  return kOk;
}

int cmd_diff(const Options& o, std::ostream& out) {
  auto a = statement_lines(load(o.file));
  auto b = statement_lines(load(o.other));
  std::set<std::string> in_a(a.begin(), a.end()), in_b(b.begin(), b.end());
  std::size_t changes = 0;
  for (auto& l : a)
    if (!in_b.count(l)) {
      out << (o.porcelain ? "removed=" : "Removed: ") << l << "\n";
      ++changes;
    }
  for (auto& l : b)
    if (!in_a.count(l)) {
      out << (o.porcelain ? "added=" : "Added: ") << l << "\n";
      ++changes;
    }
  if (o.porcelain) out << "changes=" << changes << "\n";
  return changes ? kFound : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Ontology store tools: validate, classify, query, demo, diff", "ontomap"};
  app.add_flag("--porcelain", o.porcelain, "Print key=value lines");
  app.add_flag("--no-una", o.no_una, "Drop the unique-name assumption when counting fillers");
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "Parse a file and count its statements");
  validate->add_option("file", o.file)->required();

  auto* classify = app.add_subcommand("classify", "Check consistency and print the class tree");
  classify->add_option("file", o.file)->required();
  classify->add_flag("--no-reason", o.no_reason, "Use asserted axioms only");

  auto* query = app.add_subcommand("query", "Print one entity set of a ground");
  query->add_option("file", o.file)->required();
  query->add_option("--ground", o.ground, "Ground IRI, e.g. :ROOM")->required();
  query->add_option("--expr", o.expr, "Expression, e.g. Super")->required();
  query->add_flag("--no-reason", o.no_reason, "Use asserted axioms only");

  auto* demo = app.add_subcommand("demo", "Replay a scripted descriptor session");
  demo->add_option("scenario", o.scenario)
      ->required()
      ->check(CLI::IsMember({"listing2", "listing3"}));
  demo->add_option("file", o.file)->required();
  demo->add_option("--output", o.output, "Write the resulting ontology here");

  auto* diff = app.add_subcommand("diff", "Compare the asserted content of two files");
  diff->add_option("a", o.file)->required();
  diff->add_option("b", o.other)->required();

  for (auto* sub : {validate, classify, query, demo, diff}) {
    sub->add_flag("--porcelain", o.porcelain, "Print key=value lines");
    sub->add_flag("--no-una", o.no_una, "Drop the unique-name assumption");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (classify->parsed()) return cmd_classify(o, out);
    if (query->parsed()) return cmd_query(o, out);
    if (demo->parsed()) return cmd_demo(o, out);
    return cmd_diff(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace ontomap::cli
