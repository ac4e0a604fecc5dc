#include "semtl/ontology.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "semtl/errors.hpp"
#include "semtl/util.hpp"

namespace semtl {

namespace {

const std::set<std::string>& keywords() {
  static const std::set<std::string> kw = {
      "Concept", "Role", "Individual", "GCI",  "RI",  "CA",
      "RA",      "EQ",   "NEQ",        "And",  "Some", "One",
      "Top",     "Bottom", "SubClassOf", "SubRoleOf"};
  return kw;
}

}  // namespace

bool is_valid_name(const std::string& name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
    return false;
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return keywords().count(name) == 0;
}

// ---------------------------------------------------------------------------
// ConceptExpr
// ---------------------------------------------------------------------------

ConceptExpr ConceptExpr::top() {
  ConceptExpr e;
  e.kind_ = Kind::Top;
  return e;
}

ConceptExpr ConceptExpr::bottom() {
  ConceptExpr e;
  e.kind_ = Kind::Bottom;
  return e;
}

ConceptExpr ConceptExpr::atomic(std::string name) {
  ConceptExpr e;
  e.kind_ = Kind::Atomic;
  e.name_ = std::move(name);
  return e;
}

ConceptExpr ConceptExpr::conjunction(std::vector<ConceptExpr> conjuncts) {
  std::vector<ConceptExpr> flat;
  for (auto& c : conjuncts) {
    if (c.kind() == Kind::Conjunction) {
      for (auto& inner : c.children_) flat.push_back(std::move(inner));
    } else {
      flat.push_back(std::move(c));
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.size() == 1) return flat.front();
  ConceptExpr e;
  e.kind_ = Kind::Conjunction;
  e.children_ = std::move(flat);
  return e;
}

ConceptExpr ConceptExpr::existential(std::string role, ConceptExpr filler) {
  ConceptExpr e;
  e.kind_ = Kind::Existential;
  e.name_ = std::move(role);
  e.children_.push_back(std::move(filler));
  return e;
}

ConceptExpr ConceptExpr::nominal(std::string individual) {
  ConceptExpr e;
  e.kind_ = Kind::Nominal;
  e.name_ = std::move(individual);
  return e;
}

std::string ConceptExpr::to_text() const {
  switch (kind_) {
    case Kind::Top:
      return "Top";
    case Kind::Bottom:
      return "Bottom";
    case Kind::Atomic:
      return name_;
    case Kind::Nominal:
      return "One(" + name_ + ")";
    case Kind::Existential:
      return "Some(" + name_ + " " + children_[0].to_text() + ")";
    case Kind::Conjunction: {
      std::string out = "And(";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) out += ' ';
        out += children_[i].to_text();
      }
      return out + ")";
    }
  }
  return {};
}

bool operator==(const ConceptExpr& a, const ConceptExpr& b) {
  return a.kind_ == b.kind_ && a.name_ == b.name_ &&
         a.children_ == b.children_;
}

bool operator<(const ConceptExpr& a, const ConceptExpr& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  if (a.name_ != b.name_) return a.name_ < b.name_;
  return a.children_ < b.children_;
}

// ---------------------------------------------------------------------------
// Axiom rendering
// ---------------------------------------------------------------------------

std::string to_text(const TboxAxiom& axiom) {
  if (const auto* g = std::get_if<Gci>(&axiom))
    return "GCI " + g->sub.to_text() + " SubClassOf " + g->sup.to_text();
  const auto& ri = std::get<RoleInclusion>(axiom);
  return "RI " + ri.sub + " SubRoleOf " + ri.sup;
}

std::string to_text(const AboxAxiom& axiom) {
  if (const auto* ca = std::get_if<ConceptAssertion>(&axiom))
    return "CA " + ca->concept.to_text() + "(" + ca->individual + ")";
  if (const auto* ra = std::get_if<RoleAssertion>(&axiom))
    return "RA " + ra->role + "(" + ra->subject + "," + ra->object + ")";
  if (const auto* eq = std::get_if<IndividualEquality>(&axiom))
    return "EQ " + eq->lhs + " = " + eq->rhs;
  const auto& neq = std::get<IndividualInequality>(axiom);
  return "NEQ " + neq.lhs + " != " + neq.rhs;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Tokenizer {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  std::size_t line;

  Tokenizer(const std::string& text, std::size_t line_no) : line(line_no) {
    std::size_t i = 0;
    while (i < text.size()) {
      char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '(' || c == ')' || c == ',' || c == '=') {
        tokens.emplace_back(1, c);
        ++i;
      } else if (c == '!') {
        if (i + 1 < text.size() && text[i + 1] == '=') {
          tokens.emplace_back("!=");
          i += 2;
        } else {
          throw ParseError(line, "stray '!'");
        }
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[j])) ||
                text[j] == '_'))
          ++j;
        tokens.emplace_back(text.substr(i, j - i));
        i = j;
      } else {
        throw ParseError(line, std::string("unexpected character '") + c + "'");
      }
    }
  }

  bool done() const { return pos >= tokens.size(); }

  const std::string& peek() const {
    static const std::string empty;
    return done() ? empty : tokens[pos];
  }

  std::string next(const char* what) {
    if (done()) throw ParseError(line, std::string("expected ") + what);
    return tokens[pos++];
  }

  void expect(const std::string& tok) {
    std::string got = next(("'" + tok + "'").c_str());
    if (got != tok)
      throw ParseError(line, "expected '" + tok + "', got '" + got + "'");
  }

  std::string name(const char* what) {
    std::string n = next(what);
    if (!is_valid_name(n))
      throw ParseError(line, std::string("invalid ") + what + " '" + n + "'");
    return n;
  }
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lines_(split_lines(text)) {}

  Ontology run() {
    collect_declarations();
    parse_axioms();
    return std::move(result_);
  }

 private:
  static std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
  }

  void declare(std::set<std::string>& pool, const std::string& name,
               std::size_t line_no) {
    if (result_.signature.has_concept(name) ||
        result_.signature.has_role(name) ||
        result_.signature.has_individual(name))
      throw ParseError(line_no, "duplicate declaration of '" + name + "'");
    pool.insert(name);
  }

  void collect_declarations() {
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      Tokenizer t(strip_comment(lines_[i]), i + 1);
      if (t.done()) continue;
      const std::string& head = t.peek();
      if (head != "Concept" && head != "Role" && head != "Individual")
        continue;
      t.next("keyword");
      std::string n = t.name("name");
      if (!t.done()) throw ParseError(i + 1, "trailing tokens");
      if (head == "Concept")
        declare(result_.signature.concepts, n, i + 1);
      else if (head == "Role")
        declare(result_.signature.roles, n, i + 1);
      else
        declare(result_.signature.individuals, n, i + 1);
    }
  }

  std::string known_concept(Tokenizer& t) {
    std::string n = t.name("concept name");
    if (!result_.signature.has_concept(n))
      throw UnknownNameError("line " + std::to_string(t.line) +
                             ": undeclared concept '" + n + "'");
    return n;
  }

  std::string known_role(Tokenizer& t) {
    std::string n = t.name("role name");
    if (!result_.signature.has_role(n))
      throw UnknownNameError("line " + std::to_string(t.line) +
                             ": undeclared role '" + n + "'");
    return n;
  }

  std::string known_individual(Tokenizer& t) {
    std::string n = t.name("individual name");
    if (!result_.signature.has_individual(n))
      throw UnknownNameError("line " + std::to_string(t.line) +
                             ": undeclared individual '" + n + "'");
    return n;
  }

  ConceptExpr parse_concept(Tokenizer& t) {
    std::string tok = t.next("concept expression");
    if (tok == "Top") return ConceptExpr::top();
    if (tok == "Bottom") return ConceptExpr::bottom();
    if (tok == "And") {
      t.expect("(");
      std::vector<ConceptExpr> conjuncts;
      while (t.peek() != ")") conjuncts.push_back(parse_concept(t));
      t.expect(")");
      if (conjuncts.size() < 2)
        throw ParseError(t.line, "And(...) needs at least two conjuncts");
      return ConceptExpr::conjunction(std::move(conjuncts));
    }
    if (tok == "Some") {
      t.expect("(");
      std::string role = known_role(t);
      ConceptExpr filler = parse_concept(t);
      t.expect(")");
      return ConceptExpr::existential(role, std::move(filler));
    }
    if (tok == "One") {
      t.expect("(");
      std::string ind = known_individual(t);
      t.expect(")");
      return ConceptExpr::nominal(ind);
    }
    if (!is_valid_name(tok))
      throw ParseError(t.line, "expected concept expression, got '" + tok + "'");
    if (!result_.signature.has_concept(tok))
      throw UnknownNameError("line " + std::to_string(t.line) +
                             ": undeclared concept '" + tok + "'");
    return ConceptExpr::atomic(tok);
  }

  void parse_axioms() {
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      Tokenizer t(strip_comment(lines_[i]), i + 1);
      if (t.done()) continue;
      std::string head = t.next("statement keyword");
      if (head == "Concept" || head == "Role" || head == "Individual") {
        t.next("name");  // already handled in the first pass
      } else if (head == "GCI") {
        ConceptExpr sub = parse_concept(t);
        t.expect("SubClassOf");
        ConceptExpr sup = parse_concept(t);
        result_.tbox.push_back(Gci{std::move(sub), std::move(sup)});
      } else if (head == "RI") {
        std::string sub = known_role(t);
        t.expect("SubRoleOf");
        std::string sup = known_role(t);
        result_.tbox.push_back(RoleInclusion{sub, sup});
      } else if (head == "CA") {
        ConceptExpr c = parse_concept(t);
        t.expect("(");
        std::string ind = known_individual(t);
        t.expect(")");
        result_.abox.push_back(ConceptAssertion{std::move(c), ind});
      } else if (head == "RA") {
        std::string role = known_role(t);
        t.expect("(");
        std::string a = known_individual(t);
        t.expect(",");
        std::string b = known_individual(t);
        t.expect(")");
        result_.abox.push_back(RoleAssertion{role, a, b});
      } else if (head == "EQ") {
        std::string a = known_individual(t);
        t.expect("=");
        std::string b = known_individual(t);
        result_.abox.push_back(IndividualEquality{a, b});
      } else if (head == "NEQ") {
        std::string a = known_individual(t);
        t.expect("!=");
        std::string b = known_individual(t);
        result_.abox.push_back(IndividualInequality{a, b});
      } else {
        throw ParseError(i + 1, "unknown statement '" + head + "'");
      }
      if (!t.done()) throw ParseError(i + 1, "trailing tokens");
    }
  }

  std::vector<std::string> lines_;
  Ontology result_;
};

}  // namespace

Ontology parse_ontology(const std::string& text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Serialization / normalization
// ---------------------------------------------------------------------------

Ontology Ontology::normalized() const {
  Ontology out = *this;
  auto text_less = [](const auto& a, const auto& b) {
    return to_text(a) < to_text(b);
  };
  auto text_eq = [](const auto& a, const auto& b) {
    return to_text(a) == to_text(b);
  };
  std::sort(out.tbox.begin(), out.tbox.end(), text_less);
  out.tbox.erase(std::unique(out.tbox.begin(), out.tbox.end(), text_eq),
                 out.tbox.end());
  std::sort(out.abox.begin(), out.abox.end(), text_less);
  out.abox.erase(std::unique(out.abox.begin(), out.abox.end(), text_eq),
                 out.abox.end());
  return out;
}

std::string serialize_ontology(const Ontology& o) {
  Ontology n = o.normalized();
  std::ostringstream out;
  for (const auto& c : n.signature.concepts) out << "Concept " << c << "\n";
  for (const auto& r : n.signature.roles) out << "Role " << r << "\n";
  for (const auto& i : n.signature.individuals) out << "Individual " << i << "\n";
  for (const auto& a : n.tbox) out << to_text(a) << "\n";
  for (const auto& a : n.abox) out << to_text(a) << "\n";
  return out.str();
}

Ontology merge_abox(const Ontology& base, const EntailmentSet& extra) {
  Ontology out = base;
  for (const Entailment& g : extra) {
    if (g.is_concept()) {
      out.signature.concepts.insert(g.name);
      out.signature.individuals.insert(g.subject);
      AboxAxiom a = ConceptAssertion{ConceptExpr::atomic(g.name), g.subject};
      if (std::find(out.abox.begin(), out.abox.end(), a) == out.abox.end())
        out.abox.push_back(std::move(a));
    } else {
      out.signature.roles.insert(g.name);
      out.signature.individuals.insert(g.subject);
      out.signature.individuals.insert(g.object);
      AboxAxiom a = RoleAssertion{g.name, g.subject, g.object};
      if (std::find(out.abox.begin(), out.abox.end(), a) == out.abox.end())
        out.abox.push_back(std::move(a));
    }
  }
  return out;
}

Signature signature_of(const Ontology& o) { return o.signature; }

namespace {

void scan_concept(const ConceptExpr& c, Signature& sig) {
  switch (c.kind()) {
    case ConceptExpr::Kind::Atomic:
      sig.concepts.insert(c.name());
      break;
    case ConceptExpr::Kind::Nominal:
      sig.individuals.insert(c.name());
      break;
    case ConceptExpr::Kind::Existential:
      sig.roles.insert(c.name());
      scan_concept(c.children()[0], sig);
      break;
    case ConceptExpr::Kind::Conjunction:
      for (const auto& child : c.children()) scan_concept(child, sig);
      break;
    default:
      break;
  }
}

}  // namespace

Signature scan_names(const Ontology& o) {
  Signature sig;
  for (const auto& axiom : o.tbox) {
    if (const auto* g = std::get_if<Gci>(&axiom)) {
      scan_concept(g->sub, sig);
      scan_concept(g->sup, sig);
    } else {
      const auto& ri = std::get<RoleInclusion>(axiom);
      sig.roles.insert(ri.sub);
      sig.roles.insert(ri.sup);
    }
  }
  for (const auto& axiom : o.abox) {
    if (const auto* ca = std::get_if<ConceptAssertion>(&axiom)) {
      scan_concept(ca->concept, sig);
      sig.individuals.insert(ca->individual);
    } else if (const auto* ra = std::get_if<RoleAssertion>(&axiom)) {
      sig.roles.insert(ra->role);
      sig.individuals.insert(ra->subject);
      sig.individuals.insert(ra->object);
    } else if (const auto* eq = std::get_if<IndividualEquality>(&axiom)) {
      sig.individuals.insert(eq->lhs);
      sig.individuals.insert(eq->rhs);
    } else {
      const auto& neq = std::get<IndividualInequality>(axiom);
      sig.individuals.insert(neq.lhs);
      sig.individuals.insert(neq.rhs);
    }
  }
  return sig;
}

}  // namespace semtl
