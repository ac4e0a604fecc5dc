#ifndef SEMTL_ONTOLOGY_HPP
#define SEMTL_ONTOLOGY_HPP

#include <set>
#include <string>
#include <variant>
#include <vector>

#include "semtl/entailment.hpp"

namespace semtl {

// ---------------------------------------------------------------------------
// Signature: the three pairwise-disjoint name pools of an ontology.
// ---------------------------------------------------------------------------
struct Signature {
  std::set<std::string> concepts;
  std::set<std::string> roles;
  std::set<std::string> individuals;

  bool has_concept(const std::string& n) const { return concepts.count(n); }
  bool has_role(const std::string& n) const { return roles.count(n); }
  bool has_individual(const std::string& n) const {
    return individuals.count(n);
  }

  friend bool operator==(const Signature&, const Signature&) = default;
};

// True iff `name` matches [A-Za-z_][A-Za-z0-9_]* and is not a keyword of the
// .onto grammar.
bool is_valid_name(const std::string& name);

// ---------------------------------------------------------------------------
// Concept expressions: Top | Bottom | A | And(C C+) | Some(r C) | One(a)
//
// Conjunctions are canonical: flattened, sorted and duplicate-free.  Two
// structurally equal expressions therefore compare equal with ==.
// ---------------------------------------------------------------------------
class ConceptExpr {
 public:
  enum class Kind { Top, Bottom, Atomic, Conjunction, Existential, Nominal };

  ConceptExpr() : kind_(Kind::Top) {}

  static ConceptExpr top();
  static ConceptExpr bottom();
  static ConceptExpr atomic(std::string name);
  // Flattens nested conjunctions, sorts and deduplicates; a list collapsing
  // to a single conjunct returns that conjunct itself.
  static ConceptExpr conjunction(std::vector<ConceptExpr> conjuncts);
  static ConceptExpr existential(std::string role, ConceptExpr filler);
  static ConceptExpr nominal(std::string individual);

  Kind kind() const noexcept { return kind_; }
  // Atomic: concept name.  Existential: role name.  Nominal: individual.
  const std::string& name() const noexcept { return name_; }
  // Conjunction: the conjuncts.  Existential: one element, the filler.
  const std::vector<ConceptExpr>& children() const noexcept {
    return children_;
  }

  bool is_basic() const noexcept {
    return kind_ == Kind::Top || kind_ == Kind::Bottom ||
           kind_ == Kind::Atomic || kind_ == Kind::Nominal;
  }

  std::string to_text() const;

  friend bool operator==(const ConceptExpr&, const ConceptExpr&);
  friend bool operator<(const ConceptExpr&, const ConceptExpr&);

 private:
  Kind kind_;
  std::string name_;
  std::vector<ConceptExpr> children_;
};

// ---------------------------------------------------------------------------
// Axioms.  TBox and ABox axioms are distinct types so the partition
// invariant holds by construction.
// ---------------------------------------------------------------------------
struct Gci {
  ConceptExpr sub;
  ConceptExpr sup;
  friend bool operator==(const Gci&, const Gci&) = default;
};

struct RoleInclusion {
  std::string sub;
  std::string sup;
  friend bool operator==(const RoleInclusion&, const RoleInclusion&) = default;
};

using TboxAxiom = std::variant<Gci, RoleInclusion>;

struct ConceptAssertion {
  ConceptExpr concept;
  std::string individual;
  friend bool operator==(const ConceptAssertion&,
                         const ConceptAssertion&) = default;
};

struct RoleAssertion {
  std::string role;
  std::string subject;
  std::string object;
  friend bool operator==(const RoleAssertion&, const RoleAssertion&) = default;
};

struct IndividualEquality {
  std::string lhs;
  std::string rhs;
  friend bool operator==(const IndividualEquality&,
                         const IndividualEquality&) = default;
};

struct IndividualInequality {
  std::string lhs;
  std::string rhs;
  friend bool operator==(const IndividualInequality&,
                         const IndividualInequality&) = default;
};

using AboxAxiom = std::variant<ConceptAssertion, RoleAssertion,
                               IndividualEquality, IndividualInequality>;

std::string to_text(const TboxAxiom& axiom);
std::string to_text(const AboxAxiom& axiom);

// ---------------------------------------------------------------------------
// Ontology
// ---------------------------------------------------------------------------
struct Ontology {
  Signature signature;
  std::vector<TboxAxiom> tbox;
  std::vector<AboxAxiom> abox;

  // Canonical form: axioms sorted by their rendered text, duplicates removed.
  Ontology normalized() const;

  friend bool operator==(const Ontology&, const Ontology&) = default;
};

// Parses a .onto document.  The signature is built from the declaration
// lines; axioms referencing undeclared names raise UnknownNameError, and
// re-declarations raise ParseError.
Ontology parse_ontology(const std::string& text);

// Canonical text: declarations first (Concept, Role, Individual, each block
// sorted), then TBox, then ABox, both sorted by rendered line.
// parse(serialize(o)) == o.normalized() and serialization is idempotent.
std::string serialize_ontology(const Ontology& o);

// Materializes `extra` as ABox assertions on a copy of `base`.  Names absent
// from the signature are declared on the fly; the TBox is untouched.
Ontology merge_abox(const Ontology& base, const EntailmentSet& extra);

// The declared signature.  Every name used by an axiom is contained in it.
Signature signature_of(const Ontology& o);

// All names reachable by scanning axioms (used for validation and tests).
Signature scan_names(const Ontology& o);

}  // namespace semtl

#endif  // SEMTL_ONTOLOGY_HPP
