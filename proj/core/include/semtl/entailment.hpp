#ifndef SEMTL_ENTAILMENT_HPP
#define SEMTL_ENTAILMENT_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace semtl {

// An atomic ABox fact: a named-concept assertion A(a) or a named-role
// assertion r(a,b).  Compound expressions never appear here.
struct Entailment {
  enum class Kind { ConceptAssertion, RoleAssertion };

  Kind kind = Kind::ConceptAssertion;
  std::string name;     // concept or role name
  std::string subject;  // the (first) individual
  std::string object;   // second individual, role assertions only

  static Entailment concept(std::string concept_name, std::string individual) {
    return {Kind::ConceptAssertion, std::move(concept_name),
            std::move(individual), {}};
  }
  static Entailment role(std::string role_name, std::string subject,
                         std::string object) {
    return {Kind::RoleAssertion, std::move(role_name), std::move(subject),
            std::move(object)};
  }

  bool is_concept() const noexcept { return kind == Kind::ConceptAssertion; }

  // "CA Road(r0)" / "RA locatedIn(r0,Europe)" -- the wire format shared by
  // the closure emission, bundle target lists and the embedding CSV.
  std::string to_text() const;
  static Entailment from_text(const std::string& text);

  friend auto operator<=>(const Entailment&, const Entailment&) = default;
};

// Duplicate-free, sorted set of entailments.  Sorted storage gives a
// deterministic iteration order that matches the textual order of the
// closure emission format.
class EntailmentSet {
 public:
  EntailmentSet() = default;
  explicit EntailmentSet(std::vector<Entailment> items);

  void insert(Entailment e);
  bool contains(const Entailment& e) const;

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }

  const std::vector<Entailment>& items() const noexcept { return items_; }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }

  // Identifier of the ontology / LSO / union this closure came from.
  std::optional<std::string> origin;

  friend bool operator==(const EntailmentSet& a, const EntailmentSet& b) {
    return a.items_ == b.items_;
  }

 private:
  std::vector<Entailment> items_;  // sorted, unique
};

EntailmentSet set_union(const EntailmentSet& a, const EntailmentSet& b);
EntailmentSet set_intersection(const EntailmentSet& a, const EntailmentSet& b);
EntailmentSet set_difference(const EntailmentSet& a, const EntailmentSet& b);

}  // namespace semtl

#endif  // SEMTL_ENTAILMENT_HPP
