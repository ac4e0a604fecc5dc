#include "semtl/entailment.hpp"

#include <algorithm>

#include "semtl/errors.hpp"

namespace semtl {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

}  // namespace

std::string Entailment::to_text() const {
  if (is_concept()) return "CA " + name + "(" + subject + ")";
  return "RA " + name + "(" + subject + "," + object + ")";
}

Entailment Entailment::from_text(const std::string& text) {
  auto fail = [&]() -> Entailment {
    throw Error("malformed entailment text: '" + text + "'");
  };
  if (text.size() < 4 || text[2] != ' ') return fail();
  std::string tag = text.substr(0, 2);
  std::string rest = text.substr(3);
  auto open = rest.find('(');
  if (open == std::string::npos || rest.back() != ')') return fail();
  std::string name = rest.substr(0, open);
  std::string args = rest.substr(open + 1, rest.size() - open - 2);
  if (tag == "CA") {
    if (!valid_name(name) || !valid_name(args)) return fail();
    return Entailment::concept(name, args);
  }
  if (tag == "RA") {
    auto comma = args.find(',');
    if (comma == std::string::npos) return fail();
    std::string a = args.substr(0, comma);
    std::string b = args.substr(comma + 1);
    if (!valid_name(name) || !valid_name(a) || !valid_name(b)) return fail();
    return Entailment::role(name, a, b);
  }
  return fail();
}

EntailmentSet::EntailmentSet(std::vector<Entailment> items)
    : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

void EntailmentSet::insert(Entailment e) {
  auto it = std::lower_bound(items_.begin(), items_.end(), e);
  if (it != items_.end() && *it == e) return;
  items_.insert(it, std::move(e));
}

bool EntailmentSet::contains(const Entailment& e) const {
  return std::binary_search(items_.begin(), items_.end(), e);
}

EntailmentSet set_union(const EntailmentSet& a, const EntailmentSet& b) {
  std::vector<Entailment> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return EntailmentSet(std::move(out));
}

EntailmentSet set_intersection(const EntailmentSet& a, const EntailmentSet& b) {
  std::vector<Entailment> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return EntailmentSet(std::move(out));
}

EntailmentSet set_difference(const EntailmentSet& a, const EntailmentSet& b) {
  std::vector<Entailment> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return EntailmentSet(std::move(out));
}

}  // namespace semtl
