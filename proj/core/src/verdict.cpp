#include "fecheck/verdict.hpp"

#include <utility>

namespace fecheck {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "fail";
    case Outcome::precondition_failed:
      return "precondition";
  }
  return "unknown";
}

Verdict Verdict::pass(std::size_t checked, std::string note) {
  Verdict v;
  v.outcome = Outcome::pass;
  v.checked = checked;
  v.note = std::move(note);
  return v;
}

Verdict Verdict::fail(Witness w, std::string note) {
  Verdict v;
  v.outcome = Outcome::fail;
  v.witness = std::move(w);
  v.note = std::move(note);
  return v;
}

Verdict Verdict::precondition(std::string note) {
  Verdict v;
  v.outcome = Outcome::precondition_failed;
  v.note = std::move(note);
  return v;
}

std::optional<Witness> compare(std::vector<FieldElem> inputs, const FieldElem& lhs, const FieldElem& rhs) {
  if (lhs == rhs) return std::nullopt;
  return Witness{std::move(inputs), lhs.to_string(), rhs.to_string()};
}

}  // namespace fecheck
