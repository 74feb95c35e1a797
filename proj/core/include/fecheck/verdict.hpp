#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fecheck/field_elem.hpp"

namespace fecheck {

/// PASS means the identity held exactly at every supplied sample. That is
/// evidence at generic points, not a proof.
enum class Outcome { pass, fail, precondition_failed };

std::string to_string(Outcome o);

struct Witness {
  std::vector<FieldElem> inputs;
  std::string lhs;
  std::string rhs;
};

struct Verdict {
  Outcome outcome = Outcome::pass;
  std::optional<Witness> witness;
  std::string note;
  std::size_t checked = 0;

  bool passed() const noexcept { return outcome == Outcome::pass; }

  static Verdict pass(std::size_t checked, std::string note = {});
  static Verdict fail(Witness w, std::string note = {});
  static Verdict precondition(std::string note);
};

/// Compares two values; fills a Witness on mismatch.
std::optional<Witness> compare(std::vector<FieldElem> inputs, const FieldElem& lhs, const FieldElem& rhs);

}  // namespace fecheck
