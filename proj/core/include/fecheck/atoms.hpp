#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fecheck/field_elem.hpp"
#include "fecheck/verdict.hpp"

namespace fecheck {

class AdditiveMap;

namespace atom {

struct Identity {
  friend bool operator==(const Identity&, const Identity&) = default;
};

/// x -> u * d/dt(x); every derivation of Q(t) has this form.
struct Derivation {
  FieldElem u;
  friend bool operator==(const Derivation&, const Derivation&) = default;
};

/// x(t) -> x(r(t)) with r nonconstant: an injective field endomorphism.
struct Substitution {
  FieldElem r;
  friend bool operator==(const Substitution&, const Substitution&) = default;
};

/// Left-to-right application: Compose{m1, m2} is x -> m2(m1(x)).
struct Compose {
  std::vector<AdditiveMap> parts;
  friend bool operator==(const Compose&, const Compose&);
};

struct Term;
struct LinComb {
  std::vector<Term> terms;
  friend bool operator==(const LinComb&, const LinComb&);
};

}  // namespace atom

/// Immutable AST of a concrete additive function Q(t) -> Q(t). Copies share
/// the node.
class AdditiveMap {
 public:
  using Node = std::variant<atom::Identity, atom::Derivation, atom::Substitution, atom::Compose, atom::LinComb>;

  AdditiveMap();  // identity

  static AdditiveMap identity();
  static AdditiveMap derivation(FieldElem u);
  /// Throws std::invalid_argument for a constant r.
  static AdditiveMap substitution(FieldElem r);
  /// Throws std::invalid_argument for an empty list.
  static AdditiveMap compose(std::vector<AdditiveMap> parts);
  static AdditiveMap lincomb(std::vector<std::pair<FieldElem, AdditiveMap>> terms);
  /// m composed with itself k >= 1 times.
  static AdditiveMap power(const AdditiveMap& m, unsigned k);

  const Node& node() const noexcept { return *node_; }

  FieldElem operator()(const FieldElem& x) const;

  std::string to_string() const;

  friend bool operator==(const AdditiveMap& a, const AdditiveMap& b);

 private:
  explicit AdditiveMap(Node n);
  std::shared_ptr<const Node> node_;
};

namespace atom {
struct Term {
  FieldElem coeff;
  AdditiveMap map;
  friend bool operator==(const Term&, const Term&) = default;
};
}  // namespace atom

FieldElem eval(const AdditiveMap& m, const FieldElem& x);

using FieldFn = std::function<FieldElem(const FieldElem&)>;
using SamplePair = std::pair<FieldElem, FieldElem>;

/// Cyclically consecutive pairs (s[i], s[i+1]) plus the diagonal pairs (s[i], s[i]).
std::vector<SamplePair> sample_pairs(const std::vector<FieldElem>& samples);

/// m(x+y) = m(x)+m(y) at every pair. Accepts any callable so non-additive
/// fixtures can be checked too.
Verdict check_additive(const FieldFn& m, const std::vector<SamplePair>& samples);
Verdict check_additive(const AdditiveMap& m, const std::vector<SamplePair>& samples);

/// m(xy) = x m(y) + m(x) y at every pair.
Verdict check_leibniz(const FieldFn& m, const std::vector<SamplePair>& samples);
Verdict check_leibniz(const AdditiveMap& m, const std::vector<SamplePair>& samples);

/// m(xy) = m(x) m(y) at every pair.
Verdict check_homomorphism(const FieldFn& m, const std::vector<SamplePair>& samples);
Verdict check_homomorphism(const AdditiveMap& m, const std::vector<SamplePair>& samples);

}  // namespace fecheck
