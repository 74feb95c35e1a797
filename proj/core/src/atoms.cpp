#include "fecheck/atoms.hpp"

#include <stdexcept>

#include "fecheck/errors.hpp"

namespace fecheck {

namespace atom {

bool operator==(const Compose& a, const Compose& b) { return a.parts == b.parts; }
bool operator==(const LinComb& a, const LinComb& b) { return a.terms == b.terms; }

}  // namespace atom

AdditiveMap::AdditiveMap() : AdditiveMap(atom::Identity{}) {}

AdditiveMap::AdditiveMap(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}

AdditiveMap AdditiveMap::identity() { return AdditiveMap(atom::Identity{}); }

AdditiveMap AdditiveMap::derivation(FieldElem u) { return AdditiveMap(atom::Derivation{std::move(u)}); }

AdditiveMap AdditiveMap::substitution(FieldElem r) {
  if (r.is_constant()) throw std::invalid_argument("sub(r) requires a nonconstant r, got " + r.to_string());
  return AdditiveMap(atom::Substitution{std::move(r)});
}

AdditiveMap AdditiveMap::compose(std::vector<AdditiveMap> parts) {
  if (parts.empty()) throw std::invalid_argument("comp() needs at least one map");
  return AdditiveMap(atom::Compose{std::move(parts)});
}

AdditiveMap AdditiveMap::lincomb(std::vector<std::pair<FieldElem, AdditiveMap>> terms) {
  atom::LinComb lc;
  lc.terms.reserve(terms.size());
  for (auto& [c, m] : terms) lc.terms.push_back(atom::Term{std::move(c), std::move(m)});
  return AdditiveMap(std::move(lc));
}

AdditiveMap AdditiveMap::power(const AdditiveMap& m, unsigned k) {
  if (k == 0) return identity();
  if (k == 1) return m;
  return compose(std::vector<AdditiveMap>(k, m));
}

bool operator==(const AdditiveMap& a, const AdditiveMap& b) {
  return a.node_ == b.node_ || *a.node_ == *b.node_;
}

namespace {

struct Evaluator {
  const FieldElem& x;

  FieldElem operator()(const atom::Identity&) const { return x; }
  FieldElem operator()(const atom::Derivation& d) const { return d.u * ddt(x); }
  FieldElem operator()(const atom::Substitution& s) const { return fecheck::compose(x, s.r); }
  FieldElem operator()(const atom::Compose& c) const {
    FieldElem v = x;
    for (const auto& m : c.parts) v = eval(m, v);
    return v;
  }
  FieldElem operator()(const atom::LinComb& l) const {
    FieldElem acc;
    for (const auto& term : l.terms) acc += term.coeff * eval(term.map, x);
    return acc;
  }
};

struct Printer {
  std::string operator()(const atom::Identity&) const { return "id"; }
  std::string operator()(const atom::Derivation& d) const { return "der(" + d.u.to_string() + ")"; }
  std::string operator()(const atom::Substitution& s) const { return "sub(" + s.r.to_string() + ")"; }
  std::string operator()(const atom::Compose& c) const {
    std::string out = "comp(";
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
      if (i != 0) out += ", ";
      out += c.parts[i].to_string();
    }
    return out + ")";
  }
  std::string operator()(const atom::LinComb& l) const {
    std::string out = "lin(";
    for (std::size_t i = 0; i < l.terms.size(); ++i) {
      if (i != 0) out += " + ";
      if (!l.terms[i].coeff.is_one()) out += to_operand_string(l.terms[i].coeff) + "*";
      out += l.terms[i].map.to_string();
    }
    return out + ")";
  }
};

}  // namespace

FieldElem AdditiveMap::operator()(const FieldElem& x) const { return std::visit(Evaluator{x}, *node_); }

FieldElem eval(const AdditiveMap& m, const FieldElem& x) { return m(x); }

std::string AdditiveMap::to_string() const { return std::visit(Printer{}, *node_); }

std::vector<SamplePair> sample_pairs(const std::vector<FieldElem>& samples) {
  std::vector<SamplePair> out;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    out.emplace_back(samples[i], samples[(i + 1) % samples.size()]);
    out.emplace_back(samples[i], samples[i]);
  }
  return out;
}

namespace {

template <class Lhs, class Rhs>
Verdict check_pairs(const std::vector<SamplePair>& samples, const char* what, Lhs lhs, Rhs rhs) {
  if (samples.empty()) throw std::invalid_argument(std::string(what) + ": empty sample set");
  for (const auto& [x, y] : samples) {
    try {
      if (auto w = compare({x, y}, lhs(x, y), rhs(x, y))) return Verdict::fail(std::move(*w), what);
    } catch (const EvaluationError& e) {
      return Verdict::fail(Witness{{x, y}, "error", e.what()}, what);
    }
  }
  return Verdict::pass(samples.size(), what);
}

}  // namespace

Verdict check_additive(const FieldFn& m, const std::vector<SamplePair>& samples) {
  return check_pairs(
      samples, "additivity", [&](const FieldElem& x, const FieldElem& y) { return m(x + y); },
      [&](const FieldElem& x, const FieldElem& y) { return m(x) + m(y); });
}

Verdict check_leibniz(const FieldFn& m, const std::vector<SamplePair>& samples) {
  return check_pairs(
      samples, "leibniz", [&](const FieldElem& x, const FieldElem& y) { return m(x * y); },
      [&](const FieldElem& x, const FieldElem& y) { return x * m(y) + m(x) * y; });
}

Verdict check_homomorphism(const FieldFn& m, const std::vector<SamplePair>& samples) {
  return check_pairs(
      samples, "multiplicativity", [&](const FieldElem& x, const FieldElem& y) { return m(x * y); },
      [&](const FieldElem& x, const FieldElem& y) { return m(x) * m(y); });
}

Verdict check_additive(const AdditiveMap& m, const std::vector<SamplePair>& samples) {
  return check_additive(FieldFn(m), samples);
}

Verdict check_leibniz(const AdditiveMap& m, const std::vector<SamplePair>& samples) {
  return check_leibniz(FieldFn(m), samples);
}

Verdict check_homomorphism(const AdditiveMap& m, const std::vector<SamplePair>& samples) {
  return check_homomorphism(FieldFn(m), samples);
}

}  // namespace fecheck
