#include "fecheck/unary_fn.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "fecheck/errors.hpp"

namespace fecheck {

namespace {

UnaryFn::Node make(auto body) { return UnaryFn::Node{std::move(body)}; }

}  // namespace

#define FECHECK_MAKE(expr) UnaryFn(std::make_shared<const Node>(make(expr)))

UnaryFn UnaryFn::trace(SymForm form) { return FECHECK_MAKE(fn::Trace{std::move(form)}); }
UnaryFn UnaryFn::atom(AdditiveMap map) { return FECHECK_MAKE(fn::Atom{std::move(map)}); }
UnaryFn UnaryFn::poly_of(ClassicalPoly poly, UnaryFn inner) {
  return FECHECK_MAKE((fn::PolyOf{std::move(poly), std::move(inner)}));
}
// One-element sums and products print like their element, so they are
// collapsed here to keep printing and parsing inverse to each other.
UnaryFn UnaryFn::product(std::vector<UnaryFn> factors) {
  if (factors.empty()) return constant(FieldElem(1));
  if (factors.size() == 1) return factors.front();
  return FECHECK_MAKE(fn::Product{std::move(factors)});
}
UnaryFn UnaryFn::power(UnaryFn base, long exponent) { return FECHECK_MAKE((fn::Power{std::move(base), exponent})); }
UnaryFn UnaryFn::scaled(FieldElem coeff, UnaryFn inner) {
  return FECHECK_MAKE((fn::Scaled{std::move(coeff), std::move(inner)}));
}
UnaryFn UnaryFn::sum(std::vector<UnaryFn> terms) {
  if (terms.empty()) return constant(FieldElem());
  if (terms.size() == 1) return terms.front();
  return FECHECK_MAKE(fn::Sum{std::move(terms)});
}
UnaryFn UnaryFn::quotient(UnaryFn num, UnaryFn den) {
  return FECHECK_MAKE((fn::Quotient{std::move(num), std::move(den)}));
}
UnaryFn UnaryFn::constant(FieldElem value) { return FECHECK_MAKE(fn::Const{std::move(value)}); }
UnaryFn UnaryFn::arg_power(long exponent) { return FECHECK_MAKE(fn::ArgPower{exponent}); }
UnaryFn UnaryFn::composed(UnaryFn outer, ClassicalPoly poly) {
  return FECHECK_MAKE((fn::Composed{std::move(outer), std::move(poly)}));
}
UnaryFn UnaryFn::diagonal(SymForm form, std::vector<unsigned> exponents) {
  if (exponents.size() != form.arity()) {
    throw ArityError("diag(F; ...) needs " + std::to_string(form.arity()) + " exponents");
  }
  return FECHECK_MAKE((fn::Diagonal{std::move(form), std::move(exponents)}));
}
UnaryFn UnaryFn::difference(UnaryFn inner, std::vector<FieldElem> increments) {
  if (increments.size() > 24) throw std::invalid_argument("difference order too large");
  return FECHECK_MAKE((fn::Difference{std::move(inner), std::move(increments)}));
}
UnaryFn UnaryFn::mult_difference(UnaryFn inner, std::vector<FieldElem> increments) {
  if (increments.size() > 24) throw std::invalid_argument("difference order too large");
  for (const auto& y : increments) {
    if (y.is_zero()) throw std::invalid_argument("multiplicative increments must be nonzero");
  }
  return FECHECK_MAKE((fn::MultDifference{std::move(inner), std::move(increments)}));
}

#undef FECHECK_MAKE

bool operator==(const UnaryFn& a, const UnaryFn& b) { return a.node_ == b.node_ || *a.node_ == *b.node_; }

namespace {

// sum over subsets S of {1..m} of (-1)^(m-|S|) f(combine(x, S)).
template <class Combine>
FieldElem inclusion_exclusion(const UnaryFn& f, const FieldElem& x, const std::vector<FieldElem>& ys,
                              Combine combine) {
  const std::size_t m = ys.size();
  const std::uint32_t count = std::uint32_t{1} << m;
  // Gray-code walk keeps one running combination per subset.
  FieldElem acc;
  std::vector<FieldElem> points(count);
  points[0] = x;
  for (std::uint32_t s = 1; s < count; ++s) {
    const auto low = static_cast<std::size_t>(std::countr_zero(s));
    points[s] = combine(points[s & (s - 1)], ys[low]);
  }
  for (std::uint32_t s = 0; s < count; ++s) {
    FieldElem v = f(points[s]);
    if (((m - static_cast<std::size_t>(std::popcount(s))) & 1U) != 0) {
      acc -= v;
    } else {
      acc += v;
    }
  }
  return acc;
}

struct FnEvaluator {
  const FieldElem& x;

  FieldElem operator()(const fn::Trace& t) const {
    std::vector<FieldElem> args(t.form.arity(), x);
    return t.form(args);
  }
  FieldElem operator()(const fn::Atom& a) const { return a.map(x); }
  FieldElem operator()(const fn::PolyOf& p) const { return p.poly(p.inner(x)); }
  FieldElem operator()(const fn::Product& p) const {
    FieldElem acc(1);
    for (const auto& f : p.factors) {
      acc *= f(x);
      if (acc.is_zero()) break;
    }
    return acc;
  }
  FieldElem operator()(const fn::Power& p) const { return pow(p.base(x), p.exponent); }
  FieldElem operator()(const fn::Scaled& s) const {
    if (s.coeff.is_zero()) return FieldElem();
    return s.coeff * s.inner(x);
  }
  FieldElem operator()(const fn::Sum& s) const {
    FieldElem acc;
    for (const auto& f : s.terms) acc += f(x);
    return acc;
  }
  FieldElem operator()(const fn::Quotient& q) const {
    FieldElem d = q.den(x);
    if (d.is_zero()) throw DivisionByZero("quotient denominator vanishes at " + x.to_string());
    return q.num(x) / d;
  }
  FieldElem operator()(const fn::Const& c) const { return c.value; }
  FieldElem operator()(const fn::ArgPower& a) const { return pow(x, a.exponent); }
  FieldElem operator()(const fn::Composed& c) const { return c.outer(c.poly(x)); }
  FieldElem operator()(const fn::Diagonal& d) const {
    std::vector<FieldElem> args;
    args.reserve(d.exponents.size());
    for (unsigned e : d.exponents) args.push_back(pow(x, e));
    return d.form(args);
  }
  FieldElem operator()(const fn::Difference& d) const {
    return inclusion_exclusion(d.inner, x, d.increments, [](const FieldElem& a, const FieldElem& y) { return a + y; });
  }
  FieldElem operator()(const fn::MultDifference& d) const {
    if (x.is_zero()) throw EvaluationError("multiplicative difference evaluated at 0");
    return inclusion_exclusion(d.inner, x, d.increments, [](const FieldElem& a, const FieldElem& y) { return a * y; });
  }
};

std::string join(const std::vector<UnaryFn>& fs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i != 0) out += sep;
    out += fs[i].to_string();
  }
  return out;
}

std::string join_elems(const std::vector<FieldElem>& ys) {
  std::string out;
  for (std::size_t i = 0; i < ys.size(); ++i) out += (i == 0 ? " " : ", ") + ys[i].to_string();
  return out;
}

std::string exponent_text(long e) { return e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e); }

struct FnPrinter {
  std::string operator()(const fn::Trace& t) const { return "trace(" + t.form.to_string() + ")"; }
  std::string operator()(const fn::Atom& a) const { return a.map.to_string(); }
  std::string operator()(const fn::PolyOf& p) const {
    return "polyof(" + p.poly.to_string() + ", " + p.inner.to_string() + ")";
  }
  std::string operator()(const fn::Product& p) const { return "(" + join(p.factors, "*") + ")"; }
  std::string operator()(const fn::Power& p) const {
    return "(" + p.base.to_string() + "^" + exponent_text(p.exponent) + ")";
  }
  std::string operator()(const fn::Scaled& s) const {
    return "(" + to_operand_string(s.coeff) + "*" + s.inner.to_string() + ")";
  }
  std::string operator()(const fn::Sum& s) const {
    if (s.terms.empty()) return "0";
    return "(" + join(s.terms, "+") + ")";
  }
  std::string operator()(const fn::Quotient& q) const {
    return "(" + q.num.to_string() + "/" + q.den.to_string() + ")";
  }
  std::string operator()(const fn::Const& c) const { return to_operand_string(c.value); }
  std::string operator()(const fn::ArgPower& a) const {
    if (a.exponent == 1) return "x";
    return "x^" + exponent_text(a.exponent);
  }
  std::string operator()(const fn::Composed& c) const {
    return "at(" + c.outer.to_string() + ", " + c.poly.to_string() + ")";
  }
  std::string operator()(const fn::Diagonal& d) const {
    std::string out = "diag(" + d.form.to_string() + ";";
    for (std::size_t i = 0; i < d.exponents.size(); ++i) out += (i == 0 ? " " : ", ") + std::to_string(d.exponents[i]);
    return out + ")";
  }
  std::string operator()(const fn::Difference& d) const {
    return "delta(" + d.inner.to_string() + ";" + join_elems(d.increments) + ")";
  }
  std::string operator()(const fn::MultDifference& d) const {
    return "mdelta(" + d.inner.to_string() + ";" + join_elems(d.increments) + ")";
  }
};

std::vector<FieldElem> poly_add(std::vector<FieldElem> a, const std::vector<FieldElem>& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

std::vector<FieldElem> poly_mul(const std::vector<FieldElem>& a, const std::vector<FieldElem>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<FieldElem> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::optional<std::vector<FieldElem>> to_coeffs(const UnaryFn& f) {
  const auto& body = f.node().body;
  if (const auto* c = std::get_if<fn::Const>(&body)) return std::vector<FieldElem>{c->value};
  if (const auto* a = std::get_if<fn::ArgPower>(&body)) {
    if (a->exponent < 0) return std::nullopt;
    std::vector<FieldElem> v(static_cast<std::size_t>(a->exponent) + 1);
    v.back() = FieldElem(1);
    return v;
  }
  if (const auto* s = std::get_if<fn::Scaled>(&body)) {
    auto inner = to_coeffs(s->inner);
    if (!inner) return std::nullopt;
    for (auto& c : *inner) c *= s->coeff;
    return inner;
  }
  if (const auto* s = std::get_if<fn::Sum>(&body)) {
    std::vector<FieldElem> acc;
    for (const auto& term : s->terms) {
      auto c = to_coeffs(term);
      if (!c) return std::nullopt;
      acc = poly_add(std::move(acc), *c);
    }
    return acc;
  }
  if (const auto* p = std::get_if<fn::Product>(&body)) {
    std::vector<FieldElem> acc{FieldElem(1)};
    for (const auto& factor : p->factors) {
      auto c = to_coeffs(factor);
      if (!c) return std::nullopt;
      acc = poly_mul(acc, *c);
    }
    return acc;
  }
  if (const auto* p = std::get_if<fn::Power>(&body)) {
    if (p->exponent < 0) return std::nullopt;
    auto base = to_coeffs(p->base);
    if (!base) return std::nullopt;
    std::vector<FieldElem> acc{FieldElem(1)};
    for (long i = 0; i < p->exponent; ++i) acc = poly_mul(acc, *base);
    return acc;
  }
  return std::nullopt;
}

}  // namespace

FieldElem UnaryFn::operator()(const FieldElem& x) const { return std::visit(FnEvaluator{x}, node_->body); }

std::string UnaryFn::to_string() const { return std::visit(FnPrinter{}, node_->body); }

std::optional<ClassicalPoly> as_classical_poly(const UnaryFn& f) {
  auto c = to_coeffs(f);
  if (!c) return std::nullopt;
  return ClassicalPoly(std::move(*c));
}

}  // namespace fecheck
