#include "fecheck/field_elem.hpp"

#include <utility>

#include "fecheck/errors.hpp"

namespace fecheck {

namespace {

const Poly& one_poly() {
  static const Poly one = Poly::constant(Rat(1));
  return one;
}

}  // namespace

FieldElem::FieldElem(const Rat& c) : num_(Poly::constant(c)), den_(one_poly()) {}

FieldElem::FieldElem(Poly num) : num_(std::move(num)), den_(one_poly()) {}

FieldElem::FieldElem(Poly num, Poly den) {
  if (den.is_zero()) throw DivisionByZero();
  *this = reduce(std::move(num), std::move(den));
}

FieldElem FieldElem::t() { return FieldElem(Poly::t()); }

// num/den with gcd(num, den) = 1 already known; only fixes the leading
// coefficient of den.
FieldElem FieldElem::from_coprime(Poly num, Poly den) {
  if (num.is_zero()) return FieldElem();
  if (den.leading() != 1) {
    Rat s = 1 / den.leading();
    num *= s;
    den *= s;
  }
  return FieldElem(std::move(num), std::move(den), Canonical{});
}

FieldElem FieldElem::reduce(Poly num, Poly den) {
  if (num.is_zero()) return FieldElem();
  if (!den.is_constant()) {
    Poly g = gcd(num, den);
    if (!g.is_one()) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
  }
  return from_coprime(std::move(num), std::move(den));
}

std::optional<Rat> FieldElem::as_constant() const {
  if (!is_constant()) return std::nullopt;
  return num_.coefficient(0);
}

FieldElem FieldElem::operator-() const { return FieldElem(-num_, den_, Canonical{}); }

FieldElem add(const FieldElem& a, const FieldElem& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return FieldElem(a.num_ + b.num_);
    return FieldElem::reduce(a.num_ + b.num_, a.den_);
  }
  if (a.den_.is_one()) return FieldElem::from_coprime(a.num_ * b.den_ + b.num_, b.den_);
  if (b.den_.is_one()) return FieldElem::from_coprime(a.num_ + b.num_ * a.den_, a.den_);
  Poly g = gcd(a.den_, b.den_);
  if (g.is_one()) {
    return FieldElem::from_coprime(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  // Henrici: only the common factor g can cancel.
  Poly bd = exact_div(b.den_, g);
  Poly ad = exact_div(a.den_, g);
  Poly num = a.num_ * bd + b.num_ * ad;
  if (num.is_zero()) return FieldElem();
  Poly h = gcd(num, g);
  Poly den = a.den_ * bd;
  if (!h.is_one()) {
    num = exact_div(num, h);
    den = exact_div(den, h);
  }
  return FieldElem::from_coprime(std::move(num), std::move(den));
}

FieldElem mul(const FieldElem& a, const FieldElem& b) {
  if (a.is_zero() || b.is_zero()) return FieldElem();
  if (a.den_.is_one() && b.den_.is_one()) return FieldElem(a.num_ * b.num_);
  Poly an = a.num_, ad = a.den_, bn = b.num_, bdn = b.den_;
  if (!bdn.is_constant()) {
    Poly g1 = gcd(an, bdn);
    if (!g1.is_one()) {
      an = exact_div(an, g1);
      bdn = exact_div(bdn, g1);
    }
  }
  if (!ad.is_constant()) {
    Poly g2 = gcd(bn, ad);
    if (!g2.is_one()) {
      bn = exact_div(bn, g2);
      ad = exact_div(ad, g2);
    }
  }
  return FieldElem::from_coprime(an * bn, ad * bdn);
}

FieldElem& FieldElem::operator+=(const FieldElem& o) { return *this = add(*this, o); }
FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this = add(*this, -o); }
FieldElem& FieldElem::operator*=(const FieldElem& o) { return *this = mul(*this, o); }
FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this = mul(*this, inv(o)); }

FieldElem neg(const FieldElem& a) { return -a; }

FieldElem inv(const FieldElem& a) {
  if (a.is_zero()) throw DivisionByZero();
  return FieldElem(a.den(), a.num());
}

FieldElem pow(const FieldElem& a, long k) {
  if (k < 0) return pow(inv(a), -k);
  FieldElem result(1);
  FieldElem base = a;
  auto e = static_cast<unsigned long>(k);
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

FieldElem ddt(const FieldElem& a) {
  const Poly& n = a.num();
  const Poly& d = a.den();
  if (d.is_one()) return FieldElem(n.derivative());
  return FieldElem(n.derivative() * d - n * d.derivative(), d * d);
}

namespace {

FieldElem horner(const Poly& p, const FieldElem& at) {
  FieldElem acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * at + FieldElem(*it);
  return acc;
}

}  // namespace

FieldElem compose(const FieldElem& x, const FieldElem& r) {
  FieldElem den = horner(x.den(), r);
  if (den.is_zero()) {
    throw CompositionUndefined("substitution t -> " + r.to_string() + " hits a pole of " + x.to_string());
  }
  return horner(x.num(), r) / den;
}

namespace {

bool needs_parens_as_numerator(const Poly& p) {
  if (p.term_count() > 1) return true;
  const auto& lead = p.leading();
  // A lone rational coefficient on a power of t would read as a/(b*t^k).
  return !p.is_constant() && !is_integer(lead);
}

}  // namespace

std::string FieldElem::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  if (needs_parens_as_numerator(num_)) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (den_.term_count() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace fecheck

namespace fecheck {

std::string to_operand_string(const FieldElem& a) {
  if (a == FieldElem::t()) return "t";
  if (auto c = a.as_constant(); c && is_integer(*c) && *c >= 0) return to_string(*c);
  return "(" + a.to_string() + ")";
}

}  // namespace fecheck
