#pragma once

#include <concepts>
#include <optional>
#include <string>

#include "fecheck/poly.hpp"
#include "fecheck/rat.hpp"

namespace fecheck {

/// Element of the rational function field Q(t), always held in canonical
/// form: gcd(num, den) = 1, den monic, zero stored as 0/1. Two elements are
/// equal iff their representations are identical.
class FieldElem {
 public:
  FieldElem() : den_(Poly::constant(Rat(1))) {}
  template <std::integral I>
  FieldElem(I n) : FieldElem(Rat(static_cast<long>(n))) {}  // NOLINT(google-explicit-constructor)
  explicit FieldElem(const Rat& c);
  explicit FieldElem(Poly num);
  /// Throws DivisionByZero when `den` is the zero polynomial.
  FieldElem(Poly num, Poly den);

  static FieldElem t();

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_one(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }
  std::optional<Rat> as_constant() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  friend bool operator==(const FieldElem& a, const FieldElem& b) = default;

  /// Parseable text, highest degree first, e.g. `(t^2+1)/(t-3/2)`.
  std::string to_string() const;

 private:
  struct Canonical {};
  FieldElem(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  static FieldElem reduce(Poly num, Poly den);
  static FieldElem from_coprime(Poly num, Poly den);

  Poly num_;
  Poly den_;

  friend FieldElem add(const FieldElem&, const FieldElem&);
  friend FieldElem mul(const FieldElem&, const FieldElem&);
};

FieldElem add(const FieldElem& a, const FieldElem& b);
FieldElem mul(const FieldElem& a, const FieldElem& b);
FieldElem neg(const FieldElem& a);
/// Throws DivisionByZero on zero.
FieldElem inv(const FieldElem& a);
/// pow(a, 0) = 1; negative k requires a != 0.
FieldElem pow(const FieldElem& a, long k);

/// Text usable as an operand inside a larger expression: nonnegative
/// integers and `t` print bare, everything else is parenthesized.
std::string to_operand_string(const FieldElem& a);

/// The derivation d/dt by the quotient rule.
FieldElem ddt(const FieldElem& a);

/// x(r(t)). Throws CompositionUndefined when r is a constant pole of x.
FieldElem compose(const FieldElem& x, const FieldElem& r);

}  // namespace fecheck
