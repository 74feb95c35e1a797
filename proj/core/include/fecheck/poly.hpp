#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "fecheck/rat.hpp"

namespace fecheck {

/// Polynomial degree with a distinguished minus-infinity for the zero
/// polynomial. Never converts implicitly to an integer.
class Degree {
 public:
  static constexpr Degree minus_infinity() noexcept { return Degree(); }
  constexpr explicit Degree(std::size_t d) noexcept : finite_(true), value_(d) {}

  constexpr bool is_minus_infinity() const noexcept { return !finite_; }
  /// Precondition: finite.
  std::size_t value() const;

  friend constexpr bool operator==(Degree a, Degree b) noexcept {
    return a.finite_ == b.finite_ && a.value_ == b.value_;
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) noexcept {
    if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }
  friend constexpr Degree operator+(Degree a, Degree b) noexcept {
    if (!a.finite_ || !b.finite_) return minus_infinity();
    return Degree(a.value_ + b.value_);
  }

 private:
  constexpr Degree() noexcept = default;
  bool finite_ = false;
  std::size_t value_ = 0;
};

/// Univariate polynomial over Q in the indeterminate t, coefficients stored
/// lowest degree first with no trailing zeros (empty = zero polynomial).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coefficients);

  static Poly constant(const Rat& c);
  static Poly monomial(const Rat& c, std::size_t k);
  static Poly t() { return monomial(Rat(1), 1); }

  const std::vector<Rat>& coefficients() const noexcept { return coeffs_; }
  Degree degree() const noexcept;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  /// Precondition: nonzero.
  const Rat& leading() const;
  Rat coefficient(std::size_t k) const;
  std::size_t term_count() const noexcept;

  Rat operator()(const Rat& at) const;
  Poly derivative() const;
  Poly monic() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Highest degree first, `*` between coefficient and power, no spaces.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division; throws DivisionByZero on a zero divisor.
PolyDivision divmod(const Poly& a, const Poly& b);

/// Quotient of a division known to be exact; throws std::logic_error otherwise.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace fecheck
