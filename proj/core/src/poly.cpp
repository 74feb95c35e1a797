#include "fecheck/poly.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

#include "fecheck/errors.hpp"

namespace fecheck {

std::size_t Degree::value() const {
  if (!finite_) throw std::logic_error("degree of the zero polynomial is minus infinity");
  return value_;
}

Poly::Poly(std::vector<Rat> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, std::size_t k) {
  std::vector<Rat> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Degree Poly::degree() const noexcept {
  if (coeffs_.empty()) return Degree::minus_infinity();
  return Degree(coeffs_.size() - 1);
}

const Rat& Poly::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rat Poly::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }

std::size_t Poly::term_count() const noexcept {
  std::size_t n = 0;
  for (const auto& c : coeffs_) n += (c != 0);
  return n;
}

Rat Poly::operator()(const Rat& at) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (coeffs_.empty() || coeffs_.back() == 1) return *this;
  Poly p = *this;
  Rat inv = 1 / coeffs_.back();
  for (auto& c : p.coeffs_) c *= inv;
  return p;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    const bool first = out.empty();
    Rat mag = abs(c);
    if (c < 0) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    if (i == 0) {
      out += fecheck::to_string(mag);
      continue;
    }
    if (mag != 1) out += fecheck::to_string(mag) + "*";
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

PolyDivision divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Rat> r = a.coefficients();
  if (r.size() <= db) return {Poly(), a};
  std::vector<Rat> q(r.size() - db);
  const Rat lead_inv = 1 / bc.back();
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    Rat f = r[k] * lead_inv;
    q[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= f * bc[j];
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

namespace {

Poly euclid_gcd(Poly x, Poly y) {
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.is_constant()) return Poly::constant(Rat(1));
    Poly r = divmod(x, y).remainder.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

using IntPoly = std::vector<mpz_class>;
using ModPoly = std::vector<std::uint64_t>;

IntPoly primitive_integer(const Poly& p) {
  mpz_class common = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out;
  mpz_class content = 0;
  for (const auto& c : p.coefficients()) {
    out.push_back(c.get_num() * (common / c.get_den()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
  }
  if (out.back() < 0) content = -content;
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  return out;
}

// 1000 primes above 2^31; products of two residues fit in 64 bits.
const std::vector<std::uint64_t>& modular_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    std::vector<std::uint64_t> out;
    mpz_class q = mpz_class(1) << 31;
    for (int i = 0; i < 1000; ++i) {
      mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
      out.push_back(q.get_ui());
    }
    return out;
  }();
  return primes;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e != 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce_mod(const IntPoly& a, std::uint64_t p) {
  ModPoly out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
  trim(out);
  return out;
}

// Monic gcd over Z/p.
ModPoly gcd_mod(ModPoly a, ModPoly b, std::uint64_t p) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const std::uint64_t lead_inv = inv_mod(b.back(), p);
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
      const std::uint64_t f = a.back() * lead_inv % p;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j <= db; ++j) a[shift + j] = (a[shift + j] + (p - f) * b[j]) % p;
      trim(a);
    }
    std::swap(a, b);
  }
  const std::uint64_t lead_inv = inv_mod(a.back(), p);
  for (auto& c : a) c = c * lead_inv % p;
  return a;
}

Poly to_poly(const IntPoly& a) {
  std::vector<Rat> c;
  c.reserve(a.size());
  for (const auto& v : a) c.emplace_back(v);
  return Poly(std::move(c));
}

bool divides(const Poly& d, const Poly& a) { return divmod(a, d).remainder.is_zero(); }

// Multi-modular gcd with trial-division verification. Returns nothing when
// the prime supply runs out.
std::optional<Poly> modular_gcd(const Poly& a, const Poly& b) {
  const IntPoly ia = primitive_integer(a);
  const IntPoly ib = primitive_integer(b);
  mpz_class lead_gcd;
  mpz_gcd(lead_gcd.get_mpz_t(), ia.back().get_mpz_t(), ib.back().get_mpz_t());

  IntPoly image;
  mpz_class modulus;
  std::size_t degree = 0;
  bool have = false;
  for (std::uint64_t p : modular_primes()) {
    if (mpz_fdiv_ui(ia.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(ib.back().get_mpz_t(), p) == 0) continue;
    const ModPoly g = gcd_mod(reduce_mod(ia, p), reduce_mod(ib, p), p);
    const std::size_t d = g.size() - 1;
    // The degree over Q never exceeds the degree modulo a prime that keeps
    // both leading coefficients.
    if (d == 0) return Poly::constant(Rat(1));
    if (have && d > degree) continue;
    const std::uint64_t scale = mpz_fdiv_ui(lead_gcd.get_mpz_t(), p);
    if (!have || d < degree) {
      image.assign(g.size(), mpz_class(0));
      for (std::size_t i = 0; i < g.size(); ++i) {
        const std::uint64_t r = g[i] * scale % p;
        image[i] = r;
        if (r > p / 2) image[i] -= p;
      }
      modulus = p;
      degree = d;
      have = true;
      continue;
    }
    // Residues are kept in the symmetric range so a stable image means the
    // integer coefficients have been found.
    const std::uint64_t m_inv = inv_mod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    const mpz_class previous_modulus = modulus;
    modulus *= p;
    const mpz_class half = modulus / 2;
    bool changed = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::uint64_t target = g[i] * scale % p;
      const std::uint64_t current = mpz_fdiv_ui(image[i].get_mpz_t(), p);
      const std::uint64_t step = (target + p - current) % p * m_inv % p;
      if (step == 0) continue;
      image[i] += previous_modulus * step;
      if (image[i] > half) image[i] -= modulus;
      changed = true;
    }
    if (changed) continue;
    const Poly g_q = to_poly(image).monic();
    if (divides(g_q, a) && divides(g_q, b)) return g_q;
  }
  return std::nullopt;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly::constant(Rat(1));
  if (auto g = modular_gcd(a, b)) return *g;
  return euclid_gcd(a.monic(), b.monic());
}

}  // namespace fecheck
