#include "fecheck/rat.hpp"

#include "fecheck/errors.hpp"

namespace fecheck {

Rat make_rat(long numerator, long denominator) {
  if (denominator == 0) throw DivisionByZero();
  Rat q(numerator, denominator);
  q.canonicalize();
  return q;
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

std::string to_string(const Rat& q) { return q.get_str(); }

Rat factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(f);
}

Rat multinomial(unsigned k, const unsigned* parts, std::size_t count) {
  Rat r = factorial(k);
  unsigned total = 0;
  for (std::size_t i = 0; i < count; ++i) {
    r /= factorial(parts[i]);
    total += parts[i];
  }
  if (total != k) throw std::invalid_argument("multinomial: parts do not sum to k");
  return r;
}

}  // namespace fecheck
