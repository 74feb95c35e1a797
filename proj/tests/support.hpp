#pragma once

// Shared fixtures, hand-rolled generators and brute-force oracles. The
// oracles deliberately use the slowest obvious formula so they share no code
// path with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "fecheck/atoms.hpp"
#include "fecheck/field_elem.hpp"
#include "fecheck/matrix_rank.hpp"
#include "fecheck/parser.hpp"
#include "fecheck/sym_form.hpp"
#include "fecheck/unary_fn.hpp"

namespace fecheck::test {

inline FieldElem fe(const std::string& text) { return parse_field_elem(text); }
inline AdditiveMap am(const std::string& text) { return parse_map(text); }
inline SymForm sf(const std::string& text) { return parse_form(text); }
inline UnaryFn uf(const std::string& text) { return parse_function(text); }

inline std::vector<FieldElem> elems(std::initializer_list<const char*> texts) {
  std::vector<FieldElem> out;
  for (const char* t : texts) out.push_back(fe(t));
  return out;
}

/// Pullback and atom-product forms over derivation and substitution atoms,
/// arities 1 to 4.
inline std::vector<SymForm> polarization_fixtures() {
  std::vector<SymForm> out;
  for (const char* text : {"pull(der(1), 1)", "prod(sub(t^2))", "pull(der(1), 2)", "prod(der(1), der(1))",
                           "prod(der(t), sub(t+1))", "pull(sub(t^2), 3)", "prod(der(1), sub(t^2), id)",
                           "pull(der(t), 4)", "prod(der(1), der(1), sub(t+1), id)"})
    out.push_back(sf(text));
  return out;
}

/// Small random elements: numerator degree <= 2, denominator degree <= 1,
/// coefficients in [-5, 5]. Keeps iterated differences cheap.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) { return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  Rat rational() {
    long q = integer(1, 6);
    return make_rat(integer(-9, 9), q);
  }

  Rat nonzero_rational() {
    Rat r = rational();
    while (r == 0) r = rational();
    return r;
  }

  Poly poly(std::size_t max_degree) {
    std::vector<Rat> c;
    const std::size_t d = static_cast<std::size_t>(integer(0, static_cast<long>(max_degree)));
    for (std::size_t i = 0; i <= d; ++i) c.emplace_back(integer(-5, 5));
    return Poly(std::move(c));
  }

  FieldElem elem() {
    Poly den = poly(1);
    while (den.is_zero()) den = poly(1);
    return FieldElem(poly(2), den);
  }

  FieldElem nonzero() {
    FieldElem x = elem();
    while (x.is_zero()) x = elem();
    return x;
  }

  std::vector<FieldElem> nonzero(std::size_t n) {
    std::vector<FieldElem> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(nonzero());
    return out;
  }

  FieldElem nonconstant_poly() {
    for (;;) {
      Poly p = poly(2);
      if (!p.is_constant()) return FieldElem(p);
    }
  }

  /// Random atom of bounded size: id, der(u), sub(r), a composition of two
  /// atoms or a combination of two.
  AdditiveMap map(int depth = 1) {
    const long pick = integer(0, depth > 0 ? 4 : 2);
    switch (pick) {
      case 0: return AdditiveMap::identity();
      case 1: return AdditiveMap::derivation(FieldElem(poly(1)) + FieldElem(1) * FieldElem(integer(1, 2)));
      case 2: return AdditiveMap::substitution(nonconstant_poly());
      case 3: return AdditiveMap::compose({map(depth - 1), map(depth - 1)});
      default:
        return AdditiveMap::lincomb({{FieldElem(nonzero_rational()), map(depth - 1)},
                                     {FieldElem(nonzero_rational()), map(depth - 1)}});
    }
  }

  std::vector<AdditiveMap> maps(std::size_t n) {
    std::vector<AdditiveMap> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(map(0));
    return out;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline FieldElem factorial_elem(unsigned n) {
  long f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return FieldElem(f);
}

/// (1/k!) sum over all k! orderings of prod_i maps[i](args[sigma(i)]).
inline FieldElem naive_atom_product(const std::vector<AdditiveMap>& maps, const std::vector<FieldElem>& args) {
  std::vector<std::size_t> perm(args.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  FieldElem total;
  do {
    FieldElem term(1);
    for (std::size_t i = 0; i < maps.size(); ++i) term *= maps[i](args[perm[i]]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total / factorial_elem(static_cast<unsigned>(args.size()));
}

/// (1/N!) sum over all N! orderings of F(block products), blocks of sizes alphas.
inline FieldElem naive_power_blocks(const SymForm& f, const std::vector<unsigned>& alphas,
                                    const std::vector<FieldElem>& args) {
  std::vector<std::size_t> perm(args.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  FieldElem total;
  do {
    std::vector<FieldElem> blocks;
    std::size_t at = 0;
    for (unsigned a : alphas) {
      FieldElem prod(1);
      for (unsigned j = 0; j < a; ++j) prod *= args[perm[at++]];
      blocks.push_back(prod);
    }
    total += f(blocks);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total / factorial_elem(static_cast<unsigned>(args.size()));
}

/// Rank by plain Gauss-Jordan over Q(t) with field division.
inline std::size_t gauss_jordan_rank(FieldMatrix m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    const FieldElem lead = m[rank][c];
    for (auto& v : m[rank]) v /= lead;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c].is_zero()) continue;
      const FieldElem factor = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= factor * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Iterated difference written out as nested lambdas, independent of UnaryFn.
inline FieldElem naive_difference(const std::function<FieldElem(const FieldElem&)>& f,
                                  const std::vector<FieldElem>& ys, const FieldElem& x) {
  if (ys.empty()) return f(x);
  std::vector<FieldElem> rest(ys.begin() + 1, ys.end());
  auto shifted = [&](const FieldElem& z) { return f(z + ys.front()) - f(z); };
  return naive_difference(shifted, rest, x);
}

}  // namespace fecheck::test
