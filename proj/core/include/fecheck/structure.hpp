#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fecheck/atoms.hpp"
#include "fecheck/matrix_rank.hpp"
#include "fecheck/verdict.hpp"

namespace fecheck {

using Kernel = std::function<FieldElem(const FieldElem&, const FieldElem&)>;

struct KernelGrid {
  std::vector<FieldElem> xs;
  std::vector<FieldElem> ys;
  FieldMatrix values;  ///< values[i][j] = K(xs[i], ys[j])
};

/// Throws std::invalid_argument on an empty grid; evaluation errors propagate.
KernelGrid evaluate_grid(const Kernel& k, std::vector<FieldElem> xs, std::vector<FieldElem> ys);

/// Exact rank over Q(t) of the value matrix.
std::size_t kernel_rank(const Kernel& k, const std::vector<FieldElem>& xs, const std::vector<FieldElem>& ys);

/// (x, y) -> a(x y).
Kernel product_kernel(const AdditiveMap& a);

enum class Scalars {
  rationals,  ///< linear relations with constant coefficients
  field,      ///< relations with coefficients in Q(t)
};

/// PASS iff the maps-by-points value matrix has full row rank over the chosen
/// scalars. Over Q(t) two derivations are always proportional, so the
/// default asks for independence over the rational constants.
Verdict certify_independent(const std::vector<AdditiveMap>& maps, const std::vector<FieldElem>& xs,
                            Scalars scalars = Scalars::rationals);

struct HodReport {
  std::optional<unsigned> degree;
  Verdict verdict;  ///< precondition when D(1) != 0
  std::uint64_t seed = 0;
  std::vector<FieldElem> increments;  ///< the pool the differences drew from
};

/// Order of D as a higher-order derivation: the least n <= nmax such that
/// every multiplicative difference of D/id of order n+1 vanishes at the
/// sample base points. Increments come from a seeded pool of nonconstant
/// rational functions.
HodReport hod_degree(const AdditiveMap& d, unsigned nmax, const std::vector<FieldElem>& samples,
                     std::uint64_t seed = 7, std::size_t pool_size = 6);

struct DecomposabilityReport {
  Verdict verdict;
  std::size_t max_rank = 0;
  std::vector<std::size_t> ranks;  ///< one per tail product
};

/// Rank of (x, y) -> a(x y m) for tail products m of k-2 sample factors. PASS
/// when no tail saturates the grid, i.e. the rank stays below min(|xs|, |ys|).
/// A one-sided signal: bounded rank on a finite grid is evidence, not proof.
DecomposabilityReport pullback_decomposable(const AdditiveMap& a, unsigned k, const std::vector<FieldElem>& xs,
                                            const std::vector<FieldElem>& ys);

}  // namespace fecheck
