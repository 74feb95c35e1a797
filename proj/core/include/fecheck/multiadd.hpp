#pragma once

#include <span>
#include <string>
#include <vector>

#include "fecheck/sym_form.hpp"
#include "fecheck/unary_fn.hpp"
#include "fecheck/verdict.hpp"

namespace fecheck {

/// x -> A(x, ..., x). Homogeneous: trace(A)(q x) = q^k trace(A)(x), q in Q.
UnaryFn trace(const SymForm& a);

/// Delta_{y1..ym} f with Delta_y f(x) = f(x+y) - f(x). The increments commute.
UnaryFn delta(const UnaryFn& f, std::vector<FieldElem> ys);

/// Multiplicative analogue on the unit group: Delta_y g(x) = g(xy) - g(x).
/// Every increment must be nonzero; the result is undefined at x = 0.
UnaryFn delta_mult(const UnaryFn& g, std::vector<FieldElem> ys);

/// Form of arity sum(alphas) whose trace is x -> F(x^alpha_1, ..., x^alpha_n).
/// Evaluation averages over the ways of cutting the slots into blocks of
/// those sizes rather than over all of S_N.
SymForm symmetrize_powers(const SymForm& f, std::vector<unsigned> alphas);

/// Values of the n-additive form recovered from a claimed degree-n trace.
struct PolarizationReport {
  bool consistent = true;
  std::size_t tuples_checked = 0;
  std::size_t probes = 0;
  std::optional<Witness> witness;  ///< tuple whose value moved with the base point
};

class PolarizedForm {
 public:
  PolarizedForm(UnaryFn f, unsigned degree, FieldElem base);

  unsigned arity() const noexcept { return degree_; }
  /// Delta_{ys} f(base) / n!.
  FieldElem operator()(std::span<const FieldElem> ys) const;
  /// Same quantity at another base point.
  FieldElem at_base(const FieldElem& base, std::span<const FieldElem> ys) const;

 private:
  UnaryFn f_;
  unsigned degree_;
  FieldElem base_;
  FieldElem scale_;
};

struct Polarization {
  PolarizedForm form;
  PolarizationReport report;
};

/// Recovers (y1..yn) -> Delta_{ys} f(x0)/n! at x0 = probes[0] and checks that
/// the value does not depend on the base point, over every probe as base and
/// the tuples obtained by cycling through the probes.
Polarization polarize(const UnaryFn& f, unsigned n, const std::vector<FieldElem>& probes);

/// If trace(A) vanishes at every sample, checks that A vanishes on all
/// sampled argument tuples. Otherwise reports the precondition path.
Verdict check_mainfact(const SymForm& a, const std::vector<FieldElem>& samples);

/// Argument tuples of length k cut cyclically from the samples, one per
/// starting offset, plus one with a repeated entry.
std::vector<std::vector<FieldElem>> sample_tuples(const std::vector<FieldElem>& samples, unsigned k);

/// Invariance under argument permutations: all of S_k for k <= 4, the
/// adjacent transpositions (which generate S_k) above that.
Verdict check_permutation_invariance(const SymForm& a, const std::vector<FieldElem>& samples);

/// A(.., x + x', ..) = A(.., x, ..) + A(.., x', ..) in every slot.
Verdict check_slot_additivity(const SymForm& a, const std::vector<FieldElem>& samples);

}  // namespace fecheck
