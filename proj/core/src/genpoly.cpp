#include "fecheck/genpoly.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "fecheck/errors.hpp"

namespace fecheck {

UnaryFn compose_fn(const UnaryFn& f, const ClassicalPoly& p) { return UnaryFn::composed(f, p); }

namespace {

std::vector<std::vector<Rat>> invert_vandermonde(const std::vector<Rat>& nodes) {
  const std::size_t n = nodes.size();
  // Augmented [V | I] with V[i][l] = r_i^l.
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    Rat power = 1;
    for (std::size_t l = 0; l < n; ++l) {
      m[i][l] = power;
      power *= nodes[i];
    }
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) throw SingularSystem("Vandermonde system is singular (repeated nodes)");
    std::swap(m[c], m[pivot]);
    const Rat lead = m[c][c];
    for (auto& v : m[c]) v /= lead;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rat factor = m[i][c];
      for (std::size_t j = c; j < 2 * n; ++j) m[i][j] -= factor * m[c][j];
    }
  }
  std::vector<std::vector<Rat>> inverse(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inverse[i][j] = m[i][n + j];
  }
  return inverse;
}

}  // namespace

HomogeneousComponents::HomogeneousComponents(UnaryFn g, unsigned degree_bound, std::vector<Rat> nodes)
    : g_(std::move(g)), bound_(degree_bound), nodes_(std::move(nodes)) {
  if (nodes_.empty()) {
    for (unsigned i = 1; i <= bound_ + 1; ++i) nodes_.emplace_back(i);
  }
  if (nodes_.size() != bound_ + 1) {
    throw std::invalid_argument("expected " + std::to_string(bound_ + 1) + " nodes, got " +
                                std::to_string(nodes_.size()));
  }
  for (const auto& r : nodes_) {
    if (r == 0) throw std::invalid_argument("scaling nodes must be nonzero");
  }
  inverse_ = invert_vandermonde(nodes_);
}

std::vector<FieldElem> HomogeneousComponents::operator()(const FieldElem& x) const {
  std::vector<FieldElem> values;
  values.reserve(nodes_.size());
  for (const auto& r : nodes_) values.push_back(g_(FieldElem(r) * x));
  std::vector<FieldElem> out;
  out.reserve(nodes_.size());
  for (const auto& row : inverse_) {
    FieldElem c;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] != 0) c += FieldElem(row[i]) * values[i];
    }
    out.push_back(std::move(c));
  }
  return out;
}

FieldFn HomogeneousComponents::component(unsigned l) const {
  if (l > bound_) throw std::out_of_range("component degree exceeds the bound");
  return [self = *this, l](const FieldElem& x) { return self(x)[l]; };
}

std::vector<FieldFn> homogeneous_components(const UnaryFn& g, unsigned degree_bound, std::vector<Rat> nodes) {
  HomogeneousComponents split(g, degree_bound, std::move(nodes));
  std::vector<FieldFn> out;
  for (unsigned l = 0; l <= degree_bound; ++l) out.push_back(split.component(l));
  return out;
}

Verdict is_generalized_monomial_of_degree(const UnaryFn& f, unsigned n, const std::vector<FieldElem>& samples) {
  if (samples.empty()) throw std::invalid_argument("is_generalized_monomial_of_degree: empty sample set");
  const std::size_t m = samples.size();
  const FieldElem scale(factorial(n));
  std::size_t checked = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const FieldElem& x = samples[i];
    std::vector<FieldElem> ys;
    for (unsigned j = 0; j <= n; ++j) ys.push_back(samples[(i + 1 + j) % m]);
    try {
      FieldElem high = UnaryFn::difference(f, ys)(x);
      ++checked;
      if (!high.is_zero()) {
        ys.insert(ys.begin(), x);
        return Verdict::fail(Witness{std::move(ys), high.to_string(), "0"},
                             "difference of order " + std::to_string(n + 1) + " does not vanish");
      }
      const FieldElem& y = samples[(i + 1) % m];
      FieldElem lhs = UnaryFn::difference(f, std::vector<FieldElem>(n, y))(x);
      FieldElem rhs = scale * f(y);
      ++checked;
      if (lhs != rhs) {
        return Verdict::fail(Witness{{x, y}, lhs.to_string(), rhs.to_string()},
                             "equal-increment difference of order " + std::to_string(n) + " differs from n! f(y)");
      }
    } catch (const EvaluationError& e) {
      return Verdict::fail(Witness{{x}, "error", e.what()}, "evaluation failed");
    }
  }
  return Verdict::pass(checked, "generalized monomial of degree " + std::to_string(n));
}

std::optional<unsigned> monomial_degree(const UnaryFn& f, unsigned nmax, const std::vector<FieldElem>& samples) {
  for (unsigned n = 0; n <= nmax; ++n) {
    if (is_generalized_monomial_of_degree(f, n, samples).passed()) return n;
  }
  return std::nullopt;
}

}  // namespace fecheck
