#include "fecheck/matrix_rank.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace fecheck {

namespace {

std::size_t width(const FieldMatrix& m) {
  if (m.empty()) return 0;
  const std::size_t w = m.front().size();
  for (const auto& row : m) {
    if (row.size() != w) throw std::invalid_argument("matrix rows differ in length");
  }
  return w;
}

Poly lcm(const Poly& a, const Poly& b) { return exact_div(a * b, gcd(a, b)); }

}  // namespace

std::size_t rank_over_field(const FieldMatrix& m) {
  const std::size_t cols = width(m);
  std::vector<std::vector<Poly>> a;
  a.reserve(m.size());
  for (const auto& row : m) {
    Poly common = Poly::constant(Rat(1));
    for (const auto& e : row) common = lcm(common, e.den());
    std::vector<Poly> cleared;
    cleared.reserve(cols);
    for (const auto& e : row) cleared.push_back(e.num() * exact_div(common, e.den()));
    a.push_back(std::move(cleared));
  }

  std::size_t rank = 0;
  Poly previous = Poly::constant(Rat(1));
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    auto pivot = std::find_if(a.begin() + static_cast<std::ptrdiff_t>(rank), a.end(),
                              [c](const std::vector<Poly>& row) { return !row[c].is_zero(); });
    if (pivot == a.end()) continue;
    std::iter_swap(a.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
    const auto& p = a[rank];
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      auto& row = a[i];
      for (std::size_t j = c + 1; j < cols; ++j) {
        row[j] = exact_div(p[c] * row[j] - row[c] * p[j], previous);
      }
      row[c] = Poly();
    }
    previous = p[c];
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(std::vector<std::vector<Rat>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Rat factor = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_over_rationals(const FieldMatrix& m) {
  const std::size_t cols = width(m);
  Poly common = Poly::constant(Rat(1));
  for (const auto& row : m) {
    for (const auto& e : row) common = lcm(common, e.den());
  }
  // Column j of the result holds the coefficient of t^k in entry j.
  std::vector<std::vector<Poly>> cleared;
  std::vector<std::size_t> span(cols, 0);
  for (const auto& row : m) {
    std::vector<Poly> out;
    for (std::size_t j = 0; j < cols; ++j) {
      out.push_back(row[j].num() * exact_div(common, row[j].den()));
      span[j] = std::max(span[j], out.back().coefficients().size());
    }
    cleared.push_back(std::move(out));
  }
  std::vector<std::vector<Rat>> expanded;
  for (const auto& row : cleared) {
    std::vector<Rat> flat;
    for (std::size_t j = 0; j < cols; ++j) {
      for (std::size_t k = 0; k < span[j]; ++k) flat.push_back(row[j].coefficient(k));
    }
    expanded.push_back(std::move(flat));
  }
  return rank_rational(std::move(expanded));
}

}  // namespace fecheck
