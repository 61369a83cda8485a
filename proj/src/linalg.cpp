#include "stratabench/linalg.hpp"

#include <algorithm>

namespace strata {

EchelonForm fraction_free_rref(PolyMatrix m, const Ring& coeffs) {
  size_t nrows = m.size();
  size_t ncols = nrows ? m[0].size() : 0;
  for (const auto& row : m)
    if (row.size() != ncols) throw Error("matrix rows have different lengths");

  Polynomial prev = Polynomial::constant(coeffs, 1);
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < nrows; ++c) {
    size_t p = r;
    // Prefer the sparsest nonzero pivot to limit growth.
    size_t best = nrows;
    for (; p < nrows; ++p) {
      if (m[p][c].is_zero()) continue;
      if (best == nrows || m[p][c].size() < m[best][c].size()) best = p;
    }
    if (best == nrows) continue;
    std::swap(m[r], m[best]);
    const Polynomial piv = m[r][c];
    for (size_t i = 0; i < nrows; ++i) {
      if (i == r) continue;
      const Polynomial f = m[i][c];
      for (size_t j = 0; j < ncols; ++j) {
        if (j == c) continue;
        if (f.is_zero()) {
          if (m[i][j].is_zero()) continue;
          m[i][j] = divide_exact(piv * m[i][j], prev);
        } else {
          Polynomial v = piv * m[i][j] - f * m[r][j];
          m[i][j] = v.is_zero() ? v : divide_exact(v, prev);
        }
      }
      m[i][c] = Polynomial(coeffs);
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return {std::move(m), std::move(pivots), prev};
}

size_t rank(const PolyMatrix& m, const Ring& coeffs) {
  return fraction_free_rref(m, coeffs).pivots.size();
}

std::vector<PolyVector> kernel_basis(const PolyMatrix& m, size_t columns, const Ring& coeffs) {
  for (const auto& row : m)
    if (row.size() != columns) throw Error("matrix rows have different lengths");
  EchelonForm e = fraction_free_rref(m, coeffs);
  std::vector<bool> is_pivot(columns, false);
  for (size_t c : e.pivots) is_pivot[c] = true;
  std::vector<PolyVector> basis;
  for (size_t f = 0; f < columns; ++f) {
    if (is_pivot[f]) continue;
    PolyVector x(columns, Polynomial(coeffs));
    x[f] = e.pivot_value;
    for (size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = -e.rows[i][f];
    bool divisible = true;
    PolyVector reduced;
    for (const auto& xi : x) {
      auto q = try_divide(xi, e.pivot_value);
      if (!q) {
        divisible = false;
        break;
      }
      reduced.push_back(std::move(*q));
    }
    basis.push_back(divisible ? std::move(reduced) : std::move(x));
  }
  return basis;
}

namespace {

// Returns pivot columns; m is left in reduced row echelon form.
std::vector<size_t> rref(QMatrix& m, size_t ncols) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < m.size(); ++c) {
    size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (size_t j = 0; j < ncols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

size_t rank(QMatrix m) {
  if (m.empty()) return 0;
  return rref(m, m[0].size()).size();
}

std::vector<QVector> kernel_basis(QMatrix m, size_t columns) {
  for (const auto& row : m)
    if (row.size() != columns) throw Error("matrix rows have different lengths");
  auto pivots = rref(m, columns);
  std::vector<bool> is_pivot(columns, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (size_t f = 0; f < columns; ++f) {
    if (is_pivot[f]) continue;
    QVector x(columns, 0);
    x[f] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -m[i][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace strata
