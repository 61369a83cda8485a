#pragma once

#include <vector>

#include "stratabench/polynomial.hpp"

namespace strata {

// Dense matrices whose entries are polynomials over a coefficient ring R
// (an integral domain: ℚ when R has no variables, or ℚ[params]). Every
// routine is fraction-free, so no rational functions are ever formed.
using PolyMatrix = std::vector<std::vector<Polynomial>>;
using PolyVector = std::vector<Polynomial>;

struct EchelonForm {
  PolyMatrix rows;             // reduced; pivot rows first
  std::vector<size_t> pivots;  // pivot column of each nonzero row
  Polynomial pivot_value;      // common value of every pivot entry
};

// Fraction-free Gauss-Jordan (Bareiss update with exact division). All
// rows must have the same length; `coeffs` is R.
EchelonForm fraction_free_rref(PolyMatrix m, const Ring& coeffs);

size_t rank(const PolyMatrix& m, const Ring& coeffs);

// Basis of {x : m·x = 0} over Frac(R), one vector per non-pivot column,
// scaled to have entries in R (divided through by the pivot value when
// that division is exact).
std::vector<PolyVector> kernel_basis(const PolyMatrix& m, size_t columns, const Ring& coeffs);

// Plain rational versions.
using QMatrix = std::vector<std::vector<Rational>>;
using QVector = std::vector<Rational>;

size_t rank(QMatrix m);
// Kernel of m (columns given explicitly so empty matrices work); each
// vector has a 1 at its free column.
std::vector<QVector> kernel_basis(QMatrix m, size_t columns);

}  // namespace strata
