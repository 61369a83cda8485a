#pragma once

#include <array>

#include "stratabench/polynomial.hpp"

namespace strata {

using ProjectivePoint = std::array<Rational, 3>;

ProjectivePoint parse_point(std::string_view text);  // "a,b,c"
std::string to_string(const ProjectivePoint& p);

// P^2 with variables x, y, z.
const Ring& plane_ring();

// Ring (s,t) of affine coordinates centred at a point.
const Ring& local_ring();

struct LocalExpansion {
  Polynomial local;         // f in the chart, translated so P is the origin
  unsigned multiplicity;    // order of vanishing at P
  Polynomial initial_form;  // lowest-degree homogeneous part
};

// f homogeneous in a three-variable unweighted ring; P must not be zero.
// The chart is the first coordinate of P that is nonzero.
LocalExpansion local_expansion(const Polynomial& f, const ProjectivePoint& p);

// For a nonzero binary form in local_ring(): no repeated linear factor
// over the algebraic closure.
bool binary_form_squarefree(const Polynomial& form);

}  // namespace strata
