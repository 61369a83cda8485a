#pragma once

#include <array>
#include <vector>

#include "stratabench/plane_point.hpp"
#include "stratabench/polynomial.hpp"

namespace strata {

struct ParametrizationInput {
  Rational a, b;

  // a, b not in {0, 1}, a != b, a != b^2; throws "degenerate parameters".
  void validate() const;
  // (0:1), (1:0), (1:1), (a:1), (b:1), (a:b)
  std::array<std::array<Rational, 2>, 6> marked_points() const;
};

// P^1 with variables u, v.
const Ring& binary_ring();

// x = uv(u-v)(u-bv), y = u(u-v)(u-av)(bu-av), z = v(u-av)(u-bv)(bu-av)
std::array<Polynomial, 3> build_parametrization(const ParametrizationInput& inp);

// For each form, which of the six marked points it vanishes at.
std::array<std::array<bool, 6>, 3> vanishing_pattern(const ParametrizationInput& inp);

struct Implicitization {
  Polynomial quartic;      // in plane_ring()
  Rational scale;          // applied to the monic elimination generator
  bool anchored_to_y2z2;   // false when that coefficient vanished
};

// Kernel of Q[x,y,z] -> Q[u,v] by graph-ideal elimination, scaled so the
// y^2 z^2 coefficient is b^2 - b. Throws "unexpected image degree".
Implicitization implicitize_detailed(const ParametrizationInput& inp);
Polynomial implicitize(const ParametrizationInput& inp);

// The closed six-coefficient formula for the same quartic.
Polynomial reference_quartic(const ParametrizationInput& inp);

// P on q, all partials zero, and a squarefree quadratic tangent cone.
bool verify_node(const Polynomial& q, const ProjectivePoint& p);

// f = lambda g for a nonzero rational lambda.
bool compare_up_to_scalar(const Polynomial& f, const Polynomial& g);

// q(x(u,v), y(u,v), z(u,v)) as a binary form.
Polynomial pull_back(const Polynomial& q, const std::array<Polynomial, 3>& forms);

// Forms composed with tau(u:v) = (av:u).
std::array<Polynomial, 3> compose_with_tau(const ParametrizationInput& inp, const std::array<Polynomial, 3>& forms);

}  // namespace strata
