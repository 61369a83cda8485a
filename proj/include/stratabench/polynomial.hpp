#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stratabench/rational.hpp"

namespace strata {

// Domain failures (bad input, failed preconditions). Messages are stable;
// tests and the CLI match on them.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Exponent = std::uint32_t;
using Monomial = std::vector<Exponent>;

class WeightedRing {
 public:
  WeightedRing(std::vector<std::string> names, std::vector<int> weights);

  static std::shared_ptr<const WeightedRing> make(std::vector<std::string> names,
                                                  std::vector<int> weights);
  // All weights 1.
  static std::shared_ptr<const WeightedRing> make(std::vector<std::string> names);

  size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  std::optional<size_t> find(std::string_view name) const;
  size_t index(std::string_view name) const;

  long degree(const Monomial& m) const;

  bool operator==(const WeightedRing& other) const {
    return names_ == other.names_ && weights_ == other.weights_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using Ring = std::shared_ptr<const WeightedRing>;

bool same_ring(const Ring& a, const Ring& b);

// Weighted degree first, ties broken reverse-lexicographically
// (smaller exponent in the last differing variable is larger).
bool canonical_greater(const Monomial& a, const Monomial& b, const WeightedRing& ring);

struct Term {
  Monomial exps;
  Rational coeff;
  bool operator==(const Term& o) const { return exps == o.exps && coeff == o.coeff; }
};

// Sparse polynomial; terms are kept sorted descending in the canonical
// order with no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(Ring ring);

  static Polynomial constant(Ring ring, const Rational& c);
  static Polynomial variable(Ring ring, std::string_view name);
  static Polynomial variable(Ring ring, size_t index);
  static Polynomial monomial(Ring ring, Monomial exps, const Rational& c = 1);
  // Merges duplicates and drops zeros; input order is irrelevant.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Term& leading_term() const;
  Rational coefficient(const Monomial& m) const;
  Exponent degree_in(size_t var) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  Polynomial pow(unsigned n) const;

  Rational evaluate(const std::vector<Rational>& point) const;

  // Scaled so the leading coefficient is 1; zero stays zero.
  Polynomial monic() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  Polynomial(Ring ring, std::vector<Term> sorted_terms);
  void check_ring(const Polynomial& o) const;

  Ring ring_;
  std::vector<Term> terms_;
};

// nullopt means "inhomogeneous". Throws Error("degree of zero undefined").
std::optional<long> weighted_degree(const Polynomial& p);

// Every used variable of p must be assigned; images must share one ring.
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignment);
// Variant with an explicit target ring, so the empty assignment of a
// constant is well defined.
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignment,
                      const Ring& target);

Polynomial differentiate(const Polynomial& p, std::string_view var);

// Re-expresses p in `target` by variable name. Variables of p that are
// absent from target must not occur in p.
Polynomial change_ring(const Polynomial& p, const Ring& target);

std::optional<Polynomial> try_divide(const Polynomial& f, const Polynomial& g);
// Throws Error("inexact division") when g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

// Infix syntax: + - * / ^ and parentheses, rational constants, ring
// variable names. Division is by constants only.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

std::string to_string(const Polynomial& p);

}  // namespace strata
