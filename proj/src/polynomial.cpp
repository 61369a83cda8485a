#include "stratabench/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace strata {

// ---------------------------------------------------------------- ring

WeightedRing::WeightedRing(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size())
    throw Error("ring: names and weights differ in length");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error("ring: empty variable name");
    if (!seen.insert(n).second) throw Error("ring: duplicate variable name '" + n + "'");
  }
  for (int w : weights_)
    if (w < 1) throw Error("ring: weights must be positive");
}

Ring WeightedRing::make(std::vector<std::string> names, std::vector<int> weights) {
  return std::make_shared<const WeightedRing>(std::move(names), std::move(weights));
}

Ring WeightedRing::make(std::vector<std::string> names) {
  std::vector<int> w(names.size(), 1);
  return make(std::move(names), std::move(w));
}

std::optional<size_t> WeightedRing::find(std::string_view name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

size_t WeightedRing::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw Error("unknown variable '" + std::string(name) + "'");
  return *i;
}

long WeightedRing::degree(const Monomial& m) const {
  long d = 0;
  for (size_t i = 0; i < m.size(); ++i) d += static_cast<long>(m[i]) * weights_[i];
  return d;
}

bool same_ring(const Ring& a, const Ring& b) { return a == b || *a == *b; }

bool canonical_greater(const Monomial& a, const Monomial& b, const WeightedRing& ring) {
  long da = ring.degree(a), db = ring.degree(b);
  if (da != db) return da > db;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

// ---------------------------------------------------------------- helpers

namespace {

Exponent add_exp(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("exponent overflow");
  return r;
}

Monomial mul_mono(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = add_exp(a[i], b[i]);
  return r;
}

// Sorts descending and merges equal monomials, dropping zeros.
std::vector<Term> normalize_terms(std::vector<Term> terms, const WeightedRing& ring) {
  if (terms.empty()) return terms;
  std::vector<std::pair<long, size_t>> keys(terms.size());
  for (size_t i = 0; i < terms.size(); ++i) keys[i] = {ring.degree(terms[i].exps), i};
  std::sort(keys.begin(), keys.end(), [&](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    const Monomial& a = terms[x.second].exps;
    const Monomial& b = terms[y.second].exps;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& [deg, idx] : keys) {
    Term& t = terms[idx];
    if (!out.empty() && out.back().exps == t.exps) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b,
                            const WeightedRing& ring, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && canonical_greater(a[i].exps, b[j].exps, ring))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || canonical_greater(b[j].exps, a[i].exps, ring)) {
      out.push_back(b[j++]);
      if (negate_b) out.back().coeff = -out.back().coeff;
    } else {
      Rational c = a[i].coeff;
      if (negate_b)
        c -= b[j].coeff;
      else
        c += b[j].coeff;
      if (c != 0) out.push_back({a[i].exps, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- polynomial

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {
  if (!ring_) throw Error("polynomial: null ring");
}

Polynomial::Polynomial(Ring ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
  return monomial(ring, Monomial(ring->size(), 0), c);
}

Polynomial Polynomial::variable(Ring ring, std::string_view name) {
  size_t i = ring->index(name);
  return variable(std::move(ring), i);
}

Polynomial Polynomial::variable(Ring ring, size_t index) {
  if (index >= ring->size()) throw Error("variable index out of range");
  Monomial m(ring->size(), 0);
  m[index] = 1;
  return monomial(std::move(ring), std::move(m), 1);
}

Polynomial Polynomial::monomial(Ring ring, Monomial exps, const Rational& c) {
  if (exps.size() != ring->size()) throw Error("exponent vector length mismatch");
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({std::move(exps), c});
  return p;
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.exps.size() != ring->size()) throw Error("exponent vector length mismatch");
  auto sorted = normalize_terms(std::move(terms), *ring);
  return Polynomial(std::move(ring), std::move(sorted));
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (auto e : terms_[0].exps)
    if (e) return false;
  return true;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  return terms_.front();
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.exps == m) return t.coeff;
  return 0;
}

Exponent Polynomial::degree_in(size_t var) const {
  Exponent d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exps.at(var));
  return d;
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) throw Error("polynomials live in different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_ring(o);
  terms_ = merge_add(terms_, o.terms_, *ring_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_ring(o);
  terms_ = merge_add(terms_, o.terms_, *ring_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (b.size() == 1 || a.size() == 1) {
    // Multiplying by a monomial preserves the order.
    const Polynomial& m = a.size() == 1 ? a : b;
    const Polynomial& p = a.size() == 1 ? b : a;
    std::vector<Term> out;
    out.reserve(p.size());
    const Term& mt = m.terms_[0];
    for (const auto& t : p.terms_) out.push_back({mul_mono(t.exps, mt.exps), t.coeff * mt.coeff});
    return Polynomial(a.ring_, std::move(out));
  }
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({mul_mono(s.exps, t.exps), s.coeff * t.coeff});
  return Polynomial(a.ring_, normalize_terms(std::move(prod), *a.ring_));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (n) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != ring_->size()) throw Error("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (size_t i = 0; i < point.size(); ++i) {
      for (Exponent k = 0; k < t.exps[i]; ++k) v *= point[i];
      if (v == 0) break;
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / terms_.front().coeff;
  return *this * inv;
}

// ---------------------------------------------------------------- operations

std::optional<long> weighted_degree(const Polynomial& p) {
  if (p.is_zero()) throw Error("degree of zero undefined");
  long d = p.ring()->degree(p.terms().front().exps);
  for (const auto& t : p.terms())
    if (p.ring()->degree(t.exps) != d) return std::nullopt;
  return d;
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignment) {
  if (assignment.empty()) {
    if (!p.is_constant()) throw Error("substitute: missing assignment");
    return p;
  }
  return substitute(p, assignment, assignment.begin()->second.ring());
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignment,
                      const Ring& target) {
  for (const auto& [name, img] : assignment)
    if (!same_ring(img.ring(), target)) throw Error("substitute: images live in different rings");
  const auto& names = p.ring()->names();
  size_t n = names.size();
  std::vector<const Polynomial*> images(n, nullptr);
  std::vector<Exponent> max_exp(n, 0);
  for (const auto& t : p.terms())
    for (size_t i = 0; i < n; ++i) max_exp[i] = std::max(max_exp[i], t.exps[i]);
  for (size_t i = 0; i < n; ++i) {
    if (max_exp[i] == 0) continue;
    auto it = assignment.find(names[i]);
    if (it == assignment.end()) throw Error("substitute: missing assignment for '" + names[i] + "'");
    images[i] = &it->second;
  }
  // powers[i][k] = image_i^k
  std::vector<std::vector<Polynomial>> powers(n);
  for (size_t i = 0; i < n; ++i) {
    if (!images[i]) continue;
    powers[i].push_back(Polynomial::constant(target, 1));
    for (Exponent k = 1; k <= max_exp[i]; ++k) powers[i].push_back(powers[i].back() * *images[i]);
  }
  Polynomial result(target);
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (size_t i = 0; i < n; ++i)
      if (t.exps[i]) term *= powers[i][t.exps[i]];
    result += term;
  }
  return result;
}

Polynomial differentiate(const Polynomial& p, std::string_view var) {
  size_t v = p.ring()->index(var);
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (t.exps[v] == 0) continue;
    Term d = t;
    d.coeff *= t.exps[v];
    d.exps[v] -= 1;
    out.push_back(std::move(d));
  }
  return Polynomial::from_terms(p.ring(), std::move(out));
}

Polynomial change_ring(const Polynomial& p, const Ring& target) {
  const auto& src = p.ring()->names();
  std::vector<std::optional<size_t>> map(src.size());
  for (size_t i = 0; i < src.size(); ++i) map[i] = target->find(src[i]);
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(target->size(), 0);
    for (size_t i = 0; i < src.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (!map[i]) throw Error("change_ring: variable '" + src[i] + "' not in target ring");
      m[*map[i]] = t.exps[i];
    }
    out.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

std::optional<Polynomial> try_divide(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring(), g.ring())) throw Error("polynomials live in different rings");
  if (g.is_zero()) throw Error("division by zero polynomial");
  const Term& lg = g.leading_term();
  Polynomial r = f;
  std::vector<Term> quot;
  while (!r.is_zero()) {
    const Term& lr = r.leading_term();
    Monomial q(lr.exps.size());
    for (size_t i = 0; i < q.size(); ++i) {
      if (lr.exps[i] < lg.exps[i]) return std::nullopt;
      q[i] = lr.exps[i] - lg.exps[i];
    }
    Rational c = lr.coeff / lg.coeff;
    r -= Polynomial::monomial(f.ring(), q, c) * g;
    quot.push_back({std::move(q), c});
  }
  return Polynomial::from_terms(f.ring(), std::move(quot));
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  auto q = try_divide(f, g);
  if (!q) throw Error("inexact division");
  return *q;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  Parser(std::string_view s, const Ring& ring) : s_(s), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw Error("parse error at position " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (eat('*')) {
        acc *= unary();
      } else if (eat('/')) {
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by non-constant or zero");
        acc *= Rational(1 / d.leading_term().coeff);
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (eat('^')) {
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > std::numeric_limits<Exponent>::max()) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Polynomial::constant(ring_, Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (!ring_->find(name)) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  const Ring& ring_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  return Parser(text, ring).parse();
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  const auto& names = p.ring()->names();
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    bool has_var = std::any_of(t.exps.begin(), t.exps.end(), [](Exponent e) { return e > 0; });
    bool wrote = false;
    if (c != 1 || !has_var) {
      out << to_string(c);
      wrote = true;
    }
    for (size_t i = 0; i < t.exps.size(); ++i) {
      if (!t.exps[i]) continue;
      if (wrote) out << "*";
      out << names[i];
      if (t.exps[i] > 1) out << "^" << t.exps[i];
      wrote = true;
    }
  }
  return out.str();
}

}  // namespace strata
