#include "stratabench/fibration.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace strata {

void FibrationData::validate() const {
  if (base_genus != 0 && base_genus != 1) throw Error("base genus must be 0 or 1");
  if (deg_L < 0) throw Error("deg L must be non-negative");
  if (k < 1) throw Error("multisection degree must be positive");
  for (long m : multiplicities)
    if (m < 2) throw Error("fibre multiplicities must be at least 2");
}

Rational k_dot_multisection(const FibrationData& fd) {
  fd.validate();
  Rational out(fd.k * (2 * fd.base_genus - 2 + fd.deg_L));
  for (long m : fd.multiplicities) out += make_rational(fd.k * (m - 1), m);
  return out;
}

long plurigenus(const FibrationData& fd, long m) {
  fd.validate();
  if (m < 1) throw Error("m must be positive");
  long d = m * (2 * fd.base_genus - 2 + fd.deg_L);
  for (long mi : fd.multiplicities) d += m * (mi - 1) / mi;
  if (fd.base_genus == 0) return std::max(d + 1, 0L);
  if (d > 0) return d;
  if (d == 0) return fd.L_torsion ? 0 : 1;
  return 0;
}

std::vector<MultipleFibreSolution> solve_multiple_fibres(long k_min, std::optional<long> r_fixed, long bound) {
  if (bound < 2) throw Error("bound must be at least 2");
  if (r_fixed && *r_fixed < 0) throw Error("fibre count must be non-negative");
  std::vector<MultipleFibreSolution> out;
  std::vector<long> ms;
  // value = -1 + sum (1 - 1/m_i); need value = 1/k.
  std::function<void(long, long, Rational)> rec = [&](long left, long lo, Rational value) {
    if (left == 0) {
      if (value <= 0) return;
      Rational kq = 1 / value;
      if (!is_integer(kq)) return;
      long k = kq.get_num().get_si();
      if (k >= k_min && k <= bound) out.push_back({k, ms});
      return;
    }
    for (long m = lo; m <= bound; ++m) {
      ms.push_back(m);
      rec(left - 1, m, value + make_rational(m - 1, m));
      ms.pop_back();
    }
  };
  long r_lo = r_fixed ? *r_fixed : 0, r_hi = r_fixed ? *r_fixed : 4;
  for (long r = r_lo; r <= r_hi; ++r) rec(r, 2, Rational(-1));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.k, a.multiplicities) < std::tie(b.k, b.multiplicities);
  });
  return out;
}

std::shared_ptr<const QMatrix> make_pairing(QMatrix m) {
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) throw Error("pairing matrix must be square");
    for (size_t j = 0; j < i; ++j)
      if (m[i][j] != m[j][i]) throw Error("pairing matrix must be symmetric");
  }
  return std::make_shared<const QMatrix>(std::move(m));
}

namespace {

void check_compatible(const LatticeClass& a, const LatticeClass& b) {
  if (a.pairing != b.pairing) throw Error("classes live in different lattices");
  if (a.coords.size() != a.pairing->size() || b.coords.size() != b.pairing->size())
    throw Error("class has the wrong number of coordinates");
}

}  // namespace

LatticeClass LatticeClass::operator+(const LatticeClass& o) const {
  check_compatible(*this, o);
  LatticeClass r = *this;
  for (size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

LatticeClass LatticeClass::operator-(const LatticeClass& o) const { return *this + o * Rational(-1); }

LatticeClass LatticeClass::operator*(const Rational& c) const {
  LatticeClass r = *this;
  for (auto& x : r.coords) x *= c;
  return r;
}

Rational LatticeClass::dot(const LatticeClass& o) const {
  check_compatible(*this, o);
  Rational s = 0;
  for (size_t i = 0; i < coords.size(); ++i)
    for (size_t j = 0; j < coords.size(); ++j) s += coords[i] * (*pairing)[i][j] * o.coords[j];
  return s;
}

bool LatticeClass::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& x) { return x == 0; });
}

const std::vector<BiellipticRow>& bielliptic_table() {
  static const std::vector<BiellipticRow> rows{
      {1, "Z2", 2, {2, 2, 2, 2}, 2},     {2, "Z2xZ2", 4, {2, 2, 2, 2}, 2}, {3, "Z4", 4, {2, 4, 4}, 4},
      {4, "Z4xZ2", 8, {2, 4, 4}, 4},     {5, "Z3", 3, {3, 3, 3}, 3},       {6, "Z3xZ3", 9, {3, 3, 3}, 3},
      {7, "Z6", 6, {2, 3, 6}, 6},
  };
  return rows;
}

BiellipticAdmissibility bielliptic_admissible(const BiellipticRow& row) {
  const auto& table = bielliptic_table();
  if (row.type_index < 1 || row.type_index > static_cast<int>(table.size()))
    throw Error("bielliptic type must be in 1..7");
  const BiellipticRow& ref = table[row.type_index - 1];
  if (row.gamma != ref.gamma || row.multiplicities != ref.multiplicities || row.mu != ref.mu)
    throw Error("row does not match bielliptic type " + std::to_string(row.type_index));
  long lcm = std::accumulate(row.multiplicities.begin(), row.multiplicities.end(), 1L,
                             [](long a, long b) { return std::lcm(a, b); });
  if (lcm != row.mu) throw Error("mu must be the lcm of the multiplicities");

  // Basis A/mu, (mu/gamma)B with A^2 = B^2 = 0, AB = gamma; the pairing of
  // the basis is [[0, 1], [1, 0]] and E1 = a e1, E2 = b e2 has E1.E2 = ab.
  // E2 = (mu/gamma)B is effective only if mu/gamma is a positive integer,
  // and then a = b = 1 forces mu/gamma = 1.
  auto pairing = make_pairing({{0, Rational(row.gamma)}, {Rational(row.gamma), 0}});
  LatticeClass A{{1, 0}, pairing}, B{{0, 1}, pairing};
  LatticeClass e1 = A * make_rational(1, row.mu), e2 = B * make_rational(row.mu, row.gamma);
  BiellipticAdmissibility out{false, make_rational(row.mu, row.gamma), std::nullopt};
  if (out.mu_over_gamma == 1 && e1.dot(e2) == 1) {
    out.admissible = true;
    out.witness = std::make_pair(1L, 1L);
  }
  return out;
}

HirzebruchSolution hirzebruch_branch_solve() {
  // Basis C0, F of Num(F1).
  auto pairing = make_pairing({{-1, 1}, {1, 0}});
  LatticeClass C0{{1, 0}, pairing}, F{{0, 1}, pairing};
  LatticeClass K = C0 * Rational(-2) - F * Rational(3);
  auto chi = [&](const Rational& k) -> Rational {
    LatticeClass D = C0 * Rational(-2) - F * (k / 2);
    return 1 + D.dot(D - K) / 2;
  };
  // chi is affine in k.
  Rational c0 = chi(0), slope = chi(1) - c0;
  if (slope == 0) throw Error("branch equation does not determine k");
  HirzebruchSolution out{(3 - c0) / slope, false, false};
  if (chi(out.k) != 3) throw Error("branch equation is not affine");
  out.rewriting_holds = ((C0 * 4 + F * 7) - (C0 + F) * 7 + C0 * 3).is_zero();
  out.pencil_disjoint = (C0 + F).dot(C0) == 0;
  return out;
}

const std::vector<NormalStratumRow>& normal_strata() {
  static const std::vector<NormalStratumRow> rows{
      {"2", {}, 2, "general type"},
      {"1", {1}, 1, "minimal properly elliptic"},
      {"0", {2}, 1, "Enriques"},
      {"0", {1, 1}, 0, "torus"},
      {"0", {1, 1}, 0, "bielliptic"},
      {"-inf", {0}, 1, "rational"},
      {"-inf", {0, 0}, 0, "ruled over an elliptic curve", true},
  };
  return rows;
}

ChiReport chi_bookkeeping(long chi_X, const std::vector<long>& degrees) {
  ChiReport rep{static_cast<long>(degrees.size()), chi_X - static_cast<long>(degrees.size()), true, {}, false};
  for (long d : degrees) {
    if (d < 1) throw Error("elliptic singularity degrees must be positive");
    if (d > 4) rep.degrees_bounded = false;
  }
  for (const auto& row : normal_strata()) {
    if (row.pattern.size() != degrees.size() || row.chi_tilde != rep.chi_tilde) continue;
    bool ok = true;
    for (size_t i = 0; i < degrees.size(); ++i)
      if (row.pattern[i] != 0 && row.pattern[i] != degrees[i]) ok = false;
    if (ok) rep.matches.push_back(row.type);
  }
  rep.valid = rep.degrees_bounded && !rep.matches.empty();
  return rep;
}

StratumCatalog stratum_catalog() {
  StratumCatalog cat{{}, 18};
  for (const auto& row : normal_strata()) {
    std::string pattern = "(";
    for (size_t i = 0; i < row.pattern.size(); ++i) {
      if (i) pattern += ",";
      pattern += row.pattern[i] ? std::to_string(row.pattern[i]) : "d" + std::to_string(i + 1);
    }
    pattern += ")";
    std::vector<long> dims;
    if (row.type == "bielliptic") dims = {1, 1, 1, 2};
    cat.rows.push_back({row.type, true,
                        "kappa " + row.kappa + ", elliptic singularities " + pattern + ", chi " +
                            std::to_string(row.chi_tilde) + (row.unresolved ? ", unresolved" : ""),
                        dims});
  }
  // 1 + 3 + 5 + 3 parameters for (a0, a2, a4, a6) modulo the 2-torus.
  cat.rows.push_back({"plane", false, "normalisation P^2, conductor a special quartic with at least three nodes", {}});
  cat.rows.push_back({"del Pezzo", false, "normalisation del Pezzo of degree 1, bielliptic conductor in |-2K|",
                      {1 + 3 + 5 + 3 - 2}});
  cat.rows.push_back({"symmetric square", false,
                      "normalisation symmetric square of an elliptic curve, conductor of genus 2 in |3C0 - F|", {}});
  return cat;
}

}  // namespace strata
