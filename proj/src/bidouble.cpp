#include "stratabench/bidouble.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "stratabench/ideal.hpp"

namespace strata {

BuildingValidation validate_building_data(const BuildingData& bd) {
  const Polynomial* ds[] = {&bd.D0, &bd.D1, &bd.D2};
  const long want[] = {1, 3, 3};
  BuildingValidation v;
  v.degrees = true;
  for (int i = 0; i < 3; ++i) {
    if (!same_ring(ds[i]->ring(), plane_ring())) throw Error("building data must live in the ring (x, y, z)");
    if (ds[i]->is_zero()) throw Error("D" + std::to_string(i) + " is zero");
    auto d = weighted_degree(*ds[i]);
    if (!d) throw Error("D" + std::to_string(i) + " is not homogeneous");
    if (*d != want[i]) v.degrees = false;
  }
  if (!v.degrees) throw Error("building data must have degrees (1, 3, 3)");
  v.triple_intersection_empty = projective_empty({bd.D0, bd.D1, bd.D2});
  return v;
}

std::string to_string(LocalClass c) {
  switch (c) {
    case LocalClass::BranchSmooth:
      return "branch-smooth";
    case LocalClass::EllipticDegree1:
      return "elliptic-degree-1";
    case LocalClass::EllipticDegree4:
      return "elliptic-degree-4";
    case LocalClass::Other:
      return "other";
  }
  return "";
}

PointClassification classify_point(const BuildingData& bd, const ProjectivePoint& p) {
  const Polynomial* ds[] = {&bd.D0, &bd.D1, &bd.D2};
  PointClassification out{LocalClass::Other, {0, 0, 0}, ""};
  Polynomial product = Polynomial::constant(local_ring(), 1);
  for (int i = 0; i < 3; ++i) {
    LocalExpansion e = local_expansion(*ds[i], p);
    out.multiplicities[i] = e.multiplicity;
    if (e.multiplicity > 0) product *= e.initial_form;
  }
  auto [m0, m1, m2] = out.multiplicities;
  unsigned total = m0 + m1 + m2;
  if (total == 0) throw Error("point " + to_string(p) + " does not lie on D0 + D1 + D2");

  if (!binary_form_squarefree(product)) {
    out.diagnostic = "tangent cone " + to_string(product) + " has a repeated line";
    return out;
  }
  auto& m = out.multiplicities;
  bool triple = total == 4 && std::count(m.begin(), m.end(), 3u) == 1 && std::count(m.begin(), m.end(), 1u) == 1;
  if (triple)
    out.tag = LocalClass::EllipticDegree1;
  else if (m0 == 0 && m1 == 2 && m2 == 2)
    out.tag = LocalClass::EllipticDegree4;
  else if (total <= 2)
    out.tag = LocalClass::BranchSmooth;
  return out;
}

DivisorMultiset normalize_building_data(const DivisorMultiset& d) {
  std::array<std::map<std::string, long>, 3> lists;
  for (int i = 0; i < 3; ++i)
    for (const auto& [label, mult] : d.lists[i]) {
      if (mult < 0) throw Error("multiplicities must be non-negative");
      if (lists[i].count(label)) throw Error("label '" + label + "' repeated in D" + std::to_string(i));
      if (mult % 2) lists[i][label] = 1;
    }

  for (;;) {
    std::set<std::string> shared;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        for (const auto& [label, mult] : lists[i])
          if (lists[j].count(label)) shared.insert(label);
    if (shared.empty()) break;
    const std::string label = *shared.begin();
    int i = -1, j = -1;
    for (int k = 0; k < 3; ++k)
      if (lists[k].count(label)) (i < 0 ? i : j) = k;
    int k = 3 - i - j;
    lists[i].erase(label);
    lists[j].erase(label);
    if (lists[k].count(label))
      lists[k].erase(label);
    else
      lists[k][label] = 1;
  }

  DivisorMultiset out;
  for (int i = 0; i < 3; ++i)
    for (const auto& [label, mult] : lists[i]) out.lists[i].emplace_back(label, mult);
  return out;
}

const std::vector<std::string>& known_example_names() {
  static const std::vector<std::string> names{"Z1", "Z1prime", "torus", "bielliptic", "Z4"};
  return names;
}

namespace {

BuildingData make(const char* d0, const char* d1, const char* d2) {
  const Ring& R = plane_ring();
  return {parse_polynomial(d0, R), parse_polynomial(d1, R), parse_polynomial(d2, R)};
}

}  // namespace

BuildingData known_examples(const std::string& name) {
  // P = (0:0:1) in every example.
  if (name == "Z1")  // three lines through P on a smooth cubic D2
    return make("x + 2*y + 5*z", "y*(x - y)*(x + y)", "y^2*z - x^3 - x*z^2");
  if (name == "Z1prime") return make("x", "y*(x - y)*(x + y)", "x^3 + y^3 + z^3 + x*y*z");
  if (name == "torus")  // Q = (0:1:0)
    return make("x", "y*(y - x)*(y + 2*x)", "z*(z - x)*(z + 2*x)");
  if (name == "bielliptic")  // Q = (1:0:1) on D1
    return make("x", "y*(y - x)*(y + x)", "(x - z)*(x - z + y)*(x - z - 2*y)");
  if (name == "Z4") return make("z", "x*y*z + x^3 + y^3", "(x - y)*(x + y)*z + x^3 - 2*y^3");
  throw Error("unknown example '" + name + "'");
}

std::vector<std::pair<ProjectivePoint, LocalClass>> known_example_points(const std::string& name) {
  ProjectivePoint P{0, 0, 1};
  if (name == "Z1" || name == "Z1prime") return {{P, LocalClass::EllipticDegree1}};
  if (name == "torus") return {{P, LocalClass::EllipticDegree1}, {{0, 1, 0}, LocalClass::EllipticDegree1}};
  if (name == "bielliptic") return {{P, LocalClass::EllipticDegree1}, {{1, 0, 1}, LocalClass::EllipticDegree1}};
  if (name == "Z4") return {{P, LocalClass::EllipticDegree4}};
  throw Error("unknown example '" + name + "'");
}

}  // namespace strata
