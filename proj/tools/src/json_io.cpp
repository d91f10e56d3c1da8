#include "klcalc/cli/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace klcalc::io {

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("expected a rational string, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

json to_json(const Weight& w) {
  json out = json::array();
  for (const auto& c : w.coords()) out.push_back(to_json(c));
  return out;
}

Weight weight_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a weight array, got " + j.dump());
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return Weight(std::move(c));
}

json to_json(const RootSystem& rs) {
  json simple = json::array(), roots = json::array();
  for (const auto& a : rs.simple_roots()) simple.push_back(to_json(a));
  for (const auto& a : rs.roots()) roots.push_back(to_json(a));
  return {{"algebra", rs.label()},       {"ambient_dim", rs.ambient_dim()}, {"form_scale", to_json(rs.form_scale())},
          {"dual_coxeter", to_json(rs.dual_coxeter())}, {"theta", to_json(rs.theta())},     {"rho", to_json(rs.rho())},
          {"simple_roots", simple},       {"roots", roots}};
}

json to_json(const LieRealization& L) {
  json basis = json::array(), brackets = json::array(), form = json::array();
  for (std::size_t i = 0; i < L.dim(); ++i) basis.push_back(L.label(i));
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i; j < L.dim(); ++j) {
      if (j > i) {
        const auto& b = L.bracket(i, j);
        if (!b.empty()) {
          json terms = json::array();
          for (const auto& [k, c] : b.entries()) terms.push_back({k, to_json(c)});
          brackets.push_back({i, j, terms});
        }
      }
      const Rational f = L.form(i, j);
      if (!f.is_zero()) form.push_back({i, j, to_json(f)});
    }
  return {{"algebra", L.root_system().label()}, {"source", to_string(L.source())}, {"basis", basis},
          {"brackets", brackets}, {"form", form}};
}

json to_json(const LieRealization& L, const StateVector& v) {
  json terms = json::array();
  for (const auto& [m, c] : v.terms()) {
    json mono = json::array();
    for (const auto& g : m) mono.push_back({L.label(g.base), g.mode});
    terms.push_back({{"monomial", mono}, {"coeff", to_json(c)}});
  }
  return {{"level", to_json(v.level())}, {"weight", to_json(v.weight())}, {"degree", to_json(v.degree())}, {"terms", terms}};
}

StateVector state_from_json(const LieRealization& L, const json& j) {
  try {
    StateVector v(rational_from_json(j.at("level")), weight_from_json(j.at("weight")),
                  rational_from_json(j.at("degree")));
    if (v.weight().dim() != L.root_system().ambient_dim()) throw std::invalid_argument("weight dimension mismatch");
    for (const auto& t : j.at("terms")) {
      Monomial m;
      for (const auto& g : t.at("monomial")) {
        const auto label = g.at(0).get<std::string>();
        const auto idx = L.index_of_label(label);
        if (!idx) throw std::invalid_argument("unknown basis label '" + label + "'");
        m.push_back({static_cast<std::uint32_t>(*idx), g.at(1).get<std::int32_t>()});
      }
      if (!std::is_sorted(m.begin(), m.end())) throw std::invalid_argument("monomial is not normal ordered");
      v.add(m, rational_from_json(t.at("coeff")));
    }
    if (!is_homogeneous(L, v)) throw std::invalid_argument("terms do not match the declared weight and degree");
    return v;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed state vector: ") + e.what());
  }
}

}  // namespace klcalc::io
