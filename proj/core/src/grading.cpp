#include "klcalc/grading.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace klcalc {

std::vector<LieElement> GnaturalComponent::basis() const {
  std::vector<LieElement> out(cartan);
  for (std::size_t i : root_basis) out.push_back(LieElement::unit(i));
  return out;
}

std::size_t MinimalGrading::piece_dim(const Rational& j) const {
  auto it = pieces_.find(j);
  return it == pieces_.end() ? 0 : it->second.size();
}

std::size_t MinimalGrading::gnatural_dim() const {
  std::size_t d = 0;
  for (const auto& c : components_) d += c.dim();
  return d;
}

std::string identify_type(const RootSystem& ambient, const std::vector<Weight>& simple, std::size_t root_count) {
  const std::size_t r = simple.size();
  std::set<Rational> lengths;
  for (const auto& a : simple) lengths.insert(ambient.form(a, a));
  const std::string rs = std::to_string(r);
  if (lengths.size() == 1) {
    if (root_count == r * (r + 1)) return "A" + rs;
    if (r >= 4 && root_count == 2 * r * (r - 1)) return "D" + rs;
    if (r >= 6 && r <= 8 && root_count == (r == 6 ? 72u : r == 7 ? 126u : 240u)) return "E" + rs;
  } else if (lengths.size() == 2) {
    const Rational ratio = *lengths.rbegin() / *lengths.begin();
    if (ratio == Rational(3) && r == 2) return "G2";
    if (ratio == Rational(2)) {
      if (r == 4 && root_count == 48) return "F4";
      // B_r has 2r short roots, C_r has 2r long ones (B2 = C2 reported as B2).
      std::size_t long_simple = 0;
      for (const auto& a : simple)
        if (ambient.form(a, a) == *lengths.rbegin()) ++long_simple;
      if (root_count == 2 * r * r) return (long_simple == r - 1 ? "B" : "C") + rs;
    }
  }
  throw std::logic_error("unrecognized root subsystem of rank " + rs);
}

std::string classical_name(const std::string& type_label) {
  const char t = type_label.at(0);
  const int r = std::stoi(type_label.substr(1));
  switch (t) {
    case 'A': return "sl(" + std::to_string(r + 1) + ")";
    case 'B': return "so(" + std::to_string(2 * r + 1) + ")";
    case 'C': return "sp(" + std::to_string(2 * r) + ")";
    case 'D': return "so(" + std::to_string(2 * r) + ")";
    default: return type_label;
  }
}

namespace {

// Half the eigenvalue of the dual-basis Casimir acting on the component by ad.
Rational casimir_half(const LieRealization& L, const GnaturalComponent& comp) {
  const auto& rs = L.root_system();
  std::vector<LieElement> basis, dual;
  const std::size_t nc = comp.cartan.size();
  std::vector<std::vector<Rational>> gram(nc, std::vector<Rational>(nc));
  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t b = 0; b < nc; ++b) gram[a][b] = L.form(comp.cartan[a], comp.cartan[b]);
  std::vector<std::vector<Rational>> ginv;
  try {
    ginv = invert(gram);
  } catch (const std::domain_error&) {
    throw std::domain_error("restricted form is degenerate on the Cartan part of " + comp.name);
  }
  for (std::size_t a = 0; a < nc; ++a) {
    LieElement d;
    for (std::size_t b = 0; b < nc; ++b) d.axpy(ginv[a][b], comp.cartan[b]);
    basis.push_back(comp.cartan[a]);
    dual.push_back(std::move(d));
  }
  for (std::size_t i : comp.root_basis) {
    const std::size_t neg = L.basis_of_root(rs.negative_of(L.root_of(i)));
    const Rational f = L.form(i, neg);
    if (f.is_zero()) throw std::domain_error("restricted form is degenerate on " + comp.name);
    basis.push_back(LieElement::unit(i));
    dual.push_back(LieElement::unit(neg, Rational(1) / f));
  }

  std::optional<Rational> eigen;
  for (const auto& y : basis) {
    LieElement cy;
    for (std::size_t j = 0; j < basis.size(); ++j) cy.axpy(1, L.bracket(basis[j], L.bracket(dual[j], y)));
    const auto& [idx, coeff] = y.entries().front();
    const Rational lambda = cy.at(idx) / coeff;
    if (cy != y.scaled(lambda) || (eigen && *eigen != lambda))
      throw std::logic_error("Casimir of " + comp.name + " does not act as a scalar");
    eigen = lambda;
  }
  return *eigen / Rational(2);
}

}  // namespace

MinimalGrading minimal_grading(const LieRealization& L) {
  const auto& rs = L.root_system();
  const auto& roots = rs.roots();
  const Weight& theta = rs.theta();
  MinimalGrading mg;
  mg.x_ = Rational(1, 2) * theta;
  mg.grades_.resize(L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i) {
    mg.grades_[i] = L.is_cartan(i) ? Rational() : rs.form(L.weight(i), mg.x_);
    mg.pieces_[mg.grades_[i]].push_back(i);
  }

  // Roots orthogonal to theta, split into connected components of the "non-orthogonal" graph.
  std::vector<std::size_t> nat;
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (rs.form(roots[k], theta).is_zero()) nat.push_back(k);
  std::vector<int> comp_of(roots.size(), -1);
  int ncomp = 0;
  for (std::size_t start : nat) {
    if (comp_of[start] >= 0) continue;
    std::vector<std::size_t> stack{start};
    comp_of[start] = ncomp;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b : nat)
        if (comp_of[b] < 0 && !rs.form(roots[a], roots[b]).is_zero()) {
          comp_of[b] = ncomp;
          stack.push_back(b);
        }
    }
    ++ncomp;
  }

  std::vector<Weight> all_component_simple;
  for (int c = 0; c < ncomp; ++c) {
    GnaturalComponent comp;
    std::vector<std::size_t> members, positive;
    for (std::size_t k : nat)
      if (comp_of[k] == c) {
        members.push_back(k);
        if (rs.is_positive(k)) positive.push_back(k);
      }
    std::set<Weight> pos_set;
    for (std::size_t k : positive) pos_set.insert(roots[k]);
    std::size_t top = positive.front();
    for (std::size_t k : positive) {
      if (rs.height(k) > rs.height(top)) top = k;
      bool decomposable = false;
      for (std::size_t j : positive)
        if (j != k && pos_set.count(roots[k] - roots[j])) {
          decomposable = true;
          break;
        }
      if (!decomposable) comp.simple_roots.push_back(roots[k]);
    }
    // Keep g's simple-root order so components read naturally.
    std::sort(comp.simple_roots.begin(), comp.simple_roots.end(), [&](const Weight& a, const Weight& b) {
      return rs.simple_coefficients(*rs.root_index(a)) > rs.simple_coefficients(*rs.root_index(b));
    });
    for (std::size_t k : members) comp.root_basis.push_back(L.basis_of_root(k));
    std::sort(comp.root_basis.begin(), comp.root_basis.end());
    for (const auto& s : comp.simple_roots) {
      comp.cartan.push_back(L.cartan_element(rs.coroot(s)));
      all_component_simple.push_back(s);
    }
    comp.highest_root = roots[top];
    comp.type_label = identify_type(rs, comp.simple_roots, members.size());
    comp.name = classical_name(comp.type_label);
    mg.components_.push_back(std::move(comp));
  }
  // Largest components first, ties by type label.
  std::stable_sort(mg.components_.begin(), mg.components_.end(),
                   [](const GnaturalComponent& a, const GnaturalComponent& b) { return a.dim() > b.dim(); });
  for (auto& comp : mg.components_) comp.dual_coxeter = casimir_half(L, comp);

  // Center: Cartan elements orthogonal to theta and to every component root.
  const auto& simple = rs.simple_roots();
  const std::size_t r = simple.size();
  std::vector<std::vector<Rational>> rows;
  std::vector<Weight> constraints{theta};
  constraints.insert(constraints.end(), all_component_simple.begin(), all_component_simple.end());
  for (const auto& w : constraints) {
    std::vector<Rational> row(r);
    for (std::size_t j = 0; j < r; ++j) row[j] = rs.form(simple[j], w);
    rows.push_back(std::move(row));
  }
  const auto ker = nullspace(rows, r);
  if (!ker.empty()) {
    GnaturalComponent center;
    center.type_label = "center";
    center.name = ker.size() == 1 ? "gl(1)" : "center(" + std::to_string(ker.size()) + ")";
    center.abelian = true;
    center.highest_root = Weight(rs.ambient_dim());
    for (const auto& m : ker) {
      Weight v(rs.ambient_dim());
      for (std::size_t j = 0; j < r; ++j) v += m[j] * simple[j];
      center.cartan.push_back(L.cartan_element(v));
    }
    mg.components_.push_back(std::move(center));
  }
  return mg;
}

Rational restricted_dual_coxeter(const MinimalGrading& mg, std::size_t i) {
  if (i >= mg.components().size()) throw std::out_of_range("component index out of range");
  return mg.components()[i].dual_coxeter;
}

}  // namespace klcalc
