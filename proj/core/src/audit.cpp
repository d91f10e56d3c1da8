#include "klcalc/audit.hpp"

#include <algorithm>
#include <random>

namespace klcalc {

namespace {

void fail(CheckReport& r, std::string check, std::string detail) {
  ++r.failure_count;
  if (r.failures.size() < kMaxFailures) r.failures.push_back({std::move(check), std::move(detail)});
}

std::string triple(const LieRealization& L, std::size_t i, std::size_t j, std::size_t k) {
  return L.label(i) + ", " + L.label(j) + ", " + L.label(k);
}

void check_pair(const LieRealization& L, std::size_t i, std::size_t j, CheckReport& r) {
  LieElement s = L.bracket(i, j);
  s.axpy(1, L.bracket(j, i));
  if (!s.empty()) fail(r, "antisymmetry", L.label(i) + ", " + L.label(j));
  if (L.form(i, j) != L.form(j, i)) fail(r, "form-symmetry", L.label(i) + ", " + L.label(j));
  const Weight w = L.weight(i) + L.weight(j);
  for (const auto& [k, c] : L.bracket(i, j).entries())
    if (L.weight(k) != w) fail(r, "weight", L.label(i) + ", " + L.label(j) + " -> " + L.label(k));
  ++r.checked;
}

void check_triple(const LieRealization& L, std::size_t i, std::size_t j, std::size_t k, CheckReport& r) {
  const auto a = LieElement::unit(i), b = LieElement::unit(j), c = LieElement::unit(k);
  LieElement t = L.bracket(a, L.bracket(j, k));
  t.axpy(1, L.bracket(b, L.bracket(k, i)));
  t.axpy(1, L.bracket(c, L.bracket(i, j)));
  if (!t.empty()) fail(r, "jacobi", triple(L, i, j, k));
  if (L.form(L.bracket(i, j), c) + L.form(b, L.bracket(i, k)) != Rational(0))
    fail(r, "invariance", triple(L, i, j, k));
  ++r.checked;
}

void check_all_pairs(const LieRealization& L, CheckReport& r) {
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j) check_pair(L, i, j, r);
}

Monomial random_monomial(const LieRealization& L, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 3), mode(-2, -1);
  std::uniform_int_distribution<std::uint32_t> base(0, static_cast<std::uint32_t>(L.dim() - 1));
  Monomial m(static_cast<std::size_t>(len(rng)));
  for (auto& g : m) g = {base(rng), mode(rng)};
  std::sort(m.begin(), m.end());
  return m;
}

StateVector monomial_state(const LieRealization& L, const Rational& level, const Monomial& m) {
  StateVector v(level, monomial_weight(L, m), Rational(monomial_degree(m)));
  v.add(m, Rational(1));
  return v;
}

LoopGenerator random_generator(const LieRealization& L, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> mode(-2, 2);
  std::uniform_int_distribution<std::uint32_t> base(0, static_cast<std::uint32_t>(L.dim() - 1));
  const std::uint32_t b = base(rng);
  return {b, mode(rng)};
}

}  // namespace

CheckReport audit_brackets_exhaustive(const LieRealization& L) {
  CheckReport r{L.root_system().label() + " (" + to_string(L.source()) + ")", 0, true, {}, 0};
  check_all_pairs(L, r);
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j)
      for (std::size_t k = 0; k < L.dim(); ++k) check_triple(L, i, j, k, r);
  return r;
}

CheckReport audit_brackets_random(const LieRealization& L, std::size_t count, std::uint64_t seed) {
  CheckReport r{L.root_system().label() + " (" + to_string(L.source()) + ")", 0, false, {}, 0};
  check_all_pairs(L, r);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, L.dim() - 1);
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
    check_triple(L, i, j, k, r);
  }
  return r;
}

CheckReport audit_brackets(const LieRealization& L, std::uint64_t seed, std::size_t count, std::size_t exhaustive_dim) {
  return L.dim() <= exhaustive_dim ? audit_brackets_exhaustive(L) : audit_brackets_random(L, count, seed);
}

CheckReport audit_automorphism(const LieRealization& L, const LieAutomorphism& phi) {
  CheckReport r{L.root_system().label() + " automorphism", 0, true, {}, 0};
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j) {
      if (phi(L.bracket(i, j)) != L.bracket(phi.image(i), phi.image(j)))
        fail(r, "homomorphism", L.label(i) + ", " + L.label(j));
      if (L.form(phi.image(i), phi.image(j)) != L.form(i, j)) fail(r, "form", L.label(i) + ", " + L.label(j));
      ++r.checked;
    }
  return r;
}

CheckReport audit_grading_shifts(const LieRealization& L, const Rational& level, std::size_t count,
                                 std::uint64_t seed) {
  CheckReport r{L.root_system().label() + " grading shifts", 0, false, {}, 0};
  std::mt19937_64 rng(seed);
  AffineAction a(L, level);
  for (std::size_t t = 0; t < count; ++t) {
    const Monomial m = random_monomial(L, rng);
    const LoopGenerator g = random_generator(L, rng);
    const StateVector v = monomial_state(L, level, m);
    const StateVector out = a.apply(g, v);
    const Weight w = v.weight() + L.weight(g.base);
    if (out.weight() != w || out.degree() != v.degree() - Rational(g.mode) || !is_homogeneous(L, out))
      fail(r, "grading", generator_label(L, g) + " on a monomial of length " + std::to_string(m.size()));
    ++r.checked;
  }
  return r;
}

CheckReport audit_commutators(const LieRealization& L, const Rational& level, std::size_t count, std::uint64_t seed) {
  CheckReport r{L.root_system().label() + " commutators", 0, false, {}, 0};
  std::mt19937_64 rng(seed);
  AffineAction a(L, level);
  for (std::size_t t = 0; t < count; ++t) {
    const StateVector v = monomial_state(L, level, random_monomial(L, rng));
    const LoopGenerator x = random_generator(L, rng), y = random_generator(L, rng);
    StateVector lhs = a.apply(x, a.apply(y, v));
    lhs -= a.apply(y, a.apply(x, v));
    StateVector rhs(lhs.level(), lhs.weight(), lhs.degree());
    const auto& br = L.bracket(x.base, y.base);
    if (!br.empty()) rhs += a.apply(br, x.mode + y.mode, v);
    if (x.mode + y.mode == 0) rhs += v.scaled(Rational(x.mode) * level * L.form(x.base, y.base));
    if (!(lhs.terms() == rhs.terms()))
      fail(r, "commutator", generator_label(L, x) + ", " + generator_label(L, y));
    ++r.checked;
  }
  return r;
}

CheckReport audit_linearity(const LieRealization& L, const Rational& level, std::size_t count, std::uint64_t seed) {
  CheckReport r{L.root_system().label() + " linearity", 0, false, {}, 0};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-5, 5);
  AffineAction act(L, level);
  for (std::size_t t = 0; t < count; ++t) {
    const Monomial m1 = random_monomial(L, rng), m2 = random_monomial(L, rng);
    const LoopGenerator g = random_generator(L, rng);
    const Rational a(coeff(rng)), b(coeff(rng));
    // Terms of different weights cannot share a StateVector, so compare term maps.
    const StateVector v = monomial_state(L, level, m1), w = monomial_state(L, level, m2);
    StateVector::Terms lhs;
    const auto add_terms = [](StateVector::Terms& out, const StateVector& s, const Rational& c) {
      for (const auto& [mono, x] : s.terms()) {
        auto& slot = out[mono];
        slot += x * c;
        if (slot.is_zero()) out.erase(mono);
      }
    };
    {
      StateVector::Terms combined;
      add_terms(combined, v, a);
      add_terms(combined, w, b);
      for (const auto& [mono, c] : combined)
        for (const auto& [img, x] : act.act(g, mono)) {
          auto& slot = lhs[img];
          slot += x * c;
          if (slot.is_zero()) lhs.erase(img);
        }
    }
    StateVector::Terms rhs;
    add_terms(rhs, act.apply(g, v), a);
    add_terms(rhs, act.apply(g, w), b);
    if (lhs != rhs) fail(r, "linearity", generator_label(L, g));
    ++r.checked;
  }
  return r;
}

}  // namespace klcalc
