#include "klcalc/singular.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace klcalc {

std::vector<int> PairInvolution::flattened() const {
  std::vector<int> out;
  out.reserve(2 * pairs.size());
  for (const auto& [i, j] : pairs) {
    out.push_back(i);
    out.push_back(j);
  }
  return out;
}

namespace {

void enumerate_rec(std::vector<int>& rest, PairInvolution& cur, std::vector<PairInvolution>& out) {
  if (rest.empty()) {
    out.push_back(cur);
    return;
  }
  const int i = rest.front();
  for (std::size_t k = 1; k < rest.size(); ++k) {
    const int j = rest[k];
    std::vector<int> next;
    next.reserve(rest.size() - 2);
    for (std::size_t t = 1; t < rest.size(); ++t)
      if (t != k) next.push_back(rest[t]);
    cur.pairs.emplace_back(i, j);
    enumerate_rec(next, cur, out);
    cur.pairs.pop_back();
  }
}

void require_type(const LieRealization& L, RootType t, const char* what) {
  if (L.root_system().type() != t) throw std::invalid_argument(std::string(what) + ": unsupported algebra " + L.root_system().label());
}

LoopGenerator gen(const LieRealization& L, const Weight& root, int mode = -1) {
  return {static_cast<std::uint32_t>(L.root_vector(root)), mode};
}

// One application of sum_t c_t g_{t,1} ... g_{t,r}, applied right to left.
StateVector apply_operator(AffineAction& a, const std::vector<std::pair<std::vector<LoopGenerator>, Rational>>& op,
                           const StateVector& v, const Weight& shift, const Rational& dshift) {
  StateVector out(v.level(), v.weight() + shift, v.degree() + dshift);
  for (const auto& [gens, c] : op) {
    StateVector s = v;
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) s = a.apply(*it, s);
    out += s.scaled(c);
  }
  return out;
}

StateVector power_of(const LieRealization& L, const Rational& level,
                     const std::vector<std::pair<std::vector<LoopGenerator>, Rational>>& op, int n,
                     std::size_t cap) {
  const auto& gens0 = op.front().first;
  const Monomial m0(gens0.begin(), gens0.end());
  const Weight shift = monomial_weight(L, m0);
  const long dshift = monomial_degree(m0);
  Weight target = shift;
  target *= Rational(n);
  graded_basis(L, target, static_cast<int>(dshift * n), cap);  // refuses oversize components

  AffineAction a(L, level);
  StateVector v = StateVector::vacuum(L, level);
  for (int t = 0; t < n; ++t) v = apply_operator(a, op, v, shift, Rational(dshift));
  return v;
}

Display three_term(const std::array<Weight, 6>& r) {
  return {{{{r[0]}, {r[1]}}, Rational(1)}, {{{r[2]}, {r[3]}}, Rational(-1)}, {{{r[4]}, {r[5]}}, Rational(1)}};
}

}  // namespace

std::vector<PairInvolution> enumerate_involutions(int l) {
  if (l < 1) throw std::invalid_argument("enumerate_involutions: l must be positive");
  std::vector<int> rest(2 * l);
  std::iota(rest.begin(), rest.end(), 1);
  PairInvolution cur;
  std::vector<PairInvolution> out;
  enumerate_rec(rest, cur, out);
  return out;
}

int involution_sign(const PairInvolution& p) {
  const auto f = p.flattened();
  int inversions = 0;
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = a + 1; b < f.size(); ++b)
      if (f[a] > f[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

unsigned long long double_factorial_odd(int l) {
  unsigned long long r = 1;
  for (int k = 1; k <= 2 * l - 1; k += 2) r *= static_cast<unsigned long long>(k);
  return r;
}

Weight eps(const RootSystem& rs, int i, int sign) {
  Weight w(rs.ambient_dim());
  w[static_cast<std::size_t>(i - 1)] = Rational(sign);
  return w;
}

Weight eps_sum(const RootSystem& rs, int i, int j, int sign_j) { return eps(rs, i) + eps(rs, j, sign_j); }

Weight e7_half_root(const RootSystem& rs, const std::vector<int>& subset) {
  if (rs.ambient_dim() != 8) throw std::invalid_argument("e7_half_root: needs the 8-dimensional ambient space");
  Weight w(8);
  for (int i = 1; i <= 6; ++i)
    w[static_cast<std::size_t>(i - 1)] =
        std::find(subset.begin(), subset.end(), i) != subset.end() ? Rational(1, 2) : Rational(-1, 2);
  w[6] = Rational(-1, 2);
  w[7] = Rational(1, 2);
  return w;
}

StateVector build_v_n(const LieRealization& L, int n, std::size_t cap) {
  require_type(L, RootType::D, "build_v_n");
  const auto& rs = L.root_system();
  const int l = rs.rank();
  if (n < 1) throw std::invalid_argument("build_v_n: n must be positive");
  std::vector<std::pair<std::vector<LoopGenerator>, Rational>> op;
  for (int i = 2; i <= l; ++i)
    op.push_back({{gen(L, eps_sum(rs, 1, i, -1)), gen(L, eps_sum(rs, 1, i))}, Rational(1)});
  return power_of(L, Rational(n - l + 1), op, n, cap);
}

StateVector build_w_n(const LieRealization& L, int n, std::size_t cap) {
  require_type(L, RootType::D, "build_w_n");
  const auto& rs = L.root_system();
  if (rs.rank() % 2 != 0) throw std::invalid_argument("build_w_n: rank must be even");
  if (n < 1) throw std::invalid_argument("build_w_n: n must be positive");
  const int l = rs.rank() / 2;
  std::vector<std::pair<std::vector<LoopGenerator>, Rational>> op;
  for (const auto& p : enumerate_involutions(l)) {
    std::vector<LoopGenerator> gens;
    for (const auto& [i, j] : p.pairs) gens.push_back(gen(L, eps_sum(rs, i, j)));
    op.emplace_back(std::move(gens), Rational(involution_sign(p)));
  }
  return power_of(L, Rational(n - 2 * l + 1), op, n, cap);
}

Display w1_D_display(const RootSystem& rs) {
  return three_term({eps_sum(rs, 1, 2), eps_sum(rs, 3, 4), eps_sum(rs, 1, 3), eps_sum(rs, 2, 4), eps_sum(rs, 1, 4),
                     eps_sum(rs, 2, 3)});
}

Display w3_D4_display(const RootSystem& rs) {
  return three_term({eps_sum(rs, 1, 2), eps_sum(rs, 3, 4, -1), eps_sum(rs, 1, 3), eps_sum(rs, 2, 4, -1),
                     eps_sum(rs, 1, 4, -1), eps_sum(rs, 2, 3)});
}

Display w1_B3_display(const RootSystem& rs) {
  return three_term({eps_sum(rs, 1, 2), eps(rs, 3), eps_sum(rs, 1, 3), eps(rs, 2), eps(rs, 1), eps_sum(rs, 2, 3)});
}

StateVector realize(const LieRealization& L, const Rational& level, const Display& d) {
  if (d.empty()) throw std::invalid_argument("realize: empty display");
  AffineAction a(L, level);
  std::optional<StateVector> out;
  for (const auto& term : d) {
    StateVector s = StateVector::vacuum(L, level);
    for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it) s = a.apply(gen(L, it->root, it->mode), s);
    s = s.scaled(term.coeff);
    if (!out) out = std::move(s);
    else if (out->weight() != s.weight() || out->degree() != s.degree())
      throw std::invalid_argument("realize: display terms are not homogeneous");
    else *out += s;
  }
  return *out;
}

StateVector build_w1_D(const LieRealization& L) {
  require_type(L, RootType::D, "build_w1_D");
  if (L.root_system().rank() < 4) throw std::invalid_argument("build_w1_D: rank must be at least 4");
  return realize(L, Rational(-2), w1_D_display(L.root_system()));
}

StateVector build_w3_D4(const LieRealization& L) {
  require_type(L, RootType::D, "build_w3_D4");
  if (L.root_system().rank() != 4) throw std::invalid_argument("build_w3_D4: needs D4");
  return realize(L, Rational(-2), w3_D4_display(L.root_system()));
}

B2Solution solve_w1_B2(const LieRealization& L) {
  require_type(L, RootType::B, "solve_w1_B2");
  const auto& rs = L.root_system();
  if (rs.rank() != 2) throw std::invalid_argument("solve_w1_B2: needs B2");
  const Rational level(-2);
  std::vector<StateVector> span;
  span.push_back(create(L, level, {gen(L, eps_sum(rs, 1, 2)), gen(L, eps(rs, 2, -1))}));
  span.push_back(create(L, level, {gen(L, eps_sum(rs, 1, 2, -1)), gen(L, eps(rs, 2))}));
  for (std::uint32_t h = 0; h < 2; ++h) span.push_back(create(L, level, {{h, -1}, gen(L, eps(rs, 1))}));
  const auto ker = solve_on_span(L, span);
  if (ker.size() != 1) throw std::logic_error("solve_w1_B2: solution space is not one-dimensional");
  const auto& c = ker.front();
  if (c[0].is_zero()) throw std::logic_error("solve_w1_B2: leading term vanishes");
  B2Solution out{StateVector(level, span[0].weight(), span[0].degree()), c[1] / c[0], {}};
  for (std::size_t j = 0; j < span.size(); ++j) out.vector += span[j].scaled(c[j] / c[0]);
  for (std::size_t h = 0; h < 2; ++h) out.cartan.add(h, c[2 + h] / c[0]);
  return out;
}

StateVector build_w1_B(const LieRealization& L) {
  require_type(L, RootType::B, "build_w1_B");
  const auto& rs = L.root_system();
  if (rs.rank() == 2) return solve_w1_B2(L).vector;
  if (rs.rank() == 3) return realize(L, Rational(-2), w1_B3_display(rs));
  return realize(L, Rational(-2), w1_D_display(rs));
}

StateVector theta_image(const LieRealization& L, const StateVector& v) {
  require_type(L, RootType::D, "theta_image");
  const LieAutomorphism flip = dynkin_flip(L);
  Weight w = v.weight();
  w[w.dim() - 1] = -w[w.dim() - 1];
  StateVector out(v.level(), w, v.degree());
  AffineAction a(L, v.level());
  for (const auto& [m, c] : v.terms()) {
    StateVector s = StateVector::vacuum(L, v.level());
    for (auto it = m.rbegin(); it != m.rend(); ++it) s = a.apply(flip.image(it->base), it->mode, s);
    out += s.scaled(c);
  }
  return out;
}

Monomial display_monomial(const LieRealization& L, const std::vector<DisplayFactor>& factors) {
  Monomial m;
  for (const auto& f : factors) m.push_back(gen(L, f.root, f.mode));
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b)
      if (!L.bracket(m[a].base, m[b].base).empty())
        throw std::invalid_argument("display_monomial: factors " + L.label(m[a].base) + " and " + L.label(m[b].base) +
                                    " do not commute");
  std::sort(m.begin(), m.end());
  return m;
}

SignFlipMatch match_up_to_sign_flips(const LieRealization& L, const StateVector& v, const Display& d) {
  SignFlipMatch res;
  std::map<Monomial, Rational> disp;
  for (const auto& t : d) {
    auto& c = disp[display_monomial(L, t.factors)];
    c += t.coeff;
  }
  std::erase_if(disp, [](const auto& kv) { return kv.second.is_zero(); });
  if (disp.size() != v.size()) {
    res.reason = "support sizes differ: " + std::to_string(v.size()) + " vs " + std::to_string(disp.size());
    return res;
  }
  for (const auto& [m, c] : disp)
    if (v.coefficient(m).is_zero()) {
      res.reason = "display monomial missing from vector";
      return res;
    }
  if (disp.empty()) {
    res.matches = res.exact = true;
    return res;
  }
  const Rational mag = (v.coefficient(disp.begin()->first) / disp.begin()->second).abs();
  for (const auto& [m, c] : disp)
    if ((v.coefficient(m) / c).abs() != mag) {
      res.reason = "coefficient magnitudes are not proportional";
      return res;
    }

  // GF(2): g + sum_{factors} x_base = [sign differs]; variable 0 is the global sign.
  std::map<std::uint32_t, std::size_t> var;
  for (const auto& [m, c] : disp)
    for (const auto& f : m) var.try_emplace(f.base, 0);
  std::size_t nv = 1;
  for (auto& [b, idx] : var) idx = nv++;
  std::vector<std::vector<std::uint8_t>> rows;
  bool exact_pos = true, exact_neg = true;
  for (const auto& [m, c] : disp) {
    std::vector<std::uint8_t> row(nv + 1, 0);
    row[0] = 1;
    for (const auto& f : m) row[var[f.base]] ^= 1;
    const bool differs = (v.coefficient(m).sign() != c.sign());
    row[nv] = differs ? 1 : 0;
    (differs ? exact_pos : exact_neg) = false;
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < nv && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p][col]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t q = 0; q < rows.size(); ++q)
      if (q != r && rows[q][col])
        for (std::size_t t = 0; t <= nv; ++t) rows[q][t] ^= rows[r][t];
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t q = r; q < rows.size(); ++q)
    if (rows[q][nv]) {
      res.reason = "sign pattern is not reachable by root-vector sign flips";
      return res;
    }
  std::vector<std::uint8_t> sol(nv, 0);
  for (std::size_t q = 0; q < r; ++q) sol[pivot_col[q]] = rows[q][nv];
  res.matches = true;
  res.exact = exact_pos || exact_neg;
  if (res.exact) {
    res.scalar = exact_pos ? mag : -mag;
    return res;
  }
  res.scalar = sol[0] ? -mag : mag;
  for (const auto& [b, idx] : var)
    if (sol[idx]) res.flipped.push_back(L.weight(b));
  return res;
}

std::vector<std::vector<Rational>> solve_on_span(const LieRealization& L, const std::vector<StateVector>& span) {
  if (span.empty()) throw std::invalid_argument("solve_on_span: empty span");
  AffineAction a(L, span.front().level());
  const auto ops = raising_operators(L);
  std::map<std::pair<std::size_t, Monomial>, SparseVector> rows;
  for (std::size_t j = 0; j < span.size(); ++j) {
    if (span[j].level() != span.front().level() || span[j].weight() != span.front().weight() ||
        span[j].degree() != span.front().degree())
      throw std::invalid_argument("solve_on_span: span is not homogeneous");
    for (std::size_t o = 0; o < ops.size(); ++o)
      for (const auto& [m, c] : span[j].terms())
        for (const auto& [mono, x] : a.act(ops[o], m)) rows[{o, mono}].add(j, c * x);
  }
  RowReducer red(span.size());
  for (auto& [key, row] : rows)
    if (!row.empty()) red.add_row(std::move(row));
  std::vector<std::vector<Rational>> out;
  for (const auto& k : red.kernel()) {
    std::vector<Rational> c(span.size());
    for (const auto& [j, x] : k.entries()) c[j] = x;
    out.push_back(std::move(c));
  }
  return out;
}

SupportSolution solve_on_support(const LieRealization& L, const Rational& level, const Weight& weight, int degree,
                                 const std::vector<Monomial>& support) {
  std::vector<StateVector> span;
  for (const auto& m : support) {
    if (monomial_weight(L, m) != weight || monomial_degree(m) != degree)
      throw std::invalid_argument("solve_on_support: support monomial of the wrong weight or degree");
    StateVector s(level, weight, Rational(degree));
    s.add(m, Rational(1));
    span.push_back(std::move(s));
  }
  SupportSolution out{support, {}};
  for (const auto& c : solve_on_span(L, span)) {
    StateVector v(level, weight, Rational(degree));
    for (std::size_t j = 0; j < support.size(); ++j) v.add(support[j], c[j]);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

Display vE7_display(const RootSystem& rs) {
  if (rs.type() != RootType::E || rs.rank() != 7) throw std::invalid_argument("vE7_display: needs E7");
  Weight top = eps(rs, 8) - eps(rs, 7);
  Display d{{{{top}, {eps_sum(rs, 6, 5)}}, Rational(1)}};
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs = {
      {{1, 5, 6}, {2, 3, 4, 5, 6}}, {{2, 5, 6}, {1, 3, 4, 5, 6}}, {{3, 5, 6}, {1, 2, 4, 5, 6}}, {{4, 5, 6}, {1, 2, 3, 5, 6}}};
  for (const auto& [s, t] : pairs) d.push_back({{{e7_half_root(rs, s)}, {e7_half_root(rs, t)}}, Rational(1)});
  return d;
}

std::vector<Monomial> vE7_support(const LieRealization& L) {
  std::vector<Monomial> out;
  for (const auto& t : vE7_display(L.root_system())) out.push_back(display_monomial(L, t.factors));
  return out;
}

ResolvedVector resolve_signs(const LieRealization& L, const Rational& level, const Weight& weight, int degree,
                             const std::vector<Monomial>& support, const Display& display) {
  const auto sol = solve_on_support(L, level, weight, degree, support);
  if (sol.kernel.empty()) throw std::logic_error("resolve_signs: no singular vector on the given support");
  if (sol.kernel.size() != 1)
    throw std::logic_error("resolve_signs: solution space has dimension " + std::to_string(sol.kernel.size()));
  const Rational lead = sol.kernel.front().coefficient(support.front());
  if (lead.is_zero()) throw std::logic_error("resolve_signs: leading support term vanishes");
  ResolvedVector out{sol.kernel.front().scaled(Rational(1) / lead), false, {}};
  const Rational mag = out.vector.terms().begin()->second.abs();
  out.common_magnitude = out.vector.size() == support.size() &&
                         std::all_of(out.vector.terms().begin(), out.vector.terms().end(),
                                     [&](const auto& kv) { return kv.second.abs() == mag; });
  out.match = match_up_to_sign_flips(L, out.vector, display);
  return out;
}

ResolvedVector build_vE7(const LieRealization& L) {
  const auto& rs = L.root_system();
  if (rs.type() != RootType::E || rs.rank() != 7) throw std::invalid_argument("build_vE7: needs E7");
  const Weight w = eps(rs, 8) - eps(rs, 7) + eps_sum(rs, 6, 5);
  return resolve_signs(L, Rational(-4), w, 2, vE7_support(L), vE7_display(rs));
}

}  // namespace klcalc
