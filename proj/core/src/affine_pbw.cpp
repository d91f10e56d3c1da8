#include "klcalc/affine_pbw.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace klcalc {

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = m.size();
  for (const auto& g : m) h = h * 1000003u ^ (static_cast<std::size_t>(g.base) * 131u + static_cast<std::size_t>(g.mode + 64));
  return h;
}

Weight monomial_weight(const LieRealization& L, const Monomial& m) {
  Weight w(L.root_system().ambient_dim());
  for (const auto& g : m)
    if (!L.is_cartan(g.base)) w += L.weight(g.base);
  return w;
}

long monomial_degree(const Monomial& m) {
  long d = 0;
  for (const auto& g : m) d -= g.mode;
  return d;
}

StateVector StateVector::vacuum(const LieRealization& L, Rational level) {
  StateVector v(std::move(level), Weight(L.root_system().ambient_dim()), Rational(0));
  v.terms_.emplace(Monomial{}, Rational(1));
  return v;
}

Rational StateVector::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational() : it->second;
}

void StateVector::add(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

StateVector& StateVector::operator+=(const StateVector& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

StateVector& StateVector::operator-=(const StateVector& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

StateVector StateVector::scaled(const Rational& s) const {
  StateVector v(level_, weight_, degree_);
  if (s.is_zero()) return v;
  for (const auto& [m, c] : terms_) v.terms_.emplace(m, c * s);
  return v;
}

bool is_homogeneous(const LieRealization& L, const StateVector& v) {
  for (const auto& [m, c] : v.terms()) {
    if (!std::is_sorted(m.begin(), m.end())) return false;
    for (const auto& g : m)
      if (g.mode >= 0 || g.base >= L.dim()) return false;
    if (monomial_weight(L, m) != v.weight() || Rational(monomial_degree(m)) != v.degree()) return false;
  }
  return true;
}

std::optional<Rational> proportionality(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.is_zero()) return Rational(0);
  const Rational bc = b.coefficient(a.terms().begin()->first);
  if (bc.is_zero()) return std::nullopt;
  const Rational ratio = a.terms().begin()->second / bc;
  for (const auto& [m, x] : a.terms())
    if (b.coefficient(m) * ratio != x) return std::nullopt;
  return ratio;
}

std::size_t AffineAction::KeyHash::operator()(const Key& k) const noexcept {
  return MonomialHash{}(k.m) * 31u + static_cast<std::size_t>(k.g.base) * 977u + static_cast<std::size_t>(k.g.mode + 64);
}

void AffineAction::accumulate(StateVector::Terms& out, const LoopGenerator& g, const Monomial& m, const Rational& c) {
  for (const auto& [mono, x] : act(g, m)) {
    auto [it, inserted] = out.try_emplace(mono, x * c);
    if (!inserted) {
      it->second += x * c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
}

const StateVector::Terms& AffineAction::act(const LoopGenerator& g, const Monomial& m) {
  if (auto it = cache_.find(Key{g, m}); it != cache_.end()) return it->second;
  StateVector::Terms out;
  if (m.empty()) {
    if (g.mode < 0) out.emplace(Monomial{g}, Rational(1));
  } else if (g.mode < 0 && !(m.front() < g)) {
    Monomial nm;
    nm.reserve(m.size() + 1);
    nm.push_back(g);
    nm.insert(nm.end(), m.begin(), m.end());
    out.emplace(std::move(nm), Rational(1));
  } else {
    // g y R = y (g R) + [g, y] R
    const LoopGenerator y = m.front();
    const Monomial rest(m.begin() + 1, m.end());
    const StateVector::Terms& inner = act(g, rest);
    for (const auto& [mono, c] : inner) accumulate(out, y, mono, c);
    const std::int32_t mode = g.mode + y.mode;
    for (const auto& [idx, c] : L_.bracket(g.base, y.base).entries())
      accumulate(out, LoopGenerator{static_cast<std::uint32_t>(idx), mode}, rest, c);
    if (mode == 0 && g.mode != 0) {
      const Rational f = L_.form(g.base, y.base);
      if (!f.is_zero()) {
        const Rational central = Rational(g.mode) * level_ * f;
        auto [it, inserted] = out.try_emplace(rest, central);
        if (!inserted) {
          it->second += central;
          if (it->second.is_zero()) out.erase(it);
        }
      }
    }
  }
  return cache_.emplace(Key{g, m}, std::move(out)).first->second;
}

StateVector AffineAction::apply(const LoopGenerator& g, const StateVector& v) {
  Weight w = v.weight();
  if (!L_.is_cartan(g.base)) w += L_.weight(g.base);
  StateVector out(v.level(), std::move(w), v.degree() - Rational(g.mode));
  for (const auto& [m, c] : v.terms())
    for (const auto& [mono, x] : act(g, m)) out.add(mono, x * c);
  return out;
}

StateVector AffineAction::apply(const LieElement& x, int mode, const StateVector& v) {
  if (x.empty()) throw std::invalid_argument("apply: zero Lie element");
  std::optional<StateVector> acc;
  for (const auto& [idx, c] : x.entries()) {
    StateVector part = apply(LoopGenerator{static_cast<std::uint32_t>(idx), mode}, v).scaled(c);
    if (!acc) acc = std::move(part);
    else if (acc->weight() != part.weight()) throw std::invalid_argument("apply: Lie element is not a weight vector");
    else *acc += part;
  }
  return *acc;
}

StateVector apply(const LieRealization& L, const LoopGenerator& g, const StateVector& v) {
  AffineAction a(L, v.level());
  return a.apply(g, v);
}

StateVector create(const LieRealization& L, const Rational& level, const std::vector<LoopGenerator>& gens) {
  AffineAction a(L, level);
  StateVector v = StateVector::vacuum(L, level);
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) v = a.apply(*it, v);
  return v;
}

namespace {

// Doubled integer coordinates keep the search free of rational arithmetic.
std::vector<long> doubled(const Weight& w) {
  std::vector<long> out(w.dim());
  for (std::size_t i = 0; i < w.dim(); ++i) {
    const Rational x = w[i] * Rational(2);
    if (!x.is_integer()) throw std::invalid_argument("weight coordinates must be half-integers");
    out[i] = x.to_long();
  }
  return out;
}

}  // namespace

std::vector<Monomial> graded_basis(const LieRealization& L, const Weight& weight, int degree, std::size_t cap) {
  if (degree < 0) throw std::invalid_argument("graded_basis: negative degree");
  const auto& rs = L.root_system();
  if (weight.dim() != rs.ambient_dim()) throw std::invalid_argument("graded_basis: weight dimension mismatch");
  std::vector<Monomial> out;
  if (degree == 0) {
    if (weight.is_zero()) out.push_back({});
    return out;
  }

  const std::size_t dim = L.dim();
  std::vector<std::vector<long>> wts(dim);
  long max_l1 = 0, max_linf = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    wts[i] = doubled(L.weight(i));
    long l1 = 0, linf = 0;
    for (long x : wts[i]) {
      l1 += std::labs(x);
      linf = std::max(linf, std::labs(x));
    }
    max_l1 = std::max(max_l1, l1);
    max_linf = std::max(max_linf, linf);
  }

  std::vector<LoopGenerator> gens;
  for (int mode = -degree; mode <= -1; ++mode)
    for (std::size_t b = 0; b < dim; ++b) gens.push_back({static_cast<std::uint32_t>(b), mode});

  std::vector<long> rem = doubled(weight);
  Monomial cur;
  auto reachable = [&](long d_rem) {
    long l1 = 0, linf = 0;
    for (long x : rem) {
      l1 += std::labs(x);
      linf = std::max(linf, std::labs(x));
    }
    return l1 <= d_rem * max_l1 && linf <= d_rem * max_linf;
  };

  std::function<void(std::size_t, long)> dfs = [&](std::size_t start, long d_rem) {
    if (d_rem == 0) {
      if (std::all_of(rem.begin(), rem.end(), [](long x) { return x == 0; })) {
        if (out.size() >= cap)
          throw CapExceeded(cap, "graded component exceeds the cap of " + std::to_string(cap) + " monomials");
        out.push_back(cur);
      }
      return;
    }
    for (std::size_t i = start; i < gens.size(); ++i) {
      const long n = -gens[i].mode;
      if (n > d_rem) continue;
      const auto& w = wts[gens[i].base];
      for (std::size_t c = 0; c < rem.size(); ++c) rem[c] -= w[c];
      if (reachable(d_rem - n)) {
        cur.push_back(gens[i]);
        dfs(i, d_rem - n);
        cur.pop_back();
      }
      for (std::size_t c = 0; c < rem.size(); ++c) rem[c] += w[c];
    }
  };
  if (reachable(degree)) dfs(0, degree);
  return out;
}

std::vector<LoopGenerator> raising_operators(const LieRealization& L) {
  const auto& rs = L.root_system();
  std::vector<LoopGenerator> ops;
  for (const auto& a : rs.simple_roots()) ops.push_back({static_cast<std::uint32_t>(L.root_vector(a)), 0});
  ops.push_back({static_cast<std::uint32_t>(L.root_vector(-rs.theta())), 1});
  return ops;
}

SingularityCheck is_singular(const LieRealization& L, const StateVector& v) {
  AffineAction a(L, v.level());
  SingularityCheck res;
  for (const auto& op : raising_operators(L)) {
    StateVector img = a.apply(op, v);
    if (!img.is_zero()) {
      res.failing = op;
      res.witness = std::move(img);
      return res;
    }
  }
  res.singular = !v.is_zero();
  return res;
}

std::vector<StateVector> singular_kernel(const LieRealization& L, const Rational& level, const Weight& weight,
                                         int degree, std::size_t cap) {
  if (degree < 1) throw std::invalid_argument("singular_kernel: degree must be at least 1");
  const auto basis = graded_basis(L, weight, degree, cap);
  const auto ops = raising_operators(L);
  AffineAction a(L, level);
  std::map<std::pair<std::size_t, Monomial>, SparseVector> rows;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t o = 0; o < ops.size(); ++o)
      for (const auto& [mono, c] : a.act(ops[o], basis[j])) rows[{o, mono}].add(j, c);

  RowReducer red(basis.size());
  for (auto& [key, row] : rows) red.add_row(std::move(row));
  std::vector<StateVector> out;
  for (const auto& k : red.kernel()) {
    StateVector v(level, weight, Rational(degree));
    for (const auto& [j, c] : k.entries()) v.add(basis[j], c);
    out.push_back(std::move(v));
  }
  return out;
}

std::string generator_label(const LieRealization& L, const LoopGenerator& g) {
  return L.label(g.base) + "(" + std::to_string(g.mode) + ")";
}

}  // namespace klcalc
