#include "klcalc/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <stdexcept>

namespace klcalc {

char type_letter(RootType t) {
  switch (t) {
    case RootType::A: return 'A';
    case RootType::B: return 'B';
    case RootType::C: return 'C';
    case RootType::D: return 'D';
    case RootType::E: return 'E';
    case RootType::F: return 'F';
    case RootType::G: return 'G';
  }
  return '?';
}

AlgebraSpec AlgebraSpec::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty algebra spec");
  AlgebraSpec spec;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': spec.type = RootType::A; break;
    case 'B': spec.type = RootType::B; break;
    case 'C': spec.type = RootType::C; break;
    case 'D': spec.type = RootType::D; break;
    case 'E': spec.type = RootType::E; break;
    case 'F': spec.type = RootType::F; break;
    case 'G': spec.type = RootType::G; break;
    default: throw std::invalid_argument("unknown Cartan type in '" + std::string(text) + "'");
  }
  std::string_view rest = text.substr(1);
  if (!rest.empty() && rest[0] == ':') rest.remove_prefix(1);
  if (rest.empty() || rest.size() > 3 ||
      !std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw std::invalid_argument("malformed rank in algebra spec '" + std::string(text) + "'");
  }
  spec.rank = std::stoi(std::string(rest));
  return spec;
}

std::string AlgebraSpec::label() const { return std::string(1, type_letter(type)) + std::to_string(rank); }

namespace {

Weight vec(std::initializer_list<long> twice) {
  // Coordinates are given doubled so half-integers stay readable.
  std::vector<Rational> c;
  for (long v : twice) c.emplace_back(v, 2);
  return Weight(std::move(c));
}

Weight diff(std::size_t dim, std::size_t i, std::size_t j, int sign_j = -1) {
  Weight w(dim);
  w[i] = 1;
  w[j] += Rational(sign_j);
  return w;
}

std::vector<Weight> simple_roots_for(const AlgebraSpec& s, std::size_t& dim) {
  const int l = s.rank;
  std::vector<Weight> out;
  auto check = [&](bool ok) {
    if (!ok) throw std::invalid_argument("unsupported algebra " + s.label());
  };
  switch (s.type) {
    case RootType::A:
      check(l >= 1 && l <= 40);
      dim = static_cast<std::size_t>(l) + 1;
      for (int i = 0; i < l; ++i) out.push_back(diff(dim, i, i + 1));
      break;
    case RootType::B:
      check(l >= 2 && l <= 40);
      dim = l;
      for (int i = 0; i + 1 < l; ++i) out.push_back(diff(dim, i, i + 1));
      out.push_back(Weight::unit(dim, l - 1));
      break;
    case RootType::C:
      check(l >= 1 && l <= 40);
      dim = l;
      for (int i = 0; i + 1 < l; ++i) out.push_back(diff(dim, i, i + 1));
      out.push_back(Rational(2) * Weight::unit(dim, l - 1));
      break;
    case RootType::D:
      check(l >= 3 && l <= 40);
      dim = l;
      for (int i = 0; i + 1 < l; ++i) out.push_back(diff(dim, i, i + 1));
      out.push_back(diff(dim, l - 2, l - 1, +1));
      break;
    case RootType::E: {
      check(l >= 6 && l <= 8);
      dim = 8;
      out.push_back(vec({1, -1, -1, -1, -1, -1, -1, 1}));  // (e1 + e8 - e2 - ... - e7) / 2
      out.push_back(diff(dim, 0, 1, +1));                  // e1 + e2
      for (int i = 0; i + 3 <= l; ++i) out.push_back(diff(dim, i + 1, i));  // e_{i+2} - e_{i+1}
      break;
    }
    case RootType::F:
      check(l == 4);
      dim = 4;
      out.push_back(diff(dim, 1, 2));
      out.push_back(diff(dim, 2, 3));
      out.push_back(Weight::unit(dim, 3));
      out.push_back(vec({1, -1, -1, -1}));
      break;
    case RootType::G:
      check(l == 2);
      dim = 3;
      out.push_back(diff(dim, 0, 1));
      out.push_back(Weight{Rational(-2), Rational(1), Rational(1)});
      break;
  }
  return out;
}

}  // namespace

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const Rational p = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

RootSystem build_root_system(const AlgebraSpec& spec) {
  RootSystem rs;
  rs.spec_ = spec;
  rs.simple_roots_ = simple_roots_for(spec, rs.ambient_dim_);
  const auto& simple = rs.simple_roots_;
  const std::size_t r = simple.size();

  // Weyl orbit closure of the simple roots (Euclidean reflections; scale-free).
  std::set<Weight> found(simple.begin(), simple.end());
  std::deque<Weight> queue(simple.begin(), simple.end());
  while (!queue.empty()) {
    Weight v = queue.front();
    queue.pop_front();
    for (const auto& a : simple) {
      Weight img = v - (Rational(2) * v.dot(a) / a.dot(a)) * a;
      if (found.insert(img).second) queue.push_back(std::move(img));
    }
  }
  rs.roots_.assign(found.rbegin(), found.rend());  // descending lexicographic
  for (std::size_t i = 0; i < rs.roots_.size(); ++i) rs.index_.emplace(rs.roots_[i], i);

  std::vector<std::vector<Rational>> euclid_gram(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) euclid_gram[i][j] = simple[i].dot(simple[j]);
  const auto euclid_inv = invert(euclid_gram);

  const std::size_t n = rs.roots_.size();
  rs.positive_.resize(n);
  rs.negative_of_.resize(n);
  rs.simple_coeffs_.resize(n);
  rs.heights_.resize(n);
  std::size_t best = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const Weight& a = rs.roots_[k];
    std::vector<Rational> pair(r);
    for (std::size_t j = 0; j < r; ++j) pair[j] = a.dot(simple[j]);
    std::vector<Rational> c(r);
    Rational ht;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) c[i] += euclid_inv[i][j] * pair[j];
      if (!c[i].is_integer()) throw std::logic_error("non-integral root coefficient in " + spec.label());
      ht += c[i];
    }
    rs.simple_coeffs_[k] = std::move(c);
    rs.heights_[k] = static_cast<int>(ht.to_long());
    rs.positive_[k] = rs.heights_[k] > 0;
    rs.negative_of_[k] = rs.index_.at(-a);
    if (rs.heights_[k] > rs.heights_[best]) best = k;
  }
  for (std::size_t k = 0; k < n; ++k)
    if (rs.positive_[k]) rs.positive_roots_.push_back(rs.roots_[k]);

  rs.theta_ = rs.roots_[best];
  rs.form_scale_ = Rational(2) / rs.theta_.dot(rs.theta_);

  Weight twice_rho(rs.ambient_dim_);
  for (const auto& a : rs.positive_roots_) twice_rho += a;
  rs.rho_ = Rational(1, 2) * twice_rho;
  rs.dual_coxeter_ = rs.form(rs.rho_, rs.theta_) + Rational(1);

  std::vector<std::vector<Rational>> gram(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram[i][j] = rs.form(simple[i], simple[j]);
  rs.gram_inverse_ = invert(gram);
  return rs;
}

Rational RootSystem::form(const Weight& a, const Weight& b) const {
  if (a.dim() != ambient_dim_ || b.dim() != ambient_dim_) {
    throw std::invalid_argument("form: weight dimension does not match " + label());
  }
  return form_scale_ * a.dot(b);
}

Weight RootSystem::coroot(const Weight& beta) const { return (Rational(2) / form(beta, beta)) * beta; }

Rational RootSystem::pairing(const Weight& mu, const Weight& beta) const {
  return Rational(2) * form(mu, beta) / form(beta, beta);
}

std::optional<std::size_t> RootSystem::root_index(const Weight& w) const {
  if (w.dim() != ambient_dim_) return std::nullopt;
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Rational> RootSystem::express_in_simple_roots(const Weight& w) const {
  const std::size_t r = simple_roots_.size();
  std::vector<Rational> pair(r), c(r);
  for (std::size_t j = 0; j < r; ++j) pair[j] = form(w, simple_roots_[j]);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) c[i] += gram_inverse_[i][j] * pair[j];
  return c;
}

Weight RootSystem::fundamental_weight(int i) const {
  if (i < 1 || i > rank()) throw std::invalid_argument("fundamental weight index out of range");
  // omega_i = sum_j c_j alpha_j with (omega_i, alpha_k^vee) = delta_ik.
  const std::size_t r = simple_roots_.size();
  Weight w(ambient_dim_);
  for (std::size_t j = 0; j < r; ++j) {
    const auto& ak = simple_roots_[i - 1];
    // (alpha_j, alpha_k^vee) = 2 (alpha_j|alpha_k) / (alpha_k|alpha_k); solve with Gram inverse.
    const Rational c = gram_inverse_[j][i - 1] * form(ak, ak) / Rational(2);
    w += c * simple_roots_[j];
  }
  return w;
}

bool RootSystem::is_dominant_integral(const Weight& w) const {
  for (const auto& a : simple_roots_) {
    const Rational p = pairing(w, a);
    if (!p.is_integer() || p.sign() < 0) return false;
  }
  return true;
}

Rational casimir_eigenvalue(const RootSystem& rs, const Weight& mu) {
  return rs.form(mu, mu + Rational(2) * rs.rho());
}

}  // namespace klcalc
