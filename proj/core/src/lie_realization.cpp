#include "klcalc/lie_realization.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace klcalc {

std::string to_string(StructureSource s) {
  switch (s) {
    case StructureSource::Matrix: return "matrix";
    case StructureSource::Cocycle: return "cocycle";
    case StructureSource::Chevalley: return "chevalley";
  }
  return "?";
}

StructureSource default_source(RootType t) {
  switch (t) {
    case RootType::A:
    case RootType::B:
    case RootType::C:
    case RootType::D: return StructureSource::Matrix;
    case RootType::E: return StructureSource::Cocycle;
    case RootType::F:
    case RootType::G: return StructureSource::Chevalley;
  }
  return StructureSource::Chevalley;
}

namespace {

std::uint64_t pair_key(std::size_t a, std::size_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

// N[(a, b)] for root indices with a + b a root; c[a] from [e_a, e_-a] = c_a a#.
struct Structure {
  std::unordered_map<std::uint64_t, Rational> N;
  std::vector<Rational> c;
};

template <class F>
void for_each_root_pair(const RootSystem& rs, F&& f) {
  const auto& roots = rs.roots();
  for (std::size_t a = 0; a < roots.size(); ++a) {
    for (std::size_t b = 0; b < roots.size(); ++b) {
      if (auto s = rs.root_index(roots[a] + roots[b])) f(a, b, *s);
    }
  }
}

// ---- matrix realizations -------------------------------------------------

using Mat = std::map<std::pair<std::size_t, std::size_t>, long>;

Mat commutator(const Mat& x, const Mat& y) {
  Mat out;
  auto mul = [&out](const Mat& p, const Mat& q, long sign) {
    for (const auto& [pij, pv] : p)
      for (const auto& [qij, qv] : q)
        if (pij.second == qij.first) out[{pij.first, qij.second}] += sign * pv * qv;
  };
  mul(x, y, 1);
  mul(y, x, -1);
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

class MatrixModel {
 public:
  explicit MatrixModel(const RootSystem& rs) : rs_(rs), l_(static_cast<std::size_t>(rs.rank())) {
    switch (rs.type()) {
      case RootType::A: kind_ = Kind::SL; n_ = l_ + 1; break;
      case RootType::B: kind_ = Kind::SO; n_ = 2 * l_ + 1; break;
      case RootType::C: kind_ = Kind::SP; n_ = 2 * l_; break;
      case RootType::D: kind_ = Kind::SO; n_ = 2 * l_; break;
      default: throw std::invalid_argument("no matrix realization for " + rs.label());
    }
    for (const auto& r : rs.roots()) vectors_.push_back(root_matrix(r));
  }

  Structure structure() const {
    Structure s;
    const auto& roots = rs_.roots();
    for_each_root_pair(rs_, [&](std::size_t a, std::size_t b, std::size_t sum) {
      const Mat m = commutator(vectors_[a], vectors_[b]);
      const Mat& target = vectors_[sum];
      const auto& [lead, lead_val] = *target.begin();
      auto it = m.find(lead);
      const Rational n(it == m.end() ? 0 : it->second, lead_val);
      for (const auto& [ij, v] : target) {
        auto jt = m.find(ij);
        if (Rational(jt == m.end() ? 0 : jt->second) != n * Rational(v))
          throw std::logic_error("matrix commutator not proportional to a root vector");
      }
      if (m.size() != target.size()) throw std::logic_error("matrix commutator has stray entries");
      s.N.emplace(pair_key(a, b), n);
    });
    s.c.resize(roots.size());
    for (std::size_t a = 0; a < roots.size(); ++a) {
      const Mat m = commutator(vectors_[a], vectors_[rs_.negative_of(a)]);
      Weight d(rs_.ambient_dim());
      for (const auto& [ij, v] : m) {
        if (ij.first != ij.second) throw std::logic_error("[e_a, e_-a] is not diagonal");
        if (ij.first < d.dim()) d[ij.first] = v;
      }
      const Weight& alpha = roots[a];
      const Rational c = d.dot(alpha) / (rs_.form_scale() * alpha.dot(alpha));
      if (d != (c * rs_.form_scale()) * alpha) throw std::logic_error("[e_a, e_-a] is not a multiple of a#");
      s.c[a] = c;
    }
    return s;
  }

 private:
  enum class Kind { SL, SO, SP };

  Weight wt(std::size_t p) const {
    if (kind_ == Kind::SL) return Weight::unit(n_, p);
    if (p < l_) return Weight::unit(l_, p);
    if (p >= n_ - l_) return -Weight::unit(l_, n_ - 1 - p);
    return Weight(l_);
  }
  long sigma(std::size_t p) const { return p < l_ ? 1 : -1; }

  // Lexicographically first (a, b) with wt(a) - wt(b) = root, completed to an element of the algebra.
  Mat root_matrix(const Weight& root) const {
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (a == b || wt(a) - wt(b) != root) continue;
        Mat m{{{a, b}, 1}};
        if (kind_ == Kind::SL) return m;
        const std::size_t ap = n_ - 1 - a, bp = n_ - 1 - b;
        if (bp == a && ap == b) return m;
        m[{bp, ap}] = kind_ == Kind::SO ? -1 : -sigma(a) * sigma(b);
        return m;
      }
    }
    throw std::logic_error("no matrix unit for root " + root.str());
  }

  const RootSystem& rs_;
  std::size_t l_;
  std::size_t n_ = 0;
  Kind kind_ = Kind::SL;
  std::vector<Mat> vectors_;
};

// ---- sign cocycle ---------------------------------------------------------

Structure cocycle_structure(const RootSystem& rs) {
  const auto& simple = rs.simple_roots();
  const std::size_t r = simple.size();
  for (const auto& a : rs.roots()) {
    if (rs.form(a, a) != Rational(2)) throw std::invalid_argument("cocycle realization needs a simply laced system");
  }
  std::vector<std::vector<long>> gram(r, std::vector<long>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram[i][j] = rs.form(simple[i], simple[j]).to_long();

  // eps(a_i, a_j) = -1 (i = j), (-1)^{(a_i|a_j)} (i < j), 1 (i > j), extended bimultiplicatively.
  auto eps = [&](std::size_t a, std::size_t b) {
    const auto& m = rs.simple_coefficients(a);
    const auto& n = rs.simple_coefficients(b);
    long parity = 0;
    for (std::size_t i = 0; i < r; ++i) {
      const long mi = m[i].to_long();
      if (mi == 0) continue;
      parity += mi * n[i].to_long();
      for (std::size_t j = i + 1; j < r; ++j) parity += mi * n[j].to_long() * gram[i][j];
    }
    return Rational(parity % 2 == 0 ? 1 : -1);
  };

  Structure s;
  for_each_root_pair(rs, [&](std::size_t a, std::size_t b, std::size_t) { s.N.emplace(pair_key(a, b), eps(a, b)); });
  s.c.resize(rs.roots().size());
  for (std::size_t a = 0; a < s.c.size(); ++a) s.c[a] = eps(a, rs.negative_of(a));
  return s;
}

// ---- Chevalley basis from extraspecial pairs -----------------------------

Structure chevalley_structure(const RootSystem& rs) {
  const auto& roots = rs.roots();
  const std::size_t n = roots.size();
  std::vector<std::size_t> pos;
  for (std::size_t k = 0; k < n; ++k)
    if (rs.is_positive(k)) pos.push_back(k);
  std::sort(pos.begin(), pos.end(), [&](std::size_t a, std::size_t b) {
    if (rs.height(a) != rs.height(b)) return rs.height(a) < rs.height(b);
    return rs.simple_coefficients(a) < rs.simple_coefficients(b);
  });
  std::vector<std::size_t> order(n, n);
  for (std::size_t i = 0; i < pos.size(); ++i) order[pos[i]] = i;

  auto len2 = [&](std::size_t k) { return rs.form(roots[k], roots[k]); };
  auto idx = [&](const Weight& w) { return rs.root_index(w); };
  std::unordered_map<std::uint64_t, Rational> npos;

  std::function<Rational(std::size_t, std::size_t)> N = [&](std::size_t x, std::size_t y) -> Rational {
    const bool px = rs.is_positive(x), py = rs.is_positive(y);
    if (px && py) {
      auto lookup = [&](std::size_t a, std::size_t b) {
        auto it = npos.find(pair_key(a, b));
        if (it == npos.end()) throw std::logic_error("structure constant requested before it was fixed");
        return it->second;
      };
      return order[x] < order[y] ? lookup(x, y) : -lookup(y, x);
    }
    if (!px && !py) return -N(rs.negative_of(x), rs.negative_of(y));
    const std::size_t z = *idx(-(roots[x] + roots[y]));
    // N_{x,y}/(z,z) = N_{y,z}/(x,x) = N_{z,x}/(y,y) for x + y + z = 0.
    if (rs.is_positive(z) == px) return len2(z) / len2(y) * N(z, x);
    return len2(z) / len2(x) * N(y, z);
  };

  for (std::size_t xi : pos) {
    std::vector<std::pair<std::size_t, std::size_t>> special;
    for (std::size_t a : pos) {
      if (order[a] >= order[xi]) break;
      auto b = idx(roots[xi] - roots[a]);
      if (b && rs.is_positive(*b) && order[a] < order[*b]) special.emplace_back(a, *b);
    }
    if (special.empty()) continue;
    const auto [a1, b1] = special.front();
    long p = 0;
    while (idx(roots[b1] - Rational(p + 1) * roots[a1])) ++p;
    const Rational n1(p + 1);
    npos.emplace(pair_key(a1, b1), n1);
    for (std::size_t s = 1; s < special.size(); ++s) {
      const auto [g, d] = special[s];
      const std::size_t ng = rs.negative_of(g), nd = rs.negative_of(d);
      Rational acc;
      if (auto t = idx(roots[b1] - roots[g])) acc += N(b1, ng) * N(a1, nd) / len2(*t);
      if (auto t = idx(roots[a1] - roots[g])) acc += N(ng, a1) * N(b1, nd) / len2(*t);
      npos.emplace(pair_key(g, d), len2(xi) / n1 * acc);
    }
  }

  Structure s;
  for_each_root_pair(rs, [&](std::size_t a, std::size_t b, std::size_t) { s.N.emplace(pair_key(a, b), N(a, b)); });
  s.c.resize(n);
  for (std::size_t a = 0; a < n; ++a) s.c[a] = Rational(2) / len2(a);
  return s;
}

}  // namespace

LieRealization build_realization(const RootSystem& rs, StructureSource source) {
  Structure st;
  switch (source) {
    case StructureSource::Matrix: st = MatrixModel(rs).structure(); break;
    case StructureSource::Cocycle: st = cocycle_structure(rs); break;
    case StructureSource::Chevalley: st = chevalley_structure(rs); break;
  }

  LieRealization L;
  L.rs_ = rs;
  L.source_ = source;
  L.rank_ = rs.simple_roots().size();
  L.c_ = std::move(st.c);
  L.zero_ = Weight(rs.ambient_dim());
  const std::size_t r = L.rank_;
  const auto& roots = rs.roots();
  const auto& simple = rs.simple_roots();

  for (const auto& a : simple) L.coroots_.push_back(rs.coroot(a));
  L.cartan_gram_.assign(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) L.cartan_gram_[i][j] = rs.form(L.coroots_[i], L.coroots_[j]);

  for (std::size_t a = 0; a < roots.size(); ++a) {
    if (L.c_[a] != L.c_[rs.negative_of(a)]) throw std::logic_error("c_a and c_-a disagree");
    L.table_.emplace(LieRealization::key(r + a, r + rs.negative_of(a)), L.cartan_element(roots[a]).scaled(L.c_[a]));
    for (std::size_t i = 0; i < r; ++i) {
      const Rational v = rs.pairing(roots[a], simple[i]);
      if (v.is_zero()) continue;
      L.table_.emplace(LieRealization::key(i, r + a), LieElement::unit(r + a, v));
      L.table_.emplace(LieRealization::key(r + a, i), LieElement::unit(r + a, -v));
    }
  }
  for (const auto& [k, n] : st.N) {
    const std::size_t a = k >> 32, b = k & 0xffffffffu;
    if (n.is_zero()) throw std::logic_error("vanishing structure constant for a root sum");
    L.table_.emplace(LieRealization::key(r + a, r + b), LieElement::unit(r + *rs.root_index(roots[a] + roots[b]), n));
  }

  for (std::size_t i = 0; i < L.dim(); ++i) L.labels_.emplace(L.label(i), i);
  return L;
}

std::optional<std::size_t> LieRealization::basis_of_weight(const Weight& root) const {
  auto r = rs_.root_index(root);
  if (!r) return std::nullopt;
  return rank_ + *r;
}

std::size_t LieRealization::root_vector(const Weight& w) const {
  auto i = basis_of_weight(w);
  if (!i) throw std::invalid_argument(w.str() + " is not a root of " + rs_.label());
  return *i;
}

const Weight& LieRealization::weight(std::size_t i) const {
  return is_cartan(i) ? zero_ : rs_.roots()[root_of(i)];
}

std::string LieRealization::label(std::size_t i) const {
  if (i >= dim()) throw std::out_of_range("basis index out of range");
  return is_cartan(i) ? "h:" + std::to_string(i + 1) : rs_.roots()[root_of(i)].str();
}

std::optional<std::size_t> LieRealization::index_of_label(const std::string& label) const {
  auto it = labels_.find(label);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

const LieElement& LieRealization::bracket(std::size_t i, std::size_t j) const {
  static const LieElement zero;
  auto it = table_.find(key(i, j));
  return it == table_.end() ? zero : it->second;
}

LieElement LieRealization::bracket(const LieElement& a, const LieElement& b) const {
  LieElement out;
  for (const auto& [i, x] : a.entries())
    for (const auto& [j, y] : b.entries()) out.axpy(x * y, bracket(i, j));
  return out;
}

Rational LieRealization::form(std::size_t i, std::size_t j) const {
  if (is_cartan(i) && is_cartan(j)) return cartan_gram_[i][j];
  if (is_cartan(i) || is_cartan(j)) return Rational();
  const std::size_t a = root_of(i);
  return rs_.negative_of(a) == root_of(j) ? c_[a] : Rational();
}

Rational LieRealization::form(const LieElement& a, const LieElement& b) const {
  Rational s;
  for (const auto& [i, x] : a.entries())
    for (const auto& [j, y] : b.entries()) {
      const Rational f = form(i, j);
      if (!f.is_zero()) s += x * y * f;
    }
  return s;
}

LieElement LieRealization::cartan_element(const Weight& v) const {
  const auto m = rs_.express_in_simple_roots(v);
  const auto& simple = rs_.simple_roots();
  Weight back(rs_.ambient_dim());
  LieElement h;
  for (std::size_t j = 0; j < rank_; ++j) {
    back += m[j] * simple[j];
    h.add(j, m[j] * rs_.form(simple[j], simple[j]) / Rational(2));
  }
  if (back != v) throw std::invalid_argument(v.str() + " is outside the root span");
  return h;
}

Weight LieRealization::cartan_vector(const LieElement& h) const {
  Weight v(rs_.ambient_dim());
  for (const auto& [i, c] : h.entries()) {
    if (!is_cartan(i)) throw std::invalid_argument("cartan_vector: element has root components");
    v += c * coroots_[i];
  }
  return v;
}

LieElement LieAutomorphism::operator()(const LieElement& a) const {
  LieElement out;
  for (const auto& [i, c] : a.entries()) out.axpy(c, images_.at(i));
  return out;
}

LieAutomorphism diagram_automorphism(const LieRealization& L, const std::vector<std::size_t>& perm) {
  const auto& rs = L.root_system();
  const auto& simple = rs.simple_roots();
  const std::size_t r = L.rank();
  if (perm.size() != r) throw std::invalid_argument("permutation size differs from rank");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (perm[i] >= r || rs.pairing(simple[i], simple[j]) != rs.pairing(simple[perm[i]], simple[perm[j]]))
        throw std::invalid_argument("permutation does not preserve the Cartan matrix");

  auto image_root = [&](std::size_t root) {
    const auto& m = rs.simple_coefficients(root);
    Weight w(rs.ambient_dim());
    for (std::size_t i = 0; i < r; ++i) w += m[i] * simple[perm[i]];
    return *rs.root_index(w);
  };

  std::vector<LieElement> images(L.dim());
  for (std::size_t i = 0; i < r; ++i) images[i] = LieElement::unit(perm[i]);

  std::vector<std::size_t> order(rs.roots().size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return std::abs(rs.height(a)) < std::abs(rs.height(b)); });

  for (std::size_t root : order) {
    const int ht = rs.height(root);
    const std::size_t bi = L.basis_of_root(root);
    if (ht == 1 || ht == -1) {
      const std::size_t img = L.basis_of_root(image_root(root));
      const Rational s = ht == 1 ? Rational(1) : L.coroot_scale(root) / L.coroot_scale(image_root(root));
      images[bi] = LieElement::unit(img, s);
      continue;
    }
    // e_root = [e_s, e_rest] / N with s simple of the same sign.
    for (std::size_t i = 0; i < r; ++i) {
      const Weight s = ht > 0 ? simple[i] : -simple[i];
      auto rest = rs.root_index(rs.roots()[root] - s);
      if (!rest) continue;
      const std::size_t sb = *L.basis_of_weight(s), rb = L.basis_of_root(*rest);
      const Rational n = L.bracket(sb, rb).at(bi);
      images[bi] = L.bracket(images[sb], images[rb]).scaled(Rational(1) / n);
      break;
    }
  }
  return LieAutomorphism(std::move(images));
}

LieAutomorphism dynkin_flip(const LieRealization& L) {
  if (L.root_system().type() != RootType::D) throw std::invalid_argument("dynkin_flip needs type D");
  const std::size_t r = L.rank();
  std::vector<std::size_t> perm(r);
  for (std::size_t i = 0; i < r; ++i) perm[i] = i;
  std::swap(perm[r - 2], perm[r - 1]);
  return diagram_automorphism(L, perm);
}

}  // namespace klcalc

namespace klcalc {

LieRealization flip_root_vector(const LieRealization& L, const Weight& root) {
  const std::size_t b = L.root_vector(root);
  LieRealization out = L;
  for (auto& [k, v] : out.table_) {
    const auto i = static_cast<std::size_t>(k >> 32), j = static_cast<std::size_t>(k & 0xffffffffu);
    Rational s = (i == b ? -1 : 1) * Rational(j == b ? -1 : 1);
    LieElement flipped;
    for (const auto& [idx, c] : v.entries()) flipped.add(idx, idx == b ? -(c * s) : c * s);
    v = std::move(flipped);
  }
  const std::size_t a = L.root_of(b);
  out.c_[a] = -out.c_[a];
  out.c_[L.rs_.negative_of(a)] = -out.c_[L.rs_.negative_of(a)];
  return out;
}

}  // namespace klcalc
