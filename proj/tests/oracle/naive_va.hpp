#pragma once

// Brute-force vacuum module used only as a cross-check of the core library.
// Nothing here shares code with core/ beyond Rational and Weight.

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "klcalc/lie_realization.hpp"

namespace oracle {

using klcalc::Rational;
using klcalc::Weight;

using Vec = std::vector<std::pair<int, Rational>>;  // sparse element of g

// Structure constants of a simple Lie algebra in some basis.
struct LieData {
  int dim = 0;
  std::vector<Weight> weights;                   // zero for Cartan elements
  std::vector<std::vector<Vec>> bracket;         // bracket[i][j]
  std::vector<std::vector<Rational>> form;       // normalized invariant form
  std::function<int(const Weight&)> root_index;  // basis index of a root vector, -1 if absent
};

// so(2l) as 2l x 2l matrices X with X^T J + J X = 0, J the anti-diagonal unit.
// Index i' = 2l - 1 - i pairs +eps_i with -eps_i. (X|Y) = tr(XY)/2.
inline LieData so_even(int l) {
  const int n = 2 * l;
  using Mat = std::vector<std::vector<Rational>>;
  auto zero = [&] { return Mat(n, std::vector<Rational>(n)); };
  auto bar = [&](int i) { return n - 1 - i; };
  std::vector<Mat> mats;
  std::vector<std::pair<int, int>> key;  // distinguished entry with coefficient 1
  LieData d;
  for (int i = 0; i < l; ++i) {
    Mat m = zero();
    m[i][i] = 1;
    m[bar(i)][bar(i)] = -1;
    mats.push_back(m);
    key.push_back({i, i});
    d.weights.push_back(Weight(static_cast<std::size_t>(l)));
  }
  auto eps = [&](int i, int s) {
    Weight w(static_cast<std::size_t>(l));
    w[i] = s;
    return w;
  };
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      if (i == j) continue;
      Mat m = zero();  // eps_i - eps_j
      m[i][j] = 1;
      m[bar(j)][bar(i)] = -1;
      mats.push_back(m);
      key.push_back({i, j});
      d.weights.push_back(eps(i, 1) + eps(j, -1));
      if (i < j) {
        Mat p = zero();  // eps_i + eps_j
        p[i][bar(j)] = 1;
        p[j][bar(i)] = -1;
        mats.push_back(p);
        key.push_back({i, bar(j)});
        d.weights.push_back(eps(i, 1) + eps(j, 1));
        Mat q = zero();  // -eps_i - eps_j
        q[bar(j)][i] = 1;
        q[bar(i)][j] = -1;
        mats.push_back(q);
        key.push_back({bar(j), i});
        d.weights.push_back(eps(i, -1) + eps(j, -1));
      }
    }
  d.dim = static_cast<int>(mats.size());
  auto mul = [&](const Mat& a, const Mat& b) {
    Mat c = zero();
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (!a[i][k].is_zero())
          for (int j = 0; j < n; ++j)
            if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  auto decompose = [&](const Mat& m) {
    Vec out;
    for (int b = 0; b < d.dim; ++b) {
      const Rational& c = m[key[b].first][key[b].second];
      if (!c.is_zero()) out.push_back({b, c});
    }
    return out;
  };
  d.bracket.assign(d.dim, std::vector<Vec>(d.dim));
  d.form.assign(d.dim, std::vector<Rational>(d.dim));
  for (int a = 0; a < d.dim; ++a)
    for (int b = 0; b < d.dim; ++b) {
      Mat ab = mul(mats[a], mats[b]), ba = mul(mats[b], mats[a]);
      Mat c = zero();
      Rational tr;
      for (int i = 0; i < n; ++i) {
        tr += ab[i][i];
        for (int j = 0; j < n; ++j) c[i][j] = ab[i][j] - ba[i][j];
      }
      d.bracket[a][b] = decompose(c);
      d.form[a][b] = tr / Rational(2);
    }
  auto weights = d.weights;
  d.root_index = [weights, l](const Weight& w) {
    for (int b = l; b < static_cast<int>(weights.size()); ++b)
      if (weights[b] == w) return b;
    return -1;
  };
  return d;
}

// Structure constants read off a core realization.
inline LieData from_realization(const klcalc::LieRealization& L) {
  LieData d;
  d.dim = static_cast<int>(L.dim());
  d.bracket.assign(d.dim, std::vector<Vec>(d.dim));
  d.form.assign(d.dim, std::vector<Rational>(d.dim));
  for (int i = 0; i < d.dim; ++i) {
    d.weights.push_back(L.weight(i));
    for (int j = 0; j < d.dim; ++j) {
      for (const auto& [k, c] : L.bracket(i, j).entries()) d.bracket[i][j].push_back({static_cast<int>(k), c});
      d.form[i][j] = L.form(i, j);
    }
  }
  d.root_index = [&L](const Weight& w) {
    auto b = L.basis_of_weight(w);
    return b ? static_cast<int>(*b) : -1;
  };
  return d;
}

// A letter x_base(mode). Words are stored left to right as operators acting on the vacuum.
struct Letter {
  int base;
  int mode;
  friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

// Canonical order: mode ascending, base descending. Nonnegative modes end up on the right.
inline bool before(const Letter& a, const Letter& b) {
  return a.mode != b.mode ? a.mode < b.mode : a.base > b.base;
}

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const Letter& x, const Letter& y) {
      return x.mode != y.mode ? x.mode < y.mode : x.base < y.base;
    });
  }
};
using State = std::map<Word, Rational, WordLess>;

class VacuumModule {
 public:
  VacuumModule(LieData d, Rational level) : d_(std::move(d)), k_(std::move(level)) {}
  const LieData& data() const { return d_; }

  // Rewrites a word into canonical words by adjacent swaps.
  void normalize(Word w, const Rational& c, State& out) const {
    if (c.is_zero()) return;
    if (!w.empty() && w.back().mode >= 0) return;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const Letter a = w[i], b = w[i + 1];
      if (!before(b, a)) continue;
      Word swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      normalize(swapped, c, out);
      for (const auto& [e, x] : d_.bracket[a.base][b.base]) {
        Word r(w.begin(), w.begin() + i);
        r.push_back({e, a.mode + b.mode});
        r.insert(r.end(), w.begin() + i + 2, w.end());
        normalize(r, c * x, out);
      }
      if (a.mode + b.mode == 0 && !d_.form[a.base][b.base].is_zero()) {
        Word r(w.begin(), w.begin() + i);
        r.insert(r.end(), w.begin() + i + 2, w.end());
        normalize(r, c * Rational(a.mode) * k_ * d_.form[a.base][b.base], out);
      }
      return;
    }
    auto& slot = out[w];
    slot += c;
    if (slot.is_zero()) out.erase(w);
  }

  State act(const Letter& x, const State& s) const {
    State out;
    for (const auto& [w, c] : s) {
      Word v{x};
      v.insert(v.end(), w.begin(), w.end());
      normalize(v, c, out);
    }
    return out;
  }

  // All canonical words of the given weight and degree, from first principles.
  std::vector<Word> graded_words(const Weight& weight, int degree) const {
    std::vector<Letter> letters;
    for (int m = -degree; m <= -1; ++m)
      for (int b = d_.dim - 1; b >= 0; --b) letters.push_back({b, m});
    std::sort(letters.begin(), letters.end(), before);
    std::vector<Word> out;
    Word cur;
    std::function<void(std::size_t, int, Weight)> rec = [&](std::size_t from, int left, Weight wt) {
      if (left == 0) {
        if (wt == weight) out.push_back(cur);
        return;
      }
      for (std::size_t i = from; i < letters.size(); ++i) {
        if (-letters[i].mode > left) continue;
        cur.push_back(letters[i]);
        rec(i, left + letters[i].mode, wt + d_.weights[letters[i].base]);
        cur.pop_back();
      }
    };
    rec(0, degree, Weight(weight.dim()));
    return out;
  }

  // Dimension and basis of the common kernel of `ops` on span(words), by dense elimination.
  std::vector<State> kernel(const std::vector<Word>& words, const std::vector<Letter>& ops) const {
    std::map<Word, std::size_t, WordLess> rows;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(words.size());
    for (std::size_t j = 0; j < words.size(); ++j)
      for (std::size_t o = 0; o < ops.size(); ++o) {
        State img = act(ops[o], State{{words[j], Rational(1)}});
        for (const auto& [w, c] : img) {
          Word tagged = w;
          tagged.insert(tagged.begin(), Letter{static_cast<int>(o), 1000});
          auto [it, _] = rows.emplace(tagged, rows.size());
          cols[j].push_back({it->second, c});
        }
      }
    std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(words.size()));
    for (std::size_t j = 0; j < words.size(); ++j)
      for (const auto& [r, c] : cols[j]) m[r][j] = c;
    std::vector<int> pivot_of_col(words.size(), -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < words.size() && r < m.size(); ++c) {
      std::size_t p = r;
      while (p < m.size() && m[p][c].is_zero()) ++p;
      if (p == m.size()) continue;
      std::swap(m[p], m[r]);
      const Rational inv = Rational(1) / m[r][c];
      for (auto& x : m[r]) x *= inv;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i == r || m[i][c].is_zero()) continue;
        const Rational f = m[i][c];
        for (std::size_t k = 0; k < words.size(); ++k) m[i][k] -= f * m[r][k];
      }
      pivot_of_col[c] = static_cast<int>(r++);
    }
    std::vector<State> out;
    for (std::size_t f = 0; f < words.size(); ++f) {
      if (pivot_of_col[f] >= 0) continue;
      State s{{words[f], Rational(1)}};
      for (std::size_t c = 0; c < words.size(); ++c)
        if (pivot_of_col[c] >= 0 && !m[pivot_of_col[c]][f].is_zero()) s[words[c]] = -m[pivot_of_col[c]][f];
      out.push_back(std::move(s));
    }
    return out;
  }

  // e_alpha(0) for the given simple roots and e_{-theta}(1).
  std::vector<Letter> raising(const std::vector<Weight>& simple, const Weight& theta) const {
    std::vector<Letter> ops;
    for (const auto& a : simple) ops.push_back({index(a), 0});
    ops.push_back({index(-theta), 1});
    return ops;
  }

  int index(const Weight& root) const {
    const int i = d_.root_index(root);
    if (i < 0) throw std::invalid_argument("oracle: not a root " + root.str());
    return i;
  }

  // x_1(-1) ... x_r(-1)|0> for root vectors.
  State product(const std::vector<Weight>& roots) const {
    State s{{Word{}, Rational(1)}};
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) s = act({index(*it), -1}, s);
    return s;
  }

  bool annihilated(const State& s, const std::vector<Letter>& ops) const {
    return std::all_of(ops.begin(), ops.end(), [&](const Letter& o) { return act(o, s).empty(); });
  }

 private:
  LieData d_;
  Rational k_;
};

inline State add(State a, const State& b, const Rational& s = Rational(1)) {
  for (const auto& [w, c] : b) {
    auto& slot = a[w];
    slot += s * c;
    if (slot.is_zero()) a.erase(w);
  }
  return a;
}

// Simple roots eps_i - eps_{i+1}, eps_{l-1} + eps_l and theta = eps_1 + eps_2 of D_l.
inline std::vector<Weight> d_simple_roots(int l) {
  std::vector<Weight> out;
  auto e = [&](int i) { return Weight::unit(static_cast<std::size_t>(l), static_cast<std::size_t>(i)); };
  for (int i = 0; i + 1 < l; ++i) out.push_back(e(i) - e(i + 1));
  out.push_back(e(l - 2) + e(l - 1));
  return out;
}
inline Weight d_theta(int l) {
  return Weight::unit(static_cast<std::size_t>(l), 0) + Weight::unit(static_cast<std::size_t>(l), 1);
}

}  // namespace oracle
