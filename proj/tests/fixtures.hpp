#pragma once

// Literal data transcribed from the published tables and displays.

#include <set>
#include <vector>

#include "klcalc/singular.hpp"

namespace fixtures {

using klcalc::AlgebraSpec;
using klcalc::Rational;
using klcalc::RootType;

// Minimal-grading table rows for simple Lie algebras, in terms of the matrix size n.
struct GradingRow {
  AlgebraSpec spec;
  Rational dual_coxeter;
  std::size_t g_half_dim;
  std::size_t gnatural_dim;
};

inline std::vector<GradingRow> grading_rows() {
  std::vector<GradingRow> rows;
  for (int r = 2; r <= 8; ++r) {  // sl(n), n >= 3: gl(n-2), C^{n-2} + dual, h = n
    const int n = r + 1;
    rows.push_back({{RootType::A, r}, Rational(n), std::size_t(2 * (n - 2)), std::size_t((n - 2) * (n - 2))});
  }
  for (int r = 2; r <= 8; ++r) {  // so(n), n >= 5 odd: sl(2)+so(n-4), C^2 (x) C^{n-4}, h = n-2
    const int n = 2 * r + 1;
    rows.push_back({{RootType::B, r}, Rational(n - 2), std::size_t(2 * (n - 4)), std::size_t(3 + (n - 4) * (n - 5) / 2)});
  }
  for (int r = 1; r <= 7; ++r) {  // sp(n): sp(n-2), C^{n-2}, h = n/2+1
    const int n = 2 * r;
    rows.push_back(
        {{RootType::C, r}, Rational(n, 2) + Rational(1), std::size_t(n - 2), std::size_t((n - 2) * (n - 1) / 2)});
  }
  for (int r = 3; r <= 8; ++r) {  // so(n), n >= 6 even
    const int n = 2 * r;
    rows.push_back({{RootType::D, r}, Rational(n - 2), std::size_t(2 * (n - 4)), std::size_t(3 + (n - 4) * (n - 5) / 2)});
  }
  rows.push_back({{RootType::G, 2}, Rational(4), 4, 3});     // sl(2), S^3 C^2
  rows.push_back({{RootType::F, 4}, Rational(9), 14, 21});   // sp(6), wedge_0^3 C^6
  rows.push_back({{RootType::E, 6}, Rational(12), 20, 35});  // sl(6), wedge^3 C^6
  rows.push_back({{RootType::E, 7}, Rational(18), 32, 66});  // so(12), spin_12
  rows.push_back({{RootType::E, 8}, Rational(30), 56, 133}); // E7, dim 56
  return rows;
}

// Roots of p(k) for Lie-algebra rows: sl(n) = sl(n|0), so(m) = osp(m|0), sp(n) = spo(n|0).
inline std::set<Rational> polynomial_roots(const AlgebraSpec& s) {
  const int r = s.rank;
  switch (s.type) {
    case RootType::A: return {Rational(-1), -Rational(r + 1, 2)};
    case RootType::B: return {Rational(-2), -Rational(2 * r + 1 - 4, 2)};
    case RootType::D: return {Rational(-2), -Rational(2 * r - 4, 2)};
    case RootType::C: return {Rational(-1, 2), -Rational(2 * r + 4, 4)};
    case RootType::E:
      if (r == 6) return {Rational(-3), Rational(-4)};
      if (r == 7) return {Rational(-4), Rational(-6)};
      return {Rational(-6), Rational(-10)};
    case RootType::F: return {Rational(-5, 2), Rational(-3)};
    case RootType::G: return {Rational(-4, 3), Rational(-5, 3)};
  }
  return {};
}

inline std::vector<AlgebraSpec> polynomial_specs() {
  std::vector<AlgebraSpec> specs{{RootType::G, 2}, {RootType::F, 4}, {RootType::E, 6}, {RootType::E, 7}, {RootType::E, 8}};
  for (int r = 2; r <= 9; ++r) specs.push_back({RootType::A, r});
  for (int r = 2; r <= 8; ++r) specs.push_back({RootType::B, r});
  for (int r = 1; r <= 8; ++r) specs.push_back({RootType::C, r});
  for (int r = 3; r <= 8; ++r) specs.push_back({RootType::D, r});
  return specs;
}

// Named collapsing rows: g, k, target, k'.
struct CollapseRow {
  AlgebraSpec g;
  Rational k;
  const char* target;
  Rational k_prime;
};

inline std::vector<CollapseRow> named_collapse_rows() {
  return {
      {{RootType::E, 8}, Rational(-10), "E7", Rational(-4)},
      {{RootType::E, 7}, Rational(-6), "so(12)", Rational(-2)},
      {{RootType::E, 6}, Rational(-4), "sl(6)", Rational(-1)},
      {{RootType::F, 4}, Rational(-3), "sp(6)", Rational(-1, 2)},
      {{RootType::G, 2}, Rational(-4, 3), "sl(2)", Rational(1)},
      {{RootType::E, 8}, Rational(-6), "C", Rational(0)},
      {{RootType::E, 7}, Rational(-4), "C", Rational(0)},
      {{RootType::E, 6}, Rational(-3), "C", Rational(0)},
      {{RootType::F, 4}, Rational(-5, 2), "C", Rational(0)},
      {{RootType::G, 2}, Rational(-5, 3), "C", Rational(0)},
      {{RootType::A, 2}, Rational(-3, 2), "C", Rational(0)},
      {{RootType::D, 4}, Rational(-2), "C", Rational(0)},
      {{RootType::C, 3}, Rational(-1, 2), "C", Rational(0)},
      {{RootType::A, 4}, Rational(-1), "M(1)", Rational(1)},
      {{RootType::D, 6}, Rational(-2), "sl(2)", Rational(2)},
      {{RootType::B, 4}, Rational(-5, 2), "so(5)", Rational(-1, 2)},
  };
}

// The fifteen displayed terms of w_1 in V^{-4}(D_6), read left to right.
struct FifteenTerm {
  int pairs[3][2];
  int sign;
};
inline constexpr FifteenTerm kFifteenTerms[15] = {
    {{{1, 2}, {3, 4}, {5, 6}}, +1}, {{{1, 2}, {3, 5}, {4, 6}}, -1}, {{{1, 2}, {3, 6}, {4, 5}}, +1},
    {{{1, 3}, {2, 4}, {5, 6}}, -1}, {{{1, 3}, {2, 5}, {4, 6}}, +1}, {{{1, 3}, {2, 6}, {4, 5}}, -1},
    {{{1, 4}, {2, 3}, {5, 6}}, +1}, {{{1, 4}, {2, 5}, {3, 6}}, -1}, {{{1, 4}, {2, 6}, {3, 5}}, +1},
    {{{1, 5}, {2, 3}, {4, 6}}, -1}, {{{1, 5}, {2, 4}, {3, 6}}, +1}, {{{1, 5}, {2, 6}, {3, 4}}, -1},
    {{{1, 6}, {2, 3}, {4, 5}}, +1}, {{{1, 6}, {2, 4}, {3, 5}}, -1}, {{{1, 6}, {2, 5}, {3, 4}}, +1},
};

inline klcalc::Display fifteen_term_display(const klcalc::RootSystem& rs) {
  klcalc::Display d;
  for (const auto& t : kFifteenTerms) {
    klcalc::DisplayTerm term;
    for (const auto& p : t.pairs) term.factors.push_back({klcalc::eps_sum(rs, p[0], p[1])});
    term.coeff = t.sign;
    d.push_back(term);
  }
  return d;
}

}  // namespace fixtures
