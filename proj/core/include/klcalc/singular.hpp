#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "klcalc/affine_pbw.hpp"

namespace klcalc {

/// Fixed-point-free involution of {1..2l} as pairs (i_h, j_h), i_h < j_h, i_1 < ... < i_l.
struct PairInvolution {
  std::vector<std::pair<int, int>> pairs;
  /// The flattening (i_1, j_1, i_2, j_2, ...).
  std::vector<int> flattened() const;
  friend bool operator==(const PairInvolution&, const PairInvolution&) = default;
};

/// All (2l-1)!! involutions, in lexicographic order of their flattenings.
std::vector<PairInvolution> enumerate_involutions(int l);
/// Sign of the flattening as a permutation.
int involution_sign(const PairInvolution& p);
/// (2l-1)!!
unsigned long long double_factorial_odd(int l);

/// eps_i +/- eps_j (1-based, sign_j = +1 or -1) in the ambient space of rs.
Weight eps_sum(const RootSystem& rs, int i, int j, int sign_j = 1);
/// eps_i (1-based) or its negative.
Weight eps(const RootSystem& rs, int i, int sign = 1);
/// Root 1/2(eps_8 - eps_7 + sum_{i<=6} +-eps_i) with + exactly on the 1-based indices in `subset`.
Weight e7_half_root(const RootSystem& rs, const std::vector<int>& subset);

/// (sum_{i=2}^{l} e_{e1-ei}(-1) e_{e1+ei}(-1))^n |0> at level n - l + 1. Type D only.
StateVector build_v_n(const LieRealization& L, int n, std::size_t cap = kDefaultCap);
/// (sum_p s(p) prod e_{e_i + e_p(i)}(-1))^n |0> at level n - 2l + 1 on D_{2l}.
StateVector build_w_n(const LieRealization& L, int n, std::size_t cap = kDefaultCap);
/// e_{e1+e2} e_{e3+e4} - e_{e1+e3} e_{e2+e4} + e_{e1+e4} e_{e2+e3}, level -2, D_l with l >= 4.
StateVector build_w1_D(const LieRealization& L);
/// e_{e1+e2} e_{e3-e4} - e_{e1+e3} e_{e2-e4} + e_{e1-e4} e_{e2+e3}, level -2, D_4.
StateVector build_w3_D4(const LieRealization& L);
/// Level -2 vector of conformal weight two on B_l, l >= 2.
StateVector build_w1_B(const LieRealization& L);
/// The B_2 vector: e_{e1+e2} e_{-e2} + x e_{e1} + b e_{e1-e2} e_{e2}, with b and the Cartan
/// element x solved for. The display reads b = -1 and x = h_{e2} / 2.
struct B2Solution {
  StateVector vector;
  Rational b;
  LieElement cartan;
};
B2Solution solve_w1_B2(const LieRealization& L);
/// Applies the diagram flip factor by factor. Type D only.
StateVector theta_image(const LieRealization& L, const StateVector& v);

/// A term of a displayed vector: product of root vectors e_root(mode) with a coefficient.
struct DisplayFactor {
  Weight root;
  int mode = -1;
};
struct DisplayTerm {
  std::vector<DisplayFactor> factors;
  Rational coeff;
};
using Display = std::vector<DisplayTerm>;

/// Normal-ordered monomial for pairwise commuting display factors; throws otherwise.
Monomial display_monomial(const LieRealization& L, const std::vector<DisplayFactor>& factors);
/// sum of coeff * e_1(m_1) ... e_r(m_r)|0>, applied right to left.
StateVector realize(const LieRealization& L, const Rational& level, const Display& d);

Display w1_D_display(const RootSystem& rs);
Display w3_D4_display(const RootSystem& rs);
Display w1_B3_display(const RootSystem& rs);

/// Result of matching a vector against a display up to e_a -> -e_a flips and a global scalar.
struct SignFlipMatch {
  bool matches = false;
  Rational scalar;                 // v = scalar * flipped(display)
  std::vector<Weight> flipped;  // roots whose vectors change sign in one solution
  bool exact = false;           // no flips needed
  std::string reason;           // set when !matches
};

SignFlipMatch match_up_to_sign_flips(const LieRealization& L, const StateVector& v, const Display& d);

/// Solution of the raising-operator equations restricted to a given support.
struct SupportSolution {
  std::vector<Monomial> support;
  std::vector<StateVector> kernel;  // basis of solutions on the support
};

/// Coefficient vectors c with sum c_j span_j singular; span entries share level, weight and degree.
std::vector<std::vector<Rational>> solve_on_span(const LieRealization& L, const std::vector<StateVector>& span);

SupportSolution solve_on_support(const LieRealization& L, const Rational& level, const Weight& weight, int degree,
                                 const std::vector<Monomial>& support);

/// The five-term displayed E7 support with undetermined coefficients.
std::vector<Monomial> vE7_support(const LieRealization& L);
Display vE7_display(const RootSystem& rs);

struct ResolvedVector {
  StateVector vector;
  bool common_magnitude = false;
  SignFlipMatch match;
};

/// Solves on the support; throws std::logic_error unless the solution space is one-dimensional.
ResolvedVector resolve_signs(const LieRealization& L, const Rational& level, const Weight& weight, int degree,
                             const std::vector<Monomial>& support, const Display& display);
/// v_E7 at level -4 with coefficients normalized so the e_{e8-e7} e_{e6+e5} term is 1.
ResolvedVector build_vE7(const LieRealization& L);

}  // namespace klcalc
