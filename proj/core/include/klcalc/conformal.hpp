#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "klcalc/root_system.hpp"

namespace klcalc {

/// (mu, mu + 2 rho) / (2 (k + h)). Throws std::domain_error at the critical level.
Rational sugawara_weight(const RootSystem& rs, const Weight& mu, const Rational& k);
/// mu(x) with x = theta^vee / 2, i.e. (mu | theta) / 2.
Rational mu_of_x(const RootSystem& rs, const Weight& mu);
/// Lowest conformal weight on the reduction: sugawara_weight - mu(x).
Rational w_lowest_weight(const RootSystem& rs, const Weight& mu, const Rational& k);

/// mu = mu_natural + theta_coeff * theta with mu_natural orthogonal to theta.
struct HighestWeightLabel {
  Rational theta_coeff;
  Weight mu_natural;
  Weight mu;
};
HighestWeightLabel decompose_weight(const RootSystem& rs, const Weight& mu);
/// Throws std::invalid_argument unless mu_natural is orthogonal to theta.
HighestWeightLabel assemble_weight(const RootSystem& rs, const Weight& mu_natural, const Rational& theta_coeff);

/// (a2 l^2 + a1 l) / denom: the value of w_lowest_weight on l * theta.
struct EllEquation {
  Rational a2, a1, denom;
  Rational operator()(const Rational& l) const { return (a2 * l * l + a1 * l) / denom; }
  /// Sorted distinct roots.
  std::vector<Rational> roots() const;
};
/// (l^2 - (k + 1) l) / (k + h). Throws std::domain_error when k = -h.
EllEquation collapse_ell_equation(const Rational& k, const Rational& h);
/// The k = -h/2 + 1 specialization written as (2 l^2 + (h - 4) l) / (h + 2).
EllEquation ell_equation_half(const Rational& h);
/// The k = -h/6 - 1 specialization written as (6 l^2 + h l) / (5 h - 6).
EllEquation ell_equation_sixth(const Rational& h);
std::vector<Rational> collapse_ell_roots(const Rational& k, const Rational& h);
std::vector<Rational> collapse_ell_roots(const RootSystem& rs, const Rational& k);

enum class ClassificationForm {
  ShiftEquation,  // (s + j)(s + j + 2) = j (j + 2) in s, parameter j
  HalfLevel,      // 2 l^2 + (h - 4) l = 0 in l, parameter h
  SixthLevel,     // 6 l^2 + h l = 0 in l, parameter h
};

struct ClassificationSolutions {
  std::vector<Rational> rational;         // all rational roots, sorted
  std::vector<Rational> nonneg_integer;   // roots in Z_{>=0}
  std::vector<Rational> nonneg_half;      // roots in 1/2 Z_{>=0}
};

/// Exact rational roots of a x^2 + b x + c (not all zero); irrational roots are dropped.
ClassificationSolutions solve_quadratic(const Rational& a, const Rational& b, const Rational& c);
ClassificationSolutions solve_classification_equation(ClassificationForm form, const Rational& param);

/// Which quotient of V^k(g) a spectrum refers to.
enum class Quotient {
  Simple,        // V_k(g)
  Intermediate,  // V^k / <w_1> (and w_3 for D4) at k = -2
  VBar,          // V^k / <v_1> at k = 2 - l for D_l
};
std::string to_string(Quotient q);
Quotient parse_quotient(const std::string& s);

/// base + t * step for 0 <= t <= max_t (unbounded when max_t is empty).
struct WeightFamily {
  Weight base;
  Weight step;
  std::optional<int> max_t;
  std::string description;  // e.g. "j*omega_1, 0 <= j <= 2"

  /// Members with t <= bound (and t <= max_t).
  std::vector<Weight> materialize(int bound) const;
};

struct KLSpectrum {
  std::string g_label;
  Rational k;
  Quotient quotient = Quotient::Simple;
  std::vector<WeightFamily> families;
  std::string provenance;

  bool finite() const;
  /// Union of the families materialized up to `bound`.
  std::vector<Weight> weights(int bound) const;
};

class NotClassified : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Highest weights of the irreducible modules in KL_k for the covered cases;
/// throws NotClassified otherwise.
KLSpectrum kl_spectrum(const AlgebraSpec& spec, const Rational& k, Quotient q = Quotient::Simple);

}  // namespace klcalc
