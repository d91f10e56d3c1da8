#include "klcalc/conformal.hpp"

#include <algorithm>

namespace klcalc {

namespace {

void require_noncritical(const Rational& k, const Rational& h) {
  if (k + h == Rational(0)) throw std::domain_error("critical level k = -h^vee");
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  const mpz_class n = x.numerator(), d = x.denominator();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  return Rational(mpq_class(sqrt(n), sqrt(d)));
}

void sort_unique(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Rational sugawara_weight(const RootSystem& rs, const Weight& mu, const Rational& k) {
  require_noncritical(k, rs.dual_coxeter());
  return casimir_eigenvalue(rs, mu) / (Rational(2) * (k + rs.dual_coxeter()));
}

Rational mu_of_x(const RootSystem& rs, const Weight& mu) { return rs.form(mu, rs.theta()) / Rational(2); }

Rational w_lowest_weight(const RootSystem& rs, const Weight& mu, const Rational& k) {
  return sugawara_weight(rs, mu, k) - mu_of_x(rs, mu);
}

HighestWeightLabel decompose_weight(const RootSystem& rs, const Weight& mu) {
  const Rational l = mu_of_x(rs, mu);
  return {l, mu - l * rs.theta(), mu};
}

HighestWeightLabel assemble_weight(const RootSystem& rs, const Weight& mu_natural, const Rational& theta_coeff) {
  if (!rs.form(mu_natural, rs.theta()).is_zero())
    throw std::invalid_argument("assemble_weight: mu_natural is not orthogonal to theta");
  return {theta_coeff, mu_natural, mu_natural + theta_coeff * rs.theta()};
}

std::vector<Rational> EllEquation::roots() const { return solve_quadratic(a2, a1, Rational(0)).rational; }

EllEquation collapse_ell_equation(const Rational& k, const Rational& h) {
  require_noncritical(k, h);
  return {Rational(1), -(k + Rational(1)), k + h};
}

EllEquation ell_equation_half(const Rational& h) {
  if (h == Rational(-2)) throw std::domain_error("critical level");
  return {Rational(2), h - Rational(4), h + Rational(2)};
}

EllEquation ell_equation_sixth(const Rational& h) {
  if (Rational(5) * h == Rational(6)) throw std::domain_error("critical level");
  return {Rational(6), h, Rational(5) * h - Rational(6)};
}

std::vector<Rational> collapse_ell_roots(const Rational& k, const Rational& h) {
  return collapse_ell_equation(k, h).roots();
}

std::vector<Rational> collapse_ell_roots(const RootSystem& rs, const Rational& k) {
  return collapse_ell_roots(k, rs.dual_coxeter());
}

ClassificationSolutions solve_quadratic(const Rational& a, const Rational& b, const Rational& c) {
  ClassificationSolutions out;
  if (a.is_zero()) {
    if (b.is_zero()) throw std::invalid_argument("solve_quadratic: degenerate equation");
    out.rational.push_back(-c / b);
  } else if (auto s = rational_sqrt(b * b - Rational(4) * a * c)) {
    out.rational.push_back((-b + *s) / (Rational(2) * a));
    out.rational.push_back((-b - *s) / (Rational(2) * a));
  }
  sort_unique(out.rational);
  for (const auto& r : out.rational) {
    if (r.sign() < 0) continue;
    if (r.is_integer()) out.nonneg_integer.push_back(r);
    if ((r * Rational(2)).is_integer()) out.nonneg_half.push_back(r);
  }
  return out;
}

ClassificationSolutions solve_classification_equation(ClassificationForm form, const Rational& p) {
  switch (form) {
    case ClassificationForm::ShiftEquation:
      // (s + j)(s + j + 2) - j (j + 2) = s^2 + (2j + 2) s
      return solve_quadratic(Rational(1), Rational(2) * p + Rational(2), Rational(0));
    case ClassificationForm::HalfLevel:
      return solve_quadratic(Rational(2), p - Rational(4), Rational(0));
    case ClassificationForm::SixthLevel:
      return solve_quadratic(Rational(6), p, Rational(0));
  }
  throw std::invalid_argument("solve_classification_equation: unknown form");
}

std::string to_string(Quotient q) {
  switch (q) {
    case Quotient::Simple: return "simple";
    case Quotient::Intermediate: return "intermediate";
    case Quotient::VBar: return "vbar";
  }
  return "?";
}

Quotient parse_quotient(const std::string& s) {
  if (s == "simple") return Quotient::Simple;
  if (s == "intermediate") return Quotient::Intermediate;
  if (s == "vbar") return Quotient::VBar;
  throw std::invalid_argument("unknown quotient '" + s + "' (expected simple, intermediate or vbar)");
}

std::vector<Weight> WeightFamily::materialize(int bound) const {
  const int top = max_t ? std::min(*max_t, bound) : bound;
  std::vector<Weight> out;
  for (int t = 0; t <= top; ++t) out.push_back(base + Rational(t) * step);
  return out;
}

bool KLSpectrum::finite() const {
  return std::all_of(families.begin(), families.end(), [](const WeightFamily& f) { return f.max_t.has_value(); });
}

std::vector<Weight> KLSpectrum::weights(int bound) const {
  std::vector<Weight> out;
  for (const auto& f : families)
    for (auto& w : f.materialize(bound))
      if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(std::move(w));
  return out;
}

KLSpectrum kl_spectrum(const AlgebraSpec& spec, const Rational& k, Quotient q) {
  const RootSystem rs = build_root_system(spec);
  const Rational h = rs.dual_coxeter();
  const int l = spec.rank;
  const Weight zero(rs.ambient_dim());
  KLSpectrum out{spec.label(), k, q, {}, {}};
  auto single_zero = [&](std::string tag) {
    out.families.push_back({zero, zero, 0, "0"});
    out.provenance = std::move(tag);
    return out;
  };
  auto omega1_family = [&](std::optional<int> max_j, std::string tag) {
    const std::string range = max_j ? "0 <= j <= " + std::to_string(*max_j) : "j >= 0";
    out.families.push_back({zero, rs.fundamental_weight(1), max_j, "j*omega_1, " + range});
    out.provenance = std::move(tag);
    return out;
  };
  auto spin_families = [&](std::string tag) {
    out.families.push_back({zero, rs.fundamental_weight(l), std::nullopt, "t*omega_" + std::to_string(l) + ", t >= 0"});
    out.families.push_back(
        {zero, rs.fundamental_weight(l - 1), std::nullopt, "t*omega_" + std::to_string(l - 1) + ", t >= 0"});
    out.provenance = std::move(tag);
    return out;
  };
  const bool D = spec.type == RootType::D, B = spec.type == RootType::B;

  if (q == Quotient::Simple) {
    const bool deligne = (spec.type == RootType::A && l == 2) || (spec.type == RootType::G) ||
                         (D && l == 4) || spec.type == RootType::F || spec.type == RootType::E;
    if (deligne && k == -h / Rational(6) - Rational(1)) return single_zero("unique-module:deligne-series");
    if (D && l % 2 == 0 && l >= 4 && k == -h / Rational(2) + Rational(1))
      return single_zero("unique-module:even-D-half-level");
    if (spec.type == RootType::E && l == 8 && k == Rational(-10)) return single_zero("unique-module:E8-collapse-to-E7");
    if (D && l >= 4 && k == Rational(-2)) return omega1_family(l - 4, "D-level-minus-2:simple");
    if (B && l >= 3 && k == Rational(-2)) return omega1_family(2 * (l - 3) + 1, "B-level-minus-2:simple");
    if (B && l == 2 && k == Rational(-2)) return omega1_family(std::nullopt, "B2-level-minus-2:simple-equals-intermediate");
    if (D && l % 2 == 1 && l >= 5 && k == Rational(2 - l)) return spin_families("odd-D-half-level:simple");
  } else if (q == Quotient::Intermediate) {
    if (D && l >= 4 && k == Rational(-2)) return omega1_family(std::nullopt, "D-level-minus-2:intermediate");
    if (B && l >= 2 && k == Rational(-2)) return omega1_family(std::nullopt, "B-level-minus-2:intermediate");
  } else if (q == Quotient::VBar) {
    if (D && l >= 4 && k == Rational(2 - l)) return spin_families("D-half-level:vbar");
  }
  throw NotClassified("(" + spec.label() + ", k=" + k.str() + ", " + to_string(q) + ") is not classified by the implemented results");
}

}  // namespace klcalc
