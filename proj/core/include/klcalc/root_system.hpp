#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "klcalc/rational.hpp"
#include "klcalc/weight.hpp"

namespace klcalc {

enum class RootType { A, B, C, D, E, F, G };

char type_letter(RootType t);

/// Cartan type plus rank, e.g. {D, 6}.
struct AlgebraSpec {
  RootType type = RootType::A;
  int rank = 1;

  /// Accepts "D:6", "D6", "E7", "e8", "G2".
  static AlgebraSpec parse(std::string_view text);
  std::string label() const;  // "D6"
  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

/// Root datum in epsilon coordinates with the invariant form normalized by (theta, theta) = 2.
///
/// Roots are stored in descending lexicographic order of their coordinates; simple roots follow
/// Bourbaki numbering. All members are immutable after build_root_system.
class RootSystem {
 public:
  const AlgebraSpec& spec() const { return spec_; }
  RootType type() const { return spec_.type; }
  int rank() const { return spec_.rank; }
  std::string label() const { return spec_.label(); }
  std::size_t ambient_dim() const { return ambient_dim_; }

  const std::vector<Weight>& roots() const { return roots_; }
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const Weight& theta() const { return theta_; }
  const Weight& rho() const { return rho_; }
  const Rational& dual_coxeter() const { return dual_coxeter_; }
  /// (a|b) = form_scale * Euclidean(a, b).
  const Rational& form_scale() const { return form_scale_; }

  Rational form(const Weight& a, const Weight& b) const;
  /// 2 beta / (beta, beta).
  Weight coroot(const Weight& beta) const;
  /// (mu, beta^vee) = 2 (mu, beta) / (beta, beta).
  Rational pairing(const Weight& mu, const Weight& beta) const;

  std::optional<std::size_t> root_index(const Weight& w) const;
  bool is_root(const Weight& w) const { return root_index(w).has_value(); }
  bool is_positive(std::size_t root) const { return positive_[root]; }
  std::size_t negative_of(std::size_t root) const { return negative_of_[root]; }
  /// Coefficients of root in the simple-root basis (integers).
  const std::vector<Rational>& simple_coefficients(std::size_t root) const {
    return simple_coeffs_[root];
  }
  int height(std::size_t root) const { return heights_[root]; }

  /// Coefficients of the projection of w onto the root span, in the simple-root basis.
  std::vector<Rational> express_in_simple_roots(const Weight& w) const;
  /// Bourbaki-numbered fundamental weight, 1 <= i <= rank, inside the root span.
  Weight fundamental_weight(int i) const;
  bool is_dominant_integral(const Weight& w) const;

 private:
  friend RootSystem build_root_system(const AlgebraSpec& spec);

  AlgebraSpec spec_;
  std::size_t ambient_dim_ = 0;
  std::vector<Weight> roots_;
  std::vector<Weight> positive_roots_;
  std::vector<Weight> simple_roots_;
  std::vector<bool> positive_;
  std::vector<std::size_t> negative_of_;
  std::vector<std::vector<Rational>> simple_coeffs_;
  std::vector<int> heights_;
  std::unordered_map<Weight, std::size_t, WeightHash> index_;
  std::vector<std::vector<Rational>> gram_inverse_;  // inverse of (alpha_i | alpha_j)
  Weight theta_;
  Weight rho_;
  Rational dual_coxeter_;
  Rational form_scale_;
};

/// Throws std::invalid_argument for unsupported type/rank combinations.
RootSystem build_root_system(const AlgebraSpec& spec);
inline RootSystem build_root_system(RootType t, int rank) { return build_root_system({t, rank}); }

/// (mu, mu + 2 rho) in the normalized form.
Rational casimir_eigenvalue(const RootSystem& rs, const Weight& mu);

/// Dense inverse of a square rational matrix; throws std::domain_error when singular.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m);

}  // namespace klcalc
