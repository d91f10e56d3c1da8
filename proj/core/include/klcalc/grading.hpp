#pragma once

#include <map>
#include <string>
#include <vector>

#include "klcalc/lie_realization.hpp"

namespace klcalc {

/// One simple ideal of g-natural, or its center.
struct GnaturalComponent {
  std::string type_label;  // "A1", "D4", ...; "center" for the abelian part
  std::string name;        // "sl(2)", "so(8)", "sp(6)", "E7", "gl(1)" ...
  bool abelian = false;
  std::vector<std::size_t> root_basis;  // basis indices of root vectors
  std::vector<LieElement> cartan;       // basis of the Cartan part
  std::vector<Weight> simple_roots;
  Weight highest_root;                  // zero for the center
  Rational dual_coxeter;                // half the Casimir eigenvalue on the component; 0 if abelian

  std::size_t dim() const { return root_basis.size() + cartan.size(); }
  std::vector<LieElement> basis() const;
};

/// ad(x) eigenspace decomposition for x = theta/2.
class MinimalGrading {
 public:
  /// x as a vector: alpha(x) = (alpha | x).
  const Weight& x() const { return x_; }
  Rational grade(std::size_t basis_index) const { return grades_.at(basis_index); }
  /// Grade -> basis indices; the Cartan indices sit in grade 0.
  const std::map<Rational, std::vector<std::size_t>>& pieces() const { return pieces_; }
  std::size_t piece_dim(const Rational& j) const;
  const std::vector<GnaturalComponent>& components() const { return components_; }
  std::size_t gnatural_dim() const;

 private:
  friend MinimalGrading minimal_grading(const LieRealization& L);
  Weight x_;
  std::vector<Rational> grades_;
  std::map<Rational, std::vector<std::size_t>> pieces_;
  std::vector<GnaturalComponent> components_;
};

MinimalGrading minimal_grading(const LieRealization& L);

/// h-dual-coxeter of component i; 0 for the abelian part.
Rational restricted_dual_coxeter(const MinimalGrading& mg, std::size_t i);

/// Cartan type of a root subsystem given its simple roots and root count, e.g. "C3".
std::string identify_type(const RootSystem& ambient, const std::vector<Weight>& simple, std::size_t root_count);
/// Classical name for a type label: A5 -> sl(6), D6 -> so(12), C3 -> sp(6), E7 -> E7.
std::string classical_name(const std::string& type_label);

}  // namespace klcalc
