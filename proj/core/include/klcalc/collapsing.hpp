#pragma once

#include <optional>
#include <string>
#include <vector>

#include "klcalc/grading.hpp"

namespace klcalc {

/// "sl(6)", "so(12)", "sp(6)", "E7" <-> AlgebraSpec. Also accepts "D6" / "D:6".
AlgebraSpec spec_from_name(const std::string& name);
std::string lie_name(const AlgebraSpec& spec);
/// Sorted isomorphism types of a reductive algebra written like "gl(4)" or "sl(2)+so(5)";
/// abelian summands appear as "center".
std::vector<std::string> isomorphism_types(const std::string& name);

/// One row of the minimal-grading tables, verbatim.
struct MinimalGradingDatum {
  int table = 1;
  std::string g_label;
  std::string gnatural_label;
  std::string g_half_description;
  std::string dual_coxeter;  // formula text, e.g. "n-2"
  bool is_super = false;
};
const std::vector<MinimalGradingDatum>& minimal_grading_table();

/// Minimal-grading table formulas evaluated at a concrete algebra.
struct GradingExpectation {
  Rational dual_coxeter;
  std::string gnatural;  // e.g. "sl(2)+so(8)"
  std::size_t g_half_dim = 0;
};
GradingExpectation grading_expectation(const AlgebraSpec& spec);

/// p(k) = (k - root1)(k - root2) for Lie-algebra rows.
struct CollapsePolynomial {
  std::string g_label;
  Rational root1, root2;
  Rational operator()(const Rational& k) const { return (k - root1) * (k - root2); }
  bool has_root(const Rational& k) const { return k == root1 || k == root2; }
};

/// Literal p(k) rows (including super rows, which are carried as text only).
struct PolynomialDatum {
  std::string g_label;
  std::string p_of_k;
  bool is_super = false;
};
const std::vector<PolynomialDatum>& polynomial_table();

CollapsePolynomial p_of_k(const AlgebraSpec& spec);
bool is_collapsing(const AlgebraSpec& spec, const Rational& k);

/// k_i = k + (h - h_{0,i}) / 2 for component i of minimal_grading(build_realization(spec)).
Rational component_level(const AlgebraSpec& spec, const Rational& k, std::size_t component);

struct CollapseTarget {
  std::string target;  // "C", "M(1)" or the name of the surviving simple component
  Rational k_prime;
  std::vector<std::string> target_types;  // isomorphism types of the target, empty for C / M(1)
};

/// Throws std::invalid_argument when k is not a collapsing level.
CollapseTarget collapsed_level(const AlgebraSpec& spec, const Rational& k);

/// Collapsing-table row, verbatim, plus parameter ranges used to instantiate Lie-algebra rows.
struct CollapsingRow {
  std::string g_label;
  std::string target_label;
  std::string k;
  std::string k_prime;
  bool is_super = false;
};
const std::vector<CollapsingRow>& collapsing_table();

/// A concrete Lie-algebra instance of a collapsing-table row.
struct CollapsingInstance {
  std::string row;  // family label of the row
  AlgebraSpec spec;
  std::string g_name;
  std::string target;  // expected, e.g. "so(5)", "C", "M(1)"
  Rational k;
  Rational k_prime;
};
std::vector<CollapsingInstance> collapsing_instances();

struct AuditLine {
  CollapsingInstance expected;
  std::optional<CollapseTarget> computed;
  bool ok = false;
  std::string message;
};

struct AuditReport {
  std::vector<AuditLine> lines;
  std::vector<std::string> data_only;  // super rows, not auditable
  std::vector<std::string> notes;
  bool all_ok() const;
};

AuditReport collapsing_audit();

}  // namespace klcalc
