#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "klcalc/linalg.hpp"
#include "klcalc/root_system.hpp"

namespace klcalc {

/// Where the structure constants N_{a,b} come from.
enum class StructureSource {
  Matrix,     // sl(n), so(n) with anti-diagonal form, sp(2n)
  Cocycle,    // bimultiplicative sign cocycle on the root lattice (simply laced)
  Chevalley,  // extraspecial-pair construction (any type)
};

std::string to_string(StructureSource s);

/// Elements of g are sparse vectors over the realization basis.
using LieElement = SparseVector;

/// Explicit bracket table for a simple Lie algebra.
///
/// Basis: indices [0, rank) are the simple coroots h_i; index rank + r is the root vector for
/// root_system().roots()[r]. With c_a defined by [e_a, e_-a] = c_a a#, where a# is the Cartan
/// element dual to a under the normalized form, the form satisfies (e_a|e_-a) = c_a.
class LieRealization {
 public:
  const RootSystem& root_system() const { return rs_; }
  StructureSource source() const { return source_; }
  std::size_t rank() const { return rank_; }
  std::size_t dim() const { return rank_ + rs_.roots().size(); }

  bool is_cartan(std::size_t i) const { return i < rank_; }
  /// Index into root_system().roots(); requires !is_cartan(i).
  std::size_t root_of(std::size_t i) const { return i - rank_; }
  std::size_t basis_of_root(std::size_t root) const { return rank_ + root; }
  std::optional<std::size_t> basis_of_weight(const Weight& root) const;
  /// Throws std::invalid_argument if w is not a root.
  std::size_t root_vector(const Weight& w) const;
  /// Zero for Cartan elements.
  const Weight& weight(std::size_t i) const;

  /// "h:3" for the third simple coroot, the root's coordinate string otherwise.
  std::string label(std::size_t i) const;
  std::optional<std::size_t> index_of_label(const std::string& label) const;

  const LieElement& bracket(std::size_t i, std::size_t j) const;
  LieElement bracket(const LieElement& a, const LieElement& b) const;
  Rational form(std::size_t i, std::size_t j) const;
  Rational form(const LieElement& a, const LieElement& b) const;

  /// The scalar c_a for the root with index `root`.
  const Rational& coroot_scale(std::size_t root) const { return c_[root]; }
  /// Cartan element h with beta(h) = (beta | v) for all roots beta; v must lie in the root span.
  LieElement cartan_element(const Weight& v) const;
  /// Inverse of cartan_element on the Cartan subalgebra.
  Weight cartan_vector(const LieElement& h) const;

 private:
  friend LieRealization build_realization(const RootSystem&, StructureSource);
  friend LieRealization flip_root_vector(const LieRealization&, const Weight&);

  static std::uint64_t key(std::size_t i, std::size_t j) {
    return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint64_t>(j);
  }

  RootSystem rs_;
  StructureSource source_ = StructureSource::Matrix;
  std::size_t rank_ = 0;
  std::vector<Rational> c_;
  std::unordered_map<std::uint64_t, LieElement> table_;  // nonzero brackets only
  std::vector<std::vector<Rational>> cartan_gram_;
  std::vector<Weight> coroots_;
  Weight zero_;
  std::unordered_map<std::string, std::size_t> labels_;
};

/// Default source: Matrix for A/B/C/D, Cocycle for E, Chevalley for F and G.
StructureSource default_source(RootType t);
LieRealization build_realization(const RootSystem& rs, StructureSource source);
inline LieRealization build_realization(const RootSystem& rs) {
  return build_realization(rs, default_source(rs.type()));
}

/// The same algebra with the root vector of `root` replaced by its negative.
LieRealization flip_root_vector(const LieRealization& L, const Weight& root);

/// Linear map of g given on basis vectors.
class LieAutomorphism {
 public:
  explicit LieAutomorphism(std::vector<LieElement> images) : images_(std::move(images)) {}
  const LieElement& image(std::size_t i) const { return images_.at(i); }
  LieElement operator()(const LieElement& a) const;
  std::size_t size() const { return images_.size(); }

 private:
  std::vector<LieElement> images_;
};

/// Extends a permutation of the simple roots (0-based, must preserve the Cartan matrix) to g.
LieAutomorphism diagram_automorphism(const LieRealization& L, const std::vector<std::size_t>& perm);
/// Type D: swaps the two fork roots, i.e. eps_r -> -eps_r. Throws for other types.
LieAutomorphism dynkin_flip(const LieRealization& L);

}  // namespace klcalc
