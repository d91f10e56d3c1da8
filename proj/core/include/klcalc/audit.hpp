#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "klcalc/affine_pbw.hpp"

namespace klcalc {

struct AuditFailure {
  std::string check;  // "jacobi", "invariance", "antisymmetry", "form-symmetry", "weight", ...
  std::string detail;
};

struct CheckReport {
  std::string subject;
  std::size_t checked = 0;
  bool exhaustive = false;
  std::vector<AuditFailure> failures;  // at most kMaxFailures are kept
  std::size_t failure_count = 0;
  bool ok() const { return failure_count == 0; }
};

inline constexpr std::size_t kMaxFailures = 16;

/// Antisymmetry, form symmetry and weight compatibility on all pairs; Jacobi and invariance
/// ([a,b]|c) = -(b|[a,c]) on all triples.
CheckReport audit_brackets_exhaustive(const LieRealization& L);
/// Pair checks on all pairs, triple checks on `count` random triples.
CheckReport audit_brackets_random(const LieRealization& L, std::size_t count, std::uint64_t seed);
/// Exhaustive when dim <= exhaustive_dim, random otherwise.
CheckReport audit_brackets(const LieRealization& L, std::uint64_t seed, std::size_t count = 10000,
                           std::size_t exhaustive_dim = 80);

/// phi([a,b]) = [phi a, phi b] and (phi a | phi b) = (a | b) on all basis pairs.
CheckReport audit_automorphism(const LieRealization& L, const LieAutomorphism& phi);

/// x(m) shifts weight by wt(x) and degree by -m, and the output stays normal ordered,
/// on `count` random (generator, monomial) pairs.
CheckReport audit_grading_shifts(const LieRealization& L, const Rational& level, std::size_t count,
                                 std::uint64_t seed);
/// x(m) y(n) v - y(n) x(m) v = [x,y](m+n) v + m delta_{m+n,0} k (x|y) v on `count` random cases.
CheckReport audit_commutators(const LieRealization& L, const Rational& level, std::size_t count,
                              std::uint64_t seed);
/// x(m) (a v + b w) = a x(m) v + b x(m) w on `count` random cases.
CheckReport audit_linearity(const LieRealization& L, const Rational& level, std::size_t count, std::uint64_t seed);

}  // namespace klcalc
