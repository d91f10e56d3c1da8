#include <gtest/gtest.h>

#include "../support.hpp"
#include "klcalc/audit.hpp"

using namespace klcalc;
using testing_support::realization;

namespace {

std::string failures(const CheckReport& r) {
  std::string s = r.subject + ": " + std::to_string(r.failure_count) + " failures";
  for (const auto& f : r.failures) s += "\n  " + f.check + ": " + f.detail;
  return s;
}

struct Case {
  RootType type;
  int rank;
  StructureSource source;
};

}  // namespace

class ExhaustiveJacobi : public ::testing::TestWithParam<Case> {};

TEST_P(ExhaustiveJacobi, AllTriples) {
  const auto [type, rank, source] = GetParam();
  const LieRealization L = build_realization(build_root_system(type, rank), source);
  const CheckReport r = audit_brackets_exhaustive(L);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_GE(r.checked, L.dim() * L.dim() * L.dim());
  EXPECT_TRUE(r.ok()) << failures(r);
}

INSTANTIATE_TEST_SUITE_P(
    RankAtMostFour, ExhaustiveJacobi,
    ::testing::Values(Case{RootType::A, 1, StructureSource::Matrix}, Case{RootType::A, 2, StructureSource::Matrix},
                      Case{RootType::A, 3, StructureSource::Matrix}, Case{RootType::A, 4, StructureSource::Matrix},
                      Case{RootType::B, 2, StructureSource::Matrix}, Case{RootType::B, 3, StructureSource::Matrix},
                      Case{RootType::B, 4, StructureSource::Matrix}, Case{RootType::C, 2, StructureSource::Matrix},
                      Case{RootType::C, 3, StructureSource::Matrix}, Case{RootType::C, 4, StructureSource::Matrix},
                      Case{RootType::D, 4, StructureSource::Matrix}, Case{RootType::D, 4, StructureSource::Cocycle},
                      Case{RootType::D, 4, StructureSource::Chevalley}, Case{RootType::B, 3, StructureSource::Chevalley},
                      Case{RootType::A, 3, StructureSource::Cocycle}, Case{RootType::G, 2, StructureSource::Chevalley},
                      Case{RootType::F, 4, StructureSource::Chevalley}));

TEST(RandomJacobi, Exceptional) {
  for (int r : {6, 7, 8}) {
    const LieRealization L = realization(RootType::E, r);
    const CheckReport rep = audit_brackets_random(L, 10000, 20240601u + r);
    EXPECT_FALSE(rep.exhaustive);
    EXPECT_TRUE(rep.ok()) << failures(rep);
  }
}

TEST(RandomJacobi, LargerClassical) {
  for (auto [t, r] : {std::pair{RootType::D, 6}, std::pair{RootType::B, 5}, std::pair{RootType::D, 8}}) {
    const CheckReport rep = audit_brackets(realization(t, r), 7);
    EXPECT_TRUE(rep.ok()) << failures(rep);
  }
}

TEST(Realization, BasisLayoutAndForm) {
  const LieRealization L = realization(RootType::D, 5);
  const RootSystem& rs = L.root_system();
  EXPECT_EQ(L.dim(), 45u);
  EXPECT_EQ(L.rank(), 5u);
  for (std::size_t r = 0; r < rs.roots().size(); ++r) {
    const std::size_t i = L.basis_of_root(r), j = L.basis_of_root(rs.negative_of(r));
    EXPECT_EQ(L.weight(i), rs.roots()[r]);
    EXPECT_EQ(L.form(i, j), L.coroot_scale(r));
    EXPECT_EQ(L.bracket(i, j), L.cartan_element(rs.roots()[r]).scaled(L.coroot_scale(r)));
    EXPECT_EQ(*L.index_of_label(L.label(i)), i);
  }
  EXPECT_EQ(L.label(2), "h:3");
  EXPECT_THROW(L.root_vector(Rational(2) * rs.theta()), std::invalid_argument);
}

TEST(Realization, CartanElementDuality) {
  const LieRealization L = realization(RootType::B, 4);
  const RootSystem& rs = L.root_system();
  for (const auto& v : rs.roots()) {
    const LieElement h = L.cartan_element(v);
    EXPECT_EQ(L.cartan_vector(h), v);
    for (std::size_t r = 0; r < rs.roots().size(); ++r) {
      // [h, e_beta] = (beta | v) e_beta
      const std::size_t b = L.basis_of_root(r);
      EXPECT_EQ(L.bracket(h, SparseVector::unit(b)), SparseVector::unit(b, rs.form(rs.roots()[r], v)));
    }
  }
}

TEST(Automorphism, DynkinFlip) {
  for (int r : {4, 5, 6}) {
    const LieRealization L = realization(RootType::D, r);
    const LieAutomorphism phi = dynkin_flip(L);
    const CheckReport rep = audit_automorphism(L, phi);
    EXPECT_TRUE(rep.ok()) << failures(rep);
    // order two
    for (std::size_t i = 0; i < L.dim(); ++i) EXPECT_EQ(phi(phi.image(i)), SparseVector::unit(i));
  }
  EXPECT_THROW(dynkin_flip(realization(RootType::B, 4)), std::invalid_argument);
}

TEST(Automorphism, TrialityOnD4) {
  const LieRealization L = realization(RootType::D, 4);
  const CheckReport rep = audit_automorphism(L, diagram_automorphism(L, {2, 1, 3, 0}));
  EXPECT_TRUE(rep.ok()) << failures(rep);
  EXPECT_THROW(diagram_automorphism(L, {1, 0, 2, 3}), std::invalid_argument);
}

TEST(FlipRootVector, StillALieAlgebra) {
  const LieRealization L = realization(RootType::D, 4);
  const Weight a = L.root_system().theta();
  const LieRealization F = flip_root_vector(L, a);
  const CheckReport rep = audit_brackets_exhaustive(F);
  EXPECT_TRUE(rep.ok()) << failures(rep);
  const std::size_t i = L.root_vector(a), j = L.root_vector(-a);
  EXPECT_EQ(F.form(i, j), -L.form(i, j));
  EXPECT_EQ(F.bracket(i, j), L.bracket(i, j).scaled(-1));
  // flipping twice is the identity
  const LieRealization FF = flip_root_vector(F, a);
  for (std::size_t x = 0; x < L.dim(); ++x)
    for (std::size_t y = 0; y < L.dim(); ++y) EXPECT_EQ(FF.bracket(x, y), L.bracket(x, y));
}
