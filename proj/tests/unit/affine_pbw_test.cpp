#include <gtest/gtest.h>

#include "../support.hpp"
#include "klcalc/audit.hpp"
#include "klcalc/singular.hpp"

using namespace klcalc;
using testing_support::at_level;
using testing_support::realization;

namespace {

std::string failures(const CheckReport& r) {
  std::string s = std::to_string(r.failure_count) + " failures";
  for (const auto& f : r.failures) s += "\n  " + f.check + ": " + f.detail;
  return s;
}

}  // namespace

TEST(Pbw, VacuumIsAnnihilated) {
  const LieRealization L = realization(RootType::A, 2);
  const StateVector vac = StateVector::vacuum(L, Rational(3));
  EXPECT_EQ(vac.size(), 1u);
  EXPECT_EQ(vac.degree(), Rational(0));
  for (std::size_t b = 0; b < L.dim(); ++b)
    for (int m : {0, 1, 2}) EXPECT_TRUE(apply(L, {std::uint32_t(b), m}, vac).is_zero());
}

TEST(Pbw, CentralTerm) {
  const LieRealization L = realization(RootType::D, 4);
  const RootSystem& rs = L.root_system();
  const std::uint32_t e = L.root_vector(rs.theta()), f = L.root_vector(-rs.theta());
  const StateVector v = create(L, Rational(-2), {{e, -1}});
  // e_{-theta}(1) e_theta(-1)|0> = k (e_{-theta}|e_theta)|0>
  const StateVector img = apply(L, {f, 1}, v);
  ASSERT_EQ(img.size(), 1u);
  EXPECT_EQ(img.coefficient({}), Rational(-2) * L.form(f, e));
}

TEST(Pbw, RootVectorIsNotSingular) {
  const LieRealization L = realization(RootType::D, 4);
  const RootSystem& rs = L.root_system();
  const std::uint32_t e = L.root_vector(rs.theta()), f = L.root_vector(-rs.theta());
  const SingularityCheck c = is_singular(L, create(L, Rational(-2), {{e, -1}}));
  ASSERT_FALSE(c.singular);
  ASSERT_TRUE(c.failing && c.witness);
  EXPECT_EQ(*c.failing, (LoopGenerator{f, 1}));
  EXPECT_EQ(c.witness->coefficient({}), Rational(-2) * L.form(f, e));
}

TEST(Pbw, NormalOrderingOfProducts) {
  const LieRealization L = realization(RootType::A, 1);
  const std::uint32_t e = L.root_vector(L.root_system().theta()), f = L.root_vector(-L.root_system().theta());
  // f(-1) e(-1)|0> = e(-1) f(-1)|0> - [e,f](-2)|0>
  const StateVector fe = create(L, Rational(1), {{f, -1}, {e, -1}});
  const StateVector ef = create(L, Rational(1), {{e, -1}, {f, -1}});
  StateVector diff = fe;
  diff -= ef;
  StateVector h = StateVector(Rational(1), diff.weight(), Rational(2));
  for (const auto& [i, c] : L.bracket(e, f).entries()) h.add({{std::uint32_t(i), -2}}, -c);
  EXPECT_EQ(diff, h);
  EXPECT_TRUE(is_homogeneous(L, fe));
}

TEST(Pbw, GradedBasisCountsForSl2) {
  // h(-2), h(-1)h(-1), e(-1)f(-1) in weight zero; e(-2), h(-1)e(-1) in weight theta.
  const LieRealization L = realization(RootType::A, 1);
  const Weight zero(L.root_system().ambient_dim());
  EXPECT_EQ(graded_basis(L, zero, 1).size(), 1u);
  EXPECT_EQ(graded_basis(L, zero, 2).size(), 3u);
  EXPECT_EQ(graded_basis(L, L.root_system().theta(), 1).size(), 1u);
  EXPECT_EQ(graded_basis(L, L.root_system().theta(), 2).size(), 2u);
  EXPECT_THROW(graded_basis(L, zero, 12, 5), CapExceeded);
}

TEST(Pbw, ThetaKernelAtLevelZero) {
  // At k = 0 the vector e_theta(-1)|0> generates the maximal ideal.
  const LieRealization L = realization(RootType::D, 4);
  const auto ker = singular_kernel(L, Rational(0), L.root_system().theta(), 1);
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_EQ(ker[0].size(), 1u);
  EXPECT_TRUE(singular_kernel(L, Rational(-2), L.root_system().theta(), 1).empty());
}

TEST(Pbw, W1OfD4IsSingularOnlyAtMinusTwo) {
  const LieRealization L = realization(RootType::D, 4);
  const StateVector w = build_w1_D(L);
  EXPECT_TRUE(is_singular(L, w).singular);
  EXPECT_FALSE(is_singular(L, at_level(w, Rational(-1))).singular);
  EXPECT_FALSE(is_singular(L, at_level(w, Rational(-3))).singular);
}

TEST(Pbw, Proportionality) {
  const LieRealization L = realization(RootType::D, 4);
  const StateVector w = build_w1_D(L);
  EXPECT_EQ(proportionality(w.scaled(Rational(-3, 2)), w), Rational(-3, 2));
  EXPECT_FALSE(proportionality(w, build_w3_D4(L)).has_value());
}

TEST(Pbw, RaisingOperators) {
  const LieRealization L = realization(RootType::E, 6);
  const auto ops = raising_operators(L);
  ASSERT_EQ(ops.size(), 7u);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(ops[i].mode, 0);
    EXPECT_EQ(L.weight(ops[i].base), L.root_system().simple_roots()[i]);
  }
  EXPECT_EQ(ops[6].mode, 1);
  EXPECT_EQ(L.weight(ops[6].base), -L.root_system().theta());
}

class ActionAudits : public ::testing::TestWithParam<std::pair<RootType, int>> {};

TEST_P(ActionAudits, GradingShiftsAndCommutators) {
  const auto [t, r] = GetParam();
  const LieRealization L = realization(t, r);
  const Rational k(-3, 2);
  const CheckReport g = audit_grading_shifts(L, k, 1000, 11);
  EXPECT_EQ(g.checked, 1000u);
  EXPECT_TRUE(g.ok()) << failures(g);
  const CheckReport c = audit_commutators(L, k, 1000, 12);
  EXPECT_TRUE(c.ok()) << failures(c);
  const CheckReport lin = audit_linearity(L, k, 200, 13);
  EXPECT_TRUE(lin.ok()) << failures(lin);
}

INSTANTIATE_TEST_SUITE_P(Algebras, ActionAudits,
                         ::testing::Values(std::pair{RootType::A, 2}, std::pair{RootType::B, 3},
                                           std::pair{RootType::C, 3}, std::pair{RootType::D, 4},
                                           std::pair{RootType::G, 2}, std::pair{RootType::F, 4},
                                           std::pair{RootType::E, 6}, std::pair{RootType::E, 7}));
