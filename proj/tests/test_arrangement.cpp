#include <gtest/gtest.h>
#include "fixtures.hpp"
#include "oracles.hpp"
#include "wellpoised/arrangement.hpp"

using namespace wp;

namespace {

ArrangementSpec arrangement(const std::vector<std::string>& vars, const std::vector<std::string>& forms,
                            std::vector<SigmaPolyhedron> coeffs) {
  ArrangementSpec a;
  a.form_variables = vars;
  for (const auto& f : forms) a.forms.push_back(parse_polynomial(f, vars));
  a.coefficients = std::move(coeffs);
  return a;
}

SigmaPolyhedron half_line(long p, long q = 1) { return SigmaPolyhedron::ray_from(Rational(p, q)); }

ArrangementSpec uniform35() {
  std::vector<SigmaPolyhedron> c{half_line(1)};
  for (int i = 0; i < 4; ++i) c.push_back(half_line(0));
  return arrangement({"x0", "x1", "x2"}, {"x0", "x1", "x2", "x0 + x1 + x2", "x0 + 2*x1 + 3*x2"}, c);
}

}  // namespace

TEST(E8, OneRelationWithExponentsTwoThreeFive) {
  auto data = arrangement_to_divisor(fixtures::e8());
  auto pres = semicanonical_presentation(data.divisor);
  auto basis = reduced_basis(pres.ideal);
  ASSERT_EQ(basis.size(), 1u);
  std::multiset<long> exps;
  for (const auto& [e, c] : basis[0].terms()) {
    long nonzero = 0;
    for (auto x : e)
      if (x != 0) nonzero = x, exps.insert(x);
    EXPECT_NE(nonzero, 0);
  }
  EXPECT_EQ(exps, (std::multiset<long>{2, 3, 5}));
}

TEST(E8, BergmanFanOfThreePointsOnALine) {
  auto cones = bergman_cones(fixtures::e8());
  auto top = maximal_cones(cones);
  EXPECT_EQ(top.size(), 3u);
  for (const auto& c : top) EXPECT_EQ(c.dimension, 1u);
}

TEST(E8, EveryConeIsPrime) {
  auto w = verify_well_poised(fixtures::e8());
  EXPECT_TRUE(w.all_certified);
  for (const auto& r : w.reports) EXPECT_TRUE(r.ideals_equal);
}

TEST(E8, ParallelVerificationIsIdentical) {
  auto a = verify_well_poised(fixtures::e8(), 1);
  auto b = verify_well_poised(fixtures::e8(), 4);
  ASSERT_EQ(a.reports.size(), b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    EXPECT_EQ(a.cones[i].representative, b.cones[i].representative);
    EXPECT_EQ(reduced_basis(a.reports[i].initial), reduced_basis(b.reports[i].initial));
  }
}

TEST(E8, DegenerationsAreNotNormal) {
  auto a = fixtures::e8();
  for (std::vector<std::size_t> I : {std::vector<std::size_t>{0, 1}, {0, 2}, {1, 2}}) {
    auto r = is_saturated(a, I);
    EXPECT_FALSE(r.admissable);
    EXPECT_TRUE(r.witness.has_value());
  }
  EXPECT_FALSE(cm_sufficient(a).sufficient);
}

TEST(E8, GeneratingSetMatchesElimination) {
  auto data = arrangement_to_divisor(fixtures::e8());
  auto pres = semicanonical_presentation(data.divisor);
  auto set = generating_set(data.divisor, data.circuits);
  EXPECT_TRUE(ideal_equals(generating_set_ideal(pres, set), pres.ideal));
}

TEST(E8, DegreePolyhedronMembership) {
  auto data = arrangement_to_divisor(fixtures::e8());
  for (const auto& g : data.circuits) {
    auto res = oracle::check_degree_polyhedron(data.divisor, g, 5, 100);
    EXPECT_EQ(res.agree, res.points);
  }
}

TEST(ValueSemigroups, AgreeWithProjectionOracle) {
  auto a = fixtures::e8();
  for (std::vector<std::size_t> I : {std::vector<std::size_t>{0, 1}, {0, 2}, {1, 2}}) {
    auto res = oracle::check_value_semigroup(a, I, 8);
    EXPECT_EQ(res.disagreements, 0u);
    EXPECT_GT(res.projected, 0u);
    EXPECT_GT(res.candidates, 0u);
  }
}

TEST(ValueSemigroups, IntegralCoefficientsAreSaturated) {
  auto a = arrangement({"x", "y"}, {"x", "y", "x + y"}, {half_line(1), half_line(0), half_line(0)});
  for (std::vector<std::size_t> I : {std::vector<std::size_t>{0, 1}, {0, 2}, {1, 2}}) {
    EXPECT_TRUE(is_saturated(a, I).admissable);
    auto res = oracle::check_value_semigroup(a, I, 6);
    EXPECT_EQ(res.disagreements, 0u);
  }
  EXPECT_TRUE(cm_sufficient(a).sufficient);
}

TEST(ValueSemigroups, NeedGenericForms) {
  auto a = arrangement({"x", "y"}, {"x", "y", "x", "x + y"},
                       {half_line(1), half_line(0), half_line(0), half_line(0)});
  EXPECT_FALSE(is_generic(a));
  try {
    value_semigroup(a, {0, 1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotGeneric);
  }
}

TEST(ValueSemigroups, IndexSetSizeIsChecked) {
  try {
    value_semigroup(fixtures::e8(), {0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
  }
}

TEST(NokCones, ContainEveryProjectedValue) {
  auto a = fixtures::e8();
  std::vector<std::size_t> I{0, 1};
  auto cone = nok_cone(a, I);
  auto S = value_semigroup(a, I);
  for (long u = 0; u <= 12; ++u)
    for (long v = -12; v <= 12; ++v)
      if (S.contains(exact::int_vec({v}), exact::int_vec({u}))) {
        EXPECT_TRUE(cone.contains(exact::int_vec({v, u})));
      }
}

TEST(LinearityRegions, OneRegionForHalfLines) {
  auto regions = linearity_regions(fixtures::e8().coefficients);
  ASSERT_EQ(regions.size(), 1u);
  EXPECT_EQ(regions[0].vertices.size(), 3u);
}

TEST(Bergman, UniformMatroidOnFiveElements) {
  // Coarse structure of a generic tropical plane in ℙ⁴: the five rays e_i
  // and the ten cones spanned by pairs of them.
  auto cones = bergman_cones(uniform35());
  auto top = maximal_cones(cones);
  EXPECT_EQ(top.size(), 10u);
  std::size_t rays = 0;
  for (const auto& c : cones)
    if (c.dimension == 1) ++rays;
  EXPECT_EQ(rays, 5u);
}

TEST(Bergman, UniformMatroidIsWellPoised) {
  EXPECT_TRUE(verify_well_poised(uniform35()).all_certified);
}

TEST(Bergman, BooleanArrangementIsToric) {
  auto a = arrangement({"x", "y"}, {"x", "y"}, {half_line(1), half_line(0)});
  auto w = verify_well_poised(a);
  EXPECT_TRUE(w.all_certified);
  EXPECT_TRUE(w.presentation.ideal.is_zero() || reduced_basis(w.presentation.ideal).empty());
}

TEST(Arrangements, RankDeficientFormsAreRejected) {
  auto a = arrangement({"x", "y", "z"}, {"x", "y", "x + y"}, {half_line(1), half_line(0), half_line(0)});
  try {
    arrangement_to_divisor(a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankDeficient);
  }
}

TEST(Arrangements, FlatsOfThreePoints) {
  auto flats = arrangement_flats(fixtures::e8());
  // ∅-flat excluded or not, the proper nonempty flats are the three points
  std::size_t singletons = 0;
  for (const auto& f : flats)
    if (f.size() == 1) ++singletons;
  EXPECT_EQ(singletons, 3u);
}
