#include <random>
#include <gtest/gtest.h>
#include "fixtures.hpp"
#include "oracles.hpp"
#include "wellpoised/semicanonical.hpp"

using namespace wp;

namespace {

const std::vector<std::string> X{"X1", "X2", "X3"};

PolynomialIdeal J(const std::string& g) { return fixtures::ideal(X, {g}); }

// Up to the signs of the coefficients.
bool same_up_to_signs(const PolynomialIdeal& a, const std::string& g) {
  auto basis = reduced_basis(a);
  if (basis.size() != 1) return false;
  auto p = parse_polynomial(g, X);
  if (basis[0].size() != p.size()) return false;
  for (const auto& [e, c] : p.terms())
    if (basis[0].coefficient(e) == 0) return false;
  return true;
}

class Elliptic : public ::testing::Test {
 protected:
  PolyhedralDivisorSpec spec = fixtures::elliptic();
  SemiCanonicalPresentation pres = semicanonical_presentation(spec);
  std::vector<Polynomial> gens{fixtures::elliptic_curve()};
};

}  // namespace

TEST_F(Elliptic, CoordinatesInDescendingOrder) {
  std::vector<IntVec> want{exact::int_vec({8, 10, 15}), exact::int_vec({5, 7, 10}), exact::int_vec({3, 4, 6})};
  EXPECT_EQ(pres.coordinates, want);
  EXPECT_EQ(pres.variables, X);
}

TEST_F(Elliptic, PresentationIsOneRelation) {
  EXPECT_TRUE(ideal_equals(pres.ideal, J("X1^2*X3^10 - X2^6*X3^5 + X1^6")));
}

TEST_F(Elliptic, WeightFromTheFirstRay) {
  auto r = cone_lift_check(spec, pres, gens, exact::rat_vec({2, 1, 0}));
  EXPECT_EQ(r.lifted_weight, exact::rat_vec({26, 17, 10}));
  EXPECT_TRUE(ideal_equals(r.base_initial, fixtures::ideal(spec.base_variables, {"t1 - t2^2"})));
  EXPECT_TRUE(ideal_equals(r.initial, J("X1^2*X3^10 - X2^6*X3^5")));
  EXPECT_TRUE(ideal_equals(r.degenerate, J("X1^2*X3^5 - X2^6")));
  EXPECT_FALSE(r.condition_degree_polyhedra);
  EXPECT_FALSE(r.ideals_equal);
  EXPECT_EQ(r.initial_prime, Tri::False);
}

TEST_F(Elliptic, WeightFromTheSecondRay) {
  auto r = cone_lift_check(spec, pres, gens, exact::rat_vec({0, 1, 0}));
  EXPECT_EQ(r.condition_irreducible, Tri::False);
  EXPECT_TRUE(same_up_to_signs(r.initial, "X1^2*X3^10 - X1^6"));
  EXPECT_TRUE(same_up_to_signs(r.degenerate, "X3^10 - X1^4"));
  EXPECT_FALSE(r.ideals_equal);
  EXPECT_EQ(r.initial_prime, Tri::False);
}

TEST_F(Elliptic, WeightFromTheThirdRay) {
  auto r = cone_lift_check(spec, pres, gens, exact::rat_vec({-2, -3, 0}));
  EXPECT_TRUE(ideal_equals(r.initial, J("X2^6*X3^5 - X1^6")));
  EXPECT_TRUE(ideal_equals(r.degenerate, J("X2^6*X3^5 - X1^6")));
  EXPECT_TRUE(r.conditions_hold());
  EXPECT_TRUE(r.ideals_equal);
  EXPECT_TRUE(r.prime_certified);
}

TEST_F(Elliptic, ParallelChecksMatchSerial) {
  std::vector<RatVec> ws{exact::rat_vec({2, 1, 0}), exact::rat_vec({0, 1, 0}), exact::rat_vec({-2, -3, 0})};
  auto serial = cone_lift_checks(spec, pres, gens, ws, 1);
  auto threaded = cone_lift_checks(spec, pres, gens, ws, 3);
  ASSERT_EQ(serial.size(), threaded.size());
  for (std::size_t i = 0; i < ws.size(); ++i) {
    EXPECT_EQ(serial[i].lifted_weight, threaded[i].lifted_weight);
    EXPECT_EQ(reduced_basis(serial[i].initial), reduced_basis(threaded[i].initial));
    EXPECT_EQ(serial[i].prime_certified, threaded[i].prime_certified);
  }
}

TEST_F(Elliptic, GeneratingSetMatchesElimination) {
  auto set = generating_set(spec, gens);
  EXPECT_FALSE(set.elements.empty());
  EXPECT_TRUE(ideal_equals(generating_set_ideal(pres, set), pres.ideal));
}

TEST_F(Elliptic, DegreePolyhedronMembership) {
  auto res = oracle::check_degree_polyhedron(spec, gens[0], 5, 100);
  EXPECT_EQ(res.agree, res.points);
  EXPECT_GT(res.inside, 0u);
}

TEST_F(Elliptic, DecomposeWritesPointsInTheBasis) {
  int hits = 0;
  for (long u = 0; u <= 60; ++u)
    for (long a = 0; a <= 40; ++a)
      for (long b = 0; b <= 45; ++b) {
        IntVec p{Int(a), Int(b), Int(u)};
        if (!in_delta_dual(spec, p)) continue;
        ++hits;
        auto e = decompose(pres, p);
        IntVec sum(3, Int(0));
        for (std::size_t k = 0; k < e.size(); ++k) sum = exact::add(sum, exact::scale(pres.coordinates[k], Int(e[k])));
        EXPECT_EQ(sum, p);
      }
  EXPECT_GT(hits, 10);
}

TEST_F(Elliptic, LiftedWeightPairsWithCoordinates) {
  RatVec w = exact::rat_vec({3, -1, 2});
  auto lifted = lift_weight(pres, w);
  for (std::size_t k = 0; k < pres.coordinates.size(); ++k) EXPECT_EQ(lifted[k], exact::dot(pres.coordinates[k], w));
}

TEST_F(Elliptic, DegenerateBaseOutsideTheTropicalCurve) {
  try {
    degenerate_base(spec, exact::rat_vec({1, 1, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MonomialInInitial);
  }
}

TEST_F(Elliptic, MatrixValuationOnAPrimeCone) {
  // Both rows sit in the prime cone of the third ray, so in_M(J) has no
  // monomials: every monomial X^a has value M·a, and a binomial of J's
  // initial form is pushed up to the value of the remaining term.
  std::vector<RatVec> rows{lift_weight(pres, exact::rat_vec({-2, -3, 0})), exact::rat_vec({15, 10, 6})};
  auto value_of = [&](const Exponent& a) {
    RatVec out;
    for (const auto& r : rows) {
      Rational s = 0;
      for (std::size_t i = 0; i < a.size(); ++i) s += r[i] * a[i];
      out.push_back(s);
    }
    return out;
  };
  std::mt19937 rng(12);
  for (int i = 0; i < 30; ++i) {
    Exponent a{long(rng() % 7), long(rng() % 7), long(rng() % 11)};
    auto v = matrix_valuation(pres, rows, Polynomial::monomial(a));
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(*v, value_of(a));
  }
  auto v = matrix_valuation(pres, rows, parse_polynomial("X1^6 - X2^6*X3^5", X));
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(*v, value_of({2, 0, 10}));
  EXPECT_GT(*v, value_of({6, 0, 0}));
  EXPECT_FALSE(matrix_valuation(pres, rows, Polynomial(3)).has_value());
  EXPECT_FALSE(matrix_valuation(pres, rows, parse_polynomial("X1^2*X3^10 - X2^6*X3^5 + X1^6", X)).has_value());
}

TEST_F(Elliptic, MatrixValuationNeedsIndependentRows) {
  try {
    matrix_valuation(pres, {exact::rat_vec({1, 1, 1}), exact::rat_vec({2, 2, 2})}, parse_polynomial("X1", X));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFullRank);
  }
}

TEST(DivisorSpecs, RejectWrongCoefficientCount) {
  try {
    make_divisor_spec(fixtures::elliptic_names(), {fixtures::elliptic_curve()},
                      {SigmaPolyhedron::ray_from(Rational(1))});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(DivisorSpecs, RejectImproperDivisor) {
  // total degree −1 + 0 + 0 < 0 leaves the tail
  auto h = [](long p) { return SigmaPolyhedron::ray_from(Rational(p)); };
  try {
    make_divisor_spec(fixtures::elliptic_names(), {fixtures::elliptic_curve()}, {h(-1), h(0), h(0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ImproperDivisor);
  }
}

TEST(DivisorSpecs, RejectMixedTails) {
  auto h = SigmaPolyhedron::ray_from(Rational(1));
  SigmaPolyhedron other(1, {exact::rat_vec({0})}, RationalCone::zero(1));
  try {
    make_divisor_spec(fixtures::elliptic_names(), {fixtures::elliptic_curve()}, {h, h, other});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TailMismatch);
  }
}

TEST(GeneratingSets, RejectNonGroebnerInput) {
  auto spec = fixtures::elliptic();
  try {
    generating_set(spec, {fixtures::elliptic_curve() * parse_polynomial("t1 + 1", fixtures::elliptic_names())});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotGroebner);
  }
}

TEST(ToricCase, ZeroBaseGivesToricIdeal) {
  // m = 0: one coefficient, δ = σ and J is the toric ideal of σ∨.
  RationalCone tail(2, {exact::int_vec({1, 0}), exact::int_vec({1, 2})});
  auto spec = make_divisor_spec({}, {}, {SigmaPolyhedron(2, {exact::rat_vec({0, 0})}, tail)});
  auto pres = semicanonical_presentation(spec);
  EXPECT_EQ(pres.coordinates.size(), 3u);
  EXPECT_EQ(reduced_basis(pres.ideal).size(), 1u);
  EXPECT_EQ(is_binomial_prime(pres.ideal).verdict, Certificate::Prime);
}
