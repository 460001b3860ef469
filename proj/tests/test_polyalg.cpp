#include <random>
#include <gtest/gtest.h>
#include "fixtures.hpp"
#include "wellpoised/polyalg.hpp"

using namespace wp;
using fixtures::ideal;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};

Polynomial P(const std::string& s, const std::vector<std::string>& names = xyz) { return parse_polynomial(s, names); }

}  // namespace

TEST(Parsing, RoundTripsThroughPrinter) {
  for (const char* s : {"x^2*y - 3*z + 1", "-x + 2/3*y^4", "x*y*z - 1"}) {
    auto p = P(s);
    EXPECT_EQ(P(alg::to_string(p, xyz)), p) << s;
  }
  EXPECT_EQ(P("(x+y)^2"), P("x^2 + 2*x*y + y^2"));
}

TEST(Parsing, ReportsBadInput) {
  for (const char* bad : {"x +", "w", "x^", "2**y", ""}) {
    try {
      P(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::Parse) << bad;
    }
  }
}

TEST(Normalization, ContentOneLeadingPositive) {
  EXPECT_EQ(alg::normalized(P("-4*x^2 + 6*y")), P("2*x^2 - 3*y"));
  EXPECT_EQ(alg::normalized(P("1/2*y - 1/3*x")), P("2*x - 3*y"));
}

TEST(Groebner, TwistedCubicUnderGrevlex) {
  std::vector<std::string> v{"a", "b", "c", "d"};
  auto I = ideal(v, {"a*d - b*c", "a*c - b^2", "b*d - c^2"});
  auto gb = reduced_basis(I);
  EXPECT_EQ(gb.size(), 3u);
  EXPECT_TRUE(ideal_contains(I, P("a*c^2 - b^2*c", v)));
  EXPECT_FALSE(ideal_contains(I, P("a*d", v)));
}

TEST(Groebner, LexEliminates) {
  auto gb = groebner_basis({P("x - y^2"), P("y - z^3")}, TermOrder::lex(3));
  bool found = false;
  for (const auto& g : gb)
    if (g.terms().rbegin()->first[0] == 0 && g.terms().rbegin()->first[1] == 0) found = true;
  EXPECT_FALSE(found);  // no relation in z alone
  EXPECT_EQ(normal_form(P("x - z^6"), gb, TermOrder::lex(3)), Polynomial(3));
}

TEST(Groebner, NormalFormOfMembersIsZero) {
  std::mt19937 rng(4);
  std::vector<Polynomial> gens{P("x^2 - y*z"), P("x*y - z^2 + 1")};
  auto order = TermOrder::grevlex(3);
  auto gb = groebner_basis(gens, order);
  std::vector<Polynomial> monos{P("1"), P("x"), P("y"), P("z"), P("x*z"), P("y^2")};
  for (int i = 0; i < 20; ++i) {
    Polynomial f(3);
    for (const auto& g : gens) f = f + monos[rng() % monos.size()] * g;
    EXPECT_TRUE(normal_form(f, gb, order).is_zero());
  }
}

TEST(Ideals, EqualityIgnoresGenerators) {
  EXPECT_TRUE(ideal_equals(ideal(xyz, {"x", "y"}), ideal(xyz, {"x + y", "x - y"})));
  EXPECT_FALSE(ideal_equals(ideal(xyz, {"x"}), ideal(xyz, {"x^2"})));
  EXPECT_TRUE(is_unit_ideal(ideal(xyz, {"x", "x + 1"})));
}

TEST(InitialForms, MinConvention) {
  // smaller ⟨w, α⟩ wins
  EXPECT_EQ(initial_form(P("x + y"), exact::rat_vec({0, 1, 0})), P("x"));
  EXPECT_EQ(initial_form(P("x + y"), exact::rat_vec({0, 0, 0})), P("x + y"));
  EXPECT_EQ(initial_form(P("y^2 - x^3 - x"), exact::rat_vec({2, 3, 0})), P("-x"));
}

TEST(InitialForms, InitialIdealNeedsTheWholeIdeal) {
  // in_w(⟨x − y, x − z⟩) at w = (0,1,1) contains y − z, which no generator's
  // initial form produces on its own.
  auto I = ideal(xyz, {"x - y", "x - z"});
  auto in = initial_ideal(I, exact::rat_vec({0, 1, 1}));
  EXPECT_TRUE(ideal_contains(in, P("y - z")));
  EXPECT_TRUE(ideal_contains(in, P("x")));
}

TEST(Saturation, RemovesMonomialFactors) {
  auto I = ideal(xyz, {"x*y - x*z"});
  auto sat = saturate(I, all_variables(3));
  EXPECT_TRUE(ideal_equals(sat, ideal(xyz, {"y - z"})));
}

TEST(Kernels, TwistedCubicAsImplicitization) {
  std::vector<std::string> st{"s", "t"};
  std::vector<Polynomial> targets{P("s^3", st), P("s^2*t", st), P("s*t^2", st), P("t^3", st)};
  std::vector<std::string> y{"y0", "y1", "y2", "y3"};
  auto K = algebra_map_kernel(y, targets, {}, 2);
  EXPECT_TRUE(ideal_equals(K, ideal(y, {"y0*y2 - y1^2", "y1*y3 - y2^2", "y0*y3 - y1*y2"})));
}

TEST(Kernels, LaurentTargets) {
  std::vector<std::string> t{"t"};
  auto K = algebra_map_kernel({"a", "b"}, {P("t", t), P("t^-1", t)}, {}, 1);
  EXPECT_TRUE(ideal_equals(K, ideal({"a", "b"}, {"a*b - 1"})));
}

TEST(BinomialPrimality, SaturatedLatticeIsPrime) {
  std::vector<std::string> v{"a", "b", "c", "d"};
  auto r = is_binomial_prime(ideal(v, {"a*d - b*c"}));
  EXPECT_EQ(r.verdict, Certificate::Prime);
  EXPECT_FALSE(r.refuted);
}

TEST(BinomialPrimality, TorsionRefutes) {
  auto r = is_binomial_prime(ideal(xyz, {"x^2 - y^2"}));
  EXPECT_EQ(r.verdict, Certificate::NotCertified);
  EXPECT_TRUE(r.refuted);
}

TEST(BinomialPrimality, MonomialFactorRefutes) {
  std::vector<std::string> X{"X1", "X2", "X3"};
  auto r = is_binomial_prime(ideal(X, {"X1^2*X3^10 - X2^6*X3^5"}));
  EXPECT_EQ(r.verdict, Certificate::NotCertified);
  EXPECT_TRUE(r.refuted);
}

TEST(BinomialPrimality, RejectsTrinomials) {
  try {
    is_binomial_prime(ideal(xyz, {"x + y + z"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotBinomial);
  }
}

TEST(BinomialPrimality, NonUnitCoefficients) {
  // x − 2y is prime; x² − 4y² = (x − 2y)(x + 2y) is not
  EXPECT_EQ(is_binomial_prime(ideal(xyz, {"x - 2*y"})).verdict, Certificate::Prime);
  EXPECT_TRUE(is_binomial_prime(ideal(xyz, {"x^2 - 4*y^2"})).refuted);
}

TEST(ToricIdeals, FromColumns) {
  std::vector<std::string> v{"a", "b", "c"};
  auto T = toric_ideal(v, {exact::int_vec({2, 0}), exact::int_vec({1, 1}), exact::int_vec({0, 2})});
  EXPECT_TRUE(ideal_equals(T, ideal(v, {"a*c - b^2"})));
}

TEST(Circuits, MinimalSupportsOfTheSpan) {
  auto one = circuits({P("x + y - z")});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].size(), 3u);
  auto cs = circuits({P("x - y"), P("y - z")});
  ASSERT_EQ(cs.size(), 3u);
  for (const auto& c : cs) EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(circuits({P("x"), P("x + y")}).size(), 2u);
}

TEST(TropicalHypersurface, PluckerHasThreeMaximalCones) {
  std::vector<std::string> p{"p12", "p13", "p14", "p23", "p24", "p34"};
  auto cones = hypersurface_cones(P("p12*p34 - p13*p24 + p14*p23", p));
  std::size_t binomial = 0, full = 0;
  for (const auto& c : cones) {
    if (c.active.size() == 2) ++binomial;
    if (c.active.size() == 3) ++full;
    EXPECT_EQ(c.lineality.size(), 4u);
  }
  EXPECT_EQ(binomial, 3u);
  EXPECT_EQ(full, 1u);
}
