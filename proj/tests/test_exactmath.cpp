#include <random>
#include <gtest/gtest.h>
#include "wellpoised/exactmath.hpp"

using namespace wp;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST(Rationals, ParsesFractionsAndIntegers) {
  EXPECT_EQ(exact::parse_rational("6/5"), Rational(6, 5));
  EXPECT_EQ(exact::parse_rational("-4/6"), Rational(-2, 3));
  EXPECT_EQ(exact::parse_rational(" 12 "), Rational(12));
  EXPECT_EQ(exact::to_string(Rational(-1, 2)), "-1/2");
  EXPECT_EQ(exact::to_string(Rational(10, 5)), "2");
}

TEST(Rationals, RejectsGarbage) {
  for (const char* bad : {"", "1/0", "x", "1.5", "3/", "/2"}) {
    try {
      exact::parse_rational(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::Parse) << bad;
    }
  }
}

TEST(Rationals, FloorAndCeilRoundTowardInfinities) {
  EXPECT_EQ(exact::floor(Rational(-1, 2)), -1);
  EXPECT_EQ(exact::ceil(Rational(-1, 2)), 0);
  EXPECT_EQ(exact::floor(Rational(7, 3)), 2);
  EXPECT_EQ(exact::ceil(Rational(7, 3)), 3);
  EXPECT_EQ(exact::floor(Rational(-4)), -4);
}

TEST(Vectors, PrimitiveDividesByContent) {
  EXPECT_EQ(exact::primitive(exact::int_vec({4, -6, 10})), exact::int_vec({2, -3, 5}));
  RatVec q{Rational(1, 2), Rational(-1, 3)};
  EXPECT_EQ(exact::primitive(q), exact::int_vec({3, -2}));
}

TEST(Matrices, DeterminantOfKnownMatrices) {
  EXPECT_EQ(exact::determinant(IntMatrix{{2, 1}, {7, 4}}), 1);
  EXPECT_EQ(exact::determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), 0);
  EXPECT_EQ(exact::determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
}

TEST(Matrices, RankAndNullspace) {
  std::vector<RatVec> rows{exact::rat_vec({1, 2, 3}), exact::rat_vec({2, 4, 6}), exact::rat_vec({0, 1, 1})};
  EXPECT_EQ(exact::rank(rows), 2u);
  auto ns = exact::nullspace(rows, 3);
  ASSERT_EQ(ns.size(), 1u);
  for (const auto& r : rows) EXPECT_EQ(exact::dot(r, ns[0]), 0);
}

TEST(SmithForm, PropertyOnRandomMatrices) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    auto a = random_matrix(rng, r, c, 6);
    auto s = exact::smith_normal_form(a);
    EXPECT_EQ(s.u * a * s.v, s.d);
    EXPECT_EQ(abs(exact::determinant(s.u)), 1);
    EXPECT_EQ(abs(exact::determinant(s.v)), 1);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) { EXPECT_EQ(s.d(i, j), 0); }
    for (std::size_t i = 0; i + 1 < std::min(r, c); ++i) {
      if (s.d(i + 1, i + 1) == 0) continue;
      EXPECT_GT(s.d(i, i), 0);
      EXPECT_EQ(s.d(i + 1, i + 1) % s.d(i, i), 0);
    }
  }
}

TEST(HermiteForm, PropertyOnRandomMatrices) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, 6);
    auto h = exact::hermite_normal_form(a);
    EXPECT_EQ(h.u * a, h.h);
    EXPECT_EQ(abs(exact::determinant(h.u)), 1);
    std::size_t last = 0;
    bool first = true;
    for (std::size_t i = 0; i < h.h.rows(); ++i) {
      IntVec row = h.h.row(i);
      auto it = std::find_if(row.begin(), row.end(), [](const Int& x) { return x != 0; });
      if (it == row.end()) continue;
      std::size_t p = static_cast<std::size_t>(it - row.begin());
      EXPECT_GT(*it, 0);
      if (!first) { EXPECT_GT(p, last); }
      for (std::size_t k = 0; k < i; ++k) {
        EXPECT_GE(h.h(k, p), 0);
        EXPECT_LT(h.h(k, p), *it);
      }
      last = p;
      first = false;
    }
  }
}

TEST(KernelLattice, IsSaturatedAndAnnihilated) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_matrix(rng, 1 + rng() % 3, 2 + rng() % 3, 5);
    auto k = exact::kernel_lattice(a);
    EXPECT_EQ(k.size(), a.cols() - exact::rank(a));
    for (const auto& v : k) EXPECT_TRUE(exact::is_zero(a.apply(v)));
    EXPECT_TRUE(exact::is_saturated(k, a.cols()));
  }
}

TEST(KernelLattice, SaturationDetectsTorsion) {
  EXPECT_FALSE(exact::is_saturated({exact::int_vec({2, -2})}, 2));
  EXPECT_TRUE(exact::is_saturated({exact::int_vec({2, -3})}, 2));
}

TEST(Matrices, UnimodularInverse) {
  IntMatrix a{{2, 1}, {7, 4}};
  EXPECT_TRUE((a * exact::unimodular_inverse(a)).is_identity());
  EXPECT_THROW(exact::unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), Error);
}

TEST(Matrices, ShapeErrors) {
  EXPECT_THROW(IntMatrix::from_rows({exact::int_vec({1, 2}), exact::int_vec({1})}, 2), Error);
  EXPECT_THROW(IntMatrix(2, 2, {Int(1)}), Error);
}
