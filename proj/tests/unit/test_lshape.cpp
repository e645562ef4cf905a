#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "denum/errors.hpp"
#include "denum/lshape.hpp"

using namespace denum;

namespace {

Semigroup3 sg(std::int64_t a, std::int64_t b, std::int64_t c) { return Semigroup3::make(a, b, c); }

LShape shape(const Semigroup3& T, std::int64_t l, std::int64_t h, std::int64_t w, std::int64_t y) {
  return LShape::make(l, h, w, y, T);
}

std::vector<LShape> sorted(std::vector<LShape> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(LShape, ValidateExamples) {
  const Semigroup3 T = sg(5, 7, 11);
  const LShape L = shape(T, 5, 3, 2, 2);
  EXPECT_EQ(L.delta, 1);
  EXPECT_EQ(L.theta, 1);
  EXPECT_TRUE(validate_lshape(L, T));
  EXPECT_TRUE(validate_lshape(shape(sg(7, 11, 18), 12, 7, 11, 6), sg(7, 11, 18)));
  LShape bad = L;
  bad.l = 4;
  EXPECT_FALSE(validate_lshape(bad, T));
  EXPECT_EQ(L.to_string(), "L(5,3,2,2)");
}

TEST(LShape, Membership) {
  const LShape L = shape(sg(5, 7, 11), 5, 3, 2, 2);
  EXPECT_TRUE(L.contains(0, 0));
  EXPECT_TRUE(L.contains(4, 0));
  EXPECT_TRUE(L.contains(2, 2));
  EXPECT_FALSE(L.contains(3, 1));
  EXPECT_FALSE(L.contains(5, 0));
  EXPECT_FALSE(L.contains(0, 3));
  EXPECT_FALSE(L.contains(-1, 0));
  int cells = 0;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 4; ++j) cells += L.contains(i, j);
  }
  EXPECT_EQ(cells, 11);
}

TEST(LShape, ComputeExamples) {
  EXPECT_EQ(compute_lshapes(sg(5, 7, 11)), (std::vector<LShape>{shape(sg(5, 7, 11), 5, 3, 2, 2)}));
  const Semigroup3 T2 = sg(7, 11, 18);
  const auto two = compute_lshapes(T2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0], shape(T2, 12, 7, 11, 6));
  EXPECT_EQ(two[0].delta, 1);
  EXPECT_EQ(two[0].theta, 0);
  EXPECT_EQ(two[1], shape(T2, 11, 8, 10, 7));
  EXPECT_EQ(two[1].delta, 0);
  EXPECT_EQ(two[1].theta, 1);
  const Semigroup3 T3 = sg(1, 2, 3);
  const auto three = compute_lshapes(T3);
  ASSERT_EQ(three.size(), 2u);
  EXPECT_EQ(three[0], shape(T3, 3, 1, 2, 0));
  EXPECT_EQ(three[1], shape(T3, 2, 2, 1, 1));
  EXPECT_THROW(compute_lshapes(sg(1, 1, 4)), DomainError);
}

TEST(LShape, BruteForceExamples) {
  EXPECT_EQ(mdd_bruteforce(sg(5, 7, 11)), (std::vector<LShape>{shape(sg(5, 7, 11), 5, 3, 2, 2)}));
  EXPECT_EQ(mdd_bruteforce(sg(1, 2, 3)), sorted(compute_lshapes(sg(1, 2, 3))));
  EXPECT_EQ(mdd_bruteforce(sg(7, 11, 18)), sorted(compute_lshapes(sg(7, 11, 18))));
  EXPECT_THROW(mdd_bruteforce(sg(2, 3, 10007), 10000), ResourceError);
}

// Smaller twin of the acceptance check; the full range runs there.
TEST(LShape, MatchesBruteForceUpToC60) {
  for (std::int64_t c = 3; c <= 60; ++c) {
    for (std::int64_t b = 2; b < c; ++b) {
      for (std::int64_t a = 1; a < b; ++a) {
        if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
        const Semigroup3 T = sg(a, b, c);
        const auto got = compute_lshapes(T);
        ASSERT_EQ(sorted(got), mdd_bruteforce(T)) << T.to_string();
        for (const auto& L : got) ASSERT_TRUE(validate_lshape(L, T)) << T.to_string();
        if (T.case_tag() == CaseTag::kCNotInAB) {
          ASSERT_EQ(got.size(), 1u);
          const LShape& L = got[0];
          ASSERT_TRUE(L.w > 0 && L.y > 0 && L.delta > 0 && L.theta > 0);
          ASSERT_TRUE(L.h < T.a() && L.l < T.b()) << T.to_string();
        } else {
          ASSERT_EQ(got.size(), 2u);
        }
      }
    }
  }
}

TEST(LShape, BasicFactorizationExamples) {
  const Semigroup3 T = sg(5, 7, 11);
  const LShape L = shape(T, 5, 3, 2, 2);
  EXPECT_EQ(basic_factorization(87, L, T), (BasicFactorization{2, 0, 7}));
  EXPECT_EQ(basic_factorization(0, L, T), (BasicFactorization{0, 0, 0}));
  EXPECT_FALSE(basic_factorization(4, L, T));
  EXPECT_FALSE(basic_factorization(-3, L, T));
}

// (x0, y0) is the class minimum for every residue, on every L-shape.
TEST(LShape, BasicFactorizationMatchesClassMinima) {
  for (std::int64_t c = 3; c <= 45; ++c) {
    for (std::int64_t b = 2; b < c; ++b) {
      for (std::int64_t a = 1; a < b; ++a) {
        if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
        const Semigroup3 T = sg(a, b, c);
        std::vector<std::int64_t> minimum(static_cast<std::size_t>(c), -1);
        for (std::int64_t s = 0; s < c; ++s) {
          for (std::int64_t t = 0; t < c; ++t) {
            const std::int64_t v = s * a + t * b;
            auto& slot = minimum[static_cast<std::size_t>(v % c)];
            if (slot < 0 || v < slot) slot = v;
          }
        }
        for (const LShape& L : compute_lshapes(T)) {
          const FactorizationSolver solve(L, T);
          for (std::int64_t m = 0; m < 3 * c; ++m) {
            const auto bf = solve(m);
            const std::int64_t M = minimum[static_cast<std::size_t>(m % c)];
            if (m < M) {
              ASSERT_FALSE(bf) << T.to_string() << " m=" << m;
              continue;
            }
            ASSERT_TRUE(bf) << T.to_string() << " m=" << m;
            ASSERT_TRUE(L.contains(bf->x0, bf->y0));
            ASSERT_EQ(bf->x0 * a + bf->y0 * b, M) << T.to_string() << " " << L.to_string();
            ASSERT_EQ(bf->x0 * a + bf->y0 * b + bf->z0 * c, m);
          }
        }
      }
    }
  }
}

TEST(LShape, LargeGeneratorsStayValid) {
  // T1..T4 style triples with k = 30 exercise the big-integer paths.
  const Integer p7 = pow(Integer(7), 30), p11 = pow(Integer(11), 30);
  const std::vector<Semigroup3> triples{
      Semigroup3::make(p7, p11, frobenius_two(p7, p11)), Semigroup3::make(p7, p11, p11 + 1),
      Semigroup3::make(p7, p11, p7 + p11 * p11), Semigroup3::make(p7, p11, p7 + p11),
      Semigroup3::make(1, p7, p11), Semigroup3::make(1, p7, p7 + 1)};
  for (const auto& T : triples) {
    for (const LShape& L : compute_lshapes(T)) {
      ASSERT_TRUE(validate_lshape(L, T)) << T.to_string() << " " << L.to_string();
      const FactorizationSolver solve(L, T);
      const Integer m = T.P() - T.S() - 30;
      const auto bf = solve(m);
      ASSERT_TRUE(bf);
      EXPECT_EQ(bf->x0 * T.a() + bf->y0 * T.b() + bf->z0 * T.c(), m);
    }
  }
}

TEST(LShape, TwoGeneratedHelpers) {
  EXPECT_FALSE(in_two_generated(59, 7, 11));
  EXPECT_TRUE(in_two_generated(60, 7, 11));
  EXPECT_TRUE(in_two_generated(0, 7, 11));
  EXPECT_FALSE(in_two_generated(-1, 7, 11));
  EXPECT_EQ(min_multiple_in(11, 5, 7, 100), Integer(2));
}
