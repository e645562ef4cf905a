#include <gtest/gtest.h>

#include <random>

#include "denum/errors.hpp"
#include "denum/integer.hpp"

using denum::Integer;

namespace {

Integer big(const char* s) { return Integer::from_string(s); }

}  // namespace

TEST(Integer, EgcdExamples) {
  auto e = denum::egcd(12, 8);
  EXPECT_EQ(e.g, 4);
  EXPECT_EQ(e.u, 1);
  EXPECT_EQ(e.v, -1);
  e = denum::egcd(7, 11);
  EXPECT_EQ(e.g, 1);
  EXPECT_EQ(e.u, -3);
  EXPECT_EQ(e.v, 2);
  e = denum::egcd(0, 5);
  EXPECT_EQ(e.g, 5);
  EXPECT_EQ(e.u, 0);
  EXPECT_EQ(e.v, 1);
  EXPECT_THROW(denum::egcd(0, 0), denum::DomainError);
}

TEST(Integer, ModInverseAndReduce) {
  EXPECT_EQ(denum::mod_inverse(2, 3), 2);
  EXPECT_EQ(denum::mod_inverse(11, 7), 2);
  EXPECT_THROW(denum::mod_inverse(4, 6), denum::NotInvertibleError);
  EXPECT_EQ(denum::mod_reduce(-1, 7), 6);
  EXPECT_EQ(denum::mod_reduce(14, 7), 0);
  EXPECT_EQ(denum::mod_reduce(10, 3), 1);
  EXPECT_THROW(denum::mod_reduce(5, 0), denum::DomainError);
  EXPECT_THROW(denum::mod_reduce(5, -3), denum::DomainError);
}

TEST(Integer, FloorAndCeilConventions) {
  EXPECT_EQ(denum::floor_div(-7, 2), -4);
  EXPECT_EQ(denum::floor_mod(-7, 2), 1);
  EXPECT_EQ(denum::floor_div(7, -2), -4);
  EXPECT_EQ(denum::floor_mod(7, -2), -1);
  EXPECT_EQ(denum::ceil_div(-7, 2), -3);
  EXPECT_EQ(denum::ceil_div(7, 2), 4);
  EXPECT_EQ(denum::ceil_div(8, 2), 4);
  EXPECT_THROW(denum::floor_div(1, 0), denum::DomainError);
  EXPECT_THROW(denum::ceil_div(1, -1), denum::DomainError);
}

TEST(Integer, OverflowPromotesToBig) {
  const Integer max = INT64_MAX;
  EXPECT_TRUE(max.is_small());
  const Integer over = max + 1;
  EXPECT_FALSE(over.is_small());
  EXPECT_EQ(over.to_string(), "9223372036854775808");
  EXPECT_TRUE((over - 1).is_small());
  EXPECT_EQ(over - 1, max);
  const Integer min = INT64_MIN;
  EXPECT_EQ((-min).to_string(), "9223372036854775808");
  EXPECT_EQ(denum::floor_div(min, -1).to_string(), "9223372036854775808");
  EXPECT_EQ((max * max).to_string(), "85070591730234615847396907784232501249");
}

TEST(Integer, ParsingAndPrinting) {
  EXPECT_EQ(big("-42"), -42);
  EXPECT_EQ(big("\xE2\x88\x92" "42"), -42);
  EXPECT_EQ(big("000123"), 123);
  const char* huge = "123456789012345678901234567890123456789";
  EXPECT_EQ(big(huge).to_string(), huge);
  EXPECT_EQ(big(huge).decimal_digits(), 39u);
  EXPECT_THROW(big(""), denum::ParseError);
  EXPECT_THROW(big("-"), denum::ParseError);
  EXPECT_THROW(big("1e5"), denum::ParseError);
  EXPECT_THROW(big("12 "), denum::ParseError);
  EXPECT_EQ(Integer(0).bit_length(), 0u);
  EXPECT_EQ(Integer(255).bit_length(), 8u);
}

TEST(Integer, PowAndInt128) {
  EXPECT_EQ(denum::pow(7, 2), 49);
  EXPECT_EQ(denum::pow(11, 20).to_string(), "672749994932560009201");
  const __int128 v = static_cast<__int128>(INT64_MAX) * 1000 + 7;
  EXPECT_EQ(denum::from_int128(v), Integer(INT64_MAX) * 1000 + 7);
  EXPECT_EQ(denum::from_int128(-v), -(Integer(INT64_MAX) * 1000 + 7));
}

// Mixed small/big arithmetic against exact reference identities.
TEST(Integer, RandomizedIdentities) {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<std::int64_t> any(INT64_MIN, INT64_MAX);
  std::uniform_int_distribution<std::int64_t> small(-1000, 1000);
  for (int iter = 0; iter < 20000; ++iter) {
    const Integer x = iter % 3 == 0 ? Integer(any(rng)) * any(rng) : Integer(any(rng));
    Integer y = iter % 2 == 0 ? Integer(small(rng)) : Integer(any(rng));
    if (y.is_zero()) y = 3;
    auto [q, r] = denum::floor_divmod(x, y);
    ASSERT_EQ(q * y + r, x);
    if (y > 0) {
      ASSERT_TRUE(r >= 0 && r < y);
    } else {
      ASSERT_TRUE(r <= 0 && r > y);
    }
    ASSERT_EQ(denum::floor_div(x, y), q);
    ASSERT_EQ(denum::floor_mod(x, y), r);
    ASSERT_EQ((x + y) - y, x);
    ASSERT_EQ(x * y - x * (y - 1), x);
    const auto e = denum::egcd(x, y);
    ASSERT_EQ(e.u * x + e.v * y, e.g);
    ASSERT_EQ(e.g, denum::gcd(x, y));
    ASSERT_TRUE(e.g > 0);
    ASSERT_EQ(Integer::from_string(x.to_string()), x);
    const Integer m = denum::abs(y) + 1;
    ASSERT_EQ(denum::floor_mod(denum::mod_reduce(x, m) - x, m), 0);
    if (denum::gcd(x, m) == 1 && m >= 2) {
      ASSERT_EQ(denum::mod_reduce(denum::mod_inverse(x, m) * x, m), 1);
    }
  }
}

TEST(Integer, Ordering) {
  const Integer a = big("-100000000000000000000");
  const Integer b = -5;
  const Integer c = big("100000000000000000000");
  EXPECT_LT(a, b);
  EXPECT_LT(b, c);
  EXPECT_GT(c, INT64_MAX);
  EXPECT_EQ(denum::min(a, c), a);
  EXPECT_EQ(denum::max(a, c), c);
  EXPECT_EQ(denum::abs(a), c);
}
