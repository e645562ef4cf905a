#include <gtest/gtest.h>

#include <random>

#include "denum/floor_sums.hpp"
#include "denum/kernels.hpp"

using namespace denum;
using namespace denum::kernels;

namespace {

HsTally hs_reference(const HsScanArgs& a) {
  HsTally out;
  for (std::int64_t k = 0; k < a.len; ++k) {
    const __int128 r = ((static_cast<__int128>(a.r0) - static_cast<__int128>(k) * a.step) % a.modulus +
                        a.modulus) % a.modulus;
    if (r < a.bound) {
      ++out.count;
      out.index_sum += k;
    }
  }
  return out;
}

__int128 floor_reference(const FloorScanArgs& a) {
  __int128 total = 0;
  for (std::int64_t k = 0; k < a.count; ++k) {
    const __int128 v = a.minus ? static_cast<__int128>(a.s) - static_cast<__int128>(k) * a.t
                               : static_cast<__int128>(a.s) + static_cast<__int128>(k) * a.t;
    __int128 f = v / a.q;
    if (v % a.q != 0 && v < 0) --f;
    total += f;
  }
  return total;
}

std::vector<HsScanArgs> hs_cases() {
  std::vector<HsScanArgs> cases;
  std::mt19937_64 rng(2024);
  for (std::int64_t len = 0; len <= 19; ++len) cases.push_back({3, 5, 11, 4, len});
  for (int i = 0; i < 3000; ++i) {
    const std::int64_t mod_cap = i % 3 == 0 ? (std::int64_t{1} << 61) : 5000;
    const std::int64_t m = std::uniform_int_distribution<std::int64_t>(1, mod_cap)(rng);
    const std::int64_t r0 = std::uniform_int_distribution<std::int64_t>(0, m - 1)(rng);
    const std::int64_t step = std::uniform_int_distribution<std::int64_t>(0, m - 1)(rng);
    const std::int64_t bound = std::uniform_int_distribution<std::int64_t>(0, m)(rng);
    const std::int64_t len = std::uniform_int_distribution<std::int64_t>(0, 300)(rng);
    cases.push_back({r0, step, m, bound, len});
  }
  return cases;
}

std::vector<FloorScanArgs> floor_cases() {
  std::vector<FloorScanArgs> cases;
  std::mt19937_64 rng(77);
  for (std::int64_t n = 0; n <= 19; ++n) {
    cases.push_back({2, 3, 7, n, false});
    cases.push_back({2, 3, 7, n, true});
  }
  for (int i = 0; i < 3000; ++i) {
    const std::int64_t q_cap = i % 3 == 0 ? (std::int64_t{1} << 60) : 4000;
    const std::int64_t q = std::uniform_int_distribution<std::int64_t>(1, q_cap)(rng);
    const std::int64_t s = std::uniform_int_distribution<std::int64_t>(0, q - 1)(rng);
    const std::int64_t t = std::uniform_int_distribution<std::int64_t>(0, q - 1)(rng);
    const std::int64_t n = std::uniform_int_distribution<std::int64_t>(0, 300)(rng);
    cases.push_back({s, t, q, n, (i & 1) != 0});
  }
  return cases;
}

}  // namespace

TEST(Kernels, ScalarMatchesReference) {
  for (const auto& a : hs_cases()) {
    const HsTally got = hs_tally_scalar(a), want = hs_reference(a);
    ASSERT_EQ(got.count, want.count);
    ASSERT_TRUE(got.index_sum == want.index_sum);
  }
  for (const auto& a : floor_cases()) ASSERT_TRUE(floor_scan_scalar(a) == floor_reference(a));
}

#if defined(__x86_64__)
TEST(Kernels, Avx2MatchesScalar) {
  if (!isa_available(Isa::kAvx2)) GTEST_SKIP() << "AVX2 not available on this CPU";
  for (const auto& a : hs_cases()) {
    const HsTally x = hs_tally_avx2(a), y = hs_tally_scalar(a);
    ASSERT_EQ(x.count, y.count) << a.r0 << " " << a.step << " " << a.modulus << " " << a.len;
    ASSERT_TRUE(x.index_sum == y.index_sum);
  }
  for (const auto& a : floor_cases()) {
    ASSERT_TRUE(floor_scan_avx2(a) == floor_scan_scalar(a)) << a.s << " " << a.t << " " << a.q;
  }
}
#endif

#if defined(__aarch64__)
TEST(Kernels, NeonMatchesScalar) {
  for (const auto& a : hs_cases()) {
    const HsTally x = hs_tally_neon(a), y = hs_tally_scalar(a);
    ASSERT_EQ(x.count, y.count);
    ASSERT_TRUE(x.index_sum == y.index_sum);
  }
  for (const auto& a : floor_cases()) ASSERT_TRUE(floor_scan_neon(a) == floor_scan_scalar(a));
}
#endif

// Long scans cross the lane-flush boundary of the vector variants.
TEST(Kernels, LongScansAgreeAcrossVariants) {
  const HsScanArgs hs{12345, 987654321, 1000000007, 400000000, 5000000};
  const FloorScanArgs fs{999, 1000000005, 1000000007, 5000000, true};
  const Isa before = active_isa();
  force_isa(Isa::kScalar);
  const HsTally hs_scalar = hs_tally(hs);
  const __int128 fs_scalar = floor_scan(fs);
  for (Isa isa : {Isa::kAvx2, Isa::kNeon}) {
    if (!isa_available(isa)) continue;
    force_isa(isa);
    EXPECT_EQ(hs_tally(hs).count, hs_scalar.count);
    EXPECT_TRUE(hs_tally(hs).index_sum == hs_scalar.index_sum);
    EXPECT_TRUE(floor_scan(fs) == fs_scalar);
  }
  force_isa(before);
}

// The dispatched evaluators give identical results under every variant.
TEST(Kernels, FloorSumsIndependentOfVariant) {
  const Isa before = active_isa();
  std::vector<FloorSumQuery> queries;
  for (std::int64_t q : {97, 1000, 4096}) {
    for (std::int64_t t : {1, 13, 96, 999}) {
      if (t >= q) continue;
      queries.push_back({Sign::kPlus, q / 3, t, q, 20000});
      queries.push_back({Sign::kMinus, q / 2, t, q, 20000});
    }
  }
  force_isa(Isa::kScalar);
  std::vector<Integer> want;
  for (const auto& q : queries) want.push_back(s_sum(q) + s_sum_direct(q));
  for (Isa isa : {Isa::kAvx2, Isa::kNeon}) {
    if (!isa_available(isa)) continue;
    force_isa(isa);
    for (std::size_t i = 0; i < queries.size(); ++i) {
      EXPECT_EQ(s_sum(queries[i]) + s_sum_direct(queries[i]), want[i]) << queries[i].to_string();
    }
  }
  force_isa(before);
}

TEST(Kernels, Dispatch) {
  EXPECT_TRUE(isa_available(Isa::kScalar));
  EXPECT_EQ(isa_name(Isa::kAvx2), "avx2");
  if (!isa_available(Isa::kNeon)) EXPECT_THROW(force_isa(Isa::kNeon), std::invalid_argument);
}
