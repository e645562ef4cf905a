// Built only on aarch64. Mirrors the AVX2 kernels with two 64-bit lanes.
#include <arm_neon.h>

#include "denum/kernels.hpp"

namespace denum::kernels {

namespace {

constexpr std::int64_t kFlushEvery = std::int64_t{1} << 20;

std::int64_t floor_mod64(__int128 x, std::int64_t m) {
  __int128 r = x % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

__int128 horizontal_sum(int64x2_t v) {
  return static_cast<__int128>(vgetq_lane_s64(v, 0)) + vgetq_lane_s64(v, 1);
}

}  // namespace

HsTally hs_tally_neon(const HsScanArgs& args) {
  const std::int64_t blocks = args.len / 2;
  const std::int64_t init_r[2] = {
      floor_mod64(args.r0, args.modulus),
      floor_mod64(static_cast<__int128>(args.r0) - args.step, args.modulus)};
  const std::int64_t init_k[2] = {0, 1};
  const std::int64_t step2 = floor_mod64(static_cast<__int128>(args.step) * 2, args.modulus);
  int64x2_t r = vld1q_s64(init_r);
  int64x2_t k = vld1q_s64(init_k);
  const int64x2_t vstep = vdupq_n_s64(step2);
  const int64x2_t vmod = vdupq_n_s64(args.modulus);
  const int64x2_t vbound = vdupq_n_s64(args.bound);
  const int64x2_t two = vdupq_n_s64(2);
  const int64x2_t zero = vdupq_n_s64(0);
  int64x2_t count = zero, sum = zero;
  HsTally out;
  for (std::int64_t blk = 0; blk < blocks; ++blk) {
    const int64x2_t hit = vreinterpretq_s64_u64(vcltq_s64(r, vbound));
    count = vsubq_s64(count, hit);
    sum = vaddq_s64(sum, vandq_s64(k, hit));
    k = vaddq_s64(k, two);
    r = vsubq_s64(r, vstep);
    r = vaddq_s64(r, vandq_s64(vmod, vreinterpretq_s64_u64(vcltq_s64(r, zero))));
    if ((blk + 1) % kFlushEvery == 0) {
      out.count += static_cast<std::int64_t>(horizontal_sum(count));
      out.index_sum += horizontal_sum(sum);
      count = zero;
      sum = zero;
    }
  }
  out.count += static_cast<std::int64_t>(horizontal_sum(count));
  out.index_sum += horizontal_sum(sum);
  std::int64_t rr = vgetq_lane_s64(r, 0);
  for (std::int64_t kk = blocks * 2; kk < args.len; ++kk) {
    if (rr < args.bound) {
      ++out.count;
      out.index_sum += kk;
    }
    rr -= args.step;
    if (rr < 0) rr += args.modulus;
  }
  return out;
}

__int128 floor_scan_neon(const FloorScanArgs& args) {
  const std::int64_t q = args.q;
  const std::int64_t dt = args.minus ? -args.t : args.t;
  std::int64_t init_v[2], init_r[2];
  for (int i = 0; i < 2; ++i) {
    const __int128 n = static_cast<__int128>(args.s) + static_cast<__int128>(i) * dt;
    init_r[i] = floor_mod64(n, q);
    init_v[i] = static_cast<std::int64_t>((n - init_r[i]) / q);
  }
  const __int128 d2 = static_cast<__int128>(dt) * 2;
  const std::int64_t e2 = floor_mod64(d2, q);
  const std::int64_t v2 = static_cast<std::int64_t>((d2 - e2) / q);
  int64x2_t v = vld1q_s64(init_v);
  int64x2_t r = vld1q_s64(init_r);
  const int64x2_t vq = vdupq_n_s64(q);
  const int64x2_t ve = vdupq_n_s64(e2);
  const int64x2_t vv = vdupq_n_s64(v2);
  const int64x2_t zero = vdupq_n_s64(0);
  int64x2_t sum = zero;
  __int128 total = 0;
  const std::int64_t blocks = args.count / 2;
  for (std::int64_t blk = 0; blk < blocks; ++blk) {
    sum = vaddq_s64(sum, v);
    v = vaddq_s64(v, vv);
    r = vaddq_s64(r, ve);
    const int64x2_t wrap = vreinterpretq_s64_u64(vcgeq_s64(r, vq));
    r = vsubq_s64(r, vandq_s64(vq, wrap));
    v = vsubq_s64(v, wrap);
    if ((blk + 1) % kFlushEvery == 0) {
      total += horizontal_sum(sum);
      sum = zero;
    }
  }
  total += horizontal_sum(sum);
  for (std::int64_t k = blocks * 2; k < args.count; ++k) {
    const __int128 n = static_cast<__int128>(args.s) + static_cast<__int128>(k) * dt;
    total += (n - floor_mod64(n, q)) / q;
  }
  return total;
}

}  // namespace denum::kernels
