// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "denum/kernels.hpp"

namespace denum::kernels {

namespace {

// Lane sums are flushed into 128-bit totals at this interval so that no
// 64-bit lane accumulator can overflow.
constexpr std::int64_t kFlushEvery = std::int64_t{1} << 20;

__int128 horizontal_sum(__m256i v) {
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return static_cast<__int128>(lanes[0]) + lanes[1] + lanes[2] + lanes[3];
}

std::int64_t floor_mod64(__int128 x, std::int64_t m) {
  __int128 r = x % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

}  // namespace

HsTally hs_tally_avx2(const HsScanArgs& args) {
  const std::int64_t blocks = args.len / 4;
  alignas(32) std::int64_t init_r[4];
  for (int i = 0; i < 4; ++i) {
    init_r[i] = floor_mod64(static_cast<__int128>(args.r0) - static_cast<__int128>(i) * args.step,
                            args.modulus);
  }
  const std::int64_t step4 = floor_mod64(static_cast<__int128>(args.step) * 4, args.modulus);
  __m256i r = _mm256_load_si256(reinterpret_cast<const __m256i*>(init_r));
  __m256i k = _mm256_set_epi64x(3, 2, 1, 0);
  const __m256i vstep = _mm256_set1_epi64x(step4);
  const __m256i vmod = _mm256_set1_epi64x(args.modulus);
  const __m256i vbound = _mm256_set1_epi64x(args.bound);
  const __m256i four = _mm256_set1_epi64x(4);
  const __m256i zero = _mm256_setzero_si256();
  __m256i count = zero, sum = zero;
  HsTally out;
  for (std::int64_t blk = 0; blk < blocks; ++blk) {
    const __m256i hit = _mm256_cmpgt_epi64(vbound, r);
    count = _mm256_sub_epi64(count, hit);
    sum = _mm256_add_epi64(sum, _mm256_and_si256(k, hit));
    k = _mm256_add_epi64(k, four);
    r = _mm256_sub_epi64(r, vstep);
    r = _mm256_add_epi64(r, _mm256_and_si256(vmod, _mm256_cmpgt_epi64(zero, r)));
    if ((blk + 1) % kFlushEvery == 0) {
      out.count += static_cast<std::int64_t>(horizontal_sum(count));
      out.index_sum += horizontal_sum(sum);
      count = zero;
      sum = zero;
    }
  }
  out.count += static_cast<std::int64_t>(horizontal_sum(count));
  out.index_sum += horizontal_sum(sum);
  alignas(32) std::int64_t tail_r[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(tail_r), r);
  std::int64_t rr = tail_r[0];
  for (std::int64_t kk = blocks * 4; kk < args.len; ++kk) {
    if (rr < args.bound) {
      ++out.count;
      out.index_sum += kk;
    }
    rr -= args.step;
    if (rr < 0) rr += args.modulus;
  }
  return out;
}

__int128 floor_scan_avx2(const FloorScanArgs& args) {
  const std::int64_t q = args.q;
  const std::int64_t dt = args.minus ? -args.t : args.t;
  alignas(32) std::int64_t init_v[4], init_r[4];
  for (int i = 0; i < 4; ++i) {
    const __int128 n = static_cast<__int128>(args.s) + static_cast<__int128>(i) * dt;
    init_r[i] = floor_mod64(n, q);
    init_v[i] = static_cast<std::int64_t>((n - init_r[i]) / q);
  }
  const __int128 d4 = static_cast<__int128>(dt) * 4;
  const std::int64_t e4 = floor_mod64(d4, q);
  const std::int64_t v4 = static_cast<std::int64_t>((d4 - e4) / q);
  __m256i v = _mm256_load_si256(reinterpret_cast<const __m256i*>(init_v));
  __m256i r = _mm256_load_si256(reinterpret_cast<const __m256i*>(init_r));
  const __m256i vq = _mm256_set1_epi64x(q);
  const __m256i vq_minus_1 = _mm256_set1_epi64x(q - 1);
  const __m256i ve = _mm256_set1_epi64x(e4);
  const __m256i vv = _mm256_set1_epi64x(v4);
  const __m256i zero = _mm256_setzero_si256();
  __m256i sum = zero;
  __int128 total = 0;
  const std::int64_t blocks = args.count / 4;
  for (std::int64_t blk = 0; blk < blocks; ++blk) {
    sum = _mm256_add_epi64(sum, v);
    v = _mm256_add_epi64(v, vv);
    r = _mm256_add_epi64(r, ve);
    const __m256i wrap = _mm256_cmpgt_epi64(r, vq_minus_1);
    r = _mm256_sub_epi64(r, _mm256_and_si256(vq, wrap));
    v = _mm256_sub_epi64(v, wrap);
    if ((blk + 1) % kFlushEvery == 0) {
      total += horizontal_sum(sum);
      sum = zero;
    }
  }
  total += horizontal_sum(sum);
  for (std::int64_t k = blocks * 4; k < args.count; ++k) {
    const __int128 n = static_cast<__int128>(args.s) + static_cast<__int128>(k) * dt;
    total += (n - floor_mod64(n, q)) / q;
  }
  return total;
}

}  // namespace denum::kernels
