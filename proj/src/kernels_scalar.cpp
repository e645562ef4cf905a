#include "denum/kernels.hpp"

namespace denum::kernels {

HsTally hs_tally_scalar(const HsScanArgs& args) {
  HsTally out;
  std::int64_t r = args.r0;
  for (std::int64_t k = 0; k < args.len; ++k) {
    if (r < args.bound) {
      ++out.count;
      out.index_sum += k;
    }
    r -= args.step;
    if (r < 0) r += args.modulus;
  }
  return out;
}

__int128 floor_scan_scalar(const FloorScanArgs& args) {
  // (s + k*dt) = v*q + r with 0 <= r < q, advanced one k at a time.
  const std::int64_t dt = args.minus ? -args.t : args.t;
  std::int64_t dv = 0, dr = dt;
  if (dr < 0) {
    dv = -1;
    dr += args.q;
  }
  std::int64_t v = 0, r = args.s;
  __int128 sum = 0;
  for (std::int64_t k = 0; k < args.count; ++k) {
    sum += v;
    v += dv;
    r += dr;
    if (r >= args.q) {
      r -= args.q;
      ++v;
    }
  }
  return sum;
}

}  // namespace denum::kernels
