#pragma once

// Fixed-width scan kernels behind the floor-sum evaluators. Each kernel has a
// scalar reference and optional SIMD variants with bit-identical results; the
// variant is chosen once at runtime (override with DENUM_ISA=scalar|avx2|neon).

#include <cstdint>
#include <string_view>

namespace denum::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);
Isa active_isa();
// Forces a variant; throws std::invalid_argument when it is not available.
void force_isa(Isa isa);

// Residue scan: r_k = (r0 - k*step) mod modulus for k = 0..len-1; tallies the
// k with r_k < bound, reporting the count and the sum of k.
// Requires 0 <= r0, step < modulus, 1 <= modulus < 2^62, 0 <= len < 2^40.
struct HsScanArgs {
  std::int64_t r0;
  std::int64_t step;
  std::int64_t modulus;
  std::int64_t bound;
  std::int64_t len;
};

struct HsTally {
  std::int64_t count = 0;
  __int128 index_sum = 0;
};

// Floor scan: sum over k = 0..count-1 of floor((s + k*dir*t) / q), dir = +1 or -1.
// Requires 0 <= s, t < q < 2^61, 0 <= count < 2^40.
struct FloorScanArgs {
  std::int64_t s;
  std::int64_t t;
  std::int64_t q;
  std::int64_t count;
  bool minus;
};

HsTally hs_tally(const HsScanArgs& args);
__int128 floor_scan(const FloorScanArgs& args);

HsTally hs_tally_scalar(const HsScanArgs& args);
__int128 floor_scan_scalar(const FloorScanArgs& args);
#if defined(__x86_64__)
HsTally hs_tally_avx2(const HsScanArgs& args);
__int128 floor_scan_avx2(const FloorScanArgs& args);
#endif
#if defined(__aarch64__)
HsTally hs_tally_neon(const HsScanArgs& args);
__int128 floor_scan_neon(const FloorScanArgs& args);
#endif

}  // namespace denum::kernels
