#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "denum/kernels.hpp"

namespace denum::kernels {

namespace {

Isa detect() {
  if (const char* env = std::getenv("DENUM_ISA")) {
    const std::string want(env);
    if (want == "scalar") return Isa::kScalar;
    if (want == "avx2" && isa_available(Isa::kAvx2)) return Isa::kAvx2;
    if (want == "neon" && isa_available(Isa::kNeon)) return Isa::kNeon;
  }
  if (isa_available(Isa::kAvx2)) return Isa::kAvx2;
  if (isa_available(Isa::kNeon)) return Isa::kNeon;
  return Isa::kScalar;
}

std::atomic<Isa>& selected() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

Isa current() { return selected().load(std::memory_order_relaxed); }

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "?";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return true;
    case Isa::kAvx2:
#if defined(DENUM_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(DENUM_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() { return current(); }

void force_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument("kernel variant not available: " + std::string(isa_name(isa)));
  }
  selected().store(isa, std::memory_order_relaxed);
}

HsTally hs_tally(const HsScanArgs& args) {
  switch (current()) {
#if defined(DENUM_HAVE_AVX2)
    case Isa::kAvx2: return hs_tally_avx2(args);
#endif
#if defined(DENUM_HAVE_NEON)
    case Isa::kNeon: return hs_tally_neon(args);
#endif
    default: return hs_tally_scalar(args);
  }
}

__int128 floor_scan(const FloorScanArgs& args) {
  switch (current()) {
#if defined(DENUM_HAVE_AVX2)
    case Isa::kAvx2: return floor_scan_avx2(args);
#endif
#if defined(DENUM_HAVE_NEON)
    case Isa::kNeon: return floor_scan_neon(args);
#endif
    default: return floor_scan_scalar(args);
  }
}

}  // namespace denum::kernels
