#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "denum/denumerant.hpp"

namespace denum {

struct SweepOptions {
  std::int64_t max_c = 40;
  // Also evaluate with the second L-shape when one exists.
  bool check_h2 = true;
  // Full enumeration of F(m, T) runs for m up to this bound.
  std::int64_t enumeration_max_m = 100;
  // Called once per finished triple with (a, b, c).
  std::function<void(std::int64_t, std::int64_t, std::int64_t)> on_triple;
};

struct SweepReport {
  std::int64_t triples = 0;
  std::int64_t evaluations = 0;
  std::int64_t enumerations = 0;
  std::int64_t mismatch_count = 0;
  // The first few mismatches, human readable.
  std::vector<std::string> mismatches;
  std::array<std::int64_t, kCaseIdCount> case_counts{};
  // III_4 hits by (k0 placement, k1 placement); rows and columns are
  // zero, inside, beyond.
  std::array<std::array<std::int64_t, 3>, 3> iii4_counts{};
  double seconds = 0;

  bool ok() const { return mismatch_count == 0; }
};

// Every pairwise-coprime 1 <= a < b < c <= max_c and every 0 <= m <= abc:
// the case theorems (H1 and optionally H2) against the layer oracle and the
// coin-change count; the full pipeline against the oracle on the Sertoz band
// and at m = abc.
SweepReport run_sweep(const SweepOptions& opts = {});

}  // namespace denum
