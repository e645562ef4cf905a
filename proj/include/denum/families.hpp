#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "denum/denumerant.hpp"
#include "denum/integer.hpp"
#include "denum/semigroup.hpp"

namespace denum {

// Benchmark families, indexed by k >= 1:
//   T1 = <7^k, 11^k, f(7^k, 11^k)>    T2 = <7^k, 11^k, 11^k + 1>
//   T3 = <7^k, 11^k, 7^k + 11^(2k)>   T4 = <7^k, 11^k, 7^k + 11^k>
//   T5 = <1, 7^k, 11^k>               T6 = <1, 7^k, 7^k + 1>
// with target m_k = P - S - k.
enum class Family { kT1, kT2, kT3, kT4, kT5, kT6 };

std::string to_string(Family f);
// Accepts "T1".."T6" (case-insensitive t); throws ParseError otherwise.
Family parse_family(const std::string& text);

Semigroup3 family_semigroup(Family f, unsigned k);
Integer family_target(Family f, unsigned k);

struct BenchRecord {
  std::string family;
  unsigned k = 0;
  GeneratorTriple gens;
  Integer m;
  Integer d;
  std::int64_t elapsed_ns = 0;
  std::string case_id;
};

struct BenchOptions {
  LShapePreference pref = LShapePreference::kH1;
  // Records stop once the cumulative time passes this many seconds.
  double budget_seconds = 60.0;
  // Timed repetitions per record; elapsed_ns is their mean.
  int repeats = 1;
};

struct BenchReport {
  std::vector<BenchRecord> records;
  // Set when the budget stopped the run before k_hi.
  std::optional<std::string> warning;
};

BenchRecord bench_one(Family f, unsigned k, const BenchOptions& opts = {});
// Records in k order for k_lo..k_hi.
BenchReport run_bench(Family f, unsigned k_lo, unsigned k_hi, const BenchOptions& opts = {});

}  // namespace denum
