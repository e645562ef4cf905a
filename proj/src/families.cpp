#include "denum/families.hpp"

#include <chrono>

#include "denum/errors.hpp"

namespace denum {

std::string to_string(Family f) { return "T" + std::to_string(static_cast<int>(f) + 1); }

Family parse_family(const std::string& text) {
  if (text.size() == 2 && (text[0] == 'T' || text[0] == 't') && text[1] >= '1' && text[1] <= '6') {
    return static_cast<Family>(text[1] - '1');
  }
  throw ParseError("unknown family '" + text + "' (expected T1..T6)");
}

Semigroup3 family_semigroup(Family f, unsigned k) {
  if (k < 1) throw DomainError("family index k must be >= 1");
  const Integer p7 = pow(Integer(7), k);
  const Integer p11 = pow(Integer(11), k);
  switch (f) {
    case Family::kT1: return Semigroup3::make(p7, p11, frobenius_two(p7, p11));
    case Family::kT2: return Semigroup3::make(p7, p11, p11 + 1);
    case Family::kT3: return Semigroup3::make(p7, p11, p7 + p11 * p11);
    case Family::kT4: return Semigroup3::make(p7, p11, p7 + p11);
    case Family::kT5: return Semigroup3::make(1, p7, p11);
    case Family::kT6: return Semigroup3::make(1, p7, p7 + 1);
  }
  throw InternalError("unhandled family");
}

Integer family_target(Family f, unsigned k) {
  const Semigroup3 T = family_semigroup(f, k);
  return T.P() - T.S() - Integer(k);
}

BenchRecord bench_one(Family f, unsigned k, const BenchOptions& opts) {
  using clock = std::chrono::steady_clock;
  const Semigroup3 T = family_semigroup(f, k);
  const Integer m = T.P() - T.S() - Integer(k);
  const int repeats = opts.repeats < 1 ? 1 : opts.repeats;
  std::int64_t total_ns = 0;
  DenumerantResult result;
  for (int i = 0; i < repeats; ++i) {
    const auto start = clock::now();
    // The engine build (L-shape) is part of the measured cost.
    result = DenumerantEngine(T, opts.pref)(m);
    total_ns += std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start).count();
  }
  return BenchRecord{to_string(f),        k, GeneratorTriple{T.a(), T.b(), T.c()}, m, result.value,
                     total_ns / repeats, result.trace.label()};
}

BenchReport run_bench(Family f, unsigned k_lo, unsigned k_hi, const BenchOptions& opts) {
  BenchReport report;
  double spent = 0;
  for (unsigned k = k_lo; k <= k_hi; ++k) {
    if (spent > opts.budget_seconds) {
      report.warning = "time budget of " + std::to_string(opts.budget_seconds) +
                       " s exhausted before k=" + std::to_string(k);
      break;
    }
    report.records.push_back(bench_one(f, k, opts));
    spent += static_cast<double>(report.records.back().elapsed_ns) *
             (opts.repeats < 1 ? 1 : opts.repeats) * 1e-9;
  }
  return report;
}

}  // namespace denum
