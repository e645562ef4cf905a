#include "denum/sweep.hpp"

#include <chrono>
#include <numeric>

namespace denum {

namespace {

constexpr std::size_t kMaxListed = 20;

void record_mismatch(SweepReport& rep, const Semigroup3& T, std::int64_t m, const std::string& what,
                     const Integer& got, std::int64_t want) {
  ++rep.mismatch_count;
  if (rep.mismatches.size() < kMaxListed) {
    rep.mismatches.push_back(T.to_string() + " m=" + std::to_string(m) + " " + what + ": got " +
                             got.to_string() + ", expected " + std::to_string(want));
  }
}

void count_case(SweepReport& rep, const CaseTrace& tr) {
  if (!tr.case_id) return;
  ++rep.case_counts[static_cast<std::size_t>(*tr.case_id)];
  if (*tr.case_id == CaseId::kIII_4) {
    const auto row = static_cast<std::size_t>(tr.k0_placement) - 1;
    const auto col = static_cast<std::size_t>(tr.k1_placement) - 1;
    ++rep.iii4_counts[row][col];
  }
}

}  // namespace

SweepReport run_sweep(const SweepOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  SweepReport rep;
  for (std::int64_t c = 3; c <= opts.max_c; ++c) {
    for (std::int64_t b = 2; b < c; ++b) {
      if (std::gcd(b, c) != 1) continue;
      for (std::int64_t a = 1; a < b; ++a) {
        if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1) continue;
        const Semigroup3 T = Semigroup3::make(a, b, c);
        const std::int64_t P = a * b * c;
        const std::vector<std::int64_t> oracle = denumerant_oracle_table(T, P);
        const std::vector<std::int64_t> coins = factorization_count_table(T, P);
        const DenumerantEngine h1(T, LShapePreference::kH1);
        std::optional<DenumerantEngine> h2;
        if (opts.check_h2 && T.case_tag() != CaseTag::kCNotInAB) h2.emplace(T, LShapePreference::kH2);

        for (std::int64_t m = 0; m <= P; ++m) {
          const std::int64_t want = oracle[static_cast<std::size_t>(m)];
          if (coins[static_cast<std::size_t>(m)] != want) {
            record_mismatch(rep, T, m, "coin-change count", coins[static_cast<std::size_t>(m)], want);
          }
          const DenumerantResult r1 = h1.closed_form(m);
          ++rep.evaluations;
          count_case(rep, r1.trace);
          if (r1.value != want) record_mismatch(rep, T, m, "closed form (H1)", r1.value, want);
          if (h2) {
            const DenumerantResult r2 = h2->closed_form(m);
            ++rep.evaluations;
            count_case(rep, r2.trace);
            if (r2.value != want) record_mismatch(rep, T, m, "closed form (H2)", r2.value, want);
          }
          if (m >= P - T.S().small_value() + 1) {
            const DenumerantResult rp = h1(m);
            if (rp.value != want) record_mismatch(rep, T, m, "pipeline", rp.value, want);
          }
          if (m <= opts.enumeration_max_m) {
            ++rep.enumerations;
            const auto n = static_cast<std::int64_t>(enumerate_factorizations(m, T).size());
            if (n != want) record_mismatch(rep, T, m, "enumeration", n, want);
          }
        }
        ++rep.triples;
        if (opts.on_triple) opts.on_triple(a, b, c);
      }
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace denum
