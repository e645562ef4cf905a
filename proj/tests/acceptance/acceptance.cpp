// Acceptance checks, one per criterion. `denum_acceptance N` runs criterion N;
// without arguments all run. Each prints one PASS/FAIL line; the exit status
// is nonzero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "denum/denumerant.hpp"
#include "denum/families.hpp"
#include "denum/floor_sums.hpp"
#include "denum/lshape.hpp"
#include "denum/sweep.hpp"

using namespace denum;
using Clock = std::chrono::steady_clock;

namespace {

// Tolerances.
constexpr double kExampleLimitMs = 10.0;
constexpr double kTableLimitMs = 1000.0;
constexpr double kSweepLimitS = 600.0;
constexpr double kFamilyEvalLimitMs = 1000.0;
constexpr double kGrowthFudge = 4.0;
constexpr double kTimerFloorNs = 50'000.0;  // fixed per-call overhead absorbed by the growth check
constexpr int kGrowthRepeats = 5;
constexpr std::int64_t kSumsExhaustiveQ = 60;
constexpr int kSumsRandomCases = 10'000;
constexpr std::int64_t kSumsRandomQ = 1000;
constexpr std::int64_t kSumsRandomN = 10'000;
constexpr std::int64_t kLShapeMaxC = 200;
constexpr std::int64_t kSweepMaxC = 40;

struct Outcome {
  bool pass;
  std::string detail;
};

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Semigroup3 sg(const Integer& a, const Integer& b, const Integer& c) { return Semigroup3::make(a, b, c); }

struct Timed {
  DenumerantResult result;
  double ms;
};

Timed timed_denumerant(const Integer& m, const Semigroup3& T) {
  const auto t0 = Clock::now();
  DenumerantResult r = denumerant(m, T);
  return {std::move(r), ms_since(t0)};
}

Outcome example_1() {
  const Semigroup3 T = sg(5, 7, 11);
  const auto t = timed_denumerant(87, T);
  const CaseTrace& tr = t.result.trace;
  const bool shape_ok = tr.lshape && tr.lshape->to_string() == "L(5,3,2,2)";
  const bool bf_ok = tr.basic && *tr.basic == BasicFactorization{2, 0, 7};
  const bool ok = t.result.value == 13 && shape_ok && bf_ok && tr.A_m == 3 &&
                  tr.case_id == CaseId::kIII_4 && t.ms < kExampleLimitMs;
  std::ostringstream os;
  os << "d(87,<5,7,11>)=" << t.result.value << " via " << tr.label() << " with "
     << (tr.lshape ? tr.lshape->to_string() : "-") << ", A_m=" << tr.A_m << ", " << t.ms << " ms";
  return {ok, os.str()};
}

Outcome table_t1() {
  const std::vector<std::pair<const char*, const char*>> rows{
      {"4465", "2232"},
      {"34139180", "17069589"},
      {"207657687311", "103828843654"},
      {"1235137178269914", "617568589134955"}};
  bool ok = true;
  std::ostringstream os;
  for (unsigned k = 1; k <= rows.size(); ++k) {
    const Semigroup3 T = family_semigroup(Family::kT1, k);
    const Integer m = Integer::from_string(rows[k - 1].first);
    const auto t = timed_denumerant(m, T);
    const bool row_ok = m == family_target(Family::kT1, k) &&
                        t.result.value == Integer::from_string(rows[k - 1].second) &&
                        t.ms < kTableLimitMs;
    ok = ok && row_ok;
    os << "k=" << k << ":" << t.result.value << (row_ok ? "" : "(bad)") << " " << t.ms << "ms ";
  }
  return {ok, os.str()};
}

Outcome k1_rows() {
  struct Row {
    std::int64_t a, b, c, m, d;
  };
  const std::vector<Row> rows{{7, 11, 12, 893, 446}, {7, 11, 128, 9709, 4854}, {7, 11, 18, 1349, 674},
                              {1, 7, 11, 57, 29},    {1, 7, 8, 39, 20}};
  bool ok = true;
  std::ostringstream os;
  for (const auto& r : rows) {
    const auto t = timed_denumerant(r.m, sg(r.a, r.b, r.c));
    const bool row_ok = t.result.value == r.d && t.ms < kExampleLimitMs;
    ok = ok && row_ok;
    os << "<" << r.a << "," << r.b << "," << r.c << ">:" << t.result.value << (row_ok ? "" : "(bad)")
       << " ";
  }
  return {ok, os.str()};
}

Outcome large_row() {
  const Semigroup3 T = sg(2401, 14641, 14642);
  const auto t = timed_denumerant(Integer::from_string("514710794634"), T);
  const bool ok = t.result.value == Integer::from_string("257355397315") && t.ms < kTableLimitMs;
  std::ostringstream os;
  os << "d(514710794634,<2401,14641,14642>)=" << t.result.value << " in " << t.ms << " ms";
  return {ok, os.str()};
}

std::string case_summary(const SweepReport& rep) {
  std::ostringstream os;
  for (int i = 0; i < kCaseIdCount; ++i) {
    os << to_string(static_cast<CaseId>(i)) << "=" << rep.case_counts[static_cast<std::size_t>(i)] << " ";
  }
  return os.str();
}

Outcome sweep() {
  SweepOptions opts;
  opts.max_c = kSweepMaxC;
  const SweepReport rep = run_sweep(opts);
  std::ostringstream os;
  os << rep.triples << " triples, " << rep.evaluations << " closed-form evaluations, "
     << rep.enumerations << " enumerations, " << rep.mismatch_count << " mismatches, " << rep.seconds
     << " s";
  for (const auto& line : rep.mismatches) os << "\n    " << line;
  return {rep.ok() && rep.seconds <= kSweepLimitS, os.str()};
}

Outcome floor_sums() {
  std::int64_t checked = 0, bad = 0;
  std::string first_bad;
  auto check = [&](const FloorSumQuery& q, const Integer& direct) {
    ++checked;
    const Integer thm = s_sum(q);
    const Integer euclid = floor_sum_euclid(q);
    if (thm != direct || euclid != direct) {
      if (bad++ == 0) first_bad = q.to_string();
    }
  };
  for (std::int64_t q = 1; q <= kSumsExhaustiveQ; ++q) {
    for (std::int64_t t = 0; t < q; ++t) {
      for (std::int64_t s = 0; s < q; ++s) {
        for (Sign sign : {Sign::kPlus, Sign::kMinus}) {
          Integer direct = 0;
          check(FloorSumQuery{sign, s, t, q, -1}, 0);
          for (std::int64_t N = 0; N <= 3 * q; ++N) {
            direct += floor_div(sign == Sign::kPlus ? s + N * t : s - N * t, q);
            check(FloorSumQuery{sign, s, t, q, N}, direct);
          }
        }
      }
    }
  }
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < kSumsRandomCases; ++i) {
    const std::int64_t q = std::uniform_int_distribution<std::int64_t>(1, kSumsRandomQ)(rng);
    const std::int64_t s = std::uniform_int_distribution<std::int64_t>(0, q - 1)(rng);
    const std::int64_t t = std::uniform_int_distribution<std::int64_t>(0, q - 1)(rng);
    const std::int64_t N = std::uniform_int_distribution<std::int64_t>(0, kSumsRandomN)(rng);
    const FloorSumQuery query{i % 2 ? Sign::kMinus : Sign::kPlus, s, t, q, N};
    check(query, s_sum_direct(query));
  }
  std::ostringstream os;
  os << checked << " queries, " << bad << " mismatches";
  if (bad) os << " (first " << first_bad << ")";
  return {bad == 0, os.str()};
}

Outcome lshapes() {
  std::int64_t triples = 0, bad = 0;
  std::string first_bad;
  auto fail = [&](const Semigroup3& T, const char* what) {
    if (bad++ == 0) first_bad = T.to_string() + " " + what;
  };
  for (std::int64_t c = 3; c <= kLShapeMaxC; ++c) {
    for (std::int64_t b = 2; b < c; ++b) {
      if (std::gcd(b, c) != 1) continue;
      for (std::int64_t a = 1; a < b; ++a) {
        if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1) continue;
        ++triples;
        const Semigroup3 T = sg(a, b, c);
        std::vector<LShape> got = compute_lshapes(T);
        for (const auto& L : got) {
          if (!validate_lshape(L, T)) fail(T, "invalid shape");
        }
        std::sort(got.begin(), got.end());
        if (got != mdd_bruteforce(T)) fail(T, "differs from brute force");
        if (T.case_tag() != CaseTag::kCNotInAB) continue;
        const LShape& L = got.at(0);
        const Integer Mc = (L.l - L.w) * a + (L.h - L.y) * b;
        const auto kc = min_multiple_in(c, a, b, b);
        if (!kc || Mc != (L.delta + L.theta) * c || Mc != *kc * c) fail(T, "M_c identity");
        const auto ka = min_multiple_in(a, b, c, c);
        if (!ka || L.l != *ka) fail(T, "minimality of l");
      }
    }
  }
  std::ostringstream os;
  os << triples << " triples up to c=" << kLShapeMaxC << ", " << bad << " mismatches";
  if (bad) os << " (first " << first_bad << ")";
  return {bad == 0, os.str()};
}

Outcome timing() {
  bool ok = true;
  std::ostringstream os;
  // T5: consecutive growth against b = 7^k.
  std::vector<double> t5;
  for (unsigned k = 1; k <= 7; ++k) {
    double best = 1e300;
    for (int r = 0; r < kGrowthRepeats; ++r) {
      best = std::min(best, static_cast<double>(bench_one(Family::kT5, k).elapsed_ns));
    }
    t5.push_back(std::max(best, kTimerFloorNs));
  }
  os << "T5 ns (floored):";
  for (double t : t5) os << " " << static_cast<std::int64_t>(t);
  for (std::size_t i = 1; i < t5.size(); ++i) {
    if (t5[i] > kGrowthFudge * 7.0 * t5[i - 1]) {
      ok = false;
      os << " [k=" << i + 1 << " superlinear]";
    }
  }
  // T1, T4, T6: every k up to 1000 under the per-evaluation limit, plus the
  // expected digit counts of m and d.
  struct Digits {
    Family f;
    unsigned k;
    std::size_t m_digits, d_digits;
  };
  const std::vector<Digits> digits{{Family::kT1, 10, 38, 38},  {Family::kT1, 100, 378, 377},
                                   {Family::kT1, 1000, 3773, 3773}, {Family::kT4, 10, 30, 29},
                                   {Family::kT4, 100, 293, 293}, {Family::kT4, 1000, 2928, 2928},
                                   {Family::kT6, 10, 17, 17},  {Family::kT6, 100, 170, 169},
                                   {Family::kT6, 1000, 1691, 1690}};
  for (Family f : {Family::kT1, Family::kT4, Family::kT6}) {
    double worst = 0;
    unsigned worst_k = 0;
    for (unsigned k = 1; k <= 1000; ++k) {
      const BenchRecord rec = bench_one(f, k);
      const double ms = static_cast<double>(rec.elapsed_ns) / 1e6;
      if (ms > worst) {
        worst = ms;
        worst_k = k;
      }
      for (const auto& d : digits) {
        if (d.f == f && d.k == k &&
            (rec.m.decimal_digits() != d.m_digits || rec.d.decimal_digits() != d.d_digits)) {
          ok = false;
          os << " [" << to_string(f) << " k=" << k << " digits " << rec.m.decimal_digits() << "/"
             << rec.d.decimal_digits() << "]";
        }
      }
    }
    if (worst >= kFamilyEvalLimitMs) ok = false;
    os << "; " << to_string(f) << " worst " << worst << " ms at k=" << worst_k;
  }
  return {ok, os.str()};
}

Outcome coverage() {
  SweepOptions opts;
  opts.max_c = kSweepMaxC;
  opts.enumeration_max_m = 0;
  const SweepReport rep = run_sweep(opts);
  bool ok = true;
  std::ostringstream os;
  std::vector<std::string> missing;
  for (int i = 0; i < kCaseIdCount; ++i) {
    if (rep.case_counts[static_cast<std::size_t>(i)] == 0) missing.push_back(to_string(static_cast<CaseId>(i)));
  }
  int combos = 0;
  for (const auto& row : rep.iii4_counts) {
    for (auto n : row) combos += n > 0;
  }
  ok = missing.empty() && combos == 9;
  os << case_summary(rep) << "; III_4 (k0,k1) placements hit: " << combos << "/9";
  if (!missing.empty()) {
    os << "; never reached:";
    for (const auto& m : missing) os << " " << m;
  }
  return {ok, os.str()};
}

const std::vector<std::pair<const char*, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<const char*, std::function<Outcome()>>> list{
      {"worked example d(87,<5,7,11>)", example_1},
      {"T1 table rows k=1..4", table_t1},
      {"k=1 rows of the T2..T6 tables", k1_rows},
      {"large-input T2 row k=4", large_row},
      {"exhaustive oracle sweep c<=40", sweep},
      {"floor-sum evaluator equivalence", floor_sums},
      {"L-shape correctness c<=200", lshapes},
      {"timing properties", timing},
      {"case-id coverage of the c<=40 sweep", coverage}};
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty()) {
    for (int i = 1; i <= static_cast<int>(criteria().size()); ++i) selected.push_back(i);
  }
  bool all = true;
  for (int n : selected) {
    if (n < 1 || n > static_cast<int>(criteria().size())) {
      std::cerr << "unknown criterion " << n << "\n";
      return 2;
    }
    const auto& [name, run] = criteria()[static_cast<std::size_t>(n - 1)];
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << n << " " << (o.pass ? "PASS" : "FAIL") << " " << name << ": "
              << o.detail << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
