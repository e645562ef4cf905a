#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "denum/floor_sums.hpp"
#include "denum/integer.hpp"
#include "denum/lshape.hpp"
#include "denum/semigroup.hpp"

namespace denum {

struct DivMod {
  Integer quot, rem;
};

// Bar/hat decompositions; each pair is present only when its divisor is > 0.
struct EuclidDecomp {
  std::optional<DivMod> x0_w, l_w, y0_y, h_y, z0_delta, z0_theta, delta_theta, theta_delta;

  static EuclidDecomp compute(const BasicFactorization& bf, const LShape& L);
};

enum class CaseId {
  kI_1, kI_2_1, kI_2_2, kI_2_3,
  kII_1, kII_2_1, kII_2_2, kII_2_3,
  kIII_1, kIII_2_1, kIII_2_2, kIII_2_3, kIII_3_1, kIII_3_2, kIII_3_3, kIII_4,
};
inline constexpr int kCaseIdCount = 16;

std::string to_string(CaseId id);

// Where a threshold sits relative to A_m.
enum class Placement { kAbsent, kZero, kInside, kBeyond };

std::string to_string(Placement p);

enum class EvalPath { kClosedForm, kSertozBand, kNotInSemigroup, kDegenerate };

std::string to_string(EvalPath p);

struct CaseTrace {
  EvalPath path = EvalPath::kClosedForm;
  std::optional<CaseId> case_id;
  Integer A_m;
  std::optional<Integer> k0, k1;
  Placement k0_placement = Placement::kAbsent;
  Placement k1_placement = Placement::kAbsent;
  std::optional<Integer> A_part, B_part;
  std::vector<FloorSumQuery> sum_queries;
  // Ehrhart split of the original target: m = quotient*P + r.
  Integer ehrhart_correction;
  Integer reduced_target;
  std::optional<LShape> lshape;
  std::optional<BasicFactorization> basic;

  // "III_4" style id, or the path name when no case theorem ran.
  std::string label() const;
};

struct DenumerantResult {
  Integer value;
  CaseTrace trace;
};

// Raw parameters of the case theorems. a and b need only satisfy
// a = h delta + y theta and b = w delta + l theta.
struct CaseInputs {
  Integer x0, y0, z0;
  Integer l, h, w, y, delta, theta;
  Integer a, b;

  static CaseInputs from(const BasicFactorization& bf, const LShape& L, const Semigroup3& T);
};

// Literal 1 + A_m + sum (S_k + T_k) with the min-expressions; O(A_m).
Integer basic_sum_direct(const CaseInputs& in, std::int64_t max_terms = 10'000'000);
// m not in T gives 0.
Integer basic_sum_direct(const Integer& m, const LShape& L, const Semigroup3& T,
                         std::int64_t max_terms = 10'000'000);

struct Thresholds {
  std::optional<Integer> k0, k1;
};
Thresholds k_thresholds(const CaseInputs& in);
Thresholds k_thresholds(const BasicFactorization& bf, const LShape& L, const Semigroup3& T);

// The closed forms; each checks its precondition on delta/theta.
DenumerantResult denumerant_case_i(const CaseInputs& in);
DenumerantResult denumerant_case_ii(const CaseInputs& in);
DenumerantResult denumerant_case_iii(const CaseInputs& in);
// Dispatches on delta/theta.
DenumerantResult denumerant_closed_form(const CaseInputs& in);

enum class LShapePreference { kH1, kH2 };

// Prepared evaluator for one semigroup; the L-shape and inverses are computed
// once. Safe to share read-only across threads.
class DenumerantEngine {
 public:
  explicit DenumerantEngine(const Semigroup3& T, LShapePreference pref = LShapePreference::kH1);

  // Full pipeline: degenerate closed forms, Ehrhart reduction, the Sertoz
  // band, then the case theorems.
  DenumerantResult operator()(const Integer& m) const;
  // Case theorems only (no Ehrhart or band shortcuts); m >= 0.
  DenumerantResult closed_form(const Integer& m) const;

  const Semigroup3& semigroup() const { return T_; }
  const std::optional<LShape>& lshape() const { return lshape_; }

 private:
  Semigroup3 T_;
  std::optional<LShape> lshape_;
  std::optional<FactorizationSolver> solver_;
};

DenumerantResult denumerant(const Integer& m, const Semigroup3& T,
                            LShapePreference pref = LShapePreference::kH1);

struct FullResult {
  Integer value;
  ReductionCertificate certificate;
  CaseTrace trace;
};

FullResult denumerant_full(const GeneratorTriple& gens, const Integer& n,
                           LShapePreference pref = LShapePreference::kH1);

}  // namespace denum
