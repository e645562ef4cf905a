#include "denum/denumerant.hpp"

#include "denum/errors.hpp"

namespace denum {

namespace {

std::optional<DivMod> split(const Integer& n, const Integer& d) {
  if (d.sign() <= 0) return std::nullopt;
  auto [q, r] = floor_divmod(n, d);
  return DivMod{std::move(q), std::move(r)};
}

const DivMod& need(const std::optional<DivMod>& p, const char* what) {
  if (!p) throw InternalError(std::string("decomposition ") + what + " referenced with zero divisor");
  return *p;
}

Integer tri(const Integer& n) { return div_exact(n * (n + 1), 2); }  // n(n+1)/2

Placement place(const Integer& k, const Integer& A_m) {
  if (k.is_zero()) return Placement::kZero;
  return k <= A_m ? Placement::kInside : Placement::kBeyond;
}

// Evaluates the floor sums of one case theorem and records each query.
class Assembler {
 public:
  explicit Assembler(CaseTrace& trace) : trace_(trace) {}

  Integer plus(const Integer& s, const Integer& t, const Integer& q, const Integer& N) {
    return run(FloorSumQuery{Sign::kPlus, s, t, q, N});
  }
  Integer minus(const Integer& s, const Integer& t, const Integer& q, const Integer& N) {
    return run(FloorSumQuery{Sign::kMinus, s, t, q, N});
  }
  // sum_{k=n1}^{n2} floor((s - k t) / q), re-indexed to start at 0.
  Integer minus_from(const Integer& s, const Integer& t, const Integer& q, const Integer& n1,
                     const Integer& n2) {
    if (n2 < n1) return 0;
    auto [bar, hat] = floor_divmod(s - n1 * t, q);
    return bar * (n2 - n1 + 1) + minus(hat, t, q, n2 - n1);
  }

 private:
  Integer run(FloorSumQuery query) {
    if (query.N.is_negative()) return 0;
    Integer value = s_sum(query);
    trace_.sum_queries.push_back(std::move(query));
    return value;
  }
  CaseTrace& trace_;
};

Integer degenerate_value(const Integer& m, const Semigroup3& T) {
  if (T.case_tag() == CaseTag::kDegenerate111) return div_exact((m + 1) * (m + 2), 2);
  const Integer k = floor_div(m, T.c());
  return (k + 1) * (m + 1) - T.c() * tri(k);
}

void check_inputs(const CaseInputs& in) {
  if (in.delta.is_negative() || in.theta.is_negative()) throw DomainError("delta and theta must be >= 0");
  if (in.a != in.h * in.delta + in.y * in.theta || in.b != in.w * in.delta + in.l * in.theta) {
    throw DomainError("case inputs violate a = h delta + y theta, b = w delta + l theta");
  }
  if (in.x0.is_negative() || in.y0.is_negative() || in.z0.is_negative()) {
    throw DomainError("basic factorization must be nonnegative");
  }
}

}  // namespace

EuclidDecomp EuclidDecomp::compute(const BasicFactorization& bf, const LShape& L) {
  EuclidDecomp e;
  e.x0_w = split(bf.x0, L.w);
  e.l_w = split(L.l, L.w);
  e.y0_y = split(bf.y0, L.y);
  e.h_y = split(L.h, L.y);
  e.z0_delta = split(bf.z0, L.delta);
  e.z0_theta = split(bf.z0, L.theta);
  e.delta_theta = split(L.delta, L.theta);
  e.theta_delta = split(L.theta, L.delta);
  return e;
}

std::string to_string(CaseId id) {
  switch (id) {
    case CaseId::kI_1: return "I_1";
    case CaseId::kI_2_1: return "I_2_1";
    case CaseId::kI_2_2: return "I_2_2";
    case CaseId::kI_2_3: return "I_2_3";
    case CaseId::kII_1: return "II_1";
    case CaseId::kII_2_1: return "II_2_1";
    case CaseId::kII_2_2: return "II_2_2";
    case CaseId::kII_2_3: return "II_2_3";
    case CaseId::kIII_1: return "III_1";
    case CaseId::kIII_2_1: return "III_2_1";
    case CaseId::kIII_2_2: return "III_2_2";
    case CaseId::kIII_2_3: return "III_2_3";
    case CaseId::kIII_3_1: return "III_3_1";
    case CaseId::kIII_3_2: return "III_3_2";
    case CaseId::kIII_3_3: return "III_3_3";
    case CaseId::kIII_4: return "III_4";
  }
  return "?";
}

std::string to_string(Placement p) {
  switch (p) {
    case Placement::kAbsent: return "absent";
    case Placement::kZero: return "zero";
    case Placement::kInside: return "inside";
    case Placement::kBeyond: return "beyond";
  }
  return "?";
}

std::string to_string(EvalPath p) {
  switch (p) {
    case EvalPath::kClosedForm: return "closed-form";
    case EvalPath::kSertozBand: return "sertoz-band";
    case EvalPath::kNotInSemigroup: return "not-in-semigroup";
    case EvalPath::kDegenerate: return "degenerate";
  }
  return "?";
}

std::string CaseTrace::label() const {
  if (!case_id) return to_string(path);
  std::string out = to_string(*case_id);
  if (*case_id == CaseId::kIII_4) {
    out += "[k0=" + to_string(k0_placement) + ",k1=" + to_string(k1_placement) + "]";
  }
  return out;
}

CaseInputs CaseInputs::from(const BasicFactorization& bf, const LShape& L, const Semigroup3& T) {
  return CaseInputs{bf.x0, bf.y0, bf.z0, L.l, L.h, L.w, L.y, L.delta, L.theta, T.a(), T.b()};
}

Integer basic_sum_direct(const CaseInputs& in, std::int64_t max_terms) {
  check_inputs(in);
  const Integer dt = in.delta + in.theta;
  if (dt.is_zero()) throw DomainError("delta + theta must be positive");
  const Integer A_m = floor_div(in.z0, dt);
  if (A_m >= max_terms) {
    throw ResourceError("basic sum with A_m = " + A_m.to_string() + " exceeds the budget");
  }
  const std::int64_t n = A_m.small_value();
  Integer total = A_m + 1;
  for (std::int64_t k = 0; k <= n; ++k) {
    const Integer z = in.z0 - dt * k;
    Integer S, Tk;
    if (in.delta.is_zero()) {
      S = floor_div(in.y0 + (in.h - in.y) * k, in.y);
    } else if (in.y.is_zero()) {
      S = floor_div(z, in.delta);
    } else {
      S = min(floor_div(in.y0 + (in.h - in.y) * k, in.y), floor_div(z, in.delta));
    }
    if (in.theta.is_zero()) {
      Tk = floor_div(in.x0 + (in.l - in.w) * k, in.w);
    } else if (in.w.is_zero()) {
      Tk = floor_div(z, in.theta);
    } else {
      Tk = min(floor_div(in.x0 + (in.l - in.w) * k, in.w), floor_div(z, in.theta));
    }
    total += S + Tk;
  }
  return total;
}

Integer basic_sum_direct(const Integer& m, const LShape& L, const Semigroup3& T,
                         std::int64_t max_terms) {
  if (m.is_negative()) return 0;
  auto bf = basic_factorization(m, L, T);
  if (!bf) return 0;
  return basic_sum_direct(CaseInputs::from(*bf, L, T), max_terms);
}

Thresholds k_thresholds(const CaseInputs& in) {
  Thresholds out;
  if (in.w.sign() > 0) out.k0 = ceil_div(in.z0 * in.w - in.x0 * in.theta, in.b);
  if (in.y.sign() > 0) out.k1 = ceil_div(in.z0 * in.y - in.y0 * in.delta, in.a);
  return out;
}

Thresholds k_thresholds(const BasicFactorization& bf, const LShape& L, const Semigroup3& T) {
  return k_thresholds(CaseInputs::from(bf, L, T));
}

DenumerantResult denumerant_case_i(const CaseInputs& in) {
  check_inputs(in);
  if (!in.delta.is_zero() || in.theta.is_zero()) throw DomainError("case i requires delta = 0 < theta");
  DenumerantResult res;
  CaseTrace& tr = res.trace;
  Assembler sums(tr);
  const Integer A = floor_div(in.z0, in.theta);
  tr.A_m = A;
  const auto [y0_bar, y0_hat] = need(split(in.y0, in.y), "y0/y");
  const auto [h_bar, h_hat] = need(split(in.h, in.y), "h/y");
  const Integer Spy = sums.plus(y0_hat, h_hat, in.y, A);
  const Integer common = (1 + A) * (1 + A + y0_bar) + (h_bar - 2) * tri(A);

  if (in.w.is_zero()) {
    tr.case_id = CaseId::kI_1;
    res.value = common + Spy;
    return res;
  }
  const Integer k0 = *k_thresholds(in).k0;
  tr.k0 = k0;
  tr.k0_placement = place(k0, A);
  if (k0.is_zero()) {
    tr.case_id = CaseId::kI_2_1;
    res.value = common + Spy;
    return res;
  }
  const auto [x0_bar, x0_hat] = need(split(in.x0, in.w), "x0/w");
  const auto [l_bar, l_hat] = need(split(in.l, in.w), "l/w");
  if (k0 <= A) {
    tr.case_id = CaseId::kI_2_2;
    res.value = common + k0 * (x0_bar - A) + l_bar * tri(k0 - 1) + Spy +
                sums.plus(x0_hat, l_hat, in.w, k0 - 1);
    return res;
  }
  tr.case_id = CaseId::kI_2_3;
  res.value = (1 + A) * (1 + x0_bar + y0_bar) + (l_bar + h_bar - 2) * tri(A) +
              sums.plus(x0_hat, l_hat, in.w, A) + Spy;
  return res;
}

DenumerantResult denumerant_case_ii(const CaseInputs& in) {
  check_inputs(in);
  if (!in.theta.is_zero() || in.delta.is_zero()) throw DomainError("case ii requires theta = 0 < delta");
  DenumerantResult res;
  CaseTrace& tr = res.trace;
  Assembler sums(tr);
  const Integer A = floor_div(in.z0, in.delta);
  tr.A_m = A;
  const auto [x0_bar, x0_hat] = need(split(in.x0, in.w), "x0/w");
  const auto [l_bar, l_hat] = need(split(in.l, in.w), "l/w");
  const Integer Spx = sums.plus(x0_hat, l_hat, in.w, A);
  const Integer common = (1 + A) * (1 + A + x0_bar) + (l_bar - 2) * tri(A);

  if (in.y.is_zero()) {
    tr.case_id = CaseId::kII_1;
    res.value = common + Spx;
    return res;
  }
  const Integer k1 = *k_thresholds(in).k1;
  tr.k1 = k1;
  tr.k1_placement = place(k1, A);
  if (k1.is_zero()) {
    tr.case_id = CaseId::kII_2_1;
    res.value = common + Spx;
    return res;
  }
  const auto [y0_bar, y0_hat] = need(split(in.y0, in.y), "y0/y");
  const auto [h_bar, h_hat] = need(split(in.h, in.y), "h/y");
  if (k1 <= A) {
    tr.case_id = CaseId::kII_2_2;
    res.value = common + k1 * (y0_bar - A) + h_bar * tri(k1 - 1) + Spx +
                sums.plus(y0_hat, h_hat, in.y, k1 - 1);
    return res;
  }
  tr.case_id = CaseId::kII_2_3;
  res.value = (1 + A) * (1 + x0_bar + y0_bar) + (l_bar + h_bar - 2) * tri(A) + Spx +
              sums.plus(y0_hat, h_hat, in.y, A);
  return res;
}

DenumerantResult denumerant_case_iii(const CaseInputs& in) {
  check_inputs(in);
  if (in.delta.is_zero() || in.theta.is_zero()) throw DomainError("case iii requires delta, theta > 0");
  DenumerantResult res;
  CaseTrace& tr = res.trace;
  Assembler sums(tr);
  const Integer A = floor_div(in.z0, in.delta + in.theta);
  tr.A_m = A;
  const Thresholds th = k_thresholds(in);
  tr.k0 = th.k0;
  tr.k1 = th.k1;
  if (th.k0) tr.k0_placement = place(*th.k0, A);
  if (th.k1) tr.k1_placement = place(*th.k1, A);

  // A = sum of S_k, driven by y and k1.
  Integer A_part;
  if (!th.k1 || th.k1->is_zero() || *th.k1 <= A) {
    const auto [z_bar, z_hat] = need(split(in.z0, in.delta), "z0/delta");
    const auto [t_bar, t_hat] = need(split(in.theta, in.delta), "theta/delta");
    if (!th.k1 || th.k1->is_zero()) {
      A_part = (1 + A) * z_bar - (t_bar + 1) * tri(A) + sums.minus(z_hat, t_hat, in.delta, A);
    } else {
      const Integer& k1 = *th.k1;
      const auto [y0_bar, y0_hat] = need(split(in.y0, in.y), "y0/y");
      const auto [h_bar, h_hat] = need(split(in.h, in.y), "h/y");
      A_part = (1 + A) * z_bar - (t_bar + 1) * tri(A) + k1 * (y0_bar - z_bar) +
               (h_bar + t_bar) * tri(k1 - 1) + sums.plus(y0_hat, h_hat, in.y, k1 - 1) +
               sums.minus_from(z_hat, t_hat, in.delta, k1, A);
    }
  } else {
    const auto [y0_bar, y0_hat] = need(split(in.y0, in.y), "y0/y");
    const auto [h_bar, h_hat] = need(split(in.h, in.y), "h/y");
    A_part = (1 + A) * y0_bar + (h_bar - 1) * tri(A) + sums.plus(y0_hat, h_hat, in.y, A);
  }

  // B = sum of T_k, driven by w and k0.
  Integer B_part;
  if (!th.k0 || th.k0->is_zero() || *th.k0 <= A) {
    const auto [z_bar, z_hat] = need(split(in.z0, in.theta), "z0/theta");
    const auto [d_bar, d_hat] = need(split(in.delta, in.theta), "delta/theta");
    if (!th.k0 || th.k0->is_zero()) {
      B_part = (1 + A) * z_bar - (d_bar + 1) * tri(A) + sums.minus(z_hat, d_hat, in.theta, A);
    } else {
      const Integer& k0 = *th.k0;
      const auto [x0_bar, x0_hat] = need(split(in.x0, in.w), "x0/w");
      const auto [l_bar, l_hat] = need(split(in.l, in.w), "l/w");
      B_part = (1 + A) * z_bar + k0 * (x0_bar - z_bar) + (l_bar + d_bar) * tri(k0 - 1) -
               (d_bar + 1) * tri(A) + sums.plus(x0_hat, l_hat, in.w, k0 - 1) +
               sums.minus_from(z_hat, d_hat, in.theta, k0, A);
    }
  } else {
    const auto [x0_bar, x0_hat] = need(split(in.x0, in.w), "x0/w");
    const auto [l_bar, l_hat] = need(split(in.l, in.w), "l/w");
    B_part = (1 + A) * x0_bar + (l_bar - 1) * tri(A) + sums.plus(x0_hat, l_hat, in.w, A);
  }

  const auto by_k = [](const std::optional<Integer>& k, const Integer& A_m, CaseId zero,
                       CaseId inside, CaseId beyond) {
    if (k->is_zero()) return zero;
    return *k <= A_m ? inside : beyond;
  };
  if (!th.k0 && !th.k1) {
    tr.case_id = CaseId::kIII_1;
  } else if (th.k0 && !th.k1) {
    tr.case_id = by_k(th.k0, A, CaseId::kIII_2_1, CaseId::kIII_2_2, CaseId::kIII_2_3);
  } else if (!th.k0) {
    tr.case_id = by_k(th.k1, A, CaseId::kIII_3_1, CaseId::kIII_3_2, CaseId::kIII_3_3);
  } else {
    tr.case_id = CaseId::kIII_4;
  }
  res.value = 1 + A + A_part + B_part;
  tr.A_part = std::move(A_part);
  tr.B_part = std::move(B_part);
  return res;
}

DenumerantResult denumerant_closed_form(const CaseInputs& in) {
  if (in.delta.is_zero()) return denumerant_case_i(in);
  if (in.theta.is_zero()) return denumerant_case_ii(in);
  return denumerant_case_iii(in);
}

DenumerantEngine::DenumerantEngine(const Semigroup3& T, LShapePreference pref) : T_(T) {
  if (T_.degenerate()) return;
  std::vector<LShape> shapes = compute_lshapes(T_);
  const std::size_t pick = pref == LShapePreference::kH2 && shapes.size() > 1 ? 1 : 0;
  lshape_ = shapes.at(pick);
  solver_.emplace(*lshape_, T_);
}

DenumerantResult DenumerantEngine::closed_form(const Integer& m) const {
  if (m.is_negative()) throw DomainError("closed_form requires m >= 0");
  DenumerantResult res;
  if (T_.degenerate()) {
    res.value = degenerate_value(m, T_);
    res.trace.path = EvalPath::kDegenerate;
    res.trace.reduced_target = m;
    return res;
  }
  auto bf = (*solver_)(m);
  if (!bf) {
    res.value = 0;
    res.trace.path = EvalPath::kNotInSemigroup;
  } else {
    res = denumerant_closed_form(CaseInputs::from(*bf, *lshape_, T_));
    res.trace.basic = *bf;
  }
  res.trace.lshape = lshape_;
  res.trace.reduced_target = m;
  return res;
}

DenumerantResult DenumerantEngine::operator()(const Integer& m) const {
  if (m.is_negative()) {
    DenumerantResult res;
    res.value = 0;
    res.trace.path = EvalPath::kNotInSemigroup;
    res.trace.reduced_target = m;
    return res;
  }
  if (T_.degenerate()) return closed_form(m);
  EhrhartSplit split{m, 0};
  if (m >= T_.P()) split = ehrhart_reduce(m, T_);
  DenumerantResult res;
  if (auto band = sertoz_shortcut(split.r, T_)) {
    res.value = std::move(*band);
    res.trace.path = EvalPath::kSertozBand;
    res.trace.lshape = lshape_;
    res.trace.reduced_target = split.r;
  } else {
    res = closed_form(split.r);
  }
  res.value += split.correction;
  res.trace.ehrhart_correction = std::move(split.correction);
  return res;
}

DenumerantResult denumerant(const Integer& m, const Semigroup3& T, LShapePreference pref) {
  return DenumerantEngine(T, pref)(m);
}

FullResult denumerant_full(const GeneratorTriple& gens, const Integer& n, LShapePreference pref) {
  FullResult out;
  out.certificate = reduce_problem(gens, n);
  if (!out.certificate.m_reduced) {
    out.value = 0;
    out.trace.path = EvalPath::kNotInSemigroup;
    return out;
  }
  DenumerantResult r = denumerant(*out.certificate.m_reduced, *out.certificate.reduced, pref);
  out.value = std::move(r.value);
  out.trace = std::move(r.trace);
  return out;
}

}  // namespace denum
