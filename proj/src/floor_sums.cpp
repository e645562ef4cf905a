#include "denum/floor_sums.hpp"

#include "denum/kernels.hpp"

namespace denum {

std::string to_string(Sign sign) { return sign == Sign::kPlus ? "plus" : "minus"; }

void FloorSumQuery::validate() const {
  if (q < 1) throw DomainError("floor sum requires q >= 1");
  if (s.is_negative() || s >= q) throw DomainError("floor sum requires 0 <= s < q");
  if (t.is_negative() || t >= q) throw DomainError("floor sum requires 0 <= t < q");
  if (N < -1) throw DomainError("floor sum requires N >= -1");
}

std::string FloorSumQuery::to_string() const {
  return std::string(sign == Sign::kPlus ? "S+(" : "S-(") + s.to_string() + "," + t.to_string() +
         "," + q.to_string() + "," + N.to_string() + ")";
}

std::string to_string(SumBranch branch) {
  switch (branch) {
    case SumBranch::kEmpty: return "empty";
    case SumBranch::kZeroSlope: return "zero-slope";
    case SumBranch::kZeroMax: return "zero-max";
    case SumBranch::kDivisible: return "divisible";
    case SumBranch::kNoHsBelow: return "a";
    case SumBranch::kPartialPeriod: return "b.1";
    case SumBranch::kOnePeriod: return "b.2";
    case SumBranch::kManyPeriods: return "b.3";
  }
  return "?";
}

namespace {

Integer triangle(const Integer& n) { return div_exact(n * (n - 1), 2); }  // n(n-1)/2

// Largest values handed to the fixed-width kernels.
constexpr std::int64_t kKernelValueLimit = std::int64_t{1} << 60;
constexpr std::int64_t kKernelLengthLimit = std::int64_t{1} << 40;

}  // namespace

HsIndexStream::HsIndexStream(Sign sign, Integer s_hat, Integer q_hat, Integer t)
    : sign_(sign), s_hat_(std::move(s_hat)), q_hat_(std::move(q_hat)), t_(std::move(t)) {
  inv_ = mod_inverse(q_hat_, t_);
  if (sign_ == Sign::kPlus) {
    u_ = mod_reduce(t_, q_hat_);
    rho0_ = mod_reduce(s_hat_, q_hat_);
    step_plain_ = mod_reduce(-inv_ * u_, t_);
    step_wrap_ = mod_reduce(inv_ * (q_hat_ - u_), t_);
  } else {
    u_ = mod_reduce(-t_, q_hat_);
    const Integer offset = s_hat_ >= q_hat_ ? 1 : 0;
    rho0_ = mod_reduce(s_hat_ + offset * u_, q_hat_);
    step_plain_ = mod_reduce(inv_ * u_, t_);
    step_wrap_ = mod_reduce(inv_ * (u_ - q_hat_), t_);
  }
  first_ = index_at(rho0_);
  last_ = index_at(mod_reduce(rho0_ + (q_hat_ - 1) * u_, q_hat_));
}

Integer HsIndexStream::index_at(const Integer& rho) const {
  if (sign_ == Sign::kPlus) return mod_reduce(inv_ * (s_hat_ - rho), t_);
  return mod_reduce(inv_ * (rho - s_hat_), t_);
}

HsIndexStream::iterator HsIndexStream::begin() const {
  iterator it;
  it.owner_ = this;
  it.rho_ = rho0_;
  it.j_ = first_;
  it.left_ = q_hat_;
  return it;
}

HsIndexStream::iterator& HsIndexStream::iterator::operator++() {
  --left_;
  if (left_.is_zero()) return *this;
  rho_ += owner_->u_;
  if (rho_ >= owner_->q_hat_) {
    rho_ -= owner_->q_hat_;
    j_ += owner_->step_wrap_;
  } else {
    j_ += owner_->step_plain_;
  }
  return *this;
}

HsIndexStream::Tally HsIndexStream::tally_below(const Integer& limit) const {
  Tally out{0, 0};
  if (limit.sign() <= 0) return out;
  const Integer len = min(limit, t_);
  // Dense index sets are cheaper to scan residue by residue than to stream.
  if (t_ < kKernelValueLimit && len < kKernelLengthLimit && q_hat_ * 8 >= t_) {
    const std::int64_t t = t_.small_value();
    const std::int64_t qh = q_hat_.small_value();
    const kernels::HsTally k = kernels::hs_tally({s_hat_.small_value(),
                                                  sign_ == Sign::kPlus ? qh : t - qh, t, qh,
                                                  len.small_value()});
    out.count = k.count;
    out.sum = from_int128(k.index_sum);
    return out;
  }
  for (auto it = begin(); it != end(); ++it) {
    if (*it >= limit) break;
    ++out.count;
    out.sum += *it;
  }
  return out;
}

namespace {

struct LightProfile {
  Integer t_eff, q_bar, q_hat_eff;
  HsIndexStream J;
};

LightProfile make_profile(Sign sign, const Integer& s, const Integer& t, const Integer& q) {
  const Integer g = gcd(t, q);
  LightProfile p;
  p.q_bar = floor_div(q, t);
  if (g == 1) {
    p.t_eff = t;
    p.q_hat_eff = q - p.q_bar * t;
    p.J = HsIndexStream(sign, mod_reduce(s, t), p.q_hat_eff, t);
  } else {
    p.t_eff = div_exact(t, g);
    p.q_hat_eff = mod_reduce(div_exact(q, g), p.t_eff);
    p.J = HsIndexStream(sign, mod_reduce(floor_div(s, g), p.t_eff), p.q_hat_eff, p.t_eff);
  }
  return p;
}

// Sum of the hS indices in [0, M), by the period structure of J.
Integer hs_sum_below(const LightProfile& p, const Integer& M, SumBranch& branch) {
  const HsIndexStream& J = p.J;
  if (J.front() >= M) {
    branch = SumBranch::kNoHsBelow;
    return 0;
  }
  if (J.back() >= M) {
    branch = SumBranch::kPartialPeriod;
    return J.tally_below(M).sum;
  }
  const Integer S_J = J.tally_below(p.t_eff).sum;
  if (J.front() + p.t_eff >= M) {
    branch = SumBranch::kOnePeriod;
    return S_J;
  }
  branch = SumBranch::kManyPeriods;
  const Integer u = floor_div(M - 1, p.t_eff);
  const Integer base = u * p.t_eff;
  const HsIndexStream::Tally K = J.tally_below(M - base);
  const Integer S_K = K.sum + K.count * base;
  return u * S_J + p.q_hat_eff * p.t_eff * triangle(u) + S_K;
}

}  // namespace

HsProfile hs_index_stream(Sign sign, const Integer& s, const Integer& t, const Integer& q) {
  if (t < 1) throw DomainError("hS profile requires t >= 1");
  if (s.is_negative() || s >= q) throw DomainError("hS profile requires 0 <= s < q");
  if (floor_mod(q, t).is_zero()) throw DomainError("hS profile requires t not dividing q");
  LightProfile lp = make_profile(sign, s, t, q);
  HsProfile p;
  p.sign = sign;
  p.g = gcd(t, q);
  p.t_eff = lp.t_eff;
  p.q_bar = lp.q_bar;
  p.q_hat_eff = lp.q_hat_eff;
  p.s_hat_eff = p.g == 1 ? mod_reduce(s, t) : mod_reduce(floor_div(s, p.g), p.t_eff);
  p.size_J = lp.q_hat_eff;
  p.S_J = lp.J.tally_below(lp.t_eff).sum;
  p.J = std::move(lp.J);
  return p;
}

Integer s_sum_direct(const FloorSumQuery& query, std::int64_t max_terms) {
  query.validate();
  if (query.N >= max_terms) {
    throw ResourceError("direct floor sum with N = " + query.N.to_string() + " exceeds the budget");
  }
  const Integer count = query.N + 1;
  if (query.q < kKernelValueLimit && count < kKernelLengthLimit) {
    const __int128 sum = kernels::floor_scan({query.s.small_value(), query.t.small_value(),
                                              query.q.small_value(), count.small_value(),
                                              query.sign == Sign::kMinus});
    return from_int128(sum);
  }
  Integer total = 0;
  Integer numer = query.s;
  const Integer step = query.sign == Sign::kPlus ? query.t : -query.t;
  for (Integer k = 0; k < count; ++k) {
    total += floor_div(numer, query.q);
    numer += step;
  }
  return total;
}

SumEvaluation s_sum_traced(const FloorSumQuery& query) {
  query.validate();
  const Integer& s = query.s;
  const Integer& t = query.t;
  const Integer& q = query.q;
  const Integer& N = query.N;
  if (N.is_negative()) return {0, SumBranch::kEmpty};
  if (t.is_zero()) return {0, SumBranch::kZeroSlope};
  const bool divisible = floor_mod(q, t).is_zero();
  if (query.sign == Sign::kPlus) {
    const Integer M = floor_div(s + N * t, q);
    if (M.is_zero()) return {0, SumBranch::kZeroMax};
    const Integer tail = M * (N - ceil_div(M * q - s, t) + 1);
    if (divisible) return {div_exact(q, t) * triangle(M) + tail, SumBranch::kDivisible};
    const LightProfile p = make_profile(Sign::kPlus, s, t, q);
    SumBranch branch;
    Integer hs = hs_sum_below(p, M, branch);
    return {p.q_bar * triangle(M) + tail + hs, branch};
  }
  const Integer M = -floor_div(s - N * t, q);
  if (M.is_zero()) return {0, SumBranch::kZeroMax};
  const Integer tail = M * (N - floor_div(s + (M - 1) * q, t));
  if (divisible) return {-(div_exact(q, t) * triangle(M)) - tail, SumBranch::kDivisible};
  const LightProfile p = make_profile(Sign::kMinus, s, t, q);
  SumBranch branch;
  Integer hs = hs_sum_below(p, M, branch);
  return {-(p.q_bar * triangle(M)) - tail - hs, branch};
}

Integer shifted_sum(Sign sign, const Integer& s, const Integer& t, const Integer& q,
                    const Integer& n1, const Integer& n2) {
  if (n1.is_negative()) throw DomainError("shifted_sum requires n1 >= 0");
  if (n2 < n1) return 0;
  const Integer alpha = sign == Sign::kPlus ? s + n1 * t : s - n1 * t;
  auto [alpha_bar, alpha_hat] = floor_divmod(alpha, q);
  return alpha_bar * (n2 - n1 + 1) + s_sum(FloorSumQuery{sign, alpha_hat, t, q, n2 - n1});
}

Integer floor_sum_linear(const Integer& n_in, const Integer& m_in, const Integer& a_in,
                         const Integer& b_in) {
  if (n_in.is_negative() || m_in < 1) throw DomainError("floor_sum_linear requires n >= 0, m >= 1");
  Integer n = n_in, m = m_in, a = a_in, b = b_in;
  Integer ans = 0;
  if (a.is_negative() || a >= m) {
    auto [qa, ra] = floor_divmod(a, m);
    ans += triangle(n) * qa;
    a = std::move(ra);
  }
  if (b.is_negative() || b >= m) {
    auto [qb, rb] = floor_divmod(b, m);
    ans += n * qb;
    b = std::move(rb);
  }
  while (true) {
    if (a >= m) {
      auto [qa, ra] = floor_divmod(a, m);
      ans += triangle(n) * qa;
      a = std::move(ra);
    }
    if (b >= m) {
      auto [qb, rb] = floor_divmod(b, m);
      ans += n * qb;
      b = std::move(rb);
    }
    const Integer y_max = a * n + b;
    if (y_max < m) break;
    auto [qn, rn] = floor_divmod(y_max, m);
    n = std::move(qn);
    b = std::move(rn);
    std::swap(m, a);
  }
  return ans;
}

Integer floor_sum_euclid(const FloorSumQuery& query) {
  query.validate();
  if (query.N.is_negative()) return 0;
  return floor_sum_linear(query.N + 1, query.q, query.sign == Sign::kPlus ? query.t : -query.t,
                          query.s);
}

}  // namespace denum
