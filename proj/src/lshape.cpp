#include "denum/lshape.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

namespace denum {

LShape LShape::make(Integer l, Integer h, Integer w, Integer y, const Semigroup3& T) {
  auto [delta, rd] = floor_divmod(l * T.a() - y * T.b(), T.c());
  auto [theta, rt] = floor_divmod(h * T.b() - w * T.a(), T.c());
  if (!rd.is_zero() || !rt.is_zero()) {
    throw DomainError("L(" + l.to_string() + "," + h.to_string() + "," + w.to_string() + "," +
                      y.to_string() + ") is not compatible with " + T.to_string());
  }
  return LShape{std::move(l), std::move(h), std::move(w), std::move(y), std::move(delta),
                std::move(theta)};
}

bool LShape::contains(const Integer& i, const Integer& j) const {
  if (i.is_negative() || j.is_negative() || i >= l || j >= h) return false;
  return !(i >= l - w && j >= h - y);
}

std::string LShape::to_string() const {
  return "L(" + l.to_string() + "," + h.to_string() + "," + w.to_string() + "," + y.to_string() + ")";
}

bool validate_lshape(const LShape& L, const Semigroup3& T) {
  if (L.w.is_negative() || L.y.is_negative() || L.w >= L.l || L.y >= L.h) return false;
  if (L.l * L.h - L.w * L.y != T.c()) return false;
  if (gcd(gcd(L.l, L.h), gcd(L.w, L.y)) != 1) return false;
  const Integer da = L.l * T.a() - L.y * T.b();
  const Integer tb = L.h * T.b() - L.w * T.a();
  if (!floor_mod(da, T.c()).is_zero() || !floor_mod(tb, T.c()).is_zero()) return false;
  if (da.is_negative() || tb.is_negative() || (da.is_zero() && tb.is_zero())) return false;
  const Integer delta = div_exact(da, T.c());
  const Integer theta = div_exact(tb, T.c());
  if (delta != L.delta || theta != L.theta) return false;
  return T.a() == L.h * delta + L.y * theta && T.b() == L.w * delta + L.l * theta;
}

namespace {

// Smallest k >= 1 such that [k*lo, k*hi] holds an integer, for rationals
// 0 < lo <= hi given as num/den with den > 0. Continued-fraction descent to
// the simplest fraction in the closed interval.
Integer min_denominator(Integer ln, Integer ld, Integer hn, Integer hd) {
  std::vector<Integer> terms;
  Integer p, q;
  while (true) {
    auto [fl, rem] = floor_divmod(ln, ld);
    if (rem.is_zero()) {
      p = std::move(fl);
      q = 1;
      break;
    }
    if ((fl + 1) * hd <= hn) {
      p = fl + 1;
      q = 1;
      break;
    }
    // Both ends lie in (fl, fl + 1): recurse on the reciprocals of the
    // fractional parts, which swaps the ends.
    Integer new_ln = hd, new_ld = hn - fl * hd;
    Integer new_hn = ld, new_hd = std::move(rem);
    ln = std::move(new_ln);
    ld = std::move(new_ld);
    hn = std::move(new_hn);
    hd = std::move(new_hd);
    terms.push_back(std::move(fl));
  }
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    Integer np = *it * p + q;
    q = std::move(p);
    p = std::move(np);
  }
  return q;
}

LShape case1_lshape(const Semigroup3& T) {
  const Integer& a = T.a();
  const Integer& b = T.b();
  const Integer& c = T.c();
  // l = min{k >= 1 : (k rho mod c) b <= k a}, rho = a b^{-1} mod c, and
  // symmetrically for h.
  const Integer rho = mod_reduce(a * mod_inverse(b, c), c);
  const Integer sigma = mod_reduce(b * mod_inverse(a, c), c);
  Integer l = min_denominator(rho * b - a, b * c, rho, c);
  Integer h = min_denominator(sigma * a - b, a * c, sigma, c);
  Integer y = mod_reduce(l * rho, c);
  Integer w = mod_reduce(h * sigma, c);
  return LShape::make(std::move(l), std::move(h), std::move(w), std::move(y), T);
}

}  // namespace

std::vector<LShape> compute_lshapes(const Semigroup3& T) {
  const Integer& a = T.a();
  const Integer& b = T.b();
  const Integer& c = T.c();
  std::vector<LShape> out;
  switch (T.case_tag()) {
    case CaseTag::kDegenerate11C:
    case CaseTag::kDegenerate111:
      throw DomainError("no L-shape machinery for degenerate semigroup " + T.to_string());
    case CaseTag::kCNotInAB:
      out.push_back(case1_lshape(T));
      break;
    case CaseTag::kCInAB: {
      const LambdaMu lm = *membership_two(c, a, b);
      auto [lq, ls] = floor_divmod(lm.lambda, b);
      out.push_back(LShape::make(lm.lambda + b, a, b, a - lm.mu, T));
      out.push_back(LShape::make(b, (1 + lq) * a + lm.mu, b - ls, a, T));
      break;
    }
    case CaseTag::kAEquals1: {
      auto [cq, cr] = floor_divmod(c, b);
      out.push_back(LShape::make(c, 1, b, 0, T));
      out.push_back(LShape::make(b, 1 + cq, b - cr, 1, T));
      break;
    }
  }
  for (const LShape& L : out) {
    if (validate_lshape(L, T)) continue;
    if (c <= 10'000) {
      std::vector<LShape> brute = mdd_bruteforce(T);
      if (!brute.empty()) {
        std::sort(brute.begin(), brute.end(),
                  [](const LShape& x, const LShape& y) { return x.delta > y.delta; });
        return brute;
      }
    }
    throw InternalError("L-shape construction failed for " + T.to_string() + ": " + L.to_string());
  }
  return out;
}

std::vector<LShape> mdd_bruteforce(const Semigroup3& T, std::int64_t max_c) {
  if (T.degenerate()) throw DomainError("no L-shapes for degenerate semigroup " + T.to_string());
  if (T.c() > max_c) throw ResourceError("mdd_bruteforce guard: c = " + T.c().to_string());
  const std::int64_t a = T.a().small_value();
  const std::int64_t b = T.b().small_value();
  const std::int64_t c = T.c().small_value();

  // Class minima of s a + t b modulo c.
  std::vector<std::int64_t> best(c, -1);
  using Item = std::pair<std::int64_t, std::int64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  best[0] = 0;
  pq.emplace(0, 0);
  while (!pq.empty()) {
    auto [d, r] = pq.top();
    pq.pop();
    if (d != best[r]) continue;
    for (std::int64_t g : {a, b}) {
      const std::int64_t nr = (r + g) % c, nd = d + g;
      if (best[nr] < 0 || nd < best[nr]) {
        best[nr] = nd;
        pq.emplace(nd, nr);
      }
    }
  }

  // All minimizing squares per class.
  const std::int64_t b_inv_a = a == 1 ? 0 : mod_inverse(b, a).small_value();
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> options(c);
  std::vector<std::int64_t> tied;
  for (std::int64_t r = 0; r < c; ++r) {
    const std::int64_t M = best[r];
    const std::int64_t t0 = a == 1 ? 0 : static_cast<std::int64_t>((static_cast<__int128>(M % a) * b_inv_a) % a);
    for (std::int64_t t = t0; t * b <= M; t += a) options[r].emplace_back((M - t * b) / a, t);
    if (options[r].size() > 1) tied.push_back(r);
  }

  const std::int64_t a_inv_c = mod_inverse(T.a(), T.c()).small_value();
  const std::int64_t b_inv_c = mod_inverse(T.b(), T.c()).small_value();
  std::vector<LShape> found;
  std::int64_t s_max = 0, t_max = 0;
  for (const auto& opts : options) {
    for (auto [s, t] : opts) {
      s_max = std::max(s_max, s);
      t_max = std::max(t_max, t);
    }
  }
  const std::int64_t stride = t_max + 1;
  std::vector<char> grid(static_cast<std::size_t>((s_max + 1) * stride));
  auto try_selection = [&](const std::vector<std::size_t>& pick) {
    std::fill(grid.begin(), grid.end(), 0);
    std::int64_t l = 0, h = 0;
    for (std::int64_t r = 0; r < c; ++r) {
      auto [s, t] = options[r][pick[r]];
      grid[static_cast<std::size_t>(s * stride + t)] = 1;
      if (t == 0) l = std::max(l, s + 1);
      if (s == 0) h = std::max(h, t + 1);
    }
    auto has = [&](std::int64_t s, std::int64_t t) { return grid[static_cast<std::size_t>(s * stride + t)] != 0; };
    for (std::int64_t r = 0; r < c; ++r) {
      auto [s, t] = options[r][pick[r]];
      if (s > 0 && !has(s - 1, t)) return;
      if (t > 0 && !has(s, t - 1)) return;
    }
    const std::int64_t y = static_cast<std::int64_t>((static_cast<__int128>(l) * a % c) * b_inv_c % c);
    const std::int64_t w = static_cast<std::int64_t>((static_cast<__int128>(h) * b % c) * a_inv_c % c);
    if (w >= l || y >= h || l * h - w * y != c) return;
    for (std::int64_t r = 0; r < c; ++r) {
      auto [s, t] = options[r][pick[r]];
      if (s >= l || t >= h || (s >= l - w && t >= h - y)) return;
    }
    LShape L = LShape::make(l, h, w, y, T);
    if (!validate_lshape(L, T)) return;
    if (std::find(found.begin(), found.end(), L) == found.end()) found.push_back(std::move(L));
  };

  std::vector<std::size_t> pick(c, 0);
  try_selection(pick);  // fewest b's in every tied class
  for (std::int64_t r : tied) pick[r] = options[r].size() - 1;
  try_selection(pick);  // most b's in every tied class
  std::size_t combos = 1;
  for (std::int64_t r : tied) {
    combos *= options[r].size();
    if (combos > 4096) break;
  }
  if (!tied.empty() && combos <= 4096) {
    std::fill(pick.begin(), pick.end(), 0);
    for (std::size_t n = 0; n < combos; ++n) {
      std::size_t rest = n;
      for (std::int64_t r : tied) {
        pick[r] = rest % options[r].size();
        rest /= options[r].size();
      }
      try_selection(pick);
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

FactorizationSolver::FactorizationSolver(LShape L, const Semigroup3& T)
    : L_(std::move(L)), a_(T.a()), b_(T.b()), c_(T.c()), a_inv_(mod_inverse(T.a(), T.c())) {}

std::optional<BasicFactorization> FactorizationSolver::operator()(const Integer& m) const {
  const Integer& l = L_.l;
  const Integer& h = L_.h;
  const Integer& w = L_.w;
  const Integer& y = L_.y;
  // Seed (i, 0) in the residue class of m, then locate the tile covering it.
  // Along row 0 the tile translated by A u + B v (B = floor(A y / h)) starts
  // at x_A = A l - w floor(A y / h), strictly increasing in A; the covering
  // tile is the last one starting at or before i.
  const Integer i = mod_reduce(mod_reduce(m, c_) * a_inv_, c_);
  auto start = [&](const Integer& A) { return A * l - w * floor_div(A * y, h); };
  Integer lo = floor_div((i - w) * h, c_) - 1;
  Integer hi = floor_div(i * h, c_);
  while (lo < hi) {
    Integer mid = lo + floor_div(hi - lo + 1, 2);
    if (start(mid) <= i) {
      lo = std::move(mid);
    } else {
      hi = mid - 1;
    }
  }
  const Integer& A = lo;
  const Integer B = floor_div(A * y, h);
  Integer x0 = i - A * l + B * w;
  Integer y0 = A * y - B * h;
  if (!L_.contains(x0, y0)) {
    throw InternalError("tile search left the L-shape for m = " + m.to_string());
  }
  auto [z0, rem] = floor_divmod(m - x0 * a_ - y0 * b_, c_);
  if (!rem.is_zero()) throw InternalError("basic factorization residue mismatch");
  if (z0.is_negative()) return std::nullopt;
  return BasicFactorization{std::move(x0), std::move(y0), std::move(z0)};
}

std::optional<BasicFactorization> basic_factorization(const Integer& m, const LShape& L,
                                                      const Semigroup3& T) {
  if (m.is_negative()) return std::nullopt;
  return FactorizationSolver(L, T)(m);
}

bool in_two_generated(const Integer& n, const Integer& p, const Integer& q) {
  if (n.is_negative()) return false;
  if (p == 1 || q == 1) return true;
  const Integer y = mod_reduce(n * mod_inverse(q, p), p);
  return n - y * q >= 0;
}

std::optional<Integer> min_multiple_in(const Integer& x, const Integer& p, const Integer& q,
                                       std::int64_t max_k) {
  for (std::int64_t k = 1; k <= max_k; ++k) {
    if (in_two_generated(x * k, p, q)) return Integer(k);
  }
  return std::nullopt;
}

}  // namespace denum
