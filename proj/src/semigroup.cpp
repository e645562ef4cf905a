#include "denum/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

namespace denum {

GeneratorTriple GeneratorTriple::make(Integer n1, Integer n2, Integer n3) {
  if (!(n1 >= 1 && n1 < n2 && n2 < n3)) {
    throw DomainError("generators must satisfy 1 <= n1 < n2 < n3, got " + n1.to_string() + "," +
                      n2.to_string() + "," + n3.to_string());
  }
  return GeneratorTriple{std::move(n1), std::move(n2), std::move(n3)};
}

GeneratorTriple GeneratorTriple::from_unsorted(Integer x, Integer y, Integer z) {
  std::array<Integer, 3> v{std::move(x), std::move(y), std::move(z)};
  std::sort(v.begin(), v.end());
  if (v[0] == v[1] || v[1] == v[2]) throw DomainError("generators must be distinct");
  return make(std::move(v[0]), std::move(v[1]), std::move(v[2]));
}

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::kAEquals1: return "A_EQUALS_1";
    case CaseTag::kCInAB: return "C_IN_AB";
    case CaseTag::kCNotInAB: return "C_NOT_IN_AB";
    case CaseTag::kDegenerate11C: return "DEGENERATE_11C";
    case CaseTag::kDegenerate111: return "DEGENERATE_111";
  }
  return "?";
}

Semigroup3 Semigroup3::make(Integer a, Integer b, Integer c) {
  if (!(a >= 1 && a <= b && b <= c)) {
    throw DomainError("semigroup generators must satisfy 1 <= a <= b <= c");
  }
  if (gcd(a, b) != 1 || gcd(a, c) != 1 || gcd(b, c) != 1) {
    throw DomainError("semigroup generators must be pairwise coprime: " + a.to_string() + "," +
                      b.to_string() + "," + c.to_string());
  }
  Semigroup3 T;
  T.P_ = a * b * c;
  T.S_ = a + b + c;
  if (a == 1 && b == 1) {
    T.tag_ = c == 1 ? CaseTag::kDegenerate111 : CaseTag::kDegenerate11C;
  } else if (a == 1) {
    T.tag_ = CaseTag::kAEquals1;
  } else {
    T.tag_ = membership_two(c, a, b) ? CaseTag::kCInAB : CaseTag::kCNotInAB;
  }
  T.a_ = std::move(a);
  T.b_ = std::move(b);
  T.c_ = std::move(c);
  return T;
}

std::string Semigroup3::to_string() const {
  return "<" + a_.to_string() + "," + b_.to_string() + "," + c_.to_string() + ">";
}

namespace {

// The v in [1, g] with x*v = -n (mod g).
Integer lemma_multiplier(const Integer& x, const Integer& n, const Integer& g) {
  if (g == 1) return 1;
  Integer v = mod_reduce(-n * mod_inverse(x, g), g);
  return v.is_zero() ? g : v;
}

}  // namespace

ReductionCertificate reduce_problem(const GeneratorTriple& gens, const Integer& n) {
  if (n.is_negative()) throw DomainError("target must be nonnegative");
  ReductionCertificate cert;
  cert.g = gcd(gcd(gens.n1, gens.n2), gens.n3);
  const Integer a = div_exact(gens.n1, cert.g);
  const Integer b = div_exact(gens.n2, cert.g);
  const Integer c = div_exact(gens.n3, cert.g);
  cert.g_a = gcd(b, c);
  cert.g_b = gcd(a, c);
  cert.g_c = gcd(a, b);
  cert.scaled = {div_exact(a, cert.g_b * cert.g_c), div_exact(b, cert.g_a * cert.g_c),
                 div_exact(c, cert.g_a * cert.g_b)};
  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return cert.scaled[i] < cert.scaled[j]; });
  cert.permutation = order;
  cert.reduced = Semigroup3::make(cert.scaled[order[0]], cert.scaled[order[1]],
                                  cert.scaled[order[2]]);

  auto [nq, nr] = floor_divmod(n, cert.g);
  if (!nr.is_zero()) {
    cert.alpha = cert.beta = cert.gamma = 1;
    return cert;
  }
  cert.alpha = lemma_multiplier(a, nq, cert.g_a);
  cert.beta = lemma_multiplier(b, nq, cert.g_b);
  cert.gamma = lemma_multiplier(c, nq, cert.g_c);
  const Integer n_prime = nq - (cert.g_a - cert.alpha) * a - (cert.g_b - cert.beta) * b -
                          (cert.g_c - cert.gamma) * c;
  if (n_prime.is_negative()) return cert;
  const Integer denom = cert.g_a * cert.g_b * cert.g_c;
  if (!floor_mod(n_prime, denom).is_zero()) {
    throw InternalError("coprime reduction produced a non-divisible target");
  }
  cert.m_reduced = div_exact(n_prime, denom);
  return cert;
}

Integer frobenius_two(const Integer& p, const Integer& q) {
  if (p < 2 || q < 2) throw DomainError("frobenius_two requires p, q >= 2");
  if (gcd(p, q) != 1) throw DomainError("frobenius_two requires coprime arguments");
  return p * q - p - q;
}

Integer popoviciu_two(const Integer& m, const Integer& p, const Integer& q) {
  if (p < 2 || q < 2) throw DomainError("popoviciu_two requires p, q >= 2");
  if (gcd(p, q) != 1) throw DomainError("popoviciu_two requires coprime arguments");
  if (m.is_negative()) throw DomainError("popoviciu_two requires m >= 0");
  Integer f = mod_reduce(-m * mod_inverse(p, q), q);
  if (f.is_zero()) f = q;
  Integer g = mod_reduce(-m * mod_inverse(q, p), p);
  if (g.is_zero()) g = p;
  return div_exact(m + p * f + q * g, p * q) - 1;
}

std::optional<LambdaMu> membership_two(const Integer& c, const Integer& a, const Integer& b) {
  if (!(a >= 2 && a < b && b < c)) throw DomainError("membership_two requires 2 <= a < b < c");
  if (gcd(a, b) != 1) throw DomainError("membership_two requires gcd(a, b) = 1");
  Integer mu = mod_reduce(c * mod_inverse(b, a), a);
  Integer rest = c - mu * b;
  if (rest.is_negative()) return std::nullopt;
  return LambdaMu{div_exact(rest, a), std::move(mu)};
}

EhrhartSplit ehrhart_reduce(const Integer& m, const Semigroup3& T) {
  auto [q, r] = floor_divmod(m, T.P());
  Integer correction = div_exact(q * (m + r + T.S()), 2);
  return {std::move(r), std::move(correction)};
}

std::optional<Integer> sertoz_shortcut(const Integer& m, const Semigroup3& T) {
  if (m >= T.P() - T.S() + 1 && m <= T.P() - 1) {
    return div_exact(T.P() + T.S(), 2) - (T.P() - m);
  }
  return std::nullopt;
}

namespace {

std::int64_t require_small(const Integer& x, std::int64_t limit, const char* what) {
  auto v = x.to_int64();
  if (!v || *v > limit) {
    throw ResourceError(std::string(what) + " exceeds the oracle budget (" + x.to_string() + ")");
  }
  return *v;
}

}  // namespace

std::vector<Integer> apery_set(const Integer& m0, const Semigroup3& T, const OracleBudget& budget) {
  if (m0 < 1) throw DomainError("apery_set requires m0 >= 1");
  const std::int64_t mod = require_small(m0, budget.table_size, "Apery modulus");
  if (denumerant_oracle(m0, T, budget).is_zero()) {
    throw DomainError(m0.to_string() + " is not an element of " + T.to_string());
  }
  std::vector<std::optional<Integer>> dist(static_cast<std::size_t>(mod));
  using Item = std::pair<Integer, std::int64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[0] = Integer(0);
  pq.emplace(Integer(0), 0);
  const std::array<Integer, 3> gens{T.a(), T.b(), T.c()};
  std::array<std::int64_t, 3> steps{};
  for (int i = 0; i < 3; ++i) steps[i] = *floor_mod(gens[i], m0).to_int64();
  while (!pq.empty()) {
    auto [d, r] = pq.top();
    pq.pop();
    if (d != *dist[r]) continue;
    for (int i = 0; i < 3; ++i) {
      const std::int64_t nr = (r + steps[i]) % mod;
      Integer nd = d + gens[i];
      if (!dist[nr] || nd < *dist[nr]) {
        dist[nr] = nd;
        pq.emplace(std::move(nd), nr);
      }
    }
  }
  std::vector<Integer> out;
  out.reserve(dist.size());
  for (auto& d : dist) out.push_back(std::move(*d));
  return out;
}

std::vector<Factorization> enumerate_factorizations(const Integer& m, const Semigroup3& T,
                                                    const OracleBudget& budget) {
  if (m.is_negative()) throw DomainError("target must be nonnegative");
  if (floor_div(m, T.a()) * floor_div(m, T.b()) > budget.enumeration_pairs) {
    throw ResourceError("enumeration of " + m.to_string() + " over " + T.to_string() +
                        " exceeds the budget");
  }
  std::vector<Factorization> out;
  for (Integer z = 0; z * T.c() <= m; ++z) {
    const Integer rest_z = m - z * T.c();
    for (Integer y = 0; y * T.b() <= rest_z; ++y) {
      auto [x, r] = floor_divmod(rest_z - y * T.b(), T.a());
      if (r.is_zero()) out.push_back({std::move(x), y, z});
    }
  }
  return out;
}

namespace {

// d(n, <p, q>) with precomputed inverses, for the layer loops.
struct TwoGenCounter {
  Integer p, q, pq, p_inv_q, q_inv_p;
  TwoGenCounter(const Integer& p_, const Integer& q_)
      : p(p_), q(q_), pq(p_ * q_), p_inv_q(mod_inverse(p_, q_)), q_inv_p(mod_inverse(q_, p_)) {}
  Integer operator()(const Integer& n) const {
    Integer f = mod_reduce(-n * p_inv_q, q);
    if (f.is_zero()) f = q;
    Integer g = mod_reduce(-n * q_inv_p, p);
    if (g.is_zero()) g = p;
    return div_exact(n + p * f + q * g, pq) - 1;
  }
};

}  // namespace

Integer denumerant_oracle(const Integer& m, const Semigroup3& T, const OracleBudget& budget) {
  if (m.is_negative()) throw DomainError("target must be nonnegative");
  const Integer layers = floor_div(m, T.c()) + 1;
  require_small(layers, budget.popoviciu_layers, "Popoviciu layer count");
  Integer total = 0;
  if (T.a() >= 2) {
    const TwoGenCounter d2(T.a(), T.b());
    for (Integer n = m; !n.is_negative(); n -= T.c()) total += d2(n);
  } else {
    // a = 1: each layer contributes floor(n / b) + 1 choices of y.
    for (Integer n = m; !n.is_negative(); n -= T.c()) total += floor_div(n, T.b()) + 1;
  }
  return total;
}

std::vector<std::int64_t> denumerant_oracle_table(const Semigroup3& T, std::int64_t m_max,
                                                  const OracleBudget& budget) {
  if (m_max < 0) return {};
  if (m_max >= budget.table_size) throw ResourceError("oracle table exceeds the budget");
  const std::int64_t a = require_small(T.a(), INT32_MAX, "generator");
  const std::int64_t b = require_small(T.b(), INT32_MAX, "generator");
  const std::int64_t c = require_small(T.c(), INT32_MAX, "generator");
  std::vector<std::int64_t> d(static_cast<std::size_t>(m_max + 1));
  std::optional<TwoGenCounter> d2;
  if (a >= 2) d2.emplace(T.a(), T.b());
  for (std::int64_t m = 0; m <= m_max; ++m) {
    const std::int64_t layer = d2 ? *(*d2)(Integer(m)).to_int64() : m / b + 1;
    d[m] = layer + (m >= c ? d[m - c] : 0);
  }
  return d;
}

std::vector<std::int64_t> factorization_count_table(const Semigroup3& T, std::int64_t m_max,
                                                    const OracleBudget& budget) {
  if (m_max < 0) return {};
  if (m_max >= budget.table_size) throw ResourceError("count table exceeds the budget");
  std::vector<std::int64_t> ways(static_cast<std::size_t>(m_max + 1), 0);
  ways[0] = 1;
  for (const Integer* g : {&T.a(), &T.b(), &T.c()}) {
    const std::int64_t step = require_small(*g, INT32_MAX, "generator");
    for (std::int64_t m = step; m <= m_max; ++m) ways[m] += ways[m - step];
  }
  return ways;
}

}  // namespace denum
