#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "denum/integer.hpp"

namespace denum {

// Raw generators as given by a caller: 1 <= n1 < n2 < n3.
struct GeneratorTriple {
  Integer n1, n2, n3;

  // Validates and returns the triple; throws DomainError otherwise.
  static GeneratorTriple make(Integer n1, Integer n2, Integer n3);
  // Sorts three positive generators first. Duplicates throw DomainError.
  static GeneratorTriple from_unsorted(Integer x, Integer y, Integer z);
};

enum class CaseTag { kAEquals1, kCInAB, kCNotInAB, kDegenerate11C, kDegenerate111 };

std::string to_string(CaseTag tag);

// Pairwise coprime generators a <= b <= c with derived P, S and case tag.
class Semigroup3 {
 public:
  // Throws DomainError unless 1 <= a <= b <= c and the triple is pairwise
  // coprime.
  static Semigroup3 make(Integer a, Integer b, Integer c);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& P() const { return P_; }
  const Integer& S() const { return S_; }
  CaseTag case_tag() const { return tag_; }
  bool degenerate() const {
    return tag_ == CaseTag::kDegenerate11C || tag_ == CaseTag::kDegenerate111;
  }
  std::string to_string() const;

  friend bool operator==(const Semigroup3& x, const Semigroup3& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
  }

 private:
  Semigroup3() = default;
  Integer a_, b_, c_, P_, S_;
  CaseTag tag_ = CaseTag::kCNotInAB;
};

struct ReductionCertificate {
  Integer g;  // gcd(n1, n2, n3) divided out first
  Integer g_a, g_b, g_c;
  Integer alpha, beta, gamma;
  // Present only when the reduced problem has a nonnegative target. Absent
  // means the denumerant is 0 (negative n' or g does not divide n).
  std::optional<Semigroup3> reduced;
  std::optional<Integer> m_reduced;
  // permutation[i] is the raw position (0..2) of the i-th sorted reduced
  // generator.
  std::array<int, 3> permutation{0, 1, 2};
  // The reduced generators before sorting.
  std::array<Integer, 3> scaled{};
};

ReductionCertificate reduce_problem(const GeneratorTriple& gens, const Integer& n);

// pq - p - q for coprime p, q >= 2.
Integer frobenius_two(const Integer& p, const Integer& q);
// d(m, <p, q>) for coprime p, q >= 2 and m >= 0.
Integer popoviciu_two(const Integer& m, const Integer& p, const Integer& q);

struct LambdaMu {
  Integer lambda, mu;
};
// c = lambda*a + mu*b with 0 <= mu < a, lambda >= 0, when c is in <a, b>.
std::optional<LambdaMu> membership_two(const Integer& c, const Integer& a, const Integer& b);

struct EhrhartSplit {
  Integer r;
  Integer correction;
};
EhrhartSplit ehrhart_reduce(const Integer& m, const Semigroup3& T);
std::optional<Integer> sertoz_shortcut(const Integer& m, const Semigroup3& T);

struct OracleBudget {
  // Enumeration runs when floor(m/a) * floor(m/b) stays below this.
  std::int64_t enumeration_pairs = 100'000'000;
  // Popoviciu layers, i.e. floor(m/c) + 1.
  std::int64_t popoviciu_layers = 10'000'000;
  // Apery modulus and table sizes for the small-scale oracles.
  std::int64_t table_size = 10'000'000;
};

// Ap(m0, T) indexed by residue. m0 not in T throws DomainError.
std::vector<Integer> apery_set(const Integer& m0, const Semigroup3& T,
                               const OracleBudget& budget = {});

struct Factorization {
  Integer x, y, z;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// F(m, T) ordered by z, then y.
std::vector<Factorization> enumerate_factorizations(const Integer& m, const Semigroup3& T,
                                                    const OracleBudget& budget = {});

// Sum of two-generator denumerants over the layers z = 0..floor(m/c).
Integer denumerant_oracle(const Integer& m, const Semigroup3& T, const OracleBudget& budget = {});

// d(m, T) for all 0 <= m <= m_max, by the layer recurrence D(m) = d2(m) + D(m - c).
std::vector<std::int64_t> denumerant_oracle_table(const Semigroup3& T, std::int64_t m_max,
                                                  const OracleBudget& budget = {});
// |F(m, T)| for all 0 <= m <= m_max, by the coin-change count over a, b, c.
std::vector<std::int64_t> factorization_count_table(const Semigroup3& T, std::int64_t m_max,
                                                    const OracleBudget& budget = {});

}  // namespace denum
