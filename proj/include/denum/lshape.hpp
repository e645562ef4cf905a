#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "denum/integer.hpp"
#include "denum/semigroup.hpp"

namespace denum {

// L(l, h, w, y): the l x h rectangle of unit squares minus its top-right
// w x y notch. delta and theta are derived from the semigroup.
struct LShape {
  Integer l, h, w, y;
  Integer delta, theta;

  // Derives delta and theta; throws DomainError when (la - yb) or (hb - wa)
  // is not divisible by c. Does not run the full validity check.
  static LShape make(Integer l, Integer h, Integer w, Integer y, const Semigroup3& T);

  bool contains(const Integer& i, const Integer& j) const;
  // "L(l,h,w,y)"
  std::string to_string() const;

  friend bool operator==(const LShape& x, const LShape& y) {
    return x.l == y.l && x.h == y.h && x.w == y.w && x.y == y.y;
  }
  friend auto operator<=>(const LShape& x, const LShape& y) {
    return std::tie(x.l, x.h, x.w, x.y) <=> std::tie(y.l, y.h, y.w, y.y);
  }
};

struct BasicFactorization {
  Integer x0, y0, z0;
  friend bool operator==(const BasicFactorization&, const BasicFactorization&) = default;
};

// All conditions of the L-shape characterization, plus consistency of the
// stored delta and theta.
bool validate_lshape(const LShape& L, const Semigroup3& T);

// The related L-shapes: one for C_NOT_IN_AB, two otherwise (the (1,0) shape
// first). Degenerate semigroups throw DomainError.
std::vector<LShape> compute_lshapes(const Semigroup3& T);

// Every L-shape satisfying the minimum distance diagram definition, rebuilt
// from the class minima table. c above max_c throws ResourceError.
std::vector<LShape> mdd_bruteforce(const Semigroup3& T, std::int64_t max_c = 10'000);

// Reusable basic factorization for one (L, T) pair.
class FactorizationSolver {
 public:
  FactorizationSolver(LShape L, const Semigroup3& T);
  // Absent when m is not in T.
  std::optional<BasicFactorization> operator()(const Integer& m) const;
  const LShape& lshape() const { return L_; }

 private:
  LShape L_;
  Integer a_, b_, c_, a_inv_;
};

std::optional<BasicFactorization> basic_factorization(const Integer& m, const LShape& L,
                                                      const Semigroup3& T);

// Whether n >= 0 is in <p, q> (p, q >= 1 coprime).
bool in_two_generated(const Integer& n, const Integer& p, const Integer& q);

// Smallest k in [1, max_k] with k*x in <p, q>, by search.
std::optional<Integer> min_multiple_in(const Integer& x, const Integer& p, const Integer& q,
                                       std::int64_t max_k);

}  // namespace denum
