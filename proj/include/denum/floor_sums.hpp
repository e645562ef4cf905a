#pragma once

#include <cstdint>
#include <iterator>
#include <string>

#include "denum/integer.hpp"

namespace denum {

enum class Sign { kPlus, kMinus };

std::string to_string(Sign sign);

// S±(s, t, q, N) = sum_{k=0}^{N} floor((s ± k t) / q), with 0 <= s, t < q and
// N >= -1 (N = -1 is the empty sum).
struct FloorSumQuery {
  Sign sign = Sign::kPlus;
  Integer s, t, q, N;

  // Throws DomainError when the invariants do not hold.
  void validate() const;
  std::string to_string() const;
  friend bool operator==(const FloorSumQuery&, const FloorSumQuery&) = default;
};

// The hS indices of one period, emitted in increasing order with O(1) state.
class HsIndexStream {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Integer;
    using difference_type = std::ptrdiff_t;
    using pointer = const Integer*;
    using reference = const Integer&;

    iterator() = default;
    const Integer& operator*() const { return j_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.left_.is_zero(); }

   private:
    friend class HsIndexStream;
    const HsIndexStream* owner_ = nullptr;
    Integer rho_, j_, left_;
  };

  HsIndexStream() = default;
  HsIndexStream(Sign sign, Integer s_hat, Integer q_hat, Integer t);

  iterator begin() const;
  std::default_sentinel_t end() const { return {}; }
  const Integer& front() const { return first_; }
  const Integer& back() const { return last_; }
  const Integer& size() const { return q_hat_; }
  const Integer& period() const { return t_; }

  struct Tally {
    Integer count, sum;
  };
  // Count and sum of the indices below limit (limit <= period()).
  Tally tally_below(const Integer& limit) const;

 private:
  Integer index_at(const Integer& rho) const;

  Sign sign_ = Sign::kPlus;
  Integer s_hat_, q_hat_, t_;
  Integer inv_;            // q_hat^{-1} mod t
  Integer u_;              // residue step between consecutive rho
  Integer rho0_;
  Integer step_plain_;     // index increment when rho does not wrap
  Integer step_wrap_;      // index increment when rho wraps past q_hat
  Integer first_, last_;
};

struct HsProfile {
  Sign sign = Sign::kPlus;
  Integer g;          // gcd(t, q)
  Integer t_eff;      // t / g
  Integer q_bar;      // floor(q / t)
  Integer q_hat_eff;  // (q / g) mod t_eff
  Integer s_hat_eff;  // floor(s / g) mod t_eff
  Integer size_J;
  Integer S_J;
  HsIndexStream J;
};

// Requires t >= 1, t not dividing q, 0 <= s < q. Otherwise DomainError.
HsProfile hs_index_stream(Sign sign, const Integer& s, const Integer& t, const Integer& q);

// Literal term-by-term sum. N above max_terms throws ResourceError.
Integer s_sum_direct(const FloorSumQuery& query, std::int64_t max_terms = 10'000'000);

enum class SumBranch {
  kEmpty,          // N = -1
  kZeroSlope,      // t = 0
  kZeroMax,        // M = 0
  kDivisible,      // t | q
  kNoHsBelow,      // (a)  j0 >= M
  kPartialPeriod,  // (b.1)
  kOnePeriod,      // (b.2)
  kManyPeriods,    // (b.3)
};

std::string to_string(SumBranch branch);

struct SumEvaluation {
  Integer value;
  SumBranch branch;
};

// Closed-form evaluation through the hS-interval structure; O(t_eff) worst case.
SumEvaluation s_sum_traced(const FloorSumQuery& query);
inline Integer s_sum(const FloorSumQuery& query) { return s_sum_traced(query).value; }

// sum_{k=n1}^{n2} floor((s ± k t) / q); 0 when n2 < n1. Requires n1 >= 0.
Integer shifted_sum(Sign sign, const Integer& s, const Integer& t, const Integer& q,
                    const Integer& n1, const Integer& n2);

// Logarithmic-time oracle by the Euclid-style argument swap.
Integer floor_sum_euclid(const FloorSumQuery& query);
// sum_{i=0}^{n-1} floor((a i + b) / m) for n >= 0, m >= 1, any a, b.
Integer floor_sum_linear(const Integer& n, const Integer& m, const Integer& a, const Integer& b);

}  // namespace denum
