#pragma once

#include <gmp.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <tuple>

#include "denum/errors.hpp"

namespace denum {

// Exact signed integer. Values that fit in int64 are stored inline; anything
// larger lives in an mpz_t. The representation is canonical: big_ is set only
// when the value does not fit in int64.
class Integer {
 public:
  Integer() noexcept : small_(0) {}

  template <std::integral T>
  Integer(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T> || sizeof(T) < sizeof(std::int64_t)) {
      small_ = static_cast<std::int64_t>(v);
    } else {
      if (v <= static_cast<T>(INT64_MAX)) {
        small_ = static_cast<std::int64_t>(v);
      } else {
        init_from_u64(static_cast<std::uint64_t>(v));
      }
    }
  }

  Integer(const Integer& o) {
    if (o.big_) {
      mpz_init_set(&mpz_, &o.mpz_);
      big_ = true;
    } else {
      small_ = o.small_;
    }
  }

  Integer(Integer&& o) noexcept {
    if (o.big_) {
      mpz_ = o.mpz_;
      big_ = true;
      o.big_ = false;
      o.small_ = 0;
    } else {
      small_ = o.small_;
    }
  }

  Integer& operator=(const Integer& o) {
    if (this == &o) return *this;
    if (o.big_) {
      if (big_) {
        mpz_set(&mpz_, &o.mpz_);
      } else {
        mpz_init_set(&mpz_, &o.mpz_);
        big_ = true;
      }
    } else {
      release();
      small_ = o.small_;
    }
    return *this;
  }

  Integer& operator=(Integer&& o) noexcept {
    if (this == &o) return *this;
    release();
    if (o.big_) {
      mpz_ = o.mpz_;
      big_ = true;
      o.big_ = false;
      o.small_ = 0;
    } else {
      small_ = o.small_;
    }
    return *this;
  }

  ~Integer() { release(); }

  // Decimal with optional leading '-' (ASCII or U+2212). Throws ParseError.
  static Integer from_string(std::string_view text);
  std::string to_string() const;

  bool is_small() const noexcept { return !big_; }
  std::optional<std::int64_t> to_int64() const noexcept {
    if (big_) return std::nullopt;
    return small_;
  }
  // Precondition: is_small().
  std::int64_t small_value() const noexcept { return small_; }

  int sign() const noexcept {
    if (big_) return mpz_sgn(&mpz_);
    return (small_ > 0) - (small_ < 0);
  }
  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_negative() const noexcept { return sign() < 0; }
  bool is_odd() const noexcept {
    if (big_) return mpz_odd_p(&mpz_);
    return (small_ & 1) != 0;
  }
  // Number of decimal digits of |x| (1 for zero).
  std::size_t decimal_digits() const;
  // Number of bits of |x| (0 for zero).
  std::size_t bit_length() const noexcept;

  friend Integer operator+(const Integer& x, const Integer& y) {
    std::int64_t r;
    if (!x.big_ && !y.big_ && !__builtin_add_overflow(x.small_, y.small_, &r)) {
      return Integer(r);
    }
    return add_slow(x, y);
  }
  friend Integer operator-(const Integer& x, const Integer& y) {
    std::int64_t r;
    if (!x.big_ && !y.big_ && !__builtin_sub_overflow(x.small_, y.small_, &r)) {
      return Integer(r);
    }
    return sub_slow(x, y);
  }
  friend Integer operator*(const Integer& x, const Integer& y) {
    std::int64_t r;
    if (!x.big_ && !y.big_ && !__builtin_mul_overflow(x.small_, y.small_, &r)) {
      return Integer(r);
    }
    return mul_slow(x, y);
  }
  Integer operator-() const {
    if (!big_ && small_ != INT64_MIN) return Integer(-small_);
    return Integer(0) - *this;
  }
  Integer& operator+=(const Integer& y) { return *this = *this + y; }
  Integer& operator-=(const Integer& y) { return *this = *this - y; }
  Integer& operator*=(const Integer& y) { return *this = *this * y; }
  Integer& operator++() { return *this = *this + 1; }
  Integer& operator--() { return *this = *this - 1; }

  friend bool operator==(const Integer& x, const Integer& y) noexcept {
    if (!x.big_ && !y.big_) return x.small_ == y.small_;
    if (x.big_ != y.big_) return false;
    return mpz_cmp(&x.mpz_, &y.mpz_) == 0;
  }
  friend std::strong_ordering operator<=>(const Integer& x, const Integer& y) noexcept {
    if (!x.big_ && !y.big_) return x.small_ <=> y.small_;
    return compare_slow(x, y) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& x) {
    return os << x.to_string();
  }

  // Floor quotient and remainder in [0, d) for d > 0; for d < 0 the remainder
  // takes the sign of d. d == 0 throws DomainError.
  friend Integer floor_div(const Integer& n, const Integer& d);
  friend Integer floor_mod(const Integer& n, const Integer& d);
  friend std::pair<Integer, Integer> floor_divmod(const Integer& n, const Integer& d);
  // Exact division; precondition d | n.
  friend Integer div_exact(const Integer& n, const Integer& d);
  friend Integer gcd(const Integer& x, const Integer& y);
  friend Integer pow(const Integer& base, unsigned long exp);
  friend Integer abs(const Integer& x);

  // Read-only access to an mpz view, for interop.
  class MpzView;

 private:
  friend class MpzView;
  void release() noexcept {
    if (big_) {
      mpz_clear(&mpz_);
      big_ = false;
    }
  }
  void init_from_u64(std::uint64_t v);
  void normalize() noexcept;
  static Integer adopt(mpz_t value);
  static Integer add_slow(const Integer& x, const Integer& y);
  static Integer sub_slow(const Integer& x, const Integer& y);
  static Integer mul_slow(const Integer& x, const Integer& y);
  static int compare_slow(const Integer& x, const Integer& y) noexcept;

  bool big_ = false;
  union {
    std::int64_t small_;
    __mpz_struct mpz_;
  };
};

Integer floor_div(const Integer& n, const Integer& d);
Integer floor_mod(const Integer& n, const Integer& d);
std::pair<Integer, Integer> floor_divmod(const Integer& n, const Integer& d);
Integer div_exact(const Integer& n, const Integer& d);
Integer gcd(const Integer& x, const Integer& y);
Integer pow(const Integer& base, unsigned long exp);
Integer abs(const Integer& x);

Integer from_int128(__int128 v);

// ceil(n / d) for d > 0, computed as floor((n + d - 1) / d).
Integer ceil_div(const Integer& n, const Integer& d);
Integer min(const Integer& x, const Integer& y);
Integer max(const Integer& x, const Integer& y);

struct Egcd {
  Integer g;
  Integer u;
  Integer v;
};

// g = gcd(x, y) > 0 with u*x + v*y = g. Both zero throws DomainError.
Egcd egcd(const Integer& x, const Integer& y);
// Inverse of x modulo m in [1, m). m < 2 throws DomainError; gcd != 1 throws
// NotInvertibleError.
Integer mod_inverse(const Integer& x, const Integer& m);
// Canonical residue in [0, m). m <= 0 throws DomainError.
Integer mod_reduce(const Integer& x, const Integer& m);

}  // namespace denum
