#include "denum/integer.hpp"

#include <charconv>
#include <cstdlib>
#include <memory>
#include <numeric>

static_assert(GMP_LIMB_BITS == 64, "inline int64 views assume 64-bit limbs");

namespace denum {

// Read-only mpz view of an Integer. Small values borrow a stack limb, so no
// allocation happens on the slow paths for mixed small/big operands.
class Integer::MpzView {
 public:
  explicit MpzView(const Integer& x) {
    if (x.big_) {
      ptr_ = &x.mpz_;
      return;
    }
    const std::int64_t v = x.small_;
    const std::uint64_t mag = v < 0 ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
    limb_ = mag;
    mpz_roinit_n(view_, &limb_, v == 0 ? 0 : (v < 0 ? -1 : 1));
    ptr_ = view_;
  }
  mpz_srcptr get() const { return ptr_; }

 private:
  mp_limb_t limb_ = 0;
  mpz_t view_;
  mpz_srcptr ptr_ = nullptr;
};

void Integer::init_from_u64(std::uint64_t v) {
  mpz_init(&mpz_);
  mpz_import(&mpz_, 1, 1, sizeof(v), 0, 0, &v);
  big_ = true;
  normalize();
}

void Integer::normalize() noexcept {
  if (big_ && mpz_fits_slong_p(&mpz_)) {
    const std::int64_t v = mpz_get_si(&mpz_);
    mpz_clear(&mpz_);
    big_ = false;
    small_ = v;
  }
}

// Takes ownership of an initialized mpz_t.
Integer Integer::adopt(mpz_t value) {
  Integer r;
  r.mpz_ = *value;
  r.big_ = true;
  r.normalize();
  return r;
}

Integer Integer::add_slow(const Integer& x, const Integer& y) {
  MpzView vx(x), vy(y);
  mpz_t r;
  mpz_init(r);
  mpz_add(r, vx.get(), vy.get());
  return adopt(r);
}

Integer Integer::sub_slow(const Integer& x, const Integer& y) {
  MpzView vx(x), vy(y);
  mpz_t r;
  mpz_init(r);
  mpz_sub(r, vx.get(), vy.get());
  return adopt(r);
}

Integer Integer::mul_slow(const Integer& x, const Integer& y) {
  MpzView vx(x), vy(y);
  mpz_t r;
  mpz_init(r);
  mpz_mul(r, vx.get(), vy.get());
  return adopt(r);
}

int Integer::compare_slow(const Integer& x, const Integer& y) noexcept {
  MpzView vx(x), vy(y);
  return mpz_cmp(vx.get(), vy.get());
}

Integer Integer::from_string(std::string_view text) {
  std::string digits;
  bool negative = false;
  std::string_view rest = text;
  if (!rest.empty() && rest.front() == '-') {
    negative = true;
    rest.remove_prefix(1);
  } else if (rest.substr(0, 3) == "\xE2\x88\x92") {  // U+2212 MINUS SIGN
    negative = true;
    rest.remove_prefix(3);
  }
  if (rest.empty()) throw ParseError("empty integer literal: '" + std::string(text) + "'");
  for (char ch : rest) {
    if (ch < '0' || ch > '9') {
      throw ParseError("not a decimal integer: '" + std::string(text) + "'");
    }
  }
  if (rest.size() <= 18) {
    std::int64_t v = 0;
    std::from_chars(rest.data(), rest.data() + rest.size(), v);
    return Integer(negative ? -v : v);
  }
  digits.reserve(rest.size() + 1);
  if (negative) digits.push_back('-');
  digits.append(rest);
  mpz_t r;
  mpz_init(r);
  mpz_set_str(r, digits.c_str(), 10);
  return adopt(r);
}

std::string Integer::to_string() const {
  if (!big_) return std::to_string(small_);
  std::unique_ptr<char, void (*)(void*)> buf(mpz_get_str(nullptr, 10, &mpz_), std::free);
  return std::string(buf.get());
}

std::size_t Integer::decimal_digits() const {
  std::string s = to_string();
  return s.size() - (s.front() == '-' ? 1 : 0);
}

std::size_t Integer::bit_length() const noexcept {
  if (big_) return mpz_sizeinbase(&mpz_, 2);
  if (small_ == 0) return 0;
  const std::uint64_t mag = small_ < 0 ? 0 - static_cast<std::uint64_t>(small_) : static_cast<std::uint64_t>(small_);
  return 64 - static_cast<std::size_t>(__builtin_clzll(mag));
}

std::pair<Integer, Integer> floor_divmod(const Integer& n, const Integer& d) {
  if (d.is_zero()) throw DomainError("division by zero");
  if (!n.big_ && !d.big_ && !(n.small_ == INT64_MIN && d.small_ == -1)) {
    std::int64_t q = n.small_ / d.small_;
    std::int64_t r = n.small_ % d.small_;
    if (r != 0 && ((r < 0) != (d.small_ < 0))) {
      --q;
      r += d.small_;
    }
    return {Integer(q), Integer(r)};
  }
  Integer::MpzView vn(n), vd(d);
  mpz_t q, r;
  mpz_init(q);
  mpz_init(r);
  mpz_fdiv_qr(q, r, vn.get(), vd.get());
  return {Integer::adopt(q), Integer::adopt(r)};
}

Integer floor_div(const Integer& n, const Integer& d) {
  if (!n.big_ && !d.big_ && d.small_ != 0 && !(n.small_ == INT64_MIN && d.small_ == -1)) {
    std::int64_t q = n.small_ / d.small_;
    if ((n.small_ % d.small_ != 0) && ((n.small_ < 0) != (d.small_ < 0))) --q;
    return Integer(q);
  }
  return floor_divmod(n, d).first;
}

Integer floor_mod(const Integer& n, const Integer& d) {
  if (!n.big_ && !d.big_ && d.small_ != 0 && d.small_ != -1) {
    std::int64_t r = n.small_ % d.small_;
    if (r != 0 && ((r < 0) != (d.small_ < 0))) r += d.small_;
    return Integer(r);
  }
  return floor_divmod(n, d).second;
}

Integer div_exact(const Integer& n, const Integer& d) {
  if (d.is_zero()) throw DomainError("division by zero");
  if (!n.big_ && !d.big_ && !(n.small_ == INT64_MIN && d.small_ == -1)) {
    return Integer(n.small_ / d.small_);
  }
  Integer::MpzView vn(n), vd(d);
  mpz_t q;
  mpz_init(q);
  mpz_divexact(q, vn.get(), vd.get());
  return Integer::adopt(q);
}

Integer gcd(const Integer& x, const Integer& y) {
  if (!x.big_ && !y.big_ && x.small_ != INT64_MIN && y.small_ != INT64_MIN) {
    return Integer(std::gcd(x.small_, y.small_));
  }
  Integer::MpzView vx(x), vy(y);
  mpz_t g;
  mpz_init(g);
  mpz_gcd(g, vx.get(), vy.get());
  return Integer::adopt(g);
}

Integer pow(const Integer& base, unsigned long exp) {
  Integer::MpzView vb(base);
  mpz_t r;
  mpz_init(r);
  mpz_pow_ui(r, vb.get(), exp);
  return Integer::adopt(r);
}

Integer from_int128(__int128 v) {
  if (v >= INT64_MIN && v <= INT64_MAX) return Integer(static_cast<std::int64_t>(v));
  const bool neg = v < 0;
  const unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  const Integer hi(static_cast<std::uint64_t>(mag >> 64));
  const Integer lo(static_cast<std::uint64_t>(mag));
  const Integer value = hi * pow(Integer(2), 64) + lo;
  return neg ? -value : value;
}

Integer abs(const Integer& x) { return x.sign() < 0 ? -x : x; }

Integer ceil_div(const Integer& n, const Integer& d) {
  if (d.sign() <= 0) throw DomainError("ceil_div requires a positive divisor");
  return floor_div(n + d - 1, d);
}

Integer min(const Integer& x, const Integer& y) { return y < x ? y : x; }
Integer max(const Integer& x, const Integer& y) { return x < y ? y : x; }

Egcd egcd(const Integer& x, const Integer& y) {
  if (x.is_zero() && y.is_zero()) throw DomainError("egcd(0, 0) is undefined");
  Integer r0 = x, r1 = y;
  Integer s0 = 1, s1 = 0;
  Integer t0 = 0, t1 = 1;
  while (!r1.is_zero()) {
    auto [q, r] = floor_divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Integer s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Integer t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_negative()) return {-r0, -s0, -t0};
  return {r0, s0, t0};
}

Integer mod_reduce(const Integer& x, const Integer& m) {
  if (m.sign() <= 0) throw DomainError("mod_reduce requires a positive modulus, got " + m.to_string());
  return floor_mod(x, m);
}

Integer mod_inverse(const Integer& x, const Integer& m) {
  if (m < 2) throw DomainError("mod_inverse requires modulus >= 2, got " + m.to_string());
  Egcd e = egcd(mod_reduce(x, m), m);
  if (e.g != 1) {
    throw NotInvertibleError(x.to_string() + " is not invertible modulo " + m.to_string());
  }
  return mod_reduce(e.u, m);
}

}  // namespace denum
