#pragma once

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <cmath>
#include <string>
#include <algorithm>
#include <stdexcept>
#include <type_traits>

namespace specnet {

// Signed arbitrary-precision integer, sign-magnitude with uint64 limbs
// (little-endian). Values up to 5 limbs (320 bits) live inline; larger
// magnitudes spill to the heap. Exact characteristic polynomials at
// n <= 25 stay within ~400 bits, so the inline path is the common one.
class BigInt {
 public:
  BigInt() = default;
  template <class T, std::enable_if_t<std::is_integral_v<T> && std::is_signed_v<T>, int> = 0>
  BigInt(T v) {
    assign_ll((long long)v);
  }
  template <class T, std::enable_if_t<std::is_integral_v<T> && std::is_unsigned_v<T>, int> = 0>
  BigInt(T v) {
    if (v != 0) {
      sign_ = 1;
      size_ = 1;
      limb(0) = (uint64_t)v;
    }
  }

  BigInt(const BigInt& o) { copy_from(o); }
  BigInt(BigInt&& o) noexcept { move_from(std::move(o)); }
  BigInt& operator=(const BigInt& o) {
    if (this != &o) {
      release();
      copy_from(o);
    }
    return *this;
  }
  BigInt& operator=(BigInt&& o) noexcept {
    if (this != &o) {
      release();
      move_from(std::move(o));
    }
    return *this;
  }
  ~BigInt() { release(); }

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }

  friend int cmp(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a, b);
    return a.sign_ >= 0 ? c : -c;
  }
  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return cmp(a, b) != 0; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

  BigInt operator-() const {
    BigInt r(*this);
    r.sign_ = -r.sign_;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    BigInt r;
    add_signed(r, a, b, false);
    return r;
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) {
    BigInt r;
    add_signed(r, a, b, true);
    return r;
  }
  BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
  BigInt& operator-=(const BigInt& b) { return *this = *this - b; }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.grow(a.size_ + b.size_);
    r.size_ = a.size_ + b.size_;
    for (int i = 0; i < r.size_; ++i) r.limb(i) = 0;
    for (int i = 0; i < a.size_; ++i) {
      unsigned __int128 carry = 0;
      uint64_t ai = a.limb(i);
      for (int j = 0; j < b.size_; ++j) {
        unsigned __int128 cur = (unsigned __int128)ai * b.limb(j) + r.limb(i + j) + carry;
        r.limb(i + j) = (uint64_t)cur;
        carry = cur >> 64;
      }
      r.limb(i + b.size_) = (uint64_t)carry;
    }
    r.sign_ = a.sign_ * b.sign_;
    r.normalize();
    return r;
  }
  BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

  // Exact division by a small nonzero integer; the remainder must be zero
  // (Faddeev-LeVerrier trace divisions are exact over the integers).
  BigInt divexact(long long d) const {
    if (d == 0) throw std::runtime_error("BigInt::divexact by zero");
    BigInt r(*this);
    if (r.sign_ == 0) return r;
    uint64_t mag = d < 0 ? ~(uint64_t)d + 1 : (uint64_t)d;
    uint64_t rem = r.divmod_small_inplace(mag);
    if (rem != 0) throw std::runtime_error("BigInt::divexact: inexact division");
    if (d < 0) r.sign_ = -r.sign_;
    r.normalize();
    return r;
  }

  // Floor division by small positive; also exposes the remainder.
  uint64_t divmod_small_inplace(uint64_t d) {
    unsigned __int128 rem = 0;
    for (int i = size_ - 1; i >= 0; --i) {
      unsigned __int128 cur = (rem << 64) | limb(i);
      limb(i) = (uint64_t)(cur / d);
      rem = cur % d;
    }
    normalize();
    return (uint64_t)rem;
  }

  double to_double() const {
    double r = 0.0;
    for (int i = size_ - 1; i >= 0; --i) r = r * 18446744073709551616.0 + (double)limb(i);
    return sign_ < 0 ? -r : r;
  }

  // Checked narrowing; throws when the value does not fit in int64.
  long long to_ll() const {
    if (sign_ == 0) return 0;
    if (size_ > 1) throw std::overflow_error("BigInt::to_ll");
    uint64_t m = limb(0);
    if (sign_ > 0) {
      if (m > (uint64_t)INT64_MAX) throw std::overflow_error("BigInt::to_ll");
      return (long long)m;
    }
    if (m > (uint64_t)INT64_MAX + 1) throw std::overflow_error("BigInt::to_ll");
    return (long long)(-(__int128)m);
  }
  bool fits_ll() const {
    if (size_ > 1) return false;
    if (sign_ == 0) return true;
    uint64_t m = limb(0);
    return sign_ > 0 ? m <= (uint64_t)INT64_MAX : m <= (uint64_t)INT64_MAX + 1;
  }

  std::string to_string() const {
    if (sign_ == 0) return "0";
    BigInt t(*this);
    std::string out;
    while (t.size_ > 0) {
      uint64_t chunk = t.divmod_small_inplace(1000000000000000000ull);
      std::string part = std::to_string(chunk);
      if (t.size_ > 0) part.insert(0, 18 - part.size(), '0');
      out.insert(0, part);
    }
    if (sign_ < 0) out.insert(0, 1, '-');
    return out;
  }

  static BigInt from_string(const std::string& s) {
    BigInt r;
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    if (i >= s.size()) throw std::invalid_argument("BigInt::from_string: empty");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt::from_string: bad digit");
      r = r * BigInt(10) + BigInt(s[i] - '0');
    }
    if (neg) r.sign_ = -r.sign_;
    return r;
  }

 private:
  static constexpr int kInline = 5;
  int8_t sign_ = 0;
  int32_t size_ = 0;
  int32_t cap_ = kInline;
  union {
    uint64_t inline_[kInline] = {};
    uint64_t* heap_;
  };

  uint64_t& limb(int i) { return cap_ <= kInline ? inline_[i] : heap_[i]; }
  uint64_t limb(int i) const { return cap_ <= kInline ? inline_[i] : heap_[i]; }

  void release() {
    if (cap_ > kInline) std::free(heap_);
    cap_ = kInline;
    size_ = 0;
    sign_ = 0;
  }

  void grow(int n) {
    if (n <= cap_) return;
    int newcap = std::max(n, cap_ * 2);
    uint64_t* p = (uint64_t*)std::malloc(sizeof(uint64_t) * newcap);
    std::memcpy(p, cap_ <= kInline ? inline_ : heap_, sizeof(uint64_t) * size_);
    if (cap_ > kInline) std::free(heap_);
    heap_ = p;
    cap_ = newcap;
  }

  void copy_from(const BigInt& o) {
    sign_ = o.sign_;
    size_ = o.size_;
    cap_ = kInline;
    if (o.size_ > kInline) {
      heap_ = (uint64_t*)std::malloc(sizeof(uint64_t) * o.size_);
      cap_ = o.size_;
      std::memcpy(heap_, o.heap_, sizeof(uint64_t) * o.size_);
    } else {
      std::memcpy(inline_, o.cap_ <= kInline ? o.inline_ : o.heap_, sizeof(uint64_t) * o.size_);
    }
  }

  void move_from(BigInt&& o) noexcept {
    sign_ = o.sign_;
    size_ = o.size_;
    if (o.cap_ > kInline) {
      heap_ = o.heap_;
      cap_ = o.cap_;
      o.cap_ = kInline;
    } else {
      cap_ = kInline;
      std::memcpy(inline_, o.inline_, sizeof(uint64_t) * o.size_);
    }
    o.size_ = 0;
    o.sign_ = 0;
  }

  void assign_ll(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    size_ = 1;
    limb(0) = v < 0 ? ~(uint64_t)v + 1 : (uint64_t)v;
  }

  void normalize() {
    while (size_ > 0 && limb(size_ - 1) == 0) --size_;
    if (size_ == 0) sign_ = 0;
  }

  static int cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_ ? -1 : 1;
    for (int i = a.size_ - 1; i >= 0; --i)
      if (a.limb(i) != b.limb(i)) return a.limb(i) < b.limb(i) ? -1 : 1;
    return 0;
  }

  // r = a + b with b's sign flipped when subtract is set.
  static void add_signed(BigInt& r, const BigInt& a, const BigInt& b, bool subtract) {
    int bsign = subtract ? -b.sign_ : b.sign_;
    if (a.sign_ == 0) {
      r = b;
      r.sign_ = bsign;
      return;
    }
    if (bsign == 0) {
      r = a;
      return;
    }
    if (a.sign_ == bsign) {
      r.grow(std::max(a.size_, b.size_) + 1);
      add_mag(r, a, b);
      r.sign_ = a.sign_;
    } else {
      int c = cmp_mag(a, b);
      if (c == 0) {
        r = BigInt();
        return;
      }
      r.grow(std::max(a.size_, b.size_));
      if (c > 0) {
        sub_mag(r, a, b);
        r.sign_ = a.sign_;
      } else {
        sub_mag(r, b, a);
        r.sign_ = bsign;
      }
    }
    r.normalize();
  }

  static void add_mag(BigInt& r, const BigInt& a, const BigInt& b) {
    const BigInt& hi = a.size_ >= b.size_ ? a : b;
    const BigInt& lo = a.size_ >= b.size_ ? b : a;
    uint64_t carry = 0;
    int i = 0;
    for (; i < lo.size_; ++i) {
      unsigned __int128 cur = (unsigned __int128)hi.limb(i) + lo.limb(i) + carry;
      r.limb(i) = (uint64_t)cur;
      carry = (uint64_t)(cur >> 64);
    }
    for (; i < hi.size_; ++i) {
      unsigned __int128 cur = (unsigned __int128)hi.limb(i) + carry;
      r.limb(i) = (uint64_t)cur;
      carry = (uint64_t)(cur >> 64);
    }
    r.size_ = hi.size_;
    if (carry) {
      r.limb(r.size_) = carry;
      ++r.size_;
    }
  }

  // requires |a| > |b|
  static void sub_mag(BigInt& r, const BigInt& a, const BigInt& b) {
    uint64_t borrow = 0;
    int i = 0;
    for (; i < b.size_; ++i) {
      uint64_t bi = b.limb(i);
      uint64_t ai = a.limb(i);
      uint64_t d = ai - bi - borrow;
      borrow = (ai < bi + borrow) || (bi + borrow < bi) ? 1 : 0;
      r.limb(i) = d;
    }
    for (; i < a.size_; ++i) {
      uint64_t ai = a.limb(i);
      r.limb(i) = ai - borrow;
      borrow = ai < borrow ? 1 : 0;
    }
    r.size_ = a.size_;
  }
};

// Uniform helpers so templates work over both long long and BigInt.
inline std::string int_to_string(long long v) { return std::to_string(v); }
inline std::string int_to_string(const BigInt& v) { return v.to_string(); }
inline double int_to_double(long long v) { return (double)v; }
inline double int_to_double(const BigInt& v) { return v.to_double(); }
inline long long int_divexact(long long v, long long d) {
  return v / d;  // callers guarantee exactness
}
inline BigInt int_divexact(const BigInt& v, long long d) { return v.divexact(d); }

}  // namespace specnet
