#include "bigint.hpp"

#include <bit>

namespace ndict::detail {

namespace {
using u128 = unsigned __int128;

// 5^0 .. 5^27; 5^27 is the largest power of five below 2^64.
constexpr std::uint64_t kPow5[28] = {
    1ull,
    5ull,
    25ull,
    125ull,
    625ull,
    3125ull,
    15625ull,
    78125ull,
    390625ull,
    1953125ull,
    9765625ull,
    48828125ull,
    244140625ull,
    1220703125ull,
    6103515625ull,
    30517578125ull,
    152587890625ull,
    762939453125ull,
    3814697265625ull,
    19073486328125ull,
    95367431640625ull,
    476837158203125ull,
    2384185791015625ull,
    11920928955078125ull,
    59604644775390625ull,
    298023223876953125ull,
    1490116119384765625ull,
    7450580596923828125ull,
};
}  // namespace

void BigUint::mul_u64(std::uint64_t m) {
  if (m == 1 || n_ == 0) {
    if (m == 0) n_ = 0;
    return;
  }
  std::uint64_t carry = 0;
  for (int i = 0; i < n_; ++i) {
    u128 p = static_cast<u128>(limb_[i]) * m + carry;
    limb_[i] = static_cast<std::uint64_t>(p);
    carry = static_cast<std::uint64_t>(p >> 64);
  }
  if (carry) {
    assert(n_ < kCapacity);
    limb_[n_++] = carry;
  }
}

void BigUint::add_u64(std::uint64_t a) {
  if (a == 0) return;
  for (int i = 0; i < n_; ++i) {
    limb_[i] += a;
    if (limb_[i] >= a) return;  // no carry out
    a = 1;
  }
  assert(n_ < kCapacity);
  limb_[n_++] = a;
}

void BigUint::mul_pow5(unsigned p) {
  while (p >= 27) {
    mul_u64(kPow5[27]);
    p -= 27;
  }
  if (p) mul_u64(kPow5[p]);
}

void BigUint::shl(unsigned bits) {
  if (n_ == 0 || bits == 0) return;
  const int limbshift = static_cast<int>(bits / 64);
  const int s = static_cast<int>(bits % 64);
  assert(n_ + limbshift + 1 <= kCapacity);
  if (s == 0) {
    for (int i = n_ - 1; i >= 0; --i) limb_[i + limbshift] = limb_[i];
  } else {
    limb_[n_ + limbshift] = limb_[n_ - 1] >> (64 - s);
    for (int i = n_ - 1; i > 0; --i)
      limb_[i + limbshift] = (limb_[i] << s) | (limb_[i - 1] >> (64 - s));
    limb_[limbshift] = limb_[0] << s;
  }
  for (int i = 0; i < limbshift; ++i) limb_[i] = 0;
  n_ += limbshift + 1;
  if (n_ > kCapacity) n_ = kCapacity;
  trim();
}

void BigUint::shr1() {
  for (int i = 0; i < n_; ++i) {
    limb_[i] >>= 1;
    if (i + 1 < n_) limb_[i] |= limb_[i + 1] << 63;
  }
  trim();
}

int BigUint::compare(const BigUint& other) const {
  if (n_ != other.n_) return n_ < other.n_ ? -1 : 1;
  for (int i = n_ - 1; i >= 0; --i) {
    if (limb_[i] != other.limb_[i]) return limb_[i] < other.limb_[i] ? -1 : 1;
  }
  return 0;
}

void BigUint::add(const BigUint& other) {
  const int top = n_ > other.n_ ? n_ : other.n_;
  std::uint64_t carry = 0;
  for (int i = 0; i < top; ++i) {
    const std::uint64_t a = i < n_ ? limb_[i] : 0;
    const std::uint64_t b = i < other.n_ ? other.limb_[i] : 0;
    const std::uint64_t s1 = a + b;
    const std::uint64_t s2 = s1 + carry;
    carry = (s1 < a || s2 < s1) ? 1 : 0;
    limb_[i] = s2;
  }
  n_ = top;
  if (carry) {
    assert(n_ < kCapacity);
    limb_[n_++] = 1;
  }
}

void BigUint::sub(const BigUint& other) {
  assert(compare(other) >= 0);
  std::uint64_t borrow = 0;
  for (int i = 0; i < n_; ++i) {
    std::uint64_t o = i < other.n_ ? other.limb_[i] : 0;
    std::uint64_t d = limb_[i] - o - borrow;
    borrow = (borrow ? limb_[i] <= o : limb_[i] < o) ? 1 : 0;
    limb_[i] = d;
  }
  trim();
}

unsigned BigUint::bit_length() const {
  if (n_ == 0) return 0;
  return static_cast<unsigned>(64 * (n_ - 1)) +
         (64 - std::countl_zero(limb_[n_ - 1]));
}

unsigned BigUint::divmod_digit(const BigUint& d) {
  unsigned q = 0;
  while (compare(d) >= 0) {
    sub(d);
    ++q;
    assert(q <= 10);
  }
  return q;
}

std::uint64_t BigUint::top_bits(int keep, int* exp2, bool* inexact) const {
  assert(keep > 0 && keep <= 63);
  const int blen = static_cast<int>(bit_length());
  if (blen <= keep) {
    *exp2 = 0;
    *inexact = false;
    return n_ ? limb_[0] : 0;
  }
  const int sh = blen - keep;
  const int word = sh / 64;
  const int bit = sh % 64;
  std::uint64_t q = limb_[word] >> bit;
  if (bit && word + 1 < n_) q |= limb_[word + 1] << (64 - bit);
  q &= (std::uint64_t{1} << keep) - 1;
  bool low = bit ? (limb_[word] & ((std::uint64_t{1} << bit) - 1)) != 0 : false;
  for (int i = 0; !low && i < word; ++i) low = limb_[i] != 0;
  *exp2 = sh;
  *inexact = low;
  return q;
}

std::uint64_t BigUint::div_top_bits(const BigUint& div, int keep, int* exp2,
                                    bool* inexact) const {
  assert(!div.is_zero() && !is_zero() && keep > 0 && keep <= 63);
  BigUint rem = *this;
  BigUint d = div;
  int shift = static_cast<int>(bit_length()) - static_cast<int>(d.bit_length());
  if (shift > 0) d.shl(static_cast<unsigned>(shift));
  if (d.compare(rem) > 0) {
    d.shr1();
    --shift;
  }
  assert(shift >= 0);
  // Now d = div * 2^shift <= rem < 2*d, so the quotient's MSB is at 2^shift.
  std::uint64_t q = 0;
  int collected = 0;
  int steps = shift + 1 < keep ? shift + 1 : keep;
  for (int i = 0; i < steps; ++i) {
    q <<= 1;
    if (rem.compare(d) >= 0) {
      rem.sub(d);
      q |= 1;
    }
    ++collected;
    if (i + 1 < steps) d.shr1();
  }
  *exp2 = shift - (collected - 1);
  *inexact = !rem.is_zero();
  return q;
}

}  // namespace ndict::detail
