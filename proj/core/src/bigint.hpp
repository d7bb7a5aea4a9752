#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <string_view>

namespace ndict::detail {

/// Fixed-capacity unsigned big integer used by float<->text conversion.
/// 3072 bits covers the worst case either direction: scaled digit strings
/// capped at 781 significant digits times 5^k for |k| up to ~1120.
class BigUint {
 public:
  static constexpr int kCapacity = 48;

  BigUint() = default;

  static BigUint from_u64(std::uint64_t v) {
    BigUint r;
    if (v) {
      r.limb_[0] = v;
      r.n_ = 1;
    }
    return r;
  }

  bool is_zero() const { return n_ == 0; }

  void mul_u64(std::uint64_t m);
  void add_u64(std::uint64_t a);
  void mul_pow5(unsigned p);
  void mul_pow10(unsigned p) {
    mul_pow5(p);
    shl(p);
  }
  void mul2() { shl(1); }
  void mul10() { mul_u64(10); }

  void shl(unsigned bits);
  void shr1();

  /// -1, 0, +1 like memcmp.
  int compare(const BigUint& other) const;

  void add(const BigUint& other);

  /// *this -= other; requires *this >= other.
  void sub(const BigUint& other);

  unsigned bit_length() const;

  /// Quotient digit for 0 <= *this < 10*d, leaving the remainder in place.
  unsigned divmod_digit(const BigUint& d);

  /// Top `keep` bits of *this / div (div > 0), MSB-aligned.
  /// `exp2` receives the power of two of the returned integer's least
  /// significant bit within the true quotient; `inexact` reports a nonzero
  /// remainder below that bit.
  std::uint64_t div_top_bits(const BigUint& div, int keep, int* exp2,
                             bool* inexact) const;

  /// Top `keep` bits of *this itself, same contract as div_top_bits.
  std::uint64_t top_bits(int keep, int* exp2, bool* inexact) const;

 private:
  void trim() {
    while (n_ > 0 && limb_[n_ - 1] == 0) --n_;
  }

  std::array<std::uint64_t, kCapacity> limb_{};
  int n_ = 0;
};

}  // namespace ndict::detail
