#include "ndict/numio.hpp"

#include <bit>
#include <cassert>
#include <cmath>

#include "bigint.hpp"

namespace ndict {

namespace {

using detail::BigUint;

constexpr std::uint64_t kMantissaMask = (std::uint64_t{1} << 52) - 1;
constexpr std::uint64_t kHiddenBit = std::uint64_t{1} << 52;

struct Decomposed {
  std::uint64_t m;  // full significand, v = m * 2^e
  int e;
  bool bottom_of_binade;  // gap below is half the gap above
};

Decomposed decompose(double v) {
  const std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
  const std::uint64_t raw_m = bits & kMantissaMask;
  const int raw_e = static_cast<int>((bits >> 52) & 0x7FF);
  Decomposed d;
  if (raw_e == 0) {
    d.m = raw_m;
    d.e = -1074;
  } else {
    d.m = raw_m | kHiddenBit;
    d.e = raw_e - 1075;
  }
  d.bottom_of_binade = raw_m == 0 && raw_e >= 2;
  return d;
}

struct DigitString {
  char digits[20];  // '0'..'9'
  int len = 0;
  int e10 = 0;  // scientific exponent: value = d.dd... * 10^e10
};

int estimate_scale(double v) {
  return static_cast<int>(std::ceil(std::log10(v)));
}

// Carry-propagates digits[idx] == 10; returns the shift applied to e10.
int propagate_carry(char* digits, int& len, int idx) {
  while (idx > 0 && digits[idx] == 10) {
    digits[idx] = 0;
    ++digits[--idx];
  }
  if (digits[0] == 10) {
    digits[0] = 1;
    for (int i = 1; i < len; ++i) digits[i] = 0;
    return 1;
  }
  return 0;
}

/// Shortest digit string that reads back to v under nearest-even parsing,
/// closest-to-true-value among equals, ties to even last digit.
DigitString shortest_digits(double v) {
  const Decomposed d = decompose(v);
  const bool even = (d.m & 1) == 0;

  // Scaled fraction with common denominator 2^(2-e):
  // v = 4m * X, upper half-gap = 2 * X, lower = (1 or 2) * X.
  BigUint r = BigUint::from_u64(4 * d.m);
  BigUint s = BigUint::from_u64(1);
  BigUint mp = BigUint::from_u64(2);
  BigUint mm = BigUint::from_u64(d.bottom_of_binade ? 1 : 2);
  if (d.e >= 2) {
    r.shl(static_cast<unsigned>(d.e - 2));
    mp.shl(static_cast<unsigned>(d.e - 2));
    mm.shl(static_cast<unsigned>(d.e - 2));
  } else {
    s.shl(static_cast<unsigned>(2 - d.e));
  }

  int k = estimate_scale(v);
  if (k >= 0) {
    s.mul_pow10(static_cast<unsigned>(k));
  } else {
    r.mul_pow10(static_cast<unsigned>(-k));
    mp.mul_pow10(static_cast<unsigned>(-k));
    mm.mul_pow10(static_cast<unsigned>(-k));
  }

  // v+ must end up below 10^k (at 10^k only when the boundary text cannot
  // read back to v); the opposite bound keeps the first digit nonzero.
  auto cmp_r_plus_mp_vs = [&](const BigUint& rhs) {
    BigUint sum = r;
    sum.add(mp);
    return sum.compare(rhs);
  };

  for (;;) {
    int c = cmp_r_plus_mp_vs(s);
    if (c > 0 || (c == 0 && even)) {
      s.mul10();
      ++k;
    } else {
      break;
    }
  }
  for (;;) {
    BigUint sum = r;
    sum.add(mp);
    sum.mul10();
    int c = sum.compare(s);
    if (c < 0 || (c == 0 && !even)) {
      r.mul10();
      mp.mul10();
      mm.mul10();
      --k;
    } else {
      break;
    }
  }

  DigitString out;
  for (;;) {
    r.mul10();
    mp.mul10();
    mm.mul10();
    unsigned digit = r.divmod_digit(s);
    assert(digit <= 9);
    const int cl = r.compare(mm);
    const bool low_ok = even ? cl <= 0 : cl < 0;
    const int ch = cmp_r_plus_mp_vs(s);
    const bool high_ok = even ? ch >= 0 : ch > 0;
    assert(out.len < 19);
    if (!low_ok && !high_ok) {
      out.digits[out.len++] = static_cast<char>(digit);
      continue;
    }
    if (low_ok && !high_ok) {
      out.digits[out.len++] = static_cast<char>(digit);
    } else if (high_ok && !low_ok) {
      out.digits[out.len++] = static_cast<char>(digit + 1);
    } else {
      BigUint twice = r;
      twice.mul2();
      const int ct = twice.compare(s);
      unsigned pick = ct < 0 ? digit
                    : ct > 0 ? digit + 1
                             : (digit % 2 == 0 ? digit : digit + 1);
      out.digits[out.len++] = static_cast<char>(pick);
    }
    break;
  }

  k += propagate_carry(out.digits, out.len, out.len - 1);
  while (out.len > 1 && out.digits[out.len - 1] == 0) --out.len;
  out.e10 = k - 1;
  for (int i = 0; i < out.len; ++i) out.digits[i] += '0';
  return out;
}

/// Exactly n significant digits of v, correctly rounded half-even against
/// the exact value.
DigitString fixed_digits(double v, int n) {
  const Decomposed d = decompose(v);
  BigUint r = BigUint::from_u64(d.m);
  BigUint s = BigUint::from_u64(1);
  if (d.e >= 0) {
    r.shl(static_cast<unsigned>(d.e));
  } else {
    s.shl(static_cast<unsigned>(-d.e));
  }
  int k = estimate_scale(v);
  if (k >= 0) {
    s.mul_pow10(static_cast<unsigned>(k));
  } else {
    r.mul_pow10(static_cast<unsigned>(-k));
  }
  while (r.compare(s) >= 0) {
    s.mul10();
    ++k;
  }
  for (;;) {
    BigUint t = r;
    t.mul10();
    if (t.compare(s) < 0) {
      r.mul10();
      --k;
    } else {
      break;
    }
  }

  DigitString out;
  for (int i = 0; i < n; ++i) {
    r.mul10();
    unsigned digit = r.divmod_digit(s);
    assert(digit <= 9);
    out.digits[out.len++] = static_cast<char>(digit);
  }
  BigUint twice = r;
  twice.mul2();
  const int ct = twice.compare(s);
  if (ct > 0 || (ct == 0 && (out.digits[out.len - 1] & 1))) {
    ++out.digits[out.len - 1];
    k += propagate_carry(out.digits, out.len, out.len - 1);
  }
  out.e10 = k - 1;
  for (int i = 0; i < out.len; ++i) out.digits[i] += '0';
  return out;
}

std::string render(bool neg, const DigitString& ds) {
  std::string out;
  out.reserve(static_cast<std::size_t>(ds.len) + 10);
  if (neg) out += '-';
  const int e10 = ds.e10;
  if (e10 >= -4 && e10 <= 16) {
    if (e10 >= 0) {
      const int int_digits = e10 + 1;
      if (ds.len <= int_digits) {
        out.append(ds.digits, static_cast<std::size_t>(ds.len));
        out.append(static_cast<std::size_t>(int_digits - ds.len), '0');
      } else {
        out.append(ds.digits, static_cast<std::size_t>(int_digits));
        out += '.';
        out.append(ds.digits + int_digits,
                   static_cast<std::size_t>(ds.len - int_digits));
      }
    } else {
      out += "0.";
      out.append(static_cast<std::size_t>(-e10 - 1), '0');
      out.append(ds.digits, static_cast<std::size_t>(ds.len));
    }
  } else {
    out += ds.digits[0];
    if (ds.len > 1) {
      out += '.';
      out.append(ds.digits + 1, static_cast<std::size_t>(ds.len - 1));
    }
    out += 'e';
    out += std::to_string(e10);
  }
  return out;
}

}  // namespace

std::string format_float(double x, const FloatFormat& mode) {
  if (!std::isfinite(x))
    throw Error(Errc::NonFinite, "cannot format non-finite float");
  const bool neg = std::signbit(x);
  if (x == 0.0) return neg ? "-0" : "0";
  const double mag = neg ? -x : x;
  DigitString ds =
      mode.is_shortest() ? shortest_digits(mag) : fixed_digits(mag, mode.digits());
  return render(neg, ds);
}

namespace {

struct NumberParts {
  bool neg = false;
  std::string_view int_digits;
  std::string_view frac_digits;
  std::int64_t exponent = 0;
  bool ok = false;
  std::size_t error_at = 0;
};

NumberParts scan_number(std::string_view t) {
  NumberParts p;
  std::size_t i = 0;
  const std::size_t n = t.size();
  auto fail = [&](std::size_t at) {
    p.ok = false;
    p.error_at = at;
    return p;
  };
  if (i < n && t[i] == '-') {
    p.neg = true;
    ++i;
  }
  if (i >= n || t[i] < '0' || t[i] > '9') return fail(i);
  const std::size_t int_begin = i;
  if (t[i] == '0') {
    ++i;
  } else {
    while (i < n && t[i] >= '0' && t[i] <= '9') ++i;
  }
  p.int_digits = t.substr(int_begin, i - int_begin);
  if (i < n && t[i] == '.') {
    ++i;
    const std::size_t frac_begin = i;
    while (i < n && t[i] >= '0' && t[i] <= '9') ++i;
    if (i == frac_begin) return fail(i);
    p.frac_digits = t.substr(frac_begin, i - frac_begin);
  }
  if (i < n && (t[i] == 'e' || t[i] == 'E')) {
    ++i;
    bool exp_neg = false;
    if (i < n && (t[i] == '+' || t[i] == '-')) {
      exp_neg = t[i] == '-';
      ++i;
    }
    if (i >= n || t[i] < '0' || t[i] > '9') return fail(i);
    std::int64_t e = 0;
    while (i < n && t[i] >= '0' && t[i] <= '9') {
      if (e < (std::int64_t{1} << 40)) e = e * 10 + (t[i] - '0');
      ++i;
    }
    p.exponent = exp_neg ? -e : e;
  }
  if (i != n) return fail(i);
  p.ok = true;
  return p;
}

// Exact powers of ten representable in binary64.
constexpr double kExact10[23] = {1e0,  1e1,  1e2,  1e3,  1e4,  1e5,  1e6,  1e7,
                                 1e8,  1e9,  1e10, 1e11, 1e12, 1e13, 1e14, 1e15,
                                 1e16, 1e17, 1e18, 1e19, 1e20, 1e21, 1e22};

constexpr int kMaxSigDigits = 780;

double assemble(std::uint64_t q, int f, bool inexact, bool neg) {
  assert(q != 0);
  const int qbits = 64 - std::countl_zero(q);
  const int msb = f + qbits - 1;
  if (msb >= 1024) throw Error(Errc::Overflow, "value exceeds largest finite double");
  int target_e = msb - 52;
  if (target_e < -1074) target_e = -1074;
  const int drop = target_e - f;
  std::uint64_t m;
  bool round_up = false;
  if (drop <= 0) {
    m = q << -drop;
  } else if (drop > qbits) {
    m = 0;
    round_up = false;  // value < 2^(target_e - 1): below half an ulp of zero
  } else {
    m = drop >= 64 ? 0 : q >> drop;
    const bool guard = (q >> (drop - 1)) & 1;
    const bool rest =
        (drop >= 2 && (q & ((std::uint64_t{1} << (drop - 1)) - 1)) != 0) ||
        inexact;
    round_up = guard && (rest || (m & 1));
  }
  if (round_up) {
    ++m;
    if (m == (std::uint64_t{1} << 53)) {
      m >>= 1;
      ++target_e;
    }
  }
  if (m != 0 && target_e > 971)
    throw Error(Errc::Overflow, "value exceeds largest finite double");
  double v = std::ldexp(static_cast<double>(m), target_e);
  return neg ? -v : v;
}

double parse_parts(const NumberParts& p) {
  // Collapse to significant digits and the power of ten of the last one.
  std::string sig;
  sig.reserve(p.int_digits.size() + p.frac_digits.size());
  for (char c : p.int_digits) sig += c;
  for (char c : p.frac_digits) sig += c;
  std::int64_t k = p.exponent - static_cast<std::int64_t>(p.frac_digits.size());
  std::size_t first = sig.find_first_not_of('0');
  if (first == std::string::npos) return p.neg ? -0.0 : 0.0;
  sig.erase(0, first);
  std::size_t last = sig.find_last_not_of('0');
  k += static_cast<std::int64_t>(sig.size() - 1 - last);
  sig.erase(last + 1);

  if (sig.size() > kMaxSigDigits) {
    k += static_cast<std::int64_t>(sig.size() - kMaxSigDigits);
    sig.erase(kMaxSigDigits);
    sig += '1';
    k -= 1;
  }

  const std::int64_t eff = k + static_cast<std::int64_t>(sig.size());
  if (eff >= 311) throw Error(Errc::Overflow, "value exceeds largest finite double");
  if (eff <= -324) return p.neg ? -0.0 : 0.0;

  // Exact double arithmetic fast path.
  if (sig.size() <= 19) {
    std::uint64_t w = 0;
    for (char c : sig) w = w * 10 + static_cast<unsigned>(c - '0');
    if (w < (std::uint64_t{1} << 53)) {
      if (k >= 0 && k <= 22) {
        double v = static_cast<double>(w) * kExact10[k];
        return p.neg ? -v : v;
      }
      if (k < 0 && k >= -22) {
        double v = static_cast<double>(w) / kExact10[-k];
        return p.neg ? -v : v;
      }
      if (k > 22 && k <= 37) {
        using u128 = unsigned __int128;
        u128 w2 = static_cast<u128>(w);
        for (std::int64_t i = 22; i < k && w2 < (std::uint64_t{1} << 53); ++i)
          w2 *= 10;
        if (w2 < (std::uint64_t{1} << 53)) {
          double v = static_cast<double>(static_cast<std::uint64_t>(w2)) *
                     kExact10[22];
          return p.neg ? -v : v;
        }
      }
    }
  }

  // Exact big-integer path.
  BigUint digits;
  {
    std::uint64_t chunk = 0;
    int chunk_len = 0;
    for (char c : sig) {
      chunk = chunk * 10 + static_cast<unsigned>(c - '0');
      if (++chunk_len == 19) {
        digits.mul_u64(10000000000000000000ull);
        digits.add_u64(chunk);
        chunk = 0;
        chunk_len = 0;
      }
    }
    if (chunk_len) {
      std::uint64_t p10 = 1;
      for (int i = 0; i < chunk_len; ++i) p10 *= 10;
      digits.mul_u64(p10);
      digits.add_u64(chunk);
    }
  }

  if (k >= 0) {
    digits.mul_pow5(static_cast<unsigned>(k));
    int exp2;
    bool inexact;
    std::uint64_t q = digits.top_bits(55, &exp2, &inexact);
    return assemble(q, exp2 + static_cast<int>(k), inexact, p.neg);
  }

  BigUint den = BigUint::from_u64(1);
  den.mul_pow5(static_cast<unsigned>(-k));
  const int s = std::max(
      0, 55 + static_cast<int>(den.bit_length()) - static_cast<int>(digits.bit_length()));
  digits.shl(static_cast<unsigned>(s));
  int exp2;
  bool inexact;
  std::uint64_t q = digits.div_top_bits(den, 55, &exp2, &inexact);
  return assemble(q, exp2 + static_cast<int>(k) - s, inexact, p.neg);
}

}  // namespace

bool is_json_number(std::string_view text) { return scan_number(text).ok; }

double parse_float(std::string_view text) {
  NumberParts p = scan_number(text);
  if (!p.ok)
    throw Error(Errc::Syntax, "malformed number", p.error_at);
  return parse_parts(p);
}

std::variant<std::int64_t, std::uint64_t> parse_int(std::string_view text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  if (i >= text.size())
    throw Error(Errc::Syntax, "expected digits", i);
  std::uint64_t acc = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9')
      throw Error(Errc::Syntax, "expected digit", i);
    const unsigned d = static_cast<unsigned>(c - '0');
    if (acc > (UINT64_MAX - d) / 10)
      throw Error(Errc::OutOfRange, "integer magnitude exceeds 64 bits");
    acc = acc * 10 + d;
  }
  if (neg) {
    if (acc > (std::uint64_t{1} << 63))
      throw Error(Errc::OutOfRange, "below INT64_MIN");
    if (acc == (std::uint64_t{1} << 63)) return std::int64_t{INT64_MIN};
    return -static_cast<std::int64_t>(acc);
  }
  if (acc <= static_cast<std::uint64_t>(INT64_MAX))
    return static_cast<std::int64_t>(acc);
  return acc;
}

std::strong_ordering compare_floats(double a, double b, const FloatCompare& mode) {
  switch (mode.mode()) {
    case FloatCompare::Mode::Exact:
      break;
    case FloatCompare::Mode::Absolute: {
      const double diff = a < b ? b - a : a - b;
      if (diff <= mode.epsilon()) return std::strong_ordering::equal;
      break;
    }
    case FloatCompare::Mode::Relative: {
      const double diff = a < b ? b - a : a - b;
      const double aa = a < 0 ? -a : a;
      const double ab = b < 0 ? -b : b;
      if (diff <= mode.epsilon() * (aa > ab ? aa : ab))
        return std::strong_ordering::equal;
      break;
    }
  }
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace ndict
