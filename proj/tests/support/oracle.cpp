#include "support/oracle.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <bit>
#include <cassert>
#include <cmath>
#include <cstdint>

namespace ndict::test {

void oracle_init() {
  // Exponent window for binary64 in MPFR's 0.5 <= significand < 1
  // convention: smallest subnormal 2^-1074 = 0.5 * 2^-1073, largest finite
  // below 2^1024.
  mpfr_set_emin(-1073);
  mpfr_set_emax(1024);
}

double oracle_parse_double(const std::string& text) {
  mpfr_t v;
  mpfr_init2(v, 53);
  int t = mpfr_strtofr(v, text.c_str(), nullptr, 10, MPFR_RNDN);
  t = mpfr_check_range(v, t, MPFR_RNDN);
  mpfr_subnormalize(v, t, MPFR_RNDN);
  const double d = mpfr_get_d(v, MPFR_RNDN);
  mpfr_clear(v);
  return d;
}

namespace {

struct Rational {
  mpq_t q;
  Rational() { mpq_init(q); }
  ~Rational() { mpq_clear(q); }
  Rational(const Rational&) = delete;
  Rational& operator=(const Rational&) = delete;
};

// q = m * 2^e exactly.
void set_scaled(mpq_t q, std::uint64_t m, int e) {
  mpq_set_ui(q, 0, 1);
  mpz_set_ui(mpq_numref(q), static_cast<unsigned long>(m >> 32));
  mpz_mul_2exp(mpq_numref(q), mpq_numref(q), 32);
  mpz_add_ui(mpq_numref(q), mpq_numref(q),
             static_cast<unsigned long>(m & 0xFFFFFFFFull));
  if (e >= 0) {
    mpz_mul_2exp(mpq_numref(q), mpq_numref(q), static_cast<unsigned>(e));
  } else {
    mpz_set_ui(mpq_denref(q), 1);
    mpz_mul_2exp(mpq_denref(q), mpq_denref(q), static_cast<unsigned>(-e));
  }
  mpq_canonicalize(q);
}

// q = d * 10^p exactly (d >= 0).
void set_decimal(mpq_t q, const mpz_t d, long p) {
  mpz_t pow;
  mpz_init(pow);
  mpz_ui_pow_ui(pow, 10, static_cast<unsigned long>(p >= 0 ? p : -p));
  if (p >= 0) {
    mpz_mul(mpq_numref(q), d, pow);
    mpz_set_ui(mpq_denref(q), 1);
  } else {
    mpz_set(mpq_numref(q), d);
    mpz_set(mpq_denref(q), pow);
  }
  mpz_clear(pow);
  mpq_canonicalize(q);
}

}  // namespace

bool oracle_shorter_exists(double x, int digits) {
  assert(std::isfinite(x) && x > 0.0 && digits >= 1);
  const std::uint64_t bits = std::bit_cast<std::uint64_t>(x);
  const std::uint64_t raw_m = bits & ((std::uint64_t{1} << 52) - 1);
  const int raw_e = static_cast<int>(bits >> 52);
  std::uint64_t m;
  int e;
  if (raw_e == 0) {
    m = raw_m;
    e = -1074;
  } else {
    m = raw_m | (std::uint64_t{1} << 52);
    e = raw_e - 1075;
  }
  const bool inclusive = (m & 1) == 0;
  const bool bottom = raw_m == 0 && raw_e >= 2;

  Rational value, lo, hi, half_up, half_down;
  set_scaled(value.q, m, e);
  set_scaled(half_up.q, 1, e - 1);
  set_scaled(half_down.q, 1, bottom ? e - 2 : e - 1);
  mpq_sub(lo.q, value.q, half_down.q);
  mpq_add(hi.q, value.q, half_up.q);

  // Decimal exponent E with 10^E <= x < 10^(E+1).
  long E = std::lround(std::floor(std::log10(x)));
  Rational p10;
  mpz_t one;
  mpz_init_set_ui(one, 1);
  for (;;) {
    set_decimal(p10.q, one, E);
    if (mpq_cmp(p10.q, value.q) > 0) {
      --E;
      continue;
    }
    set_decimal(p10.q, one, E + 1);
    if (mpq_cmp(p10.q, value.q) <= 0) {
      ++E;
      continue;
    }
    break;
  }

  const long q10 = E - digits + 1;
  // Grid neighbors of x on the `digits`-digit decimal grid, plus the
  // nearest grid point of the decade below (finer spacing) in case the
  // interval dips under 10^E.
  Rational cand, scaled;
  mpz_t d_floor, tmp;
  mpz_init(d_floor);
  mpz_init(tmp);

  bool found = false;
  auto in_interval = [&](const mpq_t c) {
    const int cl = mpq_cmp(c, lo.q);
    const int ch = mpq_cmp(c, hi.q);
    if (inclusive) return cl >= 0 && ch <= 0;
    return cl > 0 && ch < 0;
  };

  // floor(x / 10^q10)
  set_decimal(scaled.q, one, q10);
  Rational ratio;
  mpq_div(ratio.q, value.q, scaled.q);
  mpz_fdiv_q(d_floor, mpq_numref(ratio.q), mpq_denref(ratio.q));

  set_decimal(cand.q, d_floor, q10);
  if (in_interval(cand.q)) found = true;
  if (!found) {
    mpz_add_ui(tmp, d_floor, 1);
    set_decimal(cand.q, tmp, q10);
    if (in_interval(cand.q)) found = true;
  }
  if (!found) {
    // Largest `digits`-digit value below 10^E: (10^digits - 1) * 10^(q10-1).
    mpz_ui_pow_ui(tmp, 10, static_cast<unsigned long>(digits));
    mpz_sub_ui(tmp, tmp, 1);
    set_decimal(cand.q, tmp, q10 - 1);
    if (in_interval(cand.q)) found = true;
  }

  mpz_clear(d_floor);
  mpz_clear(tmp);
  mpz_clear(one);
  return found;
}

}  // namespace ndict::test
