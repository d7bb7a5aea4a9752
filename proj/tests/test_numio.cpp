#include <doctest.h>

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include <ndict/error.hpp>
#include <ndict/numio.hpp>

using namespace ndict;

namespace {

double bits_to_double(std::uint64_t b) { return std::bit_cast<double>(b); }
std::uint64_t double_to_bits(double d) { return std::bit_cast<std::uint64_t>(d); }

const double kBoundarySet[] = {
    0.0,
    -0.0,
    5e-324,                   // smallest subnormal
    bits_to_double(0x000FFFFFFFFFFFFFull),  // largest subnormal
    2.2250738585072014e-308,  // smallest normal
    1.7976931348623157e308,   // largest normal
    1.0,
    std::nextafter(1.0, 2.0),
    std::nextafter(1.0, 0.0),
    2.0,
    0.5,
    1024.0,
    9.765625e-4,
    1e-10,
    1e10,
    1e22,
    1e23,
    123456789.0,
    0.1,
    0.3,
    2.0 / 3.0,
    3.141592653589793,
    6.02214076e23,
    -1.5,
};

}  // namespace

TEST_CASE("format_float shortest: pinned renderings") {
  CHECK(format_float(0.0) == "0");
  CHECK(format_float(-0.0) == "-0");
  CHECK(format_float(1.0) == "1");
  CHECK(format_float(2.0) == "2");
  CHECK(format_float(-1.5) == "-1.5");
  CHECK(format_float(parse_float("0.3")) == "0.3");
  CHECK(format_float(0.1) == "0.1");
  CHECK(format_float(100.0) == "100");
  CHECK(format_float(1e16) == "10000000000000000");
  CHECK(format_float(1e17) == "1e17");
  CHECK(format_float(1e-4) == "0.0001");
  CHECK(format_float(1e-5) == "1e-5");
  CHECK(format_float(1e23) == "1e23");
  CHECK(format_float(5e-324) == "5e-324");
  CHECK(format_float(1.7976931348623157e308) == "1.7976931348623157e308");
  CHECK(format_float(9223372036854775808.0) == "9.223372036854776e18");
  CHECK_THROWS_AS((void)format_float(std::nan("")), Error);
  CHECK_THROWS_AS((void)format_float(INFINITY), Error);
}

TEST_CASE("format_float significant digits") {
  const double third = 1.0 / 3.0;
  CHECK(format_float(third, FloatFormat::sig_digits(5)) == "0.33333");
  CHECK(format_float(2.5, FloatFormat::sig_digits(5)) == "2.5000");
  CHECK(format_float(100.0, FloatFormat::sig_digits(2)) == "100");
  CHECK(format_float(123456.0, FloatFormat::sig_digits(3)) == "123000");
  CHECK(format_float(0.0, FloatFormat::sig_digits(5)) == "0");
  // 0.125 and 0.375 are exact, so rounding to two digits is a true tie.
  CHECK(format_float(0.125, FloatFormat::sig_digits(2)) == "0.12");
  CHECK(format_float(0.375, FloatFormat::sig_digits(2)) == "0.38");
  CHECK(format_float(9.99, FloatFormat::sig_digits(2)) == "10");
  CHECK(format_float(0.999, FloatFormat::sig_digits(2)) == "1.0");
  CHECK(format_float(1e300, FloatFormat::sig_digits(3)) == "1.00e300");
  CHECK_THROWS_AS((void)FloatFormat::sig_digits(0), Error);
  CHECK_THROWS_AS((void)FloatFormat::sig_digits(18), Error);
}

TEST_CASE("sig_digits(17) round-trips") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20000; ++i) {
    const std::uint64_t b = rng();
    const double x = bits_to_double(b);
    if (!std::isfinite(x)) continue;
    const std::string s = format_float(x, FloatFormat::sig_digits(17));
    CHECK(double_to_bits(parse_float(s)) == double_to_bits(x));
  }
}

TEST_CASE("shortest digits agree with std::to_chars") {
  // to_chars scientific (libstdc++, Ryu-backed) must produce the same
  // significand digits and decimal exponent.
  auto to_chars_digits = [](double x) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific);
    std::string s(buf, r.ptr);
    std::string digits;
    std::size_t i = 0;
    for (; i < s.size() && s[i] != 'e'; ++i) {
      if (s[i] >= '0' && s[i] <= '9') digits += s[i];
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    const int exp = std::atoi(s.c_str() + i + 1);
    return std::pair<std::string, int>(digits, exp);
  };
  auto mine = [](double x) {
    std::string s = format_float(x);
    std::string digits;
    int exp = 0;
    std::size_t epos = s.find('e');
    std::string mant = epos == std::string::npos ? s : s.substr(0, epos);
    int point = -1;
    for (char c : mant) {
      if (c == '.') {
        point = static_cast<int>(digits.size());
      } else if (c >= '0' && c <= '9') {
        digits += c;
      }
    }
    if (epos != std::string::npos) {
      exp = std::atoi(s.c_str() + epos + 1);
    } else {
      const int ip = point < 0 ? static_cast<int>(digits.size()) : point;
      std::size_t first = digits.find_first_not_of('0');
      exp = ip - 1 - static_cast<int>(first);
      digits.erase(0, first);
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    return std::pair<std::string, int>(digits, exp);
  };

  for (double x : kBoundarySet) {
    if (x == 0.0) continue;
    const double ax = std::fabs(x);
    CAPTURE(ax);
    CHECK(mine(ax) == to_chars_digits(ax));
  }
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200000; ++i) {
    const double x = bits_to_double(rng());
    if (!std::isfinite(x) || x == 0.0) continue;
    const double ax = std::fabs(x);
    const auto got = mine(ax);
    const auto want = to_chars_digits(ax);
    if (got != want) {
      CAPTURE(double_to_bits(ax));
      REQUIRE(got == want);
    }
  }
}

TEST_CASE("round-trip identity on boundaries and random bit patterns") {
  for (double x : kBoundarySet) {
    CHECK(double_to_bits(parse_float(format_float(x))) == double_to_bits(x));
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100000; ++i) {
    const double x = bits_to_double(rng());
    if (!std::isfinite(x)) continue;
    const std::uint64_t back = double_to_bits(parse_float(format_float(x)));
    if (back != double_to_bits(x)) {
      CAPTURE(double_to_bits(x));
      REQUIRE(back == double_to_bits(x));
    }
  }
}

TEST_CASE("parse_float: pinned values") {
  CHECK(parse_float("1") == 1.0);
  CHECK(parse_float("-1") == -1.0);
  CHECK(parse_float("1e5") == 100000.0);
  CHECK(parse_float("1E+5") == 100000.0);
  CHECK(parse_float("2.5e-1") == 0.25);
  CHECK(double_to_bits(parse_float("0.1")) == 0x3FB999999999999Aull);
  CHECK(double_to_bits(parse_float("-0")) == 0x8000000000000000ull);
  CHECK(parse_float("0.0e99") == 0.0);

  // Just above half the smallest subnormal: rounds up to 5e-324.
  CHECK(double_to_bits(parse_float(
            "2.4703282292062327208828439643411068618258990130716238221279"
            "28412503377536351043e-324")) == 1);
  // At or below half: rounds to zero.
  CHECK(parse_float("2.4703282292062327e-324") == 0.0);
  CHECK(parse_float("1e-400") == 0.0);
  CHECK(std::signbit(parse_float("-1e-400")));

  CHECK(parse_float("1.7976931348623157e308") == 1.7976931348623157e308);
  CHECK_THROWS_AS((void)parse_float("1.7976931348623159e308"), Error);
  CHECK_THROWS_AS((void)parse_float("1e309"), Error);
  CHECK_THROWS_AS((void)parse_float("1e99999999999999999999"), Error);
  CHECK(parse_float("1e-99999999999999999999") == 0.0);

  // Long digit strings still round correctly.
  CHECK(parse_float("0." + std::string(700, '0') + "1e700") == 0.1);
  std::string many_threes = "0.";
  for (int i = 0; i < 800; ++i) many_threes += '3';
  CHECK(parse_float(many_threes) == 1.0 / 3.0);
}

TEST_CASE("parse_float syntax errors carry offsets") {
  auto offset_of = [](std::string_view s) {
    try {
      (void)parse_float(s);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::Syntax);
      return e.offset();
    }
    return Error::no_offset;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("+1") == 0);
  CHECK(offset_of(".5") == 0);
  CHECK(offset_of("01") == 1);
  CHECK(offset_of("1.") == 2);
  CHECK(offset_of("1e") == 2);
  CHECK(offset_of("1e+") == 3);
  CHECK(offset_of("1x") == 1);
  CHECK(offset_of("nan") == 0);
  CHECK(offset_of("Infinity") == 0);
}

TEST_CASE("is_json_number matches the RFC grammar") {
  CHECK(is_json_number("0"));
  CHECK(is_json_number("-0"));
  CHECK(is_json_number("10.5e-3"));
  CHECK(is_json_number("9007199254740993"));
  CHECK_FALSE(is_json_number("01"));
  CHECK_FALSE(is_json_number("+1"));
  CHECK_FALSE(is_json_number("1."));
  CHECK_FALSE(is_json_number(".1"));
  CHECK_FALSE(is_json_number("1e"));
  CHECK_FALSE(is_json_number("1 "));
  CHECK_FALSE(is_json_number(""));
}

TEST_CASE("parse_float agrees with strtod on random decimal strings") {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 50000; ++i) {
    const int ndig = 1 + static_cast<int>(rng() % 25);
    std::string s;
    if (rng() & 1) s += '-';
    s += static_cast<char>('1' + rng() % 9);
    for (int j = 1; j < ndig; ++j) s += static_cast<char>('0' + rng() % 10);
    // Keep clear of the subnormal range, where glibc is the reference but
    // reports ERANGE; the acceptance oracle covers that territory.
    const int exp = static_cast<int>(rng() % 580) - 290;
    s += 'e';
    s += std::to_string(exp);
    errno = 0;
    const double want = std::strtod(s.c_str(), nullptr);
    if (!std::isfinite(want)) continue;
    const double got = parse_float(s);
    if (double_to_bits(got) != double_to_bits(want)) {
      CAPTURE(s);
      REQUIRE(double_to_bits(got) == double_to_bits(want));
    }
  }
}

TEST_CASE("parse_int") {
  CHECK(std::get<std::int64_t>(parse_int("42")) == 42);
  CHECK(std::get<std::int64_t>(parse_int("-42")) == -42);
  CHECK(std::get<std::int64_t>(parse_int("+7")) == 7);
  CHECK(std::get<std::int64_t>(parse_int("9223372036854775807")) == INT64_MAX);
  CHECK(std::get<std::int64_t>(parse_int("-9223372036854775808")) == INT64_MIN);
  CHECK(std::get<std::uint64_t>(parse_int("9223372036854775808")) ==
        9223372036854775808ull);
  CHECK(std::get<std::uint64_t>(parse_int("18446744073709551615")) == UINT64_MAX);
  CHECK_THROWS_AS((void)parse_int("18446744073709551616"), Error);
  CHECK_THROWS_AS((void)parse_int("-9223372036854775809"), Error);
  CHECK_THROWS_AS((void)parse_int(""), Error);
  CHECK_THROWS_AS((void)parse_int("12a"), Error);
}

TEST_CASE("compare_floats") {
  using Mode = FloatCompare;
  CHECK(compare_floats(1.0, 1.0, Mode::exact()) == std::strong_ordering::equal);
  CHECK(compare_floats(-0.0, 0.0, Mode::exact()) == std::strong_ordering::equal);
  CHECK(compare_floats(1.0, 2.0, Mode::exact()) == std::strong_ordering::less);
  CHECK(compare_floats(1.0, 1.0 + 1e-12, Mode::absolute(1e-9)) ==
        std::strong_ordering::equal);
  CHECK(compare_floats(1.0, 1.0 + 1e-12, Mode::exact()) ==
        std::strong_ordering::less);
  // |a-b| = 1e290 while eps*max = 1e-8 * 1.0000000001e300 ~ 1e292.
  CHECK(compare_floats(1e300, 1.0000000001e300, Mode::relative(1e-8)) ==
        std::strong_ordering::equal);
  CHECK(compare_floats(1e300, 1.1e300, Mode::relative(1e-8)) ==
        std::strong_ordering::less);
  CHECK_THROWS_AS((void)Mode::absolute(-1.0), Error);
}
