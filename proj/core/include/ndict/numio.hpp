#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "ndict/policy.hpp"

namespace ndict {

/// Formats a finite binary64. Shortest mode emits the minimum number of
/// significant digits that parses back bit-exactly, picking the candidate
/// closest to the true value (ties to even last digit). sig_digits(n) emits
/// exactly n significant digits of the exact value, round-half-even.
/// Notation: plain decimal when the scientific exponent is in [-4, 16],
/// otherwise d[.ddd]e<exp> with no exponent '+' or leading zeros.
std::string format_float(double x, const FloatFormat& mode = FloatFormat::shortest());

/// Parses an RFC 8259 number to the nearest binary64, round-half-even, for
/// all inputs. A fast path handles exactly-representable cases; everything
/// else goes through an exact big-integer path, so correct rounding holds
/// for arbitrarily long digit strings. Values above the largest finite
/// double throw Overflow; underflow rounds to subnormals or zero.
double parse_float(std::string_view text);

/// True when `text` matches the RFC 8259 number grammar exactly.
bool is_json_number(std::string_view text);

/// Optional sign + digits. Negative or <= INT64_MAX parses as Int;
/// (INT64_MAX, UINT64_MAX] as UInt; beyond throws OutOfRange.
std::variant<std::int64_t, std::uint64_t> parse_int(std::string_view text);

/// Ordering of finite doubles under a tolerance mode. Exact mode is
/// mathematical order with -0.0 == +0.0; Absolute(eps) treats |a-b| <= eps
/// as equal; Relative(eps) treats |a-b| <= eps*max(|a|,|b|) as equal.
std::strong_ordering compare_floats(double a, double b, const FloatCompare& mode);

}  // namespace ndict
