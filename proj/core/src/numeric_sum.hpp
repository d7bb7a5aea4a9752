#pragma once

#include <cstdint>

#include "ndict/value.hpp"

namespace ndict::detail {

/// Sum of two numeric values under the accumulation promotion rules:
/// Int+Int and UInt+UInt stay integral, promoting both operands to Float
/// on 64-bit overflow; any Float operand makes the result Float. Mixed
/// Int/UInt sums are computed exactly and keep `a`'s tag when the result
/// fits it, otherwise the other integer tag, otherwise Float.
inline Value add_numeric(const Value& a, const Value& b) {
  const Tag ta = a.tag();
  const Tag tb = b.tag();
  if (ta == Tag::Float || tb == Tag::Float)
    return Value::of_float(a.to_double() + b.to_double());
  if (ta == Tag::Int && tb == Tag::Int) {
    std::int64_t r;
    if (!__builtin_add_overflow(a.as_int(), b.as_int(), &r))
      return Value::of_int(r);
    return Value::of_float(static_cast<double>(a.as_int()) +
                           static_cast<double>(b.as_int()));
  }
  if (ta == Tag::UInt && tb == Tag::UInt) {
    std::uint64_t r;
    if (!__builtin_add_overflow(a.as_uint(), b.as_uint(), &r))
      return Value::of_uint(r);
    return Value::of_float(static_cast<double>(a.as_uint()) +
                           static_cast<double>(b.as_uint()));
  }
  // One Int, one UInt: the exact sum always fits either int64 or uint64
  // unless both halves are large positive.
  const std::int64_t i = ta == Tag::Int ? a.as_int() : b.as_int();
  const std::uint64_t u = ta == Tag::UInt ? a.as_uint() : b.as_uint();
  const bool prefer_int = ta == Tag::Int;
  if (i >= 0) {
    std::uint64_t sum;
    if (__builtin_add_overflow(u, static_cast<std::uint64_t>(i), &sum))
      return Value::of_float(static_cast<double>(u) + static_cast<double>(i));
    if (sum <= static_cast<std::uint64_t>(INT64_MAX) && prefer_int)
      return Value::of_int(static_cast<std::int64_t>(sum));
    return Value::of_uint(sum);
  }
  const std::uint64_t mag = static_cast<std::uint64_t>(-(i + 1)) + 1;
  if (u >= mag) {
    const std::uint64_t sum = u - mag;
    if (sum <= static_cast<std::uint64_t>(INT64_MAX) && prefer_int)
      return Value::of_int(static_cast<std::int64_t>(sum));
    return Value::of_uint(sum);
  }
  const std::uint64_t below = mag - u;  // result is -below, fits int64
  if (below == (std::uint64_t{1} << 63)) return Value::of_int(INT64_MIN);
  return Value::of_int(-static_cast<std::int64_t>(below));
}

}  // namespace ndict::detail
