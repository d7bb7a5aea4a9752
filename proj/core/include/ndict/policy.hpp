#pragma once

#include <compare>

#include "ndict/error.hpp"

namespace ndict {

/// How floats become text: either the shortest digit string that parses
/// back to the identical binary64, or a fixed number of significant digits
/// (1..17), correctly rounded.
class FloatFormat {
 public:
  static FloatFormat shortest() { return FloatFormat(0); }
  static FloatFormat sig_digits(int n) {
    if (n < 1 || n > 17)
      throw Error(Errc::BadOptions, "significant digits must be in [1, 17]");
    return FloatFormat(n);
  }

  bool is_shortest() const { return digits_ == 0; }
  int digits() const { return digits_; }

  bool operator==(const FloatFormat&) const = default;

 private:
  explicit FloatFormat(int d) : digits_(d) {}
  int digits_;  // 0 = shortest round trip
};

/// How two floats compare: exact mathematical order, or with an absolute
/// or relative tolerance collapsing near-equal values to Equal.
class FloatCompare {
 public:
  enum class Mode { Exact, Absolute, Relative };

  static FloatCompare exact() { return FloatCompare(Mode::Exact, 0.0); }
  static FloatCompare absolute(double eps) {
    require_eps(eps);
    return FloatCompare(Mode::Absolute, eps);
  }
  static FloatCompare relative(double eps) {
    require_eps(eps);
    return FloatCompare(Mode::Relative, eps);
  }

  Mode mode() const { return mode_; }
  double epsilon() const { return eps_; }

 private:
  static void require_eps(double eps) {
    if (!(eps >= 0.0))
      throw Error(Errc::BadOptions, "tolerance must be >= 0");
  }
  FloatCompare(Mode m, double e) : mode_(m), eps_(e) {}
  Mode mode_;
  double eps_;
};

struct FloatPolicy {
  FloatFormat format = FloatFormat::shortest();
  FloatCompare compare = FloatCompare::exact();
};

}  // namespace ndict
