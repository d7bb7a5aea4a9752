#pragma once

#include <string>

namespace ndict::test {

/// Configures MPFR for binary64 emulation. Call once before oracle_parse.
void oracle_init();

/// Nearest binary64 to the exact decimal value of `text`, round-half-even,
/// including subnormals; +/-HUGE_VAL on overflow. Independent of the
/// library's parser (MPFR with 53-bit precision and subnormalization).
double oracle_parse_double(const std::string& text);

/// True when some decimal with at most `digits` significant digits lies in
/// the rounding interval of x (i.e. would parse back to x). Exact rational
/// arithmetic via GMP; x must be finite, positive, nonzero.
bool oracle_shorter_exists(double x, int digits);

}  // namespace ndict::test
