#include "demo.hpp"

#include <array>

namespace ndict::cli {

namespace {

double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

void demo_accumulate(ndict::Node& node, std::mt19937_64& rng,
                     std::uint64_t events) {
  const std::array<double, 2> widths = {0.05, 0.25};
  const Value one = Value::of_int(1);
  for (std::uint64_t i = 0; i < events; ++i) {
    const double u1 = unit_interval(rng);
    const double u2 = unit_interval(rng);
    const double u3 = unit_interval(rng);
    // Main-sequence-like band: hot stars bright, cool stars faint, with a
    // flat scatter standing in for evolved populations.
    const double log_teff = 3.4 + 1.3 * u1;
    const double log_lum = 6.0 * (log_teff - 3.76) + (u2 + u3 - 1.0) * 1.5;
    const std::array<double, 2> coords = {log_teff, log_lum};
    node.hist_add({}, coords, widths, one);
  }
}

}  // namespace ndict::cli
