#pragma once

#include <cstdint>
#include <random>

#include <ndict/node.hpp>

namespace ndict::cli {

/// Draws `events` samples from `rng` and bins them into a 2-D histogram of
/// log10 effective temperature (width 0.05) against log10 luminosity
/// (width 0.25), weight 1 per star. Consuming a single stream across calls
/// makes chunked generation match one monolithic run exactly.
void demo_accumulate(ndict::Node& node, std::mt19937_64& rng,
                     std::uint64_t events);

}  // namespace ndict::cli
