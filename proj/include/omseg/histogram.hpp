#pragma once

#include <array>
#include <cstdint>

#include "omseg/image.hpp"

namespace omseg {

inline constexpr int kLevels = 256;

/// Exact 256-bin gray-level counts. counts[i] is the number of pixels with
/// level i; total is the pixel count, so the counts always sum to total.
struct Histogram {
    std::array<std::uint64_t, kLevels> counts{};
    std::uint64_t total = 0;
};

/// Normalized gray-level probabilities, p[i] = counts[i] / total.
struct ProbDist {
    std::array<double, kLevels> p{};
};

/// Counts the gray levels of a channel. The channel must be non-empty.
Histogram compute_histogram(const GrayChannel& ch);

/// Normalizes a histogram into per-level probabilities.
ProbDist to_probabilities(const Histogram& h);

}  // namespace omseg
