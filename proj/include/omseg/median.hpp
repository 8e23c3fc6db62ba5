#pragma once

#include "omseg/image.hpp"

namespace omseg {

/// Odd k x k filter window, 3 <= k <= 255.
class WindowSize {
public:
    explicit WindowSize(int k);

    int k() const noexcept { return k_; }
    int radius() const noexcept { return (k_ - 1) / 2; }

    friend bool operator==(const WindowSize&, const WindowSize&) = default;

private:
    int k_;
};

/// Reference median filter: for every pixel, collects the k*k window values
/// (replicate padding at the borders), sorts them, and takes the
/// ((k*k + 1)/2)-th smallest. Intentionally simple; serves as the oracle
/// the fast implementation is checked against.
GrayChannel median_filter_naive(const GrayChannel& ch, WindowSize w);

/// Sliding-histogram median filter. Bit-exact equal to median_filter_naive
/// on every input; per-pixel cost grows linearly in k instead of k^2 log k.
///
/// `workers` > 1 splits the output rows across that many threads; the result
/// is byte-identical for every worker count.
GrayChannel median_filter_fast(const GrayChannel& ch, WindowSize w,
                               unsigned workers = 1);

/// Filters each of R, G, B independently with median_filter_fast and merges
/// the results.
ColorImage median_filter_color(const ColorImage& img, WindowSize w,
                               unsigned workers = 1);

}  // namespace omseg
