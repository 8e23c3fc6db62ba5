#pragma once

#include <optional>
#include <vector>

#include "omseg/image.hpp"
#include "omseg/median.hpp"
#include "omseg/otsu.hpp"

namespace omseg {

/// Settings for one segmentation run. apply_median=false stops after the
/// per-channel thresholding and merge, which is the plain
/// threshold-per-channel baseline.
struct SegmentationConfig {
    WindowSize window{15};
    ValueAssignment mode = ValueAssignment::ClassMeans;
    bool apply_median = true;
};

/// Wall-clock milliseconds spent in each stage of segment().
struct StageTimings {
    double otsu_ms = 0.0;
    double merge_ms = 0.0;
    double median_ms = 0.0;
};

/// Segmented image plus the per-channel thresholds. A channel whose pixels
/// all share one level has no threshold (nullopt) and passed through the
/// thresholding stage unchanged.
struct SegmentationOutput {
    ColorImage image;
    std::optional<int> t_r;
    std::optional<int> t_g;
    std::optional<int> t_b;
    SegmentationConfig config;
};

/// Runs the full chain: split into R/G/B, threshold each channel at its own
/// automatically selected level, re-merge, and (unless disabled) smooth the
/// merged image with a k x k median filter. Thresholds are always computed
/// on the original channel histograms.
///
/// `workers` parallelizes the per-channel thresholding and the median
/// filter rows; the output is byte-identical for every worker count.
SegmentationOutput segment(const ColorImage& img, const SegmentationConfig& cfg,
                           unsigned workers = 1, StageTimings* timings = nullptr);

/// The window-size sweep: 8 runs in fixed order, median disabled first,
/// then k = 3, 5, 7, 9, 11, 13, 15.
std::vector<SegmentationOutput> sweep(const ColorImage& img, ValueAssignment mode,
                                      unsigned workers = 1);

/// The seven sweep window sizes, ascending.
inline constexpr int kSweepWindows[] = {3, 5, 7, 9, 11, 13, 15};

}  // namespace omseg
