#include "omseg/pipeline.hpp"

#include <chrono>
#include <future>

#include "omseg/histogram.hpp"

namespace omseg {

namespace {

struct ChannelResult {
    GrayChannel values;
    std::optional<int> threshold;
};

// Otsu + value assignment for one channel. Degenerate channels (single
// gray level) pass through untouched.
ChannelResult threshold_channel(const GrayChannel& ch, ValueAssignment mode) {
    try {
        const OtsuResult otsu = otsu_threshold(compute_histogram(ch));
        return {apply_threshold(ch, otsu.threshold, mode), otsu.threshold};
    } catch (const DegenerateHistogramError&) {
        return {ch, std::nullopt};
    }
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - since)
        .count();
}

}  // namespace

SegmentationOutput segment(const ColorImage& img, const SegmentationConfig& cfg,
                           unsigned workers, StageTimings* timings) {
    const RgbPlanes planes = split_channels(img);

    auto start = std::chrono::steady_clock::now();
    ChannelResult r, g, b;
    if (workers > 1) {
        auto fr = std::async(std::launch::async, threshold_channel, std::cref(planes.r), cfg.mode);
        auto fg = std::async(std::launch::async, threshold_channel, std::cref(planes.g), cfg.mode);
        b = threshold_channel(planes.b, cfg.mode);
        r = fr.get();
        g = fg.get();
    } else {
        r = threshold_channel(planes.r, cfg.mode);
        g = threshold_channel(planes.g, cfg.mode);
        b = threshold_channel(planes.b, cfg.mode);
    }
    const double otsu_ms = elapsed_ms(start);

    start = std::chrono::steady_clock::now();
    ColorImage merged = merge_channels(r.values, g.values, b.values);
    const double merge_ms = elapsed_ms(start);

    start = std::chrono::steady_clock::now();
    if (cfg.apply_median) {
        merged = median_filter_color(merged, cfg.window, workers);
    }
    const double median_ms = elapsed_ms(start);

    if (timings != nullptr) {
        *timings = StageTimings{otsu_ms, merge_ms, median_ms};
    }
    return SegmentationOutput{std::move(merged), r.threshold, g.threshold,
                              b.threshold, cfg};
}

std::vector<SegmentationOutput> sweep(const ColorImage& img, ValueAssignment mode,
                                      unsigned workers) {
    std::vector<SegmentationOutput> outputs;
    outputs.reserve(8);

    SegmentationConfig cfg;
    cfg.mode = mode;
    cfg.apply_median = false;
    outputs.push_back(segment(img, cfg, workers));

    cfg.apply_median = true;
    for (int k : kSweepWindows) {
        cfg.window = WindowSize(k);
        outputs.push_back(segment(img, cfg, workers));
    }
    return outputs;
}

}  // namespace omseg
