#include "omseg/histogram.hpp"

#include <stdexcept>

namespace omseg {

Histogram compute_histogram(const GrayChannel& ch) {
    if (ch.empty()) {
        throw std::invalid_argument("compute_histogram: channel is empty");
    }
    Histogram h;
    for (std::uint8_t v : ch.values()) {
        ++h.counts[v];
    }
    h.total = ch.pixel_count();
    return h;
}

ProbDist to_probabilities(const Histogram& h) {
    if (h.total == 0) {
        throw std::invalid_argument("to_probabilities: histogram total is zero");
    }
    ProbDist d;
    const double n = static_cast<double>(h.total);
    for (int i = 0; i < kLevels; ++i) {
        d.p[i] = static_cast<double>(h.counts[i]) / n;
    }
    return d;
}

}  // namespace omseg
