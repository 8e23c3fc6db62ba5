#include "omseg/otsu.hpp"

#include <cmath>
#include <string>

namespace omseg {

namespace {

void check_threshold_range(int t, const char* where) {
    if (t < 0 || t > kMaxThreshold) {
        throw std::out_of_range(std::string(where) + ": threshold " +
                                std::to_string(t) + " outside [0, " +
                                std::to_string(kMaxThreshold) + "]");
    }
}

}  // namespace

ClassStats class_stats(const ProbDist& p, int t) {
    check_threshold_range(t, "class_stats");

    ClassStats s;
    s.t = t;
    double weighted1 = 0.0;
    double weighted2 = 0.0;
    for (int i = 0; i <= t; ++i) {
        s.beta1 += p.p[i];
        weighted1 += i * p.p[i];
    }
    for (int i = t + 1; i < kLevels; ++i) {
        s.beta2 += p.p[i];
        weighted2 += i * p.p[i];
    }
    s.mu1 = s.beta1 > 0.0 ? weighted1 / s.beta1 : 0.0;
    s.mu2 = s.beta2 > 0.0 ? weighted2 / s.beta2 : 0.0;
    s.mu_t = weighted1 + weighted2;
    s.sigma2 = between_class_variance(s);
    return s;
}

double between_class_variance(const ClassStats& s) {
    const double d1 = s.mu1 - s.mu_t;
    const double d2 = s.mu2 - s.mu_t;
    return s.beta1 * d1 * d1 + s.beta2 * d2 * d2;
}

OtsuResult otsu_threshold(const Histogram& h) {
    int occupied = 0;
    for (int i = 0; i < kLevels; ++i) {
        if (h.counts[i] > 0) ++occupied;
    }
    if (occupied < 2) {
        throw DegenerateHistogramError(
            "otsu_threshold: all pixels share one gray level");
    }

    const ProbDist p = to_probabilities(h);

    double total_mass = 0.0;
    double total_weighted = 0.0;
    for (int i = 0; i < kLevels; ++i) {
        total_mass += p.p[i];
        total_weighted += i * p.p[i];
    }
    const double mu_t = total_weighted;

    OtsuResult result;
    result.threshold = -1;
    double best = -1.0;

    // Running prefix sums over levels. Empty-bin prefixes stay exactly 0.0,
    // so an empty class gets beta == 0 and drops out of the variance.
    double mass1 = 0.0;
    double weighted1 = 0.0;
    for (int t = 0; t <= kMaxThreshold; ++t) {
        mass1 += p.p[t];
        weighted1 += t * p.p[t];

        const double beta1 = mass1;
        const double beta2 = total_mass - mass1;
        const double mu1 = beta1 > 0.0 ? weighted1 / beta1 : 0.0;
        const double mu2 = beta2 > 0.0 ? (total_weighted - weighted1) / beta2 : 0.0;

        const double d1 = mu1 - mu_t;
        const double d2 = mu2 - mu_t;
        const double sigma2 = beta1 * d1 * d1 + beta2 * d2 * d2;
        result.curve[t] = sigma2;
        if (sigma2 > best) {
            best = sigma2;
            result.threshold = t;
        }
    }

    result.stats = class_stats(p, result.threshold);
    return result;
}

GrayChannel apply_threshold(const GrayChannel& ch, int t, ValueAssignment mode) {
    check_threshold_range(t, "apply_threshold");

    std::uint8_t low = 0;
    std::uint8_t high = 255;
    if (mode == ValueAssignment::ClassMeans) {
        // Class means from the channel's own histogram, exact integer sums.
        std::uint64_t n1 = 0, n2 = 0, s1 = 0, s2 = 0;
        const Histogram h = compute_histogram(ch);
        for (int i = 0; i < kLevels; ++i) {
            if (i <= t) {
                n1 += h.counts[i];
                s1 += static_cast<std::uint64_t>(i) * h.counts[i];
            } else {
                n2 += h.counts[i];
                s2 += static_cast<std::uint64_t>(i) * h.counts[i];
            }
        }
        // An empty class has no pixels to receive its value.
        if (n1 > 0) {
            low = static_cast<std::uint8_t>(
                std::lround(static_cast<double>(s1) / static_cast<double>(n1)));
        }
        if (n2 > 0) {
            high = static_cast<std::uint8_t>(
                std::lround(static_cast<double>(s2) / static_cast<double>(n2)));
        }
    }

    GrayChannel out(ch.width(), ch.height());
    auto src = ch.values();
    auto dst = out.values();
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i] = src[i] <= t ? low : high;
    }
    return out;
}

}  // namespace omseg
