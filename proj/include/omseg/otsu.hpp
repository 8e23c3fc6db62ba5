#pragma once

#include <array>
#include <stdexcept>

#include "omseg/histogram.hpp"
#include "omseg/image.hpp"

namespace omseg {

/// Highest candidate threshold. t splits levels into [0..t] and [t+1..255],
/// so t = 255 would always leave the upper class empty.
inline constexpr int kMaxThreshold = 254;

/// How thresholded classes are mapped back to output intensities.
enum class ValueAssignment {
    Binary,      ///< low class -> 0, high class -> 255
    ClassMeans,  ///< low class -> round(mu1), high class -> round(mu2)
};

/// Thrown when every pixel shares one gray level: no threshold separates
/// two classes and the between-class variance is identically zero.
class DegenerateHistogramError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Class statistics for the split [0..t] / [t+1..255] of a probability
/// distribution: class probabilities beta1/beta2, class means mu1/mu2, the
/// overall mean, and the between-class variance at t.
///
/// An empty class has mean 0 by convention; its beta weight is 0, so it
/// contributes nothing to sigma2.
struct ClassStats {
    int t = 0;
    double beta1 = 0.0;
    double beta2 = 0.0;
    double mu1 = 0.0;
    double mu2 = 0.0;
    double mu_t = 0.0;
    double sigma2 = 0.0;
};

/// Threshold selection result: the chosen threshold, its class statistics,
/// and the full between-class variance curve over t = 0..254.
struct OtsuResult {
    int threshold = 0;
    ClassStats stats;
    std::array<double, kMaxThreshold + 1> curve{};
};

/// Computes the class statistics of p at candidate threshold t by direct
/// summation. Throws std::out_of_range unless 0 <= t <= 254.
ClassStats class_stats(const ProbDist& p, int t);

/// beta1*(mu1 - mu_t)^2 + beta2*(mu2 - mu_t)^2.
double between_class_variance(const ClassStats& s);

/// Evaluates the between-class variance for every candidate threshold and
/// returns the smallest t attaining the maximum. Deterministic.
/// Throws DegenerateHistogramError when the histogram has a single level.
OtsuResult otsu_threshold(const Histogram& h);

/// Maps each pixel to its class value: Binary gives 0/255, ClassMeans gives
/// the rounded mean of the pixel's own class (computed from ch's histogram
/// at t). Throws std::out_of_range unless 0 <= t <= 254.
GrayChannel apply_threshold(const GrayChannel& ch, int t, ValueAssignment mode);

}  // namespace omseg
