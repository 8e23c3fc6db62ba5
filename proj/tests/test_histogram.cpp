#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "omseg/histogram.hpp"
#include "test_support.hpp"

using namespace omseg;

TEST_CASE("single-level image fills one bin") {
    const GrayChannel ch(2, 2, std::vector<std::uint8_t>{0, 0, 0, 0});
    const Histogram h = compute_histogram(ch);
    CHECK(h.counts[0] == 4);
    CHECK(h.total == 4);
    for (int i = 1; i < kLevels; ++i) CHECK(h.counts[i] == 0);
}

TEST_CASE("one pixel per level") {
    const GrayChannel ch(2, 2, std::vector<std::uint8_t>{0, 1, 2, 3});
    const Histogram h = compute_histogram(ch);
    for (int i = 0; i < 4; ++i) CHECK(h.counts[i] == 1);
    CHECK(h.total == 4);
}

TEST_CASE("counts are conserved") {
    std::mt19937 rng(11);
    const Histogram h = compute_histogram(testsup::random_channel(rng, 32, 32));
    const auto sum = std::accumulate(h.counts.begin(), h.counts.end(),
                                     std::uint64_t{0});
    CHECK(sum == 1024);
    CHECK(h.total == 1024);
}

TEST_CASE("probabilities follow counts / total") {
    Histogram h;
    h.counts[0] = 2;
    h.counts[255] = 2;
    h.total = 4;
    const ProbDist d = to_probabilities(h);
    CHECK(d.p[0] == 0.5);
    CHECK(d.p[255] == 0.5);
    CHECK(d.p[100] == 0.0);
}

TEST_CASE("degenerate distribution puts all mass in one bin") {
    Histogram h;
    h.counts[42] = 17;
    h.total = 17;
    const ProbDist d = to_probabilities(h);
    CHECK(d.p[42] == 1.0);
}

TEST_CASE("probabilities are normalized") {
    std::mt19937 rng(12);
    for (int rep = 0; rep < 50; ++rep) {
        const Histogram h = testsup::random_histogram(rng, rep);
        const ProbDist d = to_probabilities(h);
        const double sum = std::accumulate(d.p.begin(), d.p.end(), 0.0);
        CHECK(std::abs(sum - 1.0) <= 1e-12);
        CHECK(std::all_of(d.p.begin(), d.p.end(), [](double x) { return x >= 0.0; }));
    }
}

TEST_CASE("histogram is invariant under pixel permutation") {
    std::mt19937 rng(13);
    GrayChannel ch = testsup::random_channel(rng, 16, 16);
    const Histogram before = compute_histogram(ch);
    auto vals = ch.values();
    std::shuffle(vals.begin(), vals.end(), rng);
    const Histogram after = compute_histogram(ch);
    CHECK(before.counts == after.counts);
    CHECK(before.total == after.total);
}
