#include "omseg/median.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace omseg {

WindowSize::WindowSize(int k) : k_(k) {
    if (k < 3 || k > 255 || k % 2 == 0) {
        throw std::invalid_argument("window size must be an odd integer in [3, 255], got " +
                                    std::to_string(k));
    }
}

namespace {

inline int clamp_coord(int v, int hi) {
    return v < 0 ? 0 : (v > hi ? hi : v);
}

void filter_rows_naive(const GrayChannel& ch, int radius, int y0, int y1,
                       GrayChannel& out) {
    const int w = ch.width();
    const int h = ch.height();
    const int k = 2 * radius + 1;
    std::vector<std::uint8_t> window;
    window.reserve(static_cast<std::size_t>(k) * k);
    for (int y = y0; y < y1; ++y) {
        for (int x = 0; x < w; ++x) {
            window.clear();
            for (int dy = -radius; dy <= radius; ++dy) {
                const int yy = clamp_coord(y + dy, h - 1);
                for (int dx = -radius; dx <= radius; ++dx) {
                    const int xx = clamp_coord(x + dx, w - 1);
                    window.push_back(ch(xx, yy));
                }
            }
            std::sort(window.begin(), window.end());
            out(x, y) = window[window.size() / 2];
        }
    }
}

// Sliding-histogram filter for rows [y0, y1). The window histogram is kept
// while sliding along x: the departing window column is subtracted and the
// arriving one added (k values each), then the median is located by
// cumulative count. Replicate padding maps out-of-range coordinates onto the
// nearest edge, so the window always holds exactly k*k values.
void filter_rows_fast(const GrayChannel& ch, int radius, int y0, int y1,
                      GrayChannel& out) {
    const int w = ch.width();
    const int h = ch.height();
    const int k = 2 * radius + 1;
    const std::uint32_t median_rank =
        static_cast<std::uint32_t>((k * k + 1) / 2);

    const std::uint8_t* data = ch.values().data();
    std::vector<std::size_t> row_base(static_cast<std::size_t>(k));
    std::uint32_t hist[256];

    for (int y = y0; y < y1; ++y) {
        for (int dy = -radius; dy <= radius; ++dy) {
            row_base[dy + radius] =
                static_cast<std::size_t>(clamp_coord(y + dy, h - 1)) * w;
        }

        auto add_column = [&](int col) {
            const std::size_t c = static_cast<std::size_t>(clamp_coord(col, w - 1));
            for (int i = 0; i < k; ++i) ++hist[data[row_base[i] + c]];
        };
        auto remove_column = [&](int col) {
            const std::size_t c = static_cast<std::size_t>(clamp_coord(col, w - 1));
            for (int i = 0; i < k; ++i) --hist[data[row_base[i] + c]];
        };
        auto window_median = [&]() -> std::uint8_t {
            std::uint32_t cum = 0;
            int level = 0;
            for (;; ++level) {
                cum += hist[level];
                if (cum >= median_rank) break;
            }
            return static_cast<std::uint8_t>(level);
        };

        std::fill(std::begin(hist), std::end(hist), 0u);
        for (int col = -radius; col <= radius; ++col) add_column(col);
        out(0, y) = window_median();

        for (int x = 1; x < w; ++x) {
            remove_column(x - 1 - radius);
            add_column(x + radius);
            out(x, y) = window_median();
        }
    }
}

// Runs fn(y0, y1) over disjoint row ranges covering [0, height), on up to
// `workers` threads. Chunk boundaries do not affect any output value, only
// which thread writes it.
template <typename Fn>
void for_each_row_chunk(int height, unsigned workers, Fn fn) {
    if (workers <= 1 || height <= 1) {
        fn(0, height);
        return;
    }
    const int n = static_cast<int>(std::min<unsigned>(workers, height));
    std::vector<std::thread> threads;
    threads.reserve(n);
    for (int i = 0; i < n; ++i) {
        const int y0 = static_cast<int>(static_cast<long long>(height) * i / n);
        const int y1 = static_cast<int>(static_cast<long long>(height) * (i + 1) / n);
        threads.emplace_back([=] { fn(y0, y1); });
    }
    for (auto& t : threads) t.join();
}

}  // namespace

GrayChannel median_filter_naive(const GrayChannel& ch, WindowSize w) {
    if (ch.empty()) {
        throw std::invalid_argument("median_filter_naive: channel is empty");
    }
    GrayChannel out(ch.width(), ch.height());
    filter_rows_naive(ch, w.radius(), 0, ch.height(), out);
    return out;
}

GrayChannel median_filter_fast(const GrayChannel& ch, WindowSize w,
                               unsigned workers) {
    if (ch.empty()) {
        throw std::invalid_argument("median_filter_fast: channel is empty");
    }
    GrayChannel out(ch.width(), ch.height());
    for_each_row_chunk(ch.height(), workers, [&](int y0, int y1) {
        filter_rows_fast(ch, w.radius(), y0, y1, out);
    });
    return out;
}

ColorImage median_filter_color(const ColorImage& img, WindowSize w,
                               unsigned workers) {
    RgbPlanes planes = split_channels(img);
    planes.r = median_filter_fast(planes.r, w, workers);
    planes.g = median_filter_fast(planes.g, w, workers);
    planes.b = median_filter_fast(planes.b, w, workers);
    return merge_channels(planes);
}

}  // namespace omseg
