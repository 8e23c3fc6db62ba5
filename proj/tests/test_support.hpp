// Shared helpers for the test suites: deterministic input generators, a
// scratch-directory guard, and a runner for the compiled CLI binary.
#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "omseg/histogram.hpp"
#include "omseg/image.hpp"

namespace testsup {

inline omseg::GrayChannel random_channel(std::mt19937& rng, int w, int h) {
    std::uniform_int_distribution<int> dist(0, 255);
    std::vector<std::uint8_t> values(static_cast<std::size_t>(w) * h);
    for (auto& v : values) v = static_cast<std::uint8_t>(dist(rng));
    return omseg::GrayChannel(w, h, std::move(values));
}

inline omseg::ColorImage random_image(std::mt19937& rng, int w, int h) {
    std::uniform_int_distribution<int> dist(0, 255);
    std::vector<omseg::Pixel> px(static_cast<std::size_t>(w) * h);
    for (auto& p : px) {
        p = omseg::Pixel{static_cast<std::uint8_t>(dist(rng)),
                         static_cast<std::uint8_t>(dist(rng)),
                         static_cast<std::uint8_t>(dist(rng))};
    }
    return omseg::ColorImage(w, h, std::move(px));
}

// --- histogram families ---------------------------------------------------

inline omseg::Histogram hist_from_counts(
    const std::array<std::uint64_t, 256>& counts) {
    omseg::Histogram h;
    h.counts = counts;
    for (auto c : counts) h.total += c;
    return h;
}

inline omseg::Histogram uniform_histogram(std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(0, 200);
    std::array<std::uint64_t, 256> counts{};
    for (auto& c : counts) c = static_cast<std::uint64_t>(dist(rng));
    counts[0] += 1;  // never empty
    counts[255] += 1;
    return hist_from_counts(counts);
}

inline omseg::Histogram bimodal_histogram(std::mt19937& rng) {
    std::uniform_int_distribution<int> center1(20, 100);
    std::uniform_int_distribution<int> center2(140, 230);
    std::uniform_real_distribution<double> sigma(4.0, 25.0);
    std::uniform_real_distribution<double> amp(100.0, 5000.0);
    const int c1 = center1(rng);
    const int c2 = center2(rng);
    const double s1 = sigma(rng), s2 = sigma(rng);
    const double a1 = amp(rng), a2 = amp(rng);
    std::array<std::uint64_t, 256> counts{};
    for (int i = 0; i < 256; ++i) {
        const double v = a1 * std::exp(-0.5 * (i - c1) * (i - c1) / (s1 * s1)) +
                         a2 * std::exp(-0.5 * (i - c2) * (i - c2) / (s2 * s2));
        counts[i] = static_cast<std::uint64_t>(v);
    }
    counts[c1] += 1;
    counts[c2] += 1;
    return hist_from_counts(counts);
}

inline omseg::Histogram heavy_tail_histogram(std::mt19937& rng) {
    std::exponential_distribution<double> tail(0.03);
    std::array<std::uint64_t, 256> counts{};
    for (int i = 0; i < 20000; ++i) {
        const int level = std::min(255, static_cast<int>(tail(rng)));
        ++counts[level];
    }
    counts[255] += 1;  // force occupation of the far tail
    return hist_from_counts(counts);
}

inline omseg::Histogram sparse_histogram(std::mt19937& rng) {
    std::uniform_int_distribution<int> nbins(2, 6);
    std::uniform_int_distribution<int> level(0, 255);
    std::uniform_int_distribution<int> count(1, 1000);
    std::array<std::uint64_t, 256> counts{};
    int placed = 0;
    const int want = nbins(rng);
    while (placed < want) {
        const int l = level(rng);
        if (counts[l] == 0) ++placed;
        counts[l] += static_cast<std::uint64_t>(count(rng));
    }
    return hist_from_counts(counts);
}

inline omseg::Histogram random_histogram(std::mt19937& rng, int family) {
    switch (family & 3) {
        case 0: return uniform_histogram(rng);
        case 1: return bimodal_histogram(rng);
        case 2: return heavy_tail_histogram(rng);
        default: return sparse_histogram(rng);
    }
}

// Smooth synthetic photo stand-in: channel-wise gradients plus a handful of
// soft blobs and light noise. Deterministic for a given seed.
inline omseg::ColorImage synthetic_test_image(int w, int h,
                                              std::uint32_t seed = 7u) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> noise(-6, 6);

    struct Blob {
        double cx, cy, radius, amp[3];
    };
    std::vector<Blob> blobs(6);
    for (auto& bl : blobs) {
        bl.cx = unit(rng) * w;
        bl.cy = unit(rng) * h;
        bl.radius = (0.08 + 0.22 * unit(rng)) * std::min(w, h);
        for (double& a : bl.amp) a = (unit(rng) - 0.3) * 220.0;
    }
    const double gx[3] = {unit(rng) * 120.0, unit(rng) * 120.0, unit(rng) * 120.0};
    const double gy[3] = {unit(rng) * 120.0, unit(rng) * 120.0, unit(rng) * 120.0};

    omseg::ColorImage img(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc[3];
            for (int c = 0; c < 3; ++c) {
                acc[c] = 40.0 + gx[c] * x / w + gy[c] * y / h;
            }
            for (const auto& bl : blobs) {
                const double d2 = (x - bl.cx) * (x - bl.cx) + (y - bl.cy) * (y - bl.cy);
                const double g = std::exp(-d2 / (2.0 * bl.radius * bl.radius));
                for (int c = 0; c < 3; ++c) acc[c] += bl.amp[c] * g;
            }
            omseg::Pixel p;
            p.r = static_cast<std::uint8_t>(std::clamp<int>(
                static_cast<int>(acc[0]) + noise(rng), 0, 255));
            p.g = static_cast<std::uint8_t>(std::clamp<int>(
                static_cast<int>(acc[1]) + noise(rng), 0, 255));
            p.b = static_cast<std::uint8_t>(std::clamp<int>(
                static_cast<int>(acc[2]) + noise(rng), 0, 255));
            img(x, y) = p;
        }
    }
    return img;
}

// --- filesystem scratch space ----------------------------------------------

class TempDir {
public:
    TempDir() {
        static std::atomic<int> counter{0};
        std::ostringstream name;
        name << "omseg_test_" << ::getpid() << "_" << counter.fetch_add(1);
        path_ = std::filesystem::temp_directory_path() / name.str();
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const noexcept { return path_; }

private:
    std::filesystem::path path_;
};

inline std::vector<std::uint8_t> read_bytes(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::vector<std::uint8_t>((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
}

inline void write_bytes(const std::filesystem::path& p,
                        const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

// --- CLI runner -------------------------------------------------------------

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string shell_quote(const std::string& s) {
    std::string quoted = "'";
    for (char c : s) {
        if (c == '\'') {
            quoted += "'\\''";
        } else {
            quoted += c;
        }
    }
    quoted += "'";
    return quoted;
}

inline std::string read_text(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Runs the built CLI binary with the given arguments, capturing exit code,
// stdout and stderr.
inline CliResult run_cli(const std::vector<std::string>& args) {
    TempDir capture;
    const auto out_path = capture.path() / "stdout.txt";
    const auto err_path = capture.path() / "stderr.txt";

    std::string cmd = shell_quote(OMSEG_CLI_PATH);
    for (const auto& a : args) cmd += " " + shell_quote(a);
    cmd += " > " + shell_quote(out_path.string());
    cmd += " 2> " + shell_quote(err_path.string());

    const int status = std::system(cmd.c_str());
    CliResult result;
    if (status != -1 && WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    }
    result.out = read_text(out_path);
    result.err = read_text(err_path);
    return result;
}

}  // namespace testsup
