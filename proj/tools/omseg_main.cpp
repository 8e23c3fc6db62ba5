// omseg command-line tool: per-channel automatic thresholding of a color
// image, optional median smoothing, the eight-panel window-size sweep, and a
// naive-vs-fast median filter benchmark.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "omseg/image.hpp"
#include "omseg/median.hpp"
#include "omseg/pipeline.hpp"
#include "omseg/ppm.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

unsigned default_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

omseg::ValueAssignment parse_mode(const std::string& mode) {
    return mode == "binary" ? omseg::ValueAssignment::Binary
                            : omseg::ValueAssignment::ClassMeans;
}

ordered_json threshold_json(const std::optional<int>& t) {
    if (t.has_value()) return *t;
    return "degenerate";
}

ordered_json thresholds_json(const omseg::SegmentationOutput& out) {
    ordered_json j;
    j["r"] = threshold_json(out.t_r);
    j["g"] = threshold_json(out.t_g);
    j["b"] = threshold_json(out.t_b);
    return j;
}

void write_json_file(const std::filesystem::path& path, const ordered_json& j) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out << j.dump(2) << "\n";
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

struct SegmentArgs {
    std::string input;
    std::string output;
    int window = 15;
    std::string mode = "means";
    bool no_median = false;
    std::string report;
};

int run_segment(const SegmentArgs& args) {
    const omseg::ColorImage img = omseg::load_ppm(args.input);

    omseg::SegmentationConfig cfg;
    cfg.window = omseg::WindowSize(args.window);
    cfg.mode = parse_mode(args.mode);
    cfg.apply_median = !args.no_median;

    omseg::StageTimings timings;
    const omseg::SegmentationOutput out =
        omseg::segment(img, cfg, default_workers(), &timings);
    omseg::save_ppm(args.output, out.image);

    if (!args.report.empty()) {
        ordered_json j;
        j["input"] = args.input;
        j["mode"] = args.mode;
        j["window"] = args.window;
        j["apply_median"] = cfg.apply_median;
        j["thresholds"] = thresholds_json(out);
        j["distinct_colors"] = omseg::count_distinct_colors(out.image);
        j["timings_ms"] = {{"otsu", timings.otsu_ms},
                           {"merge", timings.merge_ms},
                           {"median", timings.median_ms}};
        write_json_file(args.report, j);
    }

    std::cerr << "segmented " << args.input << " -> " << args.output << "\n";
    return 0;
}

struct SweepArgs {
    std::string input;
    std::string outdir;
    std::string mode = "means";
};

// Panel file names mirror the eight-panel layout: the plain thresholded
// image first, then the seven window sizes ascending.
const char* kPanelNames[8] = {"a_otsu.ppm", "b_k3.ppm",  "c_k5.ppm",
                              "d_k7.ppm",   "e_k9.ppm",  "f_k11.ppm",
                              "g_k13.ppm",  "h_k15.ppm"};

int run_sweep(const SweepArgs& args) {
    const omseg::ColorImage img = omseg::load_ppm(args.input);
    const std::filesystem::path outdir(args.outdir);
    std::filesystem::create_directories(outdir);

    const auto results =
        omseg::sweep(img, parse_mode(args.mode), default_workers());

    ordered_json panels = ordered_json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
        omseg::save_ppm(outdir / kPanelNames[i], results[i].image);
        ordered_json p;
        p["file"] = kPanelNames[i];
        p["median"] = results[i].config.apply_median;
        if (results[i].config.apply_median) {
            p["window"] = results[i].config.window.k();
        }
        panels.push_back(std::move(p));
    }

    // Thresholds are computed per channel before any filtering, so they are
    // the same for every panel; report them once.
    ordered_json j;
    j["input"] = args.input;
    j["mode"] = args.mode;
    j["thresholds"] = thresholds_json(results.front());
    j["panels"] = std::move(panels);
    write_json_file(outdir / "report.json", j);

    std::cerr << "sweep wrote 8 panels and report.json to " << args.outdir << "\n";
    return 0;
}

struct BenchArgs {
    std::string input;
    int repeat = 5;
};

template <typename Fn>
double median_time_ms(int repeat, Fn&& fn) {
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(repeat));
    for (int i = 0; i < repeat; ++i) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        samples.push_back(std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count());
    }
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

int run_bench(const BenchArgs& args) {
    const omseg::ColorImage img = omseg::load_ppm(args.input);
    const omseg::GrayChannel plane = omseg::split_channels(img).r;

    ordered_json rows = ordered_json::array();
    for (int k : omseg::kSweepWindows) {
        const omseg::WindowSize w(k);
        volatile std::uint8_t sink = 0;
        const double naive_ms = median_time_ms(args.repeat, [&] {
            sink = omseg::median_filter_naive(plane, w)(0, 0);
        });
        const double fast_ms = median_time_ms(args.repeat, [&] {
            sink = omseg::median_filter_fast(plane, w)(0, 0);
        });
        (void)sink;
        rows.push_back({{"k", k}, {"naive_ms", naive_ms}, {"fast_ms", fast_ms}});
        std::cerr << "k=" << k << " naive " << naive_ms << " ms, fast " << fast_ms
                  << " ms\n";
    }

    ordered_json j;
    j["input"] = args.input;
    j["channel"] = "r";
    j["width"] = img.width();
    j["height"] = img.height();
    j["repeat"] = args.repeat;
    j["rows"] = std::move(rows);
    std::cout << j.dump(2) << "\n";
    return 0;
}

std::string check_window_flag(const std::string& value) {
    int k = 0;
    try {
        k = std::stoi(value);
    } catch (...) {
        return "--window expects an integer, got '" + value + "'";
    }
    if (k < 3 || k > 255 || k % 2 == 0) {
        return "--window must be an odd integer in [3, 255], got " + value;
    }
    return {};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Color image segmentation: per-channel automatic thresholding "
                 "plus median smoothing"};
    app.require_subcommand(1);

    SegmentArgs seg_args;
    CLI::App* seg = app.add_subcommand("segment", "Segment one PPM image");
    seg->add_option("input", seg_args.input, "input image (binary PPM, P6)")
        ->required();
    seg->add_option("-o,--output", seg_args.output, "output image path")
        ->required();
    seg->add_option("--window", seg_args.window,
                    "median window size k (odd, 3-255)")
        ->check(CLI::Validator(check_window_flag, "ODD_WINDOW"))
        ->capture_default_str();
    seg->add_option("--mode", seg_args.mode, "class value assignment")
        ->check(CLI::IsMember({"binary", "means"}))
        ->capture_default_str();
    seg->add_flag("--no-median", seg_args.no_median,
                  "stop after thresholding and merge");
    seg->add_option("--report", seg_args.report, "write a JSON run report here");

    SweepArgs sweep_args;
    CLI::App* swp = app.add_subcommand(
        "sweep", "Write the 8-panel window-size sweep of one image");
    swp->add_option("input", sweep_args.input, "input image (binary PPM, P6)")
        ->required();
    swp->add_option("-d,--outdir", sweep_args.outdir, "output directory")
        ->required();
    swp->add_option("--mode", sweep_args.mode, "class value assignment")
        ->check(CLI::IsMember({"binary", "means"}))
        ->capture_default_str();

    BenchArgs bench_args;
    CLI::App* bch = app.add_subcommand(
        "bench", "Time naive vs fast median filter on the red channel");
    bch->add_option("input", bench_args.input, "input image (binary PPM, P6)")
        ->required();
    bch->add_option("--repeat", bench_args.repeat, "timing repeats per entry")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (seg->parsed()) return run_segment(seg_args);
        if (swp->parsed()) return run_sweep(sweep_args);
        if (bch->parsed()) return run_bench(bench_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
