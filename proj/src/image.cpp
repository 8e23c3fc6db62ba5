#include "omseg/image.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace omseg {

namespace {

void check_dims(int width, int height) {
    if (width < 1 || height < 1) {
        throw std::invalid_argument("image dimensions must be at least 1x1, got " +
                                    std::to_string(width) + "x" + std::to_string(height));
    }
}

std::size_t expected_count(int width, int height) {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
}

}  // namespace

GrayChannel::GrayChannel(int width, int height, std::uint8_t fill)
    : width_(width), height_(height) {
    check_dims(width, height);
    values_.assign(expected_count(width, height), fill);
}

GrayChannel::GrayChannel(int width, int height, std::vector<std::uint8_t> values)
    : width_(width), height_(height), values_(std::move(values)) {
    check_dims(width, height);
    if (values_.size() != expected_count(width, height)) {
        throw std::invalid_argument("gray channel value count " +
                                    std::to_string(values_.size()) + " != width*height " +
                                    std::to_string(expected_count(width, height)));
    }
}

ColorImage::ColorImage(int width, int height, Pixel fill)
    : width_(width), height_(height) {
    check_dims(width, height);
    pixels_.assign(expected_count(width, height), fill);
}

ColorImage::ColorImage(int width, int height, std::vector<Pixel> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    check_dims(width, height);
    if (pixels_.size() != expected_count(width, height)) {
        throw std::invalid_argument("pixel count " + std::to_string(pixels_.size()) +
                                    " != width*height " +
                                    std::to_string(expected_count(width, height)));
    }
}

RgbPlanes split_channels(const ColorImage& img) {
    RgbPlanes planes{GrayChannel(img.width(), img.height()),
                     GrayChannel(img.width(), img.height()),
                     GrayChannel(img.width(), img.height())};
    auto src = img.pixels();
    auto r = planes.r.values();
    auto g = planes.g.values();
    auto b = planes.b.values();
    for (std::size_t i = 0; i < src.size(); ++i) {
        r[i] = src[i].r;
        g[i] = src[i].g;
        b[i] = src[i].b;
    }
    return planes;
}

ColorImage merge_channels(const GrayChannel& r, const GrayChannel& g,
                          const GrayChannel& b) {
    if (r.width() != g.width() || r.width() != b.width() ||
        r.height() != g.height() || r.height() != b.height()) {
        throw std::invalid_argument(
            "merge_channels: channel dimensions differ (" +
            std::to_string(r.width()) + "x" + std::to_string(r.height()) + ", " +
            std::to_string(g.width()) + "x" + std::to_string(g.height()) + ", " +
            std::to_string(b.width()) + "x" + std::to_string(b.height()) + ")");
    }
    ColorImage img(r.width(), r.height());
    auto dst = img.pixels();
    auto rv = r.values();
    auto gv = g.values();
    auto bv = b.values();
    for (std::size_t i = 0; i < dst.size(); ++i) {
        dst[i] = Pixel{rv[i], gv[i], bv[i]};
    }
    return img;
}

ColorImage merge_channels(const RgbPlanes& planes) {
    return merge_channels(planes.r, planes.g, planes.b);
}

std::size_t count_distinct_colors(const ColorImage& img) {
    std::vector<std::uint32_t> keys;
    keys.reserve(img.pixel_count());
    for (const Pixel& p : img.pixels()) {
        keys.push_back(static_cast<std::uint32_t>(p.r) << 16 |
                       static_cast<std::uint32_t>(p.g) << 8 | p.b);
    }
    std::sort(keys.begin(), keys.end());
    return static_cast<std::size_t>(
        std::unique(keys.begin(), keys.end()) - keys.begin());
}

}  // namespace omseg
