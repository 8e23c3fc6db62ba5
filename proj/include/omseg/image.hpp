#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace omseg {

/// One 8-bit RGB pixel. Packed, so a row-major pixel buffer has the same
/// byte layout as a binary PPM payload.
struct Pixel {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(const Pixel&, const Pixel&) = default;
};

static_assert(sizeof(Pixel) == 3, "Pixel must stay a packed RGB triple");

/// Single 8-bit plane (one of R/G/B treated as a gray channel).
///
/// Storage is row-major with (x, y) = (column, row) and origin at the
/// top-left: value(x, y) = values[y * width + x].
class GrayChannel {
public:
    GrayChannel() = default;
    GrayChannel(int width, int height, std::uint8_t fill = 0);
    GrayChannel(int width, int height, std::vector<std::uint8_t> values);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t pixel_count() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    std::uint8_t operator()(int x, int y) const {
        return values_[static_cast<std::size_t>(y) * width_ + x];
    }
    std::uint8_t& operator()(int x, int y) {
        return values_[static_cast<std::size_t>(y) * width_ + x];
    }

    std::span<const std::uint8_t> values() const noexcept { return values_; }
    std::span<std::uint8_t> values() noexcept { return values_; }

    friend bool operator==(const GrayChannel&, const GrayChannel&) = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> values_;
};

/// 8-bit RGB image, row-major, origin top-left.
class ColorImage {
public:
    ColorImage() = default;
    ColorImage(int width, int height, Pixel fill = {});
    ColorImage(int width, int height, std::vector<Pixel> pixels);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t pixel_count() const noexcept { return pixels_.size(); }
    bool empty() const noexcept { return pixels_.empty(); }

    const Pixel& operator()(int x, int y) const {
        return pixels_[static_cast<std::size_t>(y) * width_ + x];
    }
    Pixel& operator()(int x, int y) {
        return pixels_[static_cast<std::size_t>(y) * width_ + x];
    }

    std::span<const Pixel> pixels() const noexcept { return pixels_; }
    std::span<Pixel> pixels() noexcept { return pixels_; }

    friend bool operator==(const ColorImage&, const ColorImage&) = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<Pixel> pixels_;
};

/// The three planes of a color image, in R, G, B order.
struct RgbPlanes {
    GrayChannel r;
    GrayChannel g;
    GrayChannel b;
};

/// Splits an image into its R, G and B planes. Lossless:
/// merge_channels(split_channels(img)) == img, bit-exact.
RgbPlanes split_channels(const ColorImage& img);

/// Recombines three planes of identical dimensions into a color image.
/// Throws std::invalid_argument when widths or heights differ.
ColorImage merge_channels(const GrayChannel& r, const GrayChannel& g,
                          const GrayChannel& b);

ColorImage merge_channels(const RgbPlanes& planes);

/// Number of distinct RGB colors present in the image.
std::size_t count_distinct_colors(const ColorImage& img);

}  // namespace omseg
