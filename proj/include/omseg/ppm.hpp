#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "omseg/image.hpp"

namespace omseg {

/// Base class of all decode errors. `offset` is the byte position in the
/// input stream at which the problem was detected.
class PpmError : public std::runtime_error {
public:
    PpmError(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " (byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Bad magic, non-numeric or out-of-range header fields, or a missing
/// single whitespace byte between maxval and the payload.
class MalformedHeaderError : public PpmError {
public:
    using PpmError::PpmError;
};

/// Header parsed fine but maxval is not 255.
class UnsupportedMaxvalError : public PpmError {
public:
    using PpmError::PpmError;
};

/// Fewer payload bytes than width * height * channels.
class TruncatedPayloadError : public PpmError {
public:
    using PpmError::PpmError;
};

/// Decodes a binary PPM (magic "P6", maxval 255). Comment lines starting
/// with '#' are allowed between header tokens; exactly one whitespace byte
/// separates maxval from the raw payload.
ColorImage read_ppm(std::span<const std::uint8_t> bytes);

/// Decodes a binary PGM (magic "P5", maxval 255).
GrayChannel read_pgm(std::span<const std::uint8_t> bytes);

/// Canonical encoding: "P6\n{w} {h}\n255\n" followed by the raw payload.
/// No comments, byte-deterministic: equal images give equal streams.
std::vector<std::uint8_t> write_ppm(const ColorImage& img);

/// Canonical encoding: "P5\n{w} {h}\n255\n" followed by the raw payload.
std::vector<std::uint8_t> write_pgm(const GrayChannel& ch);

ColorImage load_ppm(const std::filesystem::path& path);
GrayChannel load_pgm(const std::filesystem::path& path);
void save_ppm(const std::filesystem::path& path, const ColorImage& img);
void save_pgm(const std::filesystem::path& path, const GrayChannel& ch);

}  // namespace omseg
