#include "omseg/ppm.hpp"

#include <cstring>
#include <fstream>
#include <limits>

namespace omseg {

namespace {

bool is_ppm_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

class HeaderCursor {
public:
    explicit HeaderCursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::size_t pos() const noexcept { return pos_; }
    std::size_t size() const noexcept { return bytes_.size(); }

    // Whitespace and '#'-to-end-of-line comments are skippable between tokens.
    void skip_separators() {
        while (pos_ < bytes_.size()) {
            if (is_ppm_space(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::string next_token(const char* what) {
        skip_separators();
        const std::size_t start = pos_;
        while (pos_ < bytes_.size() && !is_ppm_space(bytes_[pos_])) ++pos_;
        if (pos_ == start) {
            throw MalformedHeaderError(std::string("missing ") + what, start);
        }
        return std::string(bytes_.begin() + start, bytes_.begin() + pos_);
    }

    // Decimal header field; anything non-numeric or absurdly large is a
    // malformed header, not a different error class.
    std::uint64_t next_number(const char* what) {
        const std::size_t start = pos_;
        const std::string tok = next_token(what);
        std::uint64_t value = 0;
        for (char c : tok) {
            if (c < '0' || c > '9') {
                throw MalformedHeaderError(
                    std::string("non-numeric ") + what + " '" + tok + "'", start);
            }
            value = value * 10 + static_cast<std::uint64_t>(c - '0');
            if (value > std::numeric_limits<int>::max()) {
                throw MalformedHeaderError(std::string(what) + " out of range", start);
            }
        }
        return value;
    }

    std::span<const std::uint8_t> rest() const { return bytes_.subspan(pos_); }

    void advance(std::size_t n) { pos_ += n; }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

struct DecodedHeader {
    int width;
    int height;
    std::span<const std::uint8_t> payload;
};

DecodedHeader decode_header(std::span<const std::uint8_t> bytes,
                            const char* magic, int channels) {
    HeaderCursor cur(bytes);

    // The magic token must open the stream; no leading whitespace.
    if (bytes.size() < 2 || bytes[0] != static_cast<std::uint8_t>(magic[0]) ||
        bytes[1] != static_cast<std::uint8_t>(magic[1])) {
        throw MalformedHeaderError(std::string("expected magic '") + magic + "'", 0);
    }
    cur.advance(2);
    if (cur.pos() < cur.size() && !is_ppm_space(bytes[cur.pos()]) &&
        bytes[cur.pos()] != '#') {
        throw MalformedHeaderError(std::string("expected magic '") + magic + "'", 0);
    }

    const std::uint64_t width = cur.next_number("width");
    const std::uint64_t height = cur.next_number("height");
    if (width == 0 || height == 0) {
        throw MalformedHeaderError("width and height must be positive", cur.pos());
    }

    cur.skip_separators();
    const std::size_t maxval_pos = cur.pos();
    const std::uint64_t maxval = cur.next_number("maxval");
    if (maxval != 255) {
        throw UnsupportedMaxvalError(
            "maxval " + std::to_string(maxval) + " unsupported, only 255", maxval_pos);
    }

    // Exactly one whitespace byte between maxval and the raw payload.
    if (cur.pos() >= cur.size() || !is_ppm_space(bytes[cur.pos()])) {
        throw MalformedHeaderError("expected single whitespace byte after maxval",
                                   cur.pos());
    }
    cur.advance(1);

    const std::uint64_t expected =
        width * height * static_cast<std::uint64_t>(channels);
    auto payload = cur.rest();
    if (payload.size() < expected) {
        throw TruncatedPayloadError(
            "payload holds " + std::to_string(payload.size()) + " of " +
                std::to_string(expected) + " bytes",
            bytes.size());
    }
    return DecodedHeader{static_cast<int>(width), static_cast<int>(height),
                         payload.first(static_cast<std::size_t>(expected))};
}

void append_header(std::vector<std::uint8_t>& out, const char* magic,
                   int width, int height) {
    const std::string header = std::string(magic) + "\n" + std::to_string(width) +
                               " " + std::to_string(height) + "\n255\n";
    out.insert(out.end(), header.begin(), header.end());
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string() + " for reading");
    }
    std::vector<std::uint8_t> bytes(
        (std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw std::runtime_error("read failed for " + path.string());
    }
    return bytes;
}

void write_file_bytes(const std::filesystem::path& path,
                      std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

}  // namespace

ColorImage read_ppm(std::span<const std::uint8_t> bytes) {
    const DecodedHeader h = decode_header(bytes, "P6", 3);
    std::vector<Pixel> pixels(static_cast<std::size_t>(h.width) * h.height);
    std::memcpy(pixels.data(), h.payload.data(), h.payload.size());
    return ColorImage(h.width, h.height, std::move(pixels));
}

GrayChannel read_pgm(std::span<const std::uint8_t> bytes) {
    const DecodedHeader h = decode_header(bytes, "P5", 1);
    return GrayChannel(h.width, h.height,
                       std::vector<std::uint8_t>(h.payload.begin(), h.payload.end()));
}

std::vector<std::uint8_t> write_ppm(const ColorImage& img) {
    if (img.empty()) {
        throw std::invalid_argument("write_ppm: image is empty");
    }
    std::vector<std::uint8_t> out;
    out.reserve(img.pixel_count() * 3 + 32);
    append_header(out, "P6", img.width(), img.height());
    const std::size_t header_size = out.size();
    out.resize(header_size + img.pixel_count() * 3);
    std::memcpy(out.data() + header_size, img.pixels().data(), img.pixel_count() * 3);
    return out;
}

std::vector<std::uint8_t> write_pgm(const GrayChannel& ch) {
    if (ch.empty()) {
        throw std::invalid_argument("write_pgm: channel is empty");
    }
    std::vector<std::uint8_t> out;
    out.reserve(ch.pixel_count() + 32);
    append_header(out, "P5", ch.width(), ch.height());
    out.insert(out.end(), ch.values().begin(), ch.values().end());
    return out;
}

ColorImage load_ppm(const std::filesystem::path& path) {
    return read_ppm(read_file_bytes(path));
}

GrayChannel load_pgm(const std::filesystem::path& path) {
    return read_pgm(read_file_bytes(path));
}

void save_ppm(const std::filesystem::path& path, const ColorImage& img) {
    write_file_bytes(path, write_ppm(img));
}

void save_pgm(const std::filesystem::path& path, const GrayChannel& ch) {
    write_file_bytes(path, write_pgm(ch));
}

}  // namespace omseg
