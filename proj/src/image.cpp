#include "ldop/image.hpp"

#include "ldop/error.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <string>

namespace ldop {

GrayImage::GrayImage(int width, int height, int bit_depth)
    : GrayImage(width, height,
                std::vector<std::uint16_t>(static_cast<std::size_t>(std::max(width, 0)) *
                                           static_cast<std::size_t>(std::max(height, 0))),
                bit_depth) {}

GrayImage::GrayImage(int width, int height, std::vector<std::uint16_t> pixels, int bit_depth)
    : width_(width), height_(height), bit_depth_(bit_depth), pixels_(std::move(pixels)) {
    if (width < 1 || height < 1) {
        throw ArgumentError("image dimensions must be positive, got " + std::to_string(width) +
                            "x" + std::to_string(height));
    }
    if (bit_depth < 1 || bit_depth > 16) {
        throw ArgumentError("bit depth must be in [1, 16], got " + std::to_string(bit_depth));
    }
    if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw ArgumentError("pixel buffer size does not match image dimensions");
    }
    const auto max = max_value();
    if (std::any_of(pixels_.begin(), pixels_.end(), [max](std::uint16_t v) { return v > max; })) {
        throw ArgumentError("pixel value exceeds 2^B - 1 for B = " + std::to_string(bit_depth));
    }
}

void GrayImage::set(int row, int col, std::uint16_t value) {
    if (value > max_value()) {
        throw ArgumentError("pixel value " + std::to_string(value) + " exceeds bit depth");
    }
    pixels_[static_cast<std::size_t>(row) * width_ + col] = value;
}

std::uint16_t to_gray(double r, double g, double b, std::uint32_t max_value) {
    const double luma = std::round(0.299 * r + 0.587 * g + 0.114 * b);
    return static_cast<std::uint16_t>(std::clamp(luma, 0.0, static_cast<double>(max_value)));
}

GrayImage resize_bilinear(const GrayImage& img, int out_width, int out_height) {
    if (out_width < 1 || out_height < 1) {
        throw ArgumentError("resize target must be at least 1x1, got " + std::to_string(out_width) +
                            "x" + std::to_string(out_height));
    }
    if (img.empty()) {
        throw ArgumentError("cannot resize an empty image");
    }
    if (out_width == img.width() && out_height == img.height()) {
        return img;
    }

    struct Tap {
        int lo;
        int hi;
        double frac;
    };
    const auto taps = [](int in_size, int out_size) {
        std::vector<Tap> result(static_cast<std::size_t>(out_size));
        const double scale = static_cast<double>(in_size) / out_size;
        for (int i = 0; i < out_size; ++i) {
            const double src = std::clamp((i + 0.5) * scale - 0.5, 0.0, in_size - 1.0);
            const int lo = static_cast<int>(std::floor(src));
            const int hi = std::min(lo + 1, in_size - 1);
            result[static_cast<std::size_t>(i)] = {lo, hi, src - lo};
        }
        return result;
    };
    const auto row_taps = taps(img.height(), out_height);
    const auto col_taps = taps(img.width(), out_width);

    std::vector<std::uint16_t> out(static_cast<std::size_t>(out_width) * out_height);
    for (int r = 0; r < out_height; ++r) {
        const Tap& tr = row_taps[static_cast<std::size_t>(r)];
        for (int c = 0; c < out_width; ++c) {
            const Tap& tc = col_taps[static_cast<std::size_t>(c)];
            const double top = img.at(tr.lo, tc.lo) + tc.frac * (img.at(tr.lo, tc.hi) - img.at(tr.lo, tc.lo));
            const double bottom = img.at(tr.hi, tc.lo) + tc.frac * (img.at(tr.hi, tc.hi) - img.at(tr.hi, tc.lo));
            const double v = top + tr.frac * (bottom - top);
            out[static_cast<std::size_t>(r) * out_width + c] = static_cast<std::uint16_t>(std::lround(v));
        }
    }
    return GrayImage(out_width, out_height, std::move(out), img.bit_depth());
}

namespace {

int bits_for(std::uint32_t maxval) {
    int bits = 1;
    while ((1u << bits) - 1u < maxval) {
        ++bits;
    }
    return bits;
}

class PnmReader {
public:
    explicit PnmReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::string magic() {
        if (bytes_.size() < 2 || bytes_[0] != 'P') {
            throw FormatError("missing PNM magic number");
        }
        pos_ = 2;
        return {static_cast<char>(bytes_[0]), static_cast<char>(bytes_[1])};
    }

    std::uint32_t header_int() {
        skip_space_and_comments();
        if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
            throw FormatError("malformed PNM header");
        }
        std::uint64_t value = 0;
        while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
            value = value * 10 + (bytes_[pos_++] - '0');
            if (value > 0xFFFFFFFFull) {
                throw FormatError("PNM header value out of range");
            }
        }
        return static_cast<std::uint32_t>(value);
    }

    // Exactly one whitespace byte separates the header from binary data.
    void end_header() {
        if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
            throw FormatError("malformed PNM header terminator");
        }
        ++pos_;
    }

    std::span<const std::uint8_t> take(std::size_t count) {
        if (bytes_.size() - pos_ < count) {
            throw FormatError("truncated PNM raster");
        }
        auto out = bytes_.subspan(pos_, count);
        pos_ += count;
        return out;
    }

private:
    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            if (std::isspace(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') {
                    ++pos_;
                }
            } else {
                break;
            }
        }
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw IoError("error reading " + path.string());
    }
    return bytes;
}

bool is_png(std::span<const std::uint8_t> bytes) {
    static constexpr std::uint8_t kSignature[8] = {0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};
    return bytes.size() >= 8 && std::equal(kSignature, kSignature + 8, bytes.begin());
}

GrayImage decode_png(std::span<const std::uint8_t> bytes) {
    png_image image{};
    image.version = PNG_IMAGE_VERSION;
    if (png_image_begin_read_from_memory(&image, bytes.data(), bytes.size()) == 0) {
        throw FormatError(std::string("invalid PNG: ") + image.message);
    }
    const bool colour = (image.format & PNG_FORMAT_FLAG_COLOR) != 0;
    image.format = colour ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
    const int width = static_cast<int>(image.width);
    const int height = static_cast<int>(image.height);
    std::vector<std::uint8_t> buffer(PNG_IMAGE_SIZE(image));
    if (png_image_finish_read(&image, nullptr, buffer.data(), 0, nullptr) == 0) {
        png_image_free(&image);
        throw FormatError(std::string("invalid PNG: ") + image.message);
    }

    std::vector<std::uint16_t> pixels(static_cast<std::size_t>(width) * height);
    if (colour) {
        for (std::size_t i = 0; i < pixels.size(); ++i) {
            pixels[i] = to_gray(buffer[3 * i], buffer[3 * i + 1], buffer[3 * i + 2]);
        }
    } else {
        std::copy(buffer.begin(), buffer.end(), pixels.begin());
    }
    return GrayImage(width, height, std::move(pixels), 8);
}

} // namespace

GrayImage decode_pnm(std::span<const std::uint8_t> bytes) {
    PnmReader reader(bytes);
    const std::string magic = reader.magic();
    if (magic != "P5" && magic != "P2" && magic != "P6") {
        throw FormatError("unsupported PNM variant " + magic);
    }
    const std::uint32_t width = reader.header_int();
    const std::uint32_t height = reader.header_int();
    const std::uint32_t maxval = reader.header_int();
    if (width == 0 || height == 0 || width > 1u << 15 || height > 1u << 15) {
        throw FormatError("PNM dimensions out of range");
    }
    if (maxval == 0 || maxval > 65535) {
        throw FormatError("PNM maxval out of range");
    }
    const int bit_depth = maxval <= 255 ? 8 : bits_for(maxval);
    const std::size_t count = static_cast<std::size_t>(width) * height;
    std::vector<std::uint16_t> pixels(count);

    if (magic == "P2") {
        for (auto& p : pixels) {
            const auto v = reader.header_int();
            if (v > maxval) {
                throw FormatError("PGM sample exceeds maxval");
            }
            p = static_cast<std::uint16_t>(v);
        }
        return GrayImage(static_cast<int>(width), static_cast<int>(height), std::move(pixels), bit_depth);
    }

    reader.end_header();
    const std::size_t sample_bytes = maxval > 255 ? 2 : 1;
    const std::size_t channels = magic == "P6" ? 3 : 1;
    const auto raster = reader.take(count * channels * sample_bytes);
    const auto sample = [&](std::size_t i) -> std::uint32_t {
        std::uint32_t v = sample_bytes == 2 ? (raster[2 * i] << 8u) | raster[2 * i + 1] : raster[i];
        if (v > maxval) {
            throw FormatError("PNM sample exceeds maxval");
        }
        return v;
    };
    for (std::size_t i = 0; i < count; ++i) {
        if (channels == 3) {
            pixels[i] = to_gray(sample(3 * i), sample(3 * i + 1), sample(3 * i + 2), (1u << bit_depth) - 1u);
        } else {
            pixels[i] = static_cast<std::uint16_t>(sample(i));
        }
    }
    return GrayImage(static_cast<int>(width), static_cast<int>(height), std::move(pixels), bit_depth);
}

GrayImage load_gray(const std::filesystem::path& path) {
    const auto bytes = read_file(path);
    try {
        if (is_png(bytes)) {
            return decode_png(bytes);
        }
        if (bytes.size() >= 2 && bytes[0] == 'P') {
            return decode_pnm(bytes);
        }
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
    throw FormatError(path.string() + ": unsupported image format");
}

std::vector<std::uint8_t> encode_pgm(const GrayImage& img) {
    const std::uint32_t maxval = img.bit_depth() <= 8 ? 255u : img.max_value();
    const std::string header = "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) +
                               "\n" + std::to_string(maxval) + "\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    for (const auto v : img.pixels()) {
        if (maxval > 255) {
            out.push_back(static_cast<std::uint8_t>(v >> 8));
        }
        out.push_back(static_cast<std::uint8_t>(v & 0xFF));
    }
    return out;
}

void write_pgm(const GrayImage& img, const std::filesystem::path& path) {
    const auto bytes = encode_pgm(img);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw IoError("error writing " + path.string());
    }
}

} // namespace ldop
