#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace ldop {

/// Single-channel image, row-major. Rows are the x axis (d_x = height),
/// columns the y axis (d_y = width). Pixel values lie in [0, 2^B - 1].
class GrayImage {
public:
    GrayImage() = default;
    GrayImage(int width, int height, int bit_depth = 8);
    GrayImage(int width, int height, std::vector<std::uint16_t> pixels, int bit_depth = 8);

    [[nodiscard]] int width() const noexcept { return width_; }
    [[nodiscard]] int height() const noexcept { return height_; }
    [[nodiscard]] int bit_depth() const noexcept { return bit_depth_; }
    [[nodiscard]] std::uint32_t max_value() const noexcept { return (1u << bit_depth_) - 1u; }
    [[nodiscard]] bool empty() const noexcept { return pixels_.empty(); }

    /// 0-based access.
    [[nodiscard]] std::uint16_t at(int row, int col) const {
        return pixels_[static_cast<std::size_t>(row) * width_ + col];
    }
    void set(int row, int col, std::uint16_t value);

    [[nodiscard]] std::span<const std::uint16_t> pixels() const noexcept { return pixels_; }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
    int width_ = 0;
    int height_ = 0;
    int bit_depth_ = 8;
    std::vector<std::uint16_t> pixels_;
};

/// BT.601 luma, rounded and clamped to [0, max_value].
[[nodiscard]] std::uint16_t to_gray(double r, double g, double b, std::uint32_t max_value = 255);

/// Bilinear resize using half-pixel centers and edge clamping.
[[nodiscard]] GrayImage resize_bilinear(const GrayImage& img, int out_width, int out_height);

/// Loads a binary/ASCII PGM (P5/P2), binary PPM (P6) or PNG file.
/// Colour inputs are converted with to_gray.
[[nodiscard]] GrayImage load_gray(const std::filesystem::path& path);

/// Parses an in-memory PGM/PPM buffer.
[[nodiscard]] GrayImage decode_pnm(std::span<const std::uint8_t> bytes);

/// Writes a binary P5 PGM. 16-bit samples for bit depths above 8.
void write_pgm(const GrayImage& img, const std::filesystem::path& path);
[[nodiscard]] std::vector<std::uint8_t> encode_pgm(const GrayImage& img);

} // namespace ldop
