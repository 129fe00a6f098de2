#pragma once

#include "ldop/image.hpp"
#include "ldop/sampling.hpp"

#include <cstdint>
#include <vector>

namespace ldop {

enum class DescriptorKind : std::uint8_t { Ldop = 0, Lbp = 1 };

struct Segment {
    DescriptorKind kind = DescriptorKind::Ldop;
    int radius = 2;

    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Concatenated normalized histograms. Each segment holds 2^N bins.
struct Descriptor {
    int directions = 8;
    std::vector<Segment> layout;
    std::vector<double> values;

    [[nodiscard]] std::size_t segment_length() const noexcept { return std::size_t{1} << directions; }
    [[nodiscard]] bool same_layout(const Descriptor& other) const noexcept {
        return directions == other.directions && layout == other.layout && values.size() == other.values.size();
    }
    friend bool operator==(const Descriptor&, const Descriptor&) = default;
};

/// Code map over the interior; cell (i, j) belongs to 0-based pixel (i + R, j + R).
struct PatternMap {
    int radius = 0;
    int directions = 8;
    int rows = 0;
    int cols = 0;
    std::vector<std::uint32_t> codes;

    [[nodiscard]] std::uint32_t at(int row, int col) const {
        return codes[static_cast<std::size_t>(row) * cols + col];
    }
    friend bool operator==(const PatternMap&, const PatternMap&) = default;
};

/// Maps an intensity in [0, 2^B - 1] onto [1, R!]. Not rounded.
[[nodiscard]] double center_transform(std::uint32_t intensity, int radius, int bit_depth);

/// LDOP code at the 1-based interior pixel (x, y).
[[nodiscard]] std::uint32_t ldop_code(const GrayImage& img, int x, int y, const NeighborSpec& spec);

[[nodiscard]] PatternMap ldop_map(const GrayImage& img, const NeighborSpec& spec);
[[nodiscard]] Descriptor ldop_histogram(const GrayImage& img, const NeighborSpec& spec);

/// [LDOP_R1, LDOP_R1+1, ..., LDOP_R2]; requires 2 <= R1 <= R2 <= 12.
[[nodiscard]] Descriptor multi_res_ldop(const GrayImage& img, int r1, int r2, int directions = 8);

/// Classic LBP: bit k set when the neighbour at radius R in direction k is
/// not darker than the centre. Same sampling and interior as LDOP.
[[nodiscard]] PatternMap lbp_map(const GrayImage& img, const NeighborSpec& spec);
[[nodiscard]] Descriptor lbp_histogram(const GrayImage& img, const NeighborSpec& spec);

/// Normalized 2^N-bin histogram of a pattern map.
[[nodiscard]] std::vector<double> code_histogram(const PatternMap& map);

/// Computes the descriptor described by a layout (used to replay the
/// configuration stored in a descriptor file).
[[nodiscard]] Descriptor describe(const GrayImage& img, const std::vector<Segment>& layout, int directions);

} // namespace ldop
