#pragma once

#include "ldop/image.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace ldop {

/// N directions spaced 2*pi/N apart, sampled at radii 1..R along each.
struct NeighborSpec {
    int directions = 8;
    int radius = 2;

    /// Throws ArgumentError unless directions in [2, 16] and radius in [1, 12].
    void validate() const;
    /// theta_k = (k - 1) * 2*pi / N, for 1-based k.
    [[nodiscard]] double angle(int k) const;
};

struct SubpixelPoint {
    double row;
    double col;
};

/// 1-based row/col of the k-th neighbour at radius r:
/// row = x - r*sin(theta_k), col = y + r*cos(theta_k).
/// k = 1 points right, k = 1 + N/4 points up.
[[nodiscard]] SubpixelPoint neighbor_coords(double x, double y, int k, int r, int directions);

/// Bilinear intensity at a 1-based subpixel position inside [1, d_x] x [1, d_y].
/// Positions are snapped to a 1/65536 grid first, so the interpolation of
/// integer intensities is exact in double precision and ties between
/// samples are decided exactly.
[[nodiscard]] double sample_bilinear(const GrayImage& img, double fx, double fy);

/// Intensities at radii 1..R along direction k from the 1-based centre (x, y).
/// The centre must be at least R pixels from every border.
struct DirectionalNeighborhood {
    int direction = 1;
    std::vector<double> values;
};

[[nodiscard]] DirectionalNeighborhood directional_neighbors(const GrayImage& img, int x, int y, int k,
                                                            const NeighborSpec& spec);

/// Precomputed bilinear taps for every (direction, radius) pair of a spec.
/// Sampling through the kernel is bit-identical to sample_bilinear at
/// neighbor_coords, without recomputing trigonometry per pixel.
class NeighborKernel {
public:
    explicit NeighborKernel(const NeighborSpec& spec);

    [[nodiscard]] const NeighborSpec& spec() const noexcept { return spec_; }

    /// Sample at radius r (1-based) in direction k (1-based) around the
    /// 0-based centre (row, col). No bounds checking.
    [[nodiscard]] double sample(const GrayImage& img, int row, int col, int k, int r) const noexcept;

    /// Fills out[0..R) with the directional neighbours; 0-based centre.
    void gather(const GrayImage& img, int row, int col, int k, double* out) const noexcept;

private:
    struct Tap {
        int row_offset;
        int col_offset;
        double row_frac;
        double col_frac;
    };
    NeighborSpec spec_;
    std::vector<Tap> taps_; // indexed (k - 1) * R + (r - 1)
};

} // namespace ldop
