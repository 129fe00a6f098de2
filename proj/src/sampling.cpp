#include "ldop/sampling.hpp"

#include "ldop/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ldop {

namespace {

constexpr double kSubpixelSteps = 65536.0;

// Fixed-point split of a coordinate into integer part and a fraction on the
// 1/65536 grid.
struct Split {
    std::int64_t whole;
    double frac;
};

Split split(double coord) {
    const auto q = static_cast<std::int64_t>(std::llround(coord * kSubpixelSteps));
    const std::int64_t whole = q >= 0 ? q / 65536 : -((-q + 65535) / 65536);
    return {whole, static_cast<double>(q - whole * 65536) / kSubpixelSteps};
}

double lerp2(double tl, double tr, double bl, double br, double row_frac, double col_frac) {
    const double top = tl + col_frac * (tr - tl);
    const double bottom = bl + col_frac * (br - bl);
    return top + row_frac * (bottom - top);
}

} // namespace

void NeighborSpec::validate() const {
    if (directions < 2 || directions > 16) {
        throw ArgumentError("number of directions must be in [2, 16], got " + std::to_string(directions));
    }
    if (radius < 1 || radius > 12) {
        throw ArgumentError("radius must be in [1, 12], got " + std::to_string(radius));
    }
}

double NeighborSpec::angle(int k) const {
    return (k - 1) * 2.0 * std::numbers::pi / directions;
}

SubpixelPoint neighbor_coords(double x, double y, int k, int r, int directions) {
    const double theta = (k - 1) * 2.0 * std::numbers::pi / directions;
    return {x - r * std::sin(theta), y + r * std::cos(theta)};
}

double sample_bilinear(const GrayImage& img, double fx, double fy) {
    const Split rs = split(fx);
    const Split cs = split(fy);
    const bool row_ok = rs.whole >= 1 && (rs.whole < img.height() || (rs.whole == img.height() && rs.frac == 0.0));
    const bool col_ok = cs.whole >= 1 && (cs.whole < img.width() || (cs.whole == img.width() && cs.frac == 0.0));
    if (!row_ok || !col_ok) {
        throw BoundsError("sample position (" + std::to_string(fx) + ", " + std::to_string(fy) +
                          ") outside image of " + std::to_string(img.height()) + "x" +
                          std::to_string(img.width()));
    }
    const int r0 = static_cast<int>(rs.whole) - 1;
    const int c0 = static_cast<int>(cs.whole) - 1;
    const int r1 = rs.frac > 0.0 ? r0 + 1 : r0;
    const int c1 = cs.frac > 0.0 ? c0 + 1 : c0;
    return lerp2(img.at(r0, c0), img.at(r0, c1), img.at(r1, c0), img.at(r1, c1), rs.frac, cs.frac);
}

DirectionalNeighborhood directional_neighbors(const GrayImage& img, int x, int y, int k, const NeighborSpec& spec) {
    spec.validate();
    if (k < 1 || k > spec.directions) {
        throw ArgumentError("direction index " + std::to_string(k) + " outside [1, " +
                            std::to_string(spec.directions) + "]");
    }
    const int R = spec.radius;
    if (x < R + 1 || x > img.height() - R || y < R + 1 || y > img.width() - R) {
        throw BoundsError("pixel (" + std::to_string(x) + ", " + std::to_string(y) +
                          ") closer than R = " + std::to_string(R) + " to the border");
    }
    DirectionalNeighborhood out{k, std::vector<double>(static_cast<std::size_t>(R))};
    for (int r = 1; r <= R; ++r) {
        const auto p = neighbor_coords(x, y, k, r, spec.directions);
        out.values[static_cast<std::size_t>(r - 1)] = sample_bilinear(img, p.row, p.col);
    }
    return out;
}

NeighborKernel::NeighborKernel(const NeighborSpec& spec) : spec_(spec) {
    spec_.validate();
    taps_.reserve(static_cast<std::size_t>(spec_.directions * spec_.radius));
    for (int k = 1; k <= spec_.directions; ++k) {
        for (int r = 1; r <= spec_.radius; ++r) {
            const auto p = neighbor_coords(0.0, 0.0, k, r, spec_.directions);
            const Split rs = split(p.row);
            const Split cs = split(p.col);
            taps_.push_back({static_cast<int>(rs.whole), static_cast<int>(cs.whole), rs.frac, cs.frac});
        }
    }
}

double NeighborKernel::sample(const GrayImage& img, int row, int col, int k, int r) const noexcept {
    const Tap& t = taps_[static_cast<std::size_t>((k - 1) * spec_.radius + (r - 1))];
    const int r0 = row + t.row_offset;
    const int c0 = col + t.col_offset;
    const int r1 = t.row_frac > 0.0 ? r0 + 1 : r0;
    const int c1 = t.col_frac > 0.0 ? c0 + 1 : c0;
    return lerp2(img.at(r0, c0), img.at(r0, c1), img.at(r1, c0), img.at(r1, c1), t.row_frac, t.col_frac);
}

void NeighborKernel::gather(const GrayImage& img, int row, int col, int k, double* out) const noexcept {
    for (int r = 1; r <= spec_.radius; ++r) {
        out[r - 1] = sample(img, row, col, k, r);
    }
}

} // namespace ldop
