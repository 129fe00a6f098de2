#include "ldop/encoder.hpp"

#include "ldop/error.hpp"
#include "ldop/order.hpp"

#include <string>

namespace ldop {

namespace {

void require_ldop_radius(int radius) {
    if (radius < 2 || radius > kMaxOrderLength) {
        throw ArgumentError("LDOP radius must be in [2, 12], got " + std::to_string(radius));
    }
}

// 0-based interior pixel.
std::uint32_t ldop_code_at(const GrayImage& img, const NeighborKernel& kernel, int row, int col) {
    const int R = kernel.spec().radius;
    const double T = center_transform(img.at(row, col), R, img.bit_depth());
    double values[kMaxOrderLength];
    std::uint32_t code = 0;
    for (int k = 1; k <= kernel.spec().directions; ++k) {
        kernel.gather(img, row, col, k, values);
        if (static_cast<double>(order_index(values, R)) >= T) {
            code |= 1u << (k - 1);
        }
    }
    return code;
}

std::uint32_t lbp_code_at(const GrayImage& img, const NeighborKernel& kernel, int row, int col) {
    const int R = kernel.spec().radius;
    const double center = img.at(row, col);
    std::uint32_t code = 0;
    for (int k = 1; k <= kernel.spec().directions; ++k) {
        if (kernel.sample(img, row, col, k, R) >= center) {
            code |= 1u << (k - 1);
        }
    }
    return code;
}

template <typename CodeFn>
PatternMap build_map(const GrayImage& img, const NeighborSpec& spec, CodeFn code_at) {
    const int R = spec.radius;
    require_interior(img, R);
    const NeighborKernel kernel(spec);
    PatternMap map{R, spec.directions, img.height() - 2 * R, img.width() - 2 * R, {}};
    map.codes.resize(static_cast<std::size_t>(map.rows) * map.cols);
    for (int row = 0; row < map.rows; ++row) {
        for (int col = 0; col < map.cols; ++col) {
            map.codes[static_cast<std::size_t>(row) * map.cols + col] = code_at(img, kernel, row + R, col + R);
        }
    }
    return map;
}

} // namespace

double center_transform(std::uint32_t intensity, int radius, int bit_depth) {
    const double range = static_cast<double>(factorial(radius)) - 1.0;
    const double max_value = static_cast<double>((std::uint64_t{1} << bit_depth) - 1);
    return static_cast<double>(intensity) * range / max_value + 1.0;
}

std::uint32_t ldop_code(const GrayImage& img, int x, int y, const NeighborSpec& spec) {
    spec.validate();
    require_ldop_radius(spec.radius);
    const int R = spec.radius;
    if (x < R + 1 || x > img.height() - R || y < R + 1 || y > img.width() - R) {
        throw BoundsError("pixel (" + std::to_string(x) + ", " + std::to_string(y) +
                          ") is not an interior pixel for R = " + std::to_string(R));
    }
    return ldop_code_at(img, NeighborKernel(spec), x - 1, y - 1);
}

PatternMap ldop_map(const GrayImage& img, const NeighborSpec& spec) {
    spec.validate();
    require_ldop_radius(spec.radius);
    return build_map(img, spec, ldop_code_at);
}

PatternMap lbp_map(const GrayImage& img, const NeighborSpec& spec) {
    spec.validate();
    return build_map(img, spec, lbp_code_at);
}

std::vector<double> code_histogram(const PatternMap& map) {
    const std::size_t bins = std::size_t{1} << map.directions;
    std::vector<std::uint64_t> counts(bins, 0);
    for (const auto code : map.codes) {
        ++counts[code];
    }
    const double total = static_cast<double>(map.codes.size());
    std::vector<double> hist(bins);
    for (std::size_t i = 0; i < bins; ++i) {
        hist[i] = static_cast<double>(counts[i]) / total;
    }
    return hist;
}

Descriptor ldop_histogram(const GrayImage& img, const NeighborSpec& spec) {
    return {spec.directions, {{DescriptorKind::Ldop, spec.radius}}, code_histogram(ldop_map(img, spec))};
}

Descriptor lbp_histogram(const GrayImage& img, const NeighborSpec& spec) {
    return {spec.directions, {{DescriptorKind::Lbp, spec.radius}}, code_histogram(lbp_map(img, spec))};
}

Descriptor multi_res_ldop(const GrayImage& img, int r1, int r2, int directions) {
    if (r1 < 2 || r1 > r2 || r2 > kMaxOrderLength) {
        throw ArgumentError("multi-resolution range must satisfy 2 <= R1 <= R2 <= 12, got " +
                            std::to_string(r1) + ".." + std::to_string(r2));
    }
    std::vector<Segment> layout;
    for (int r = r1; r <= r2; ++r) {
        layout.push_back({DescriptorKind::Ldop, r});
    }
    return describe(img, layout, directions);
}

Descriptor describe(const GrayImage& img, const std::vector<Segment>& layout, int directions) {
    if (layout.empty()) {
        throw ArgumentError("descriptor layout has no segments");
    }
    Descriptor out{directions, layout, {}};
    out.values.reserve(layout.size() * out.segment_length());
    for (const auto& segment : layout) {
        const NeighborSpec spec{directions, segment.radius};
        const auto map = segment.kind == DescriptorKind::Ldop ? ldop_map(img, spec) : lbp_map(img, spec);
        const auto hist = code_histogram(map);
        out.values.insert(out.values.end(), hist.begin(), hist.end());
    }
    return out;
}

} // namespace ldop
