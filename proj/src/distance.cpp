#include "ldop/distance.hpp"

#include "ldop/error.hpp"

#include <algorithm>
#include <cmath>

namespace ldop {

std::optional<DistanceMeasure> parse_distance(std::string_view name) {
    if (name == "euclidean") return DistanceMeasure::Euclidean;
    if (name == "cosine") return DistanceMeasure::Cosine;
    if (name == "l1") return DistanceMeasure::L1;
    if (name == "d1") return DistanceMeasure::D1;
    if (name == "chisq") return DistanceMeasure::ChiSquare;
    return std::nullopt;
}

std::string_view distance_name(DistanceMeasure m) {
    switch (m) {
        case DistanceMeasure::Euclidean: return "euclidean";
        case DistanceMeasure::Cosine: return "cosine";
        case DistanceMeasure::L1: return "l1";
        case DistanceMeasure::D1: return "d1";
        case DistanceMeasure::ChiSquare: return "chisq";
    }
    return "unknown";
}

double distance(std::span<const double> a, std::span<const double> b, DistanceMeasure m) noexcept {
    const std::size_t n = a.size();
    double acc = 0.0;
    switch (m) {
        case DistanceMeasure::Euclidean:
            for (std::size_t i = 0; i < n; ++i) {
                const double d = a[i] - b[i];
                acc += d * d;
            }
            return std::sqrt(acc);
        case DistanceMeasure::Cosine: {
            double aa = 0.0;
            double bb = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                acc += a[i] * b[i];
                aa += a[i] * a[i];
                bb += b[i] * b[i];
            }
            if (aa == 0.0 || bb == 0.0) {
                return 1.0;
            }
            // sqrt(fl(x*x)) == x, so identical vectors give exactly 0.
            return std::max(0.0, 1.0 - acc / std::sqrt(aa * bb));
        }
        case DistanceMeasure::L1:
            for (std::size_t i = 0; i < n; ++i) {
                acc += std::abs(a[i] - b[i]);
            }
            return acc;
        case DistanceMeasure::D1:
            for (std::size_t i = 0; i < n; ++i) {
                acc += std::abs(a[i] - b[i]) / (1.0 + a[i] + b[i]);
            }
            return acc;
        case DistanceMeasure::ChiSquare:
            for (std::size_t i = 0; i < n; ++i) {
                const double s = a[i] + b[i];
                const double d = a[i] - b[i];
                acc += s > 0.0 ? d * d / s : 0.0;
            }
            return 0.5 * acc;
    }
    return acc;
}

double distance(const Descriptor& a, const Descriptor& b, DistanceMeasure m) {
    if (!a.same_layout(b)) {
        throw ArgumentError("descriptor layouts differ (" + std::to_string(a.values.size()) + " vs " +
                            std::to_string(b.values.size()) + " values)");
    }
    return distance(a.values, b.values, m);
}

} // namespace ldop
