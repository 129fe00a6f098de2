#pragma once

#include "ldop/encoder.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace ldop {

enum class DistanceMeasure { Euclidean, Cosine, L1, D1, ChiSquare };

/// Parses the CLI spelling: euclidean, cosine, l1, d1, chisq.
[[nodiscard]] std::optional<DistanceMeasure> parse_distance(std::string_view name);
[[nodiscard]] std::string_view distance_name(DistanceMeasure m);

/// Distances on raw vectors of equal length (unchecked).
///   Euclidean  sqrt(sum (a-b)^2)
///   Cosine     1 - a.b / (|a||b|), 1 when either vector is zero
///   L1         sum |a-b|
///   D1         sum |a-b| / (1 + a + b)
///   ChiSquare  1/2 sum (a-b)^2 / (a+b), 0/0 terms dropped
[[nodiscard]] double distance(std::span<const double> a, std::span<const double> b, DistanceMeasure m) noexcept;

/// Throws ArgumentError when the layouts differ.
[[nodiscard]] double distance(const Descriptor& a, const Descriptor& b, DistanceMeasure m);

} // namespace ldop
