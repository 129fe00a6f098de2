#pragma once

#include "ldop/descriptor_io.hpp"

#include <string>
#include <vector>

namespace ldop::testing {

/// Six entries on a line, embedded as the 4-bin histogram (x, 1 - x, 0, 0)
/// so L1 and Euclidean rank them by |x - x'|. B1 sits between A2 and A3 and
/// confuses both classes.
///   A1 0.00   A2 0.10   A3 0.30   B1 0.25   B2 0.80   B3 0.90
inline std::vector<DescriptorRecord> toy_records() {
    const std::vector<std::pair<std::string, double>> points{{"A", 0.00}, {"A", 0.10}, {"A", 0.30},
                                                             {"B", 0.25}, {"B", 0.80}, {"B", 0.90}};
    std::vector<DescriptorRecord> out;
    int i = 0;
    for (const auto& [label, x] : points) {
        out.push_back({label + std::to_string(++i), label,
                       Descriptor{2, {{DescriptorKind::Ldop, 2}}, {x, 1.0 - x, 0.0, 0.0}}});
    }
    return out;
}

/// Hand-computed metrics for toy_records(). Rankings per query:
///   A1: A1 A2 B1 A3 B2 B3      B1: B1 A3 A2 A1 B2 B3
///   A2: A2 A1 B1 A3 B2 B3      B2: B2 B3 A3 B1 A2 A1
///   A3: A3 B1 A2 A1 B2 B3      B3: B3 B2 A3 B1 A2 A1
/// gamma = 1: every query hits itself        ARP 100,   ARR 100/3
/// gamma = 2: hits 2,2,1 | 1,2,2              ARP 250/3, ARR 500/9
/// gamma = 3: hits 2,2,2 | 1,2,2              ARP 1100/18 = ARR
/// NMRR (NG = 3, K = 6, denominator 5.5): MRR 1/3,1/3,2/3 | 2,1/3,1/3
/// ANMRR = 100 * (4 / 5.5) / 6 = 400/33
struct ToyExpectation {
    double arp, arr, f;
};
inline constexpr ToyExpectation kToyGamma1{100.0, 100.0 / 3.0, 50.0};
inline constexpr ToyExpectation kToyGamma2{250.0 / 3.0, 500.0 / 9.0, 200.0 / 3.0};
inline constexpr ToyExpectation kToyGamma3{1100.0 / 18.0, 1100.0 / 18.0, 1100.0 / 18.0};
inline constexpr double kToyAnmrr = 400.0 / 33.0;

} // namespace ldop::testing
