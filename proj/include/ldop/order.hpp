#pragma once

#include "ldop/image.hpp"
#include "ldop/sampling.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace ldop {

/// Largest supported radius count; 12! still fits in 32 bits.
inline constexpr int kMaxOrderLength = 12;

/// n! for n in [0, 20].
[[nodiscard]] std::uint64_t factorial(int n);

/// Permutation of {1..R}: entry r is the rank of neighbour r among the R
/// directional neighbours, smallest intensity first.
using OrderVector = std::vector<int>;

/// Intensity order of a neighbour vector. Equal intensities are ordered by
/// radius, so the result is always a permutation and flat runs give the
/// identity.
[[nodiscard]] OrderVector order_vector(std::span<const double> values);

/// 1-based lexicographic rank of a permutation of {1..R} among all R!
/// permutations (Lehmer code). Throws ArgumentError on non-permutations.
[[nodiscard]] std::uint32_t perm_rank(std::span<const int> order);

/// Inverse of perm_rank.
[[nodiscard]] OrderVector perm_unrank(std::uint64_t index, int length);

/// perm_rank(order_vector(values)) without materializing the order vector.
/// values must hold at most kMaxOrderLength entries.
[[nodiscard]] inline std::uint32_t order_index(const double* values, int length) noexcept {
    // Entry i contributes the number of later entries strictly smaller than
    // it, weighted by (length - 1 - i)!. Ties never count since the earlier
    // radius wins them.
    static constexpr std::uint32_t kFact[kMaxOrderLength] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320,
                                                             362880, 3628800, 39916800};
    std::uint32_t index = 1;
    for (int i = 0; i + 1 < length; ++i) {
        std::uint32_t smaller = 0;
        for (int j = i + 1; j < length; ++j) {
            smaller += values[j] < values[i] ? 1u : 0u;
        }
        index += smaller * kFact[length - 1 - i];
    }
    return index;
}

/// Per-pixel order index for one direction over the interior
/// [R, d_x - R) x [R, d_y - R) (0-based). Cells hold values in [1, R!].
struct OrderIndexMap {
    int direction = 1;
    int radius = 0;
    int rows = 0;
    int cols = 0;
    std::vector<std::uint32_t> cells;

    [[nodiscard]] std::uint32_t at(int row, int col) const {
        return cells[static_cast<std::size_t>(row) * cols + col];
    }
    friend bool operator==(const OrderIndexMap&, const OrderIndexMap&) = default;
};

/// Order index map for direction k. Throws DimensionError unless
/// d_x > 2R and d_y > 2R.
[[nodiscard]] OrderIndexMap order_map(const GrayImage& img, int k, const NeighborSpec& spec);

/// Throws DimensionError when the interior for radius R is empty.
void require_interior(const GrayImage& img, int radius);

} // namespace ldop
