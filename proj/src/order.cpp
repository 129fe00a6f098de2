#include "ldop/order.hpp"

#include "ldop/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ldop {

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) {
        throw ArgumentError("factorial argument out of range: " + std::to_string(n));
    }
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= static_cast<std::uint64_t>(i);
    }
    return f;
}

OrderVector order_vector(std::span<const double> values) {
    const int n = static_cast<int>(values.size());
    std::vector<int> idx(values.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return values[a] < values[b]; });
    OrderVector order(values.size());
    for (int pos = 0; pos < n; ++pos) {
        order[static_cast<std::size_t>(idx[pos])] = pos + 1;
    }
    return order;
}

std::uint32_t perm_rank(std::span<const int> order) {
    const int n = static_cast<int>(order.size());
    if (n < 1 || n > kMaxOrderLength) {
        throw ArgumentError("permutation length must be in [1, 12], got " + std::to_string(n));
    }
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const int v : order) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
            throw ArgumentError("not a permutation of {1.." + std::to_string(n) + "}");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
    std::uint64_t rank = 0;
    for (int i = 0; i < n; ++i) {
        std::uint64_t smaller = 0;
        for (int j = i + 1; j < n; ++j) {
            smaller += order[j] < order[i] ? 1 : 0;
        }
        rank += smaller * factorial(n - 1 - i);
    }
    return static_cast<std::uint32_t>(rank + 1);
}

OrderVector perm_unrank(std::uint64_t index, int length) {
    if (length < 1 || length > kMaxOrderLength) {
        throw ArgumentError("permutation length must be in [1, 12], got " + std::to_string(length));
    }
    if (index < 1 || index > factorial(length)) {
        throw ArgumentError("permutation index " + std::to_string(index) + " outside [1, " +
                            std::to_string(factorial(length)) + "]");
    }
    std::vector<int> pool(static_cast<std::size_t>(length));
    std::iota(pool.begin(), pool.end(), 1);
    std::uint64_t rest = index - 1;
    OrderVector out;
    out.reserve(pool.size());
    for (int i = length - 1; i >= 0; --i) {
        const std::uint64_t f = factorial(i);
        const auto digit = static_cast<std::ptrdiff_t>(rest / f);
        rest %= f;
        out.push_back(pool[static_cast<std::size_t>(digit)]);
        pool.erase(pool.begin() + digit);
    }
    return out;
}

void require_interior(const GrayImage& img, int radius) {
    if (img.height() <= 2 * radius || img.width() <= 2 * radius) {
        throw DimensionError("image of " + std::to_string(img.height()) + "x" + std::to_string(img.width()) +
                             " has no interior for radius " + std::to_string(radius));
    }
}

OrderIndexMap order_map(const GrayImage& img, int k, const NeighborSpec& spec) {
    spec.validate();
    if (k < 1 || k > spec.directions) {
        throw ArgumentError("direction index " + std::to_string(k) + " outside [1, " +
                            std::to_string(spec.directions) + "]");
    }
    const int R = spec.radius;
    require_interior(img, R);
    const NeighborKernel kernel(spec);

    OrderIndexMap map{k, R, img.height() - 2 * R, img.width() - 2 * R, {}};
    map.cells.resize(static_cast<std::size_t>(map.rows) * map.cols);
    double values[kMaxOrderLength];
    for (int row = 0; row < map.rows; ++row) {
        for (int col = 0; col < map.cols; ++col) {
            kernel.gather(img, row + R, col + R, k, values);
            map.cells[static_cast<std::size_t>(row) * map.cols + col] = order_index(values, R);
        }
    }
    return map;
}

} // namespace ldop
