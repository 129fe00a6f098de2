#pragma once

// Test-only image and dataset generators.

#include "ldop/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace ldop::testing {

inline GrayImage random_image(std::mt19937_64& rng, int width, int height, int lo = 0, int hi = 255) {
    std::uniform_int_distribution<int> value(lo, hi);
    std::vector<std::uint16_t> pixels(static_cast<std::size_t>(width) * height);
    for (auto& p : pixels) {
        p = static_cast<std::uint16_t>(value(rng));
    }
    return GrayImage(width, height, std::move(pixels));
}

inline GrayImage constant_image(int width, int height, std::uint16_t value) {
    return GrayImage(width, height, std::vector<std::uint16_t>(static_cast<std::size_t>(width) * height, value));
}

/// Smooth blob pattern that stands in for one identity.
struct Identity {
    struct Blob {
        double row, col, sigma, amplitude;
    };
    std::vector<Blob> blobs;
    double base;
};

inline Identity random_identity(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> pos(0.1, 0.9);
    std::uniform_real_distribution<double> sigma(0.05, 0.2);
    std::uniform_real_distribution<double> amp(-90.0, 90.0);
    std::uniform_real_distribution<double> base(90.0, 160.0);
    Identity id{{}, base(rng)};
    for (int i = 0; i < 7; ++i) {
        id.blobs.push_back({pos(rng), pos(rng), sigma(rng), amp(rng)});
    }
    return id;
}

/// One "photo" of an identity: small shift, brightness change and noise.
inline GrayImage render(const Identity& id, std::mt19937_64& rng, int width, int height) {
    std::uniform_real_distribution<double> shift(-0.03, 0.03);
    std::uniform_real_distribution<double> gain(0.85, 1.15);
    std::normal_distribution<double> noise(0.0, 6.0);
    const double dr = shift(rng);
    const double dc = shift(rng);
    const double g = gain(rng);
    std::vector<std::uint16_t> pixels(static_cast<std::size_t>(width) * height);
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            const double y = static_cast<double>(r) / height + dr;
            const double x = static_cast<double>(c) / width + dc;
            double v = id.base;
            for (const auto& b : id.blobs) {
                const double d2 = (y - b.row) * (y - b.row) + (x - b.col) * (x - b.col);
                v += b.amplitude * std::exp(-d2 / (2.0 * b.sigma * b.sigma));
            }
            v = g * v + noise(rng);
            pixels[static_cast<std::size_t>(r) * width + c] =
                static_cast<std::uint16_t>(std::clamp(std::lround(v), 0L, 255L));
        }
    }
    return GrayImage(width, height, std::move(pixels));
}

/// Writes root/s<i>/<j>.pgm for `classes` identities with `per_class`
/// images each. Image size defaults to the AT&T geometry (92x112).
inline void write_synthetic_dataset(const std::filesystem::path& root, int classes, int per_class,
                                    std::uint64_t seed, int width = 92, int height = 112) {
    std::mt19937_64 rng(seed);
    for (int c = 1; c <= classes; ++c) {
        const auto id = random_identity(rng);
        const auto dir = root / ("s" + std::to_string(c));
        std::filesystem::create_directories(dir);
        for (int j = 1; j <= per_class; ++j) {
            write_pgm(render(id, rng, width, height), dir / (std::to_string(j) + ".pgm"));
        }
    }
}

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("ldop_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace ldop::testing
