#include "doctest.h"

#include "ldop/error.hpp"
#include "ldop/sampling.hpp"
#include "support/synthetic.hpp"

#include <cmath>
#include <random>

using namespace ldop;

namespace {

// I(x, y) = y on the 1-based grid.
GrayImage column_ramp(int size) {
    GrayImage img(size, size);
    for (int r = 0; r < size; ++r) {
        for (int c = 0; c < size; ++c) {
            img.set(r, c, static_cast<std::uint16_t>(c + 1));
        }
    }
    return img;
}

} // namespace

TEST_CASE("neighbor_coords follows the row-down, column-right convention") {
    const auto right = neighbor_coords(5, 5, 1, 1, 8);
    CHECK(right.row == doctest::Approx(5.0));
    CHECK(right.col == doctest::Approx(6.0));

    const auto up = neighbor_coords(5, 5, 3, 1, 8);
    CHECK(up.row == doctest::Approx(4.0));
    CHECK(up.col == doctest::Approx(5.0));

    const auto diag = neighbor_coords(5, 5, 2, 2, 8);
    CHECK(diag.row == doctest::Approx(5.0 - std::sqrt(2.0)).epsilon(1e-12));
    CHECK(diag.col == doctest::Approx(5.0 + std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("opposite directions are point reflections") {
    for (const int n : {4, 8, 16}) {
        for (int k = 1; k <= n / 2; ++k) {
            for (int r = 1; r <= 5; ++r) {
                const auto a = neighbor_coords(10, 10, k, r, n);
                const auto b = neighbor_coords(10, 10, k + n / 2, r, n);
                CHECK(a.row - 10 == doctest::Approx(10 - b.row).epsilon(1e-12));
                CHECK(a.col - 10 == doctest::Approx(10 - b.col).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("sample_bilinear") {
    SUBCASE("grid points return stored values") {
        std::mt19937_64 rng(3);
        const auto img = testing::random_image(rng, 6, 5);
        for (int r = 1; r <= 5; ++r) {
            for (int c = 1; c <= 6; ++c) {
                CHECK(sample_bilinear(img, r, c) == img.at(r - 1, c - 1));
            }
        }
    }
    SUBCASE("midpoint along a row") {
        const GrayImage img(2, 1, {0, 100});
        CHECK(sample_bilinear(img, 1.0, 1.5) == 50.0);
    }
    SUBCASE("centre of four corners is their mean") {
        const GrayImage img(2, 2, {10, 20, 30, 40});
        CHECK(sample_bilinear(img, 1.5, 1.5) == 25.0);
    }
    SUBCASE("out of bounds") {
        const GrayImage img(3, 3);
        CHECK_THROWS_AS((void)sample_bilinear(img, 0.5, 2.0), BoundsError);
        CHECK_THROWS_AS((void)sample_bilinear(img, 2.0, 3.01), BoundsError);
        CHECK_NOTHROW((void)sample_bilinear(img, 3.0, 3.0));
    }
}

TEST_CASE("directional_neighbors") {
    const NeighborSpec spec{8, 3};
    SUBCASE("constant image") {
        const auto img = testing::constant_image(9, 9, 42);
        for (int k = 1; k <= 8; ++k) {
            CHECK(directional_neighbors(img, 5, 5, k, spec).values == std::vector<double>{42, 42, 42});
        }
    }
    SUBCASE("column ramp") {
        const auto img = column_ramp(12);
        const NeighborSpec r2{8, 2};
        CHECK(directional_neighbors(img, 5, 5, 1, r2).values == std::vector<double>{6, 7});
        CHECK(directional_neighbors(img, 5, 5, 3, r2).values == std::vector<double>{5, 5});
        CHECK(directional_neighbors(img, 5, 5, 5, r2).values == std::vector<double>{4, 3});
    }
    SUBCASE("border pixel") {
        const auto img = testing::constant_image(9, 9, 1);
        CHECK_THROWS_AS((void)directional_neighbors(img, 3, 5, 1, spec), BoundsError);
        CHECK_THROWS_AS((void)directional_neighbors(img, 5, 7, 1, spec), BoundsError);
        CHECK_THROWS_AS((void)directional_neighbors(img, 5, 5, 9, spec), ArgumentError);
    }
}

TEST_CASE("axis directions hit grid points exactly") {
    std::mt19937_64 rng(5);
    const auto img = testing::random_image(rng, 21, 21);
    const NeighborSpec spec{8, 5};
    for (int k : {1, 3, 5, 7}) {
        const auto values = directional_neighbors(img, 11, 11, k, spec).values;
        for (int r = 1; r <= 5; ++r) {
            const int row = 11 - (k == 3 ? r : k == 7 ? -r : 0);
            const int col = 11 + (k == 1 ? r : k == 5 ? -r : 0);
            CHECK(values[static_cast<std::size_t>(r - 1)] == img.at(row - 1, col - 1));
        }
    }
}

TEST_CASE("shift equivariance: neighbours of img + c are neighbours of img plus c") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const auto img = testing::random_image(rng, 15, 15, 0, 200);
        std::vector<std::uint16_t> shifted(img.pixels().begin(), img.pixels().end());
        for (auto& p : shifted) {
            p = static_cast<std::uint16_t>(p + 37);
        }
        const GrayImage brighter(15, 15, shifted);
        const NeighborSpec spec{8, 4};
        for (int k = 1; k <= 8; ++k) {
            const auto a = directional_neighbors(img, 8, 8, k, spec).values;
            const auto b = directional_neighbors(brighter, 8, 8, k, spec).values;
            for (std::size_t i = 0; i < a.size(); ++i) {
                CHECK(b[i] == a[i] + 37.0);
            }
        }
    }
}

TEST_CASE("kernel sampling is bit-identical to sample_bilinear at neighbor_coords") {
    std::mt19937_64 rng(13);
    for (const int n : {4, 8, 12, 16}) {
        const NeighborSpec spec{n, 6};
        const NeighborKernel kernel(spec);
        const auto img = testing::random_image(rng, 30, 27);
        for (int x = 7; x <= 27 - 6; ++x) {
            for (int y = 7; y <= 30 - 6; ++y) {
                for (int k = 1; k <= n; ++k) {
                    const auto expected = directional_neighbors(img, x, y, k, spec).values;
                    for (int r = 1; r <= 6; ++r) {
                        REQUIRE(kernel.sample(img, x - 1, y - 1, k, r) == expected[static_cast<std::size_t>(r - 1)]);
                    }
                }
            }
        }
    }
}

TEST_CASE("NeighborSpec validation") {
    CHECK_THROWS_AS(NeighborSpec({1, 2}).validate(), ArgumentError);
    CHECK_THROWS_AS(NeighborSpec({8, 0}).validate(), ArgumentError);
    CHECK_THROWS_AS(NeighborSpec({8, 13}).validate(), ArgumentError);
    CHECK(NeighborSpec{8, 2}.angle(3) == doctest::Approx(std::acos(0.0)));
}
