#include <doctest.h>

#include "generators.hpp"
#include "polycert/kernels.hpp"
#include "polycert/parse.hpp"

using namespace polycert;

TEST_CASE("parallel convolution agrees with the reference") {
    testing::Rng rng(11);
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = 1 + i % 4;
        const auto f = testing::random_form(rng, n, static_cast<Exponent>(i % 5), -4, 4, 0.6);
        const auto g = testing::random_form(rng, n, static_cast<Exponent>((i / 3) % 4), -4, 4, 0.6);
        if (!f.is_zero() && !g.is_zero()) REQUIRE(kernels::dense_convolution_fits(f, g, {}));
        CHECK(kernels::convolve_parallel(f, g, {}) == kernels::convolve_reference(f, g, {}));
    }
}

TEST_CASE("dense cap sends huge products to the reference path") {
    const auto f = Form::monomial(MultiIndex(std::vector<Exponent>(30, 1)), 1);
    CHECK_FALSE(kernels::dense_convolution_fits(f, f, {}));
    CHECK(kernels::convolve(f, f, {}).size() == 1);
}

TEST_CASE("integer evaluation") {
    const auto q = parse_form("x1^2 - 3 x1 x2 + x2^2", 2);
    CHECK(kernels::eval_at(q, {1, 1}) == -1);
    CHECK(kernels::eval_at(q, {3, 1}) == 1);
}

TEST_CASE("grid scan finds the first nonpositive point in rank order") {
    const auto q = parse_form("x1^2 - 2 x1 x2 + x2^2", 2);
    const auto hit = kernels::first_nonpositive_grid_point(q, 2, false);
    REQUIRE(hit);
    CHECK(hit->point == std::vector<Integer>{1, 1});
    CHECK(hit->value == 0);
    CHECK_FALSE(kernels::first_nonpositive_grid_point(parse_form("x1^2 + x2^2", 2), 8, false));
}

TEST_CASE("parallel grid scan agrees with the reference") {
    testing::Rng rng(5);
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = 2 + i % 2;
        const auto q = testing::random_form(rng, n, 2 + i % 3, -2, 6, 0.9);
        if (q.is_zero()) continue;
        for (Exponent D : {1u, 2u, 4u, 8u}) {
            for (bool skip : {false, true}) {
                const auto a = kernels::first_nonpositive_grid_point(q, D, skip);
                const auto b = kernels::first_nonpositive_grid_point_reference(q, D, skip);
                REQUIRE(a.has_value() == b.has_value());
                if (a) {
                    CHECK(a->rank == b->rank);
                    CHECK(a->point == b->point);
                    CHECK(a->value == b->value);
                }
            }
        }
    }
}
