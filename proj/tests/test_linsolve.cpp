#include "elsv/error.hpp"
#include "elsv/linsolve.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace elsv;

TEST_CASE("exact solve of a Hilbert system") {
    const std::size_t n = 6;
    RationalMatrix a(n, std::vector<Rational>(n));
    std::vector<Rational> x(n), b(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = make_rational(static_cast<long>(i) - 2, 3);
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = make_rational(1, static_cast<long>(i + j + 1));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            b[i] += a[i][j] * x[j];
    CHECK(solve_exact(a, b) == x);
    CHECK(rank(a) == n);
}

TEST_CASE("random systems agree with plain elimination") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> dist(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
        RationalMatrix a(n, std::vector<Rational>(n));
        std::vector<Rational> b(n);
        for (auto& row : a)
            for (auto& v : row)
                v = make_rational(dist(rng), 1 + std::abs(dist(rng)));
        for (auto& v : b)
            v = dist(rng);
        if (rank(a) < n)
            continue;
        CHECK(solve_exact(a, b) == oracle::solve(a, b));
    }
}

TEST_CASE("overdetermined consistent and inconsistent systems") {
    RationalMatrix a{{1, 0}, {0, 1}, {1, 1}};
    CHECK(solve_exact(a, {1, 2, 3}) == std::vector<Rational>{1, 2});
    CHECK_THROWS_AS(solve_exact(a, {1, 2, 4}), Error);
}

TEST_CASE("singular systems report their rank") {
    RationalMatrix a{{1, 2}, {2, 4}};
    try {
        solve_exact(a, {1, 2});
        FAIL("expected singular_system");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::singular_system);
        CHECK(std::string(e.what()).find("rank 1") != std::string::npos);
    }
}

TEST_CASE("independent row accumulator") {
    IndependentRows rows(3);
    CHECK(rows.try_add({1, 2, 3}));
    CHECK_FALSE(rows.try_add({2, 4, 6}));
    CHECK(rows.try_add({0, 1, 0}));
    CHECK_FALSE(rows.full());
    CHECK(rows.try_add({0, 0, make_rational(1, 7)}));
    CHECK(rows.full());
    CHECK(rows.rank() == 3);
}
