#include "elsv/error.hpp"
#include "elsv/hurwitz.hpp"
#include "elsv/permutation.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace elsv;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::internal_consistency;
}

Rational q(long n, long d = 1) { return make_rational(n, d); }

} // namespace

TEST_CASE("connected_dfs examples") {
    CHECK(connected_dfs(0, Partition{1}) == 1);
    CHECK(connected_dfs(0, Partition{3}) == 1);
    CHECK(connected_dfs(1, Partition{1}) == 0);
    CHECK(connected_dfs(0, Partition{1, 1, 1}) == 4);
    // oracle derivation of the last example: 27 quadruples with trivial product, 3 of them intransitive
    CHECK(oracle::tuples_in_class(3, 4, {1, 1, 1}, false) == 27);
    CHECK(oracle::tuples_in_class(3, 4, {1, 1, 1}, true) == 24);
}

TEST_CASE("query validation") {
    CHECK(code_of([] { connected_dfs(0, Partition{}); }) == ErrorCode::invalid_query);
    CHECK(code_of([] { branch_points_connected(-1, Partition{1}); }) == ErrorCode::invalid_query);
    CHECK(code_of([] { disconnected_dp(8, Partition{1}); }) == ErrorCode::invalid_query);
    CHECK(code_of([] { disconnected_burnside(8, Partition{1}); }) == ErrorCode::invalid_query);
    Budgets tiny;
    tiny.dfs_max_nodes = 10;
    CHECK(code_of([&] { connected_dfs(1, Partition{3, 1}, tiny); }) == ErrorCode::resource_limit);
    CHECK(code_of([] { disconnected_dp(0, Partition{8}); }) == ErrorCode::resource_limit);
}

TEST_CASE("disconnected examples") {
    CHECK(disconnected_dp(4, Partition{1, 1}) == q(1, 2));
    CHECK(disconnected_dp(2, Partition{2}) == q(1, 2));
    CHECK(disconnected_dp(-2, Partition{3}) == 81);
    CHECK(disconnected_burnside(4, Partition{1, 1}) == q(1, 2));
    CHECK(disconnected_burnside(2, Partition{2}) == q(1, 2));
    CHECK(disconnected_burnside(-2, Partition{3}) == 81);
    // 243 tuples in the 3-cycle class out of 3^6, over 3! relabelings
    CHECK(oracle::hurwitz(6, {3}, false) == 81);
    CHECK(disconnected_dp(1, Partition{2}) == 0);
    CHECK(disconnected_burnside(1, Partition{2}) == 0);
}

TEST_CASE("engines match tuple enumeration") {
    for (int d = 1; d <= 4; ++d)
        for (const auto& mu : partitions_of(d))
            for (int r = 0; r <= 5; ++r) {
                const int chi = d + mu.length() - r;
                const auto dis = oracle::hurwitz(r, mu.parts(), false);
                CHECK(disconnected_dfs(chi, mu) == dis);
                CHECK(disconnected_dp(chi, mu) == dis);
                CHECK(disconnected_burnside(chi, mu) == dis);
                if ((r - d - mu.length()) % 2 == 0 && r >= d + mu.length() - 2) {
                    const int g = (r - d - mu.length() + 2) / 2;
                    CHECK(connected_dfs(g, mu) == oracle::hurwitz(r, mu.parts(), true));
                }
            }
}

TEST_CASE("parity vanishing") {
    for (int d = 1; d <= 5; ++d)
        for (const auto& mu : partitions_of(d))
            for (int r = 0; r <= 7; ++r)
                if (!parity_allows(r, mu))
                    CHECK(disconnected_dp(d + mu.length() - r, mu) == 0);
}

TEST_CASE("independence of the representative of C_mu") {
    std::mt19937 rng(12345);
    for (const auto& mu : std::vector<Partition>{{3}, {2, 1}, {2, 2}, {3, 1}, {2, 1, 1}, {4}}) {
        auto images = Permutation::canonical(mu).images();
        std::vector<int> relabel(images.size());
        std::iota(relabel.begin(), relabel.end(), 0);
        std::shuffle(relabel.begin(), relabel.end(), rng);
        const Permutation c(relabel);
        DfsOptions opts;
        opts.sigma_infinity = c * Permutation::canonical(mu) * c.inverse();
        REQUIRE(opts.sigma_infinity->cycle_type() == mu);
        for (int g = 0; g <= 1; ++g)
            CHECK(connected_dfs(g, mu, {}, opts) == connected_dfs(g, mu));
    }
}

TEST_CASE("composition convention does not matter") {
    for (int d = 1; d <= 4; ++d)
        for (const auto& mu : partitions_of(d))
            for (int g = 0; g <= 1; ++g) {
                DfsOptions ltr;
                ltr.composition = Composition::left_to_right;
                CHECK(connected_dfs(g, mu, {}, ltr) == connected_dfs(g, mu));
                const auto a = factorization_counts_dp(mu, 6, {}, Composition::right_to_left);
                const auto b = factorization_counts_dp(mu, 6, {}, Composition::left_to_right);
                CHECK(a == b);
            }
}

TEST_CASE("DP switches to big integers without changing values") {
    // C(7,2)^k overflows 64 bits at k = 15
    const auto counts = factorization_counts_dp(Partition{7}, 16);
    const auto series = disconnected_burnside_series(Partition{7}, 16, default_table_store());
    for (int r = 0; r <= 16; ++r)
        CHECK(Rational(counts[static_cast<std::size_t>(r)]) / Rational(7) == series[static_cast<std::size_t>(r)]);
}

TEST_CASE("log of a pure p_1 exponential") {
    HurwitzSeries::Truncation t{0, 2, std::nullopt};
    auto dis = HurwitzSeries::one(t);
    dis.set(Partition{1}, -1, 1);
    dis.set(Partition{1, 1}, -2, q(1, 2));
    const auto con = connected_from_disconnected(dis);
    CHECK(con.coefficient(Partition{1}, -1) == 1);
    CHECK(con.coefficient(Partition{1, 1}, -2) == 0);
    CHECK(con.terms().size() == 1);
}

TEST_CASE("log of one is zero; constant term is required") {
    HurwitzSeries::Truncation t{4, 3, std::nullopt};
    CHECK(connected_from_disconnected(HurwitzSeries::one(t)).empty());
    HurwitzSeries bad(t);
    bad.set(Partition{1}, -1, 1);
    CHECK(code_of([&] { connected_from_disconnected(bad); }) == ErrorCode::invalid_series);
}

TEST_CASE("transform of DP data reproduces DFS, and exp inverts log") {
    const int max_r = 6, max_d = 3;
    HurwitzSeries::Truncation t{max_r, max_d, std::nullopt};
    auto dis = HurwitzSeries::one(t);
    for (int d = 1; d <= max_d; ++d)
        for (const auto& mu : partitions_of(d))
            for (int r = 0; r <= max_r; ++r)
                dis.set(mu, r - d, disconnected_dp(d + mu.length() - r, mu));
    const auto con = connected_from_disconnected(dis);
    for (int d = 1; d <= max_d; ++d)
        for (const auto& mu : partitions_of(d))
            for (int r = 0; r <= max_r; ++r) {
                const int twice_g = r - d - mu.length() + 2;
                const Rational expected =
                    twice_g >= 0 && twice_g % 2 == 0 ? connected_dfs(twice_g / 2, mu) : Rational(0);
                CHECK(con.coefficient(mu, r - d) == expected);
            }
    CHECK(disconnected_from_connected(con) == dis);
}

TEST_CASE("connected numbers through each engine") {
    auto& store = default_table_store();
    for (const auto& [g, mu] : std::vector<std::pair<int, Partition>>{{0, {2, 1}}, {1, {2, 2}}, {0, {2, 1, 1}}, {2, {3}}}) {
        const auto expected = oracle::connected_hurwitz(g, mu.parts());
        for (Engine e : {Engine::dfs, Engine::dp, Engine::burnside})
            CHECK(connected(g, mu, e, {}, store) == expected);
    }
}

TEST_CASE("phi_series exponents follow -chi + l(mu)") {
    auto& store = default_table_store();
    const auto s1 = phi_series(Partition{1}, Engine::dfs, 4, SeriesKind::connected, {}, store);
    CHECK(s1 == LambdaSeries{{-1, Rational(1)}});

    const auto s2 = phi_series(Partition{2}, Engine::dp, 3, SeriesKind::disconnected, {}, store);
    // H*_{2,(2)} (r = 1) and H*_{0,(2)} (r = 3)
    CHECK(s2 == LambdaSeries{{-1, q(1, 2)}, {1, q(1, 2)}});

    const auto s3 = phi_series(Partition{3}, Engine::burnside, 6, SeriesKind::disconnected, {}, store);
    CHECK(s3.at(3) == 81); // chi = -2
}

TEST_CASE("engine names") {
    CHECK(parse_engine("dfs") == Engine::dfs);
    CHECK(parse_engine("dp") == Engine::dp);
    CHECK(parse_engine("burnside") == Engine::burnside);
    CHECK(code_of([] { parse_engine("magic"); }) == ErrorCode::parse_error);
}
