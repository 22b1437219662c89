#include "elsv/kernels/transposition_step.hpp"

#include <doctest.h>

#include <random>

using namespace elsv;
using namespace elsv::kernels;

namespace {
std::vector<std::uint64_t> random_vector(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::uint64_t> v(n);
    for (auto& x : v)
        x = rng();
    return v;
}
} // namespace

TEST_CASE("neighbor table is a set of involutions") {
    for (int d = 2; d <= 6; ++d) {
        const auto t = make_neighbor_table(d, Composition::right_to_left);
        CHECK(t.generators == static_cast<std::size_t>(d * (d - 1) / 2));
        for (std::size_t g = 0; g < t.generators; ++g)
            for (std::size_t i = 0; i < t.order; ++i) {
                const auto j = t.index[g * t.order + i];
                CHECK(t.index[g * t.order + j] == i);
                CHECK(j != i);
            }
    }
}

TEST_CASE("scalar step matches the permutation definition") {
    const int d = 4;
    const auto t = make_neighbor_table(d, Composition::right_to_left);
    std::mt19937_64 rng(7);
    const auto cur = random_vector(t.order, rng);
    std::vector<std::uint64_t> next(t.order);
    transposition_step_scalar(t, cur, next);
    const auto pairs = transposition_pairs(d);
    for (std::uint32_t i = 0; i < t.order; ++i) {
        std::uint64_t expected = 0;
        for (auto [a, b] : pairs)
            expected += cur[rank(unrank(d, i) * Permutation::transposition(d, a, b))];
        CHECK(next[i] == expected);
    }
}

TEST_CASE("SIMD kernel is bit-identical to the scalar reference") {
    if (!avx2_available()) {
        MESSAGE("AVX2 kernel unavailable on this machine; only the scalar path is exercised");
        return;
    }
#if defined(ELSV_HAVE_AVX2)
    std::mt19937_64 rng(2024);
    for (int d = 2; d <= 7; ++d)
        for (auto comp : {Composition::right_to_left, Composition::left_to_right}) {
            const auto t = make_neighbor_table(d, comp);
            for (int trial = 0; trial < 3; ++trial) {
                const auto cur = random_vector(t.order, rng);
                std::vector<std::uint64_t> a(t.order), b(t.order);
                transposition_step_scalar(t, cur, a);
                transposition_step_avx2(t, cur, b);
                CHECK(a == b);
            }
        }
#endif
}

TEST_CASE("dispatch and big-integer step agree with scalar") {
    std::mt19937_64 rng(99);
    const auto t = make_neighbor_table(5, Composition::right_to_left);
    std::vector<std::uint64_t> cur(t.order);
    for (auto& x : cur)
        x = rng() >> 20;
    std::vector<std::uint64_t> ref(t.order), dispatched(t.order);
    transposition_step_scalar(t, cur, ref);
    transposition_step(t, cur, dispatched);
    CHECK(ref == dispatched);
    std::vector<BigInt> big_cur(cur.begin(), cur.end()), big_next(t.order);
    for (std::size_t i = 0; i < t.order; ++i)
        big_cur[i] = BigInt(std::to_string(cur[i]));
    transposition_step_big(t, big_cur, big_next);
    for (std::size_t i = 0; i < t.order; ++i)
        CHECK(big_next[i] == BigInt(std::to_string(ref[i])));
}

TEST_CASE("isa names") {
    CHECK(name(Isa::scalar) == "scalar");
    CHECK(name(Isa::avx2) == "avx2");
}
