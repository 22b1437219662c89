#include "elsv/kernels/transposition_step.hpp"

#include "elsv/error.hpp"

#include <cstdlib>
#include <string>

namespace elsv::kernels {

NeighborTable make_neighbor_table(int d, Composition composition) {
    if (d < 0 || d > 10)
        fail(ErrorCode::resource_limit, "neighbor table: degree " + std::to_string(d) + " out of range");
    NeighborTable t;
    t.degree = d;
    t.order = static_cast<std::size_t>(factorial(static_cast<unsigned>(d)).get_ui());
    const auto pairs = transposition_pairs(d);
    t.generators = pairs.size();
    t.index.resize(t.generators * t.order);

    std::vector<Permutation> elements;
    elements.reserve(t.order);
    for (std::size_t i = 0; i < t.order; ++i)
        elements.push_back(unrank(d, static_cast<std::uint32_t>(i)));

    for (std::size_t g = 0; g < pairs.size(); ++g) {
        const auto tau = Permutation::transposition(d, pairs[g].first, pairs[g].second);
        for (std::size_t i = 0; i < t.order; ++i) {
            const auto moved = composition == Composition::right_to_left ? elements[i] * tau : tau * elements[i];
            t.index[g * t.order + i] = rank(moved);
        }
    }
    return t;
}

std::string_view name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool avx2_available() {
#if defined(ELSV_HAVE_AVX2)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Isa active_isa() {
    static const Isa isa = [] {
        if (const char* env = std::getenv("ELSV_SIMD"); env && std::string(env) == "scalar")
            return Isa::scalar;
        return avx2_available() ? Isa::avx2 : Isa::scalar;
    }();
    return isa;
}

void transposition_step_scalar(const NeighborTable& table, std::span<const std::uint64_t> cur,
                               std::span<std::uint64_t> next) {
    const auto n = table.order;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t g = 0; g < table.generators; ++g)
            acc += cur[table.index[g * n + i]];
        next[i] = acc;
    }
}

void transposition_step(const NeighborTable& table, std::span<const std::uint64_t> cur,
                        std::span<std::uint64_t> next, Isa isa) {
    if (cur.size() != table.order || next.size() != table.order)
        fail(ErrorCode::dimension_mismatch, "transposition_step: vector length differs from |S_d|");
#if defined(ELSV_HAVE_AVX2)
    if (isa == Isa::avx2 && avx2_available()) {
        transposition_step_avx2(table, cur, next);
        return;
    }
#else
    (void)isa;
#endif
    transposition_step_scalar(table, cur, next);
}

void transposition_step_big(const NeighborTable& table, std::span<const BigInt> cur, std::span<BigInt> next) {
    const auto n = table.order;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt acc = 0;
        for (std::size_t g = 0; g < table.generators; ++g)
            acc += cur[table.index[g * n + i]];
        next[i] = std::move(acc);
    }
}

} // namespace elsv::kernels
