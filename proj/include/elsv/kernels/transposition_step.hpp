#pragma once

// One convolution step of the group-algebra dynamic program over S_d:
//
//     next[i] = sum_t cur[neighbor(t, i)]
//
// where neighbor(t, i) is the rank of perm_i composed with the t-th
// transposition. The scalar kernel is the reference; the AVX2 kernel must
// produce bit-identical output and is selected at runtime.

#include "elsv/permutation.hpp"
#include "elsv/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace elsv::kernels {

struct NeighborTable {
    int degree = 0;
    std::size_t order = 0;       // d!
    std::size_t generators = 0;  // C(d,2)
    // Row-major by generator: index[t * order + i].
    std::vector<std::uint32_t> index;
};

NeighborTable make_neighbor_table(int d, Composition composition);

enum class Isa { scalar, avx2 };

std::string_view name(Isa isa);

/// True when the binary carries the AVX2 kernel and the CPU supports it.
bool avx2_available();

/// Kernel picked by transposition_step(). ELSV_SIMD=scalar forces the reference.
Isa active_isa();

void transposition_step_scalar(const NeighborTable& table, std::span<const std::uint64_t> cur,
                               std::span<std::uint64_t> next);

#if defined(ELSV_HAVE_AVX2)
void transposition_step_avx2(const NeighborTable& table, std::span<const std::uint64_t> cur,
                             std::span<std::uint64_t> next);
#endif

void transposition_step(const NeighborTable& table, std::span<const std::uint64_t> cur,
                        std::span<std::uint64_t> next, Isa isa);

inline void transposition_step(const NeighborTable& table, std::span<const std::uint64_t> cur,
                               std::span<std::uint64_t> next) {
    transposition_step(table, cur, next, active_isa());
}

/// Arbitrary-precision variant used once counts may exceed 64 bits.
void transposition_step_big(const NeighborTable& table, std::span<const BigInt> cur, std::span<BigInt> next);

} // namespace elsv::kernels
