// Compiled with -mavx2; only reached through runtime dispatch.
#include "elsv/kernels/transposition_step.hpp"

#include <immintrin.h>

namespace elsv::kernels {

void transposition_step_avx2(const NeighborTable& table, std::span<const std::uint64_t> cur,
                             std::span<std::uint64_t> next) {
    const auto n = table.order;
    const auto* base = reinterpret_cast<const long long*>(cur.data());
    const auto* idx = table.index.data();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i acc0 = _mm256_setzero_si256();
        __m256i acc1 = _mm256_setzero_si256();
        for (std::size_t g = 0; g < table.generators; ++g) {
            const auto* row = idx + g * n + i;
            const __m128i lo = _mm_loadu_si128(reinterpret_cast<const __m128i*>(row));
            const __m128i hi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(row + 4));
            acc0 = _mm256_add_epi64(acc0, _mm256_i32gather_epi64(base, lo, 8));
            acc1 = _mm256_add_epi64(acc1, _mm256_i32gather_epi64(base, hi, 8));
        }
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(next.data() + i), acc0);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(next.data() + i + 4), acc1);
    }
    for (; i < n; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t g = 0; g < table.generators; ++g)
            acc += cur[idx[g * n + i]];
        next[i] = acc;
    }
}

} // namespace elsv::kernels
