#include "periodica/kernels.hpp"

#include <immintrin.h>

namespace periodica::kernels {

namespace {

// x mod p for 0 <= x < 2^24.
inline __m256i reduce(__m256i x, __m256 inv_p, __m256i p)
{
    __m256 q = _mm256_floor_ps(_mm256_mul_ps(_mm256_cvtepi32_ps(x), inv_p));
    __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(_mm256_cvtps_epi32(q), p));
    r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(_mm256_setzero_si256(), r), p));
    __m256i pm1 = _mm256_sub_epi32(p, _mm256_set1_epi32(1));
    return _mm256_sub_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(r, pm1), p));
}

} // namespace

void polymul_mod_avx2(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out, std::size_t count,
                      std::uint32_t p, const std::uint32_t* f, unsigned d)
{
    if (p >= 2048) {
        polymul_mod_scalar(a, b, out, count, p, f, d);
        return;
    }
    const unsigned w = 2 * d - 1;
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
    __m256i negf[64];
    for (unsigned j = 0; j < d; ++j)
        negf[j] = _mm256_set1_epi32(static_cast<int>((p - f[j]) % p));

    __m256i prod[127];
    std::size_t i = 0;
    for (; i + 8 <= count; i += 8) {
        for (unsigned k = 0; k < w; ++k)
            prod[k] = _mm256_setzero_si256();
        for (unsigned x = 0; x < d; ++x) {
            __m256i ax = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + x * count + i));
            for (unsigned y = 0; y < d; ++y) {
                __m256i by = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + y * count + i));
                prod[x + y] = reduce(_mm256_add_epi32(prod[x + y], _mm256_mullo_epi32(ax, by)), inv_p, vp);
            }
        }
        for (unsigned k = w; k-- > d;) {
            for (unsigned j = 0; j < d; ++j) {
                __m256i t = _mm256_add_epi32(prod[k - d + j], _mm256_mullo_epi32(prod[k], negf[j]));
                prod[k - d + j] = reduce(t, inv_p, vp);
            }
        }
        for (unsigned k = 0; k < d; ++k)
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + k * count + i), prod[k]);
    }
    if (i < count) {
        // Tail: gather the remaining lanes into a compact batch.
        std::size_t rest = count - i;
        std::uint32_t ta[64 * 8], tb[64 * 8], to[64 * 8];
        for (unsigned k = 0; k < d; ++k) {
            for (std::size_t l = 0; l < rest; ++l) {
                ta[k * rest + l] = a[k * count + i + l];
                tb[k * rest + l] = b[k * count + i + l];
            }
        }
        polymul_mod_scalar(ta, tb, to, rest, p, f, d);
        for (unsigned k = 0; k < d; ++k) {
            for (std::size_t l = 0; l < rest; ++l)
                out[k * count + i + l] = to[k * rest + l];
        }
    }
}

} // namespace periodica::kernels
